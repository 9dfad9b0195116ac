#include "glfq/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace glfq {

namespace {

constexpr long kAddTableCap = 2048;  // full add table below this size

// polynomial arithmetic over F_p on digit vectors, little-endian
std::vector<long> poly_mod_mul(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& mod, long p) {
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce by monic mod
    for (long k = static_cast<long>(c.size()) - 1; k >= static_cast<long>(mod.size()) - 1; --k) {
        long t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t i = 0; i + 1 < mod.size(); ++i) {
            long idx = k - (static_cast<long>(mod.size()) - 1) + static_cast<long>(i);
            c[idx] = ((c[idx] - t * mod[i]) % p + p) % p;
        }
    }
    c.resize(mod.size() - 1);
    return c;
}

}  // namespace

FiniteField::FiniteField(long p, long m) : p_(p), m_(m) {
    if (p < 2 || m < 1) throw std::invalid_argument("bad field parameters");
    q_ = 1;
    for (long i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > (1L << 24)) throw std::invalid_argument("field too large");
    }
    // lexicographically first monic irreducible of degree m:
    // scan constant..leading coefficients as a base-p counter
    auto decode = [&](long code) {
        std::vector<long> digits(m + 1);
        for (long i = 0; i < m; ++i) {
            digits[i] = code % p;
            code /= p;
        }
        digits[m] = 1;
        return digits;
    };
    auto irreducible = [&](const std::vector<long>& f) {
        if (m == 1) return true;
        // f irreducible over F_p iff x^(p^m) = x mod f and gcd(x^(p^d) - x, f)
        // trivial for proper divisors d; at our sizes, test by checking f has
        // no roots in F_{p^d} via repeated Frobenius on x.
        std::vector<long> mod(f.begin(), f.end());
        std::vector<long> x(m, 0);
        if (m >= 2) x[1] = 1;
        auto frob = [&](std::vector<long> v) {
            std::vector<long> r = v;
            for (long i = 1; i < p; ++i) r = poly_mod_mul(r, v, mod, p);
            return r;  // v^p
        };
        std::vector<long> cur = x;
        for (long d = 1; d < m; ++d) {
            cur = frob(cur);
            if (m % d == 0 && cur == x) return false;  // root field degree d | m
        }
        cur = frob(cur);
        return cur == x;
    };
    for (long code = 0; code < q_; ++code) {
        auto f = decode(code);
        if (f[0] == 0) continue;  // x | f
        if (irreducible(f)) {
            def_.assign(f.begin(), f.end());
            break;
        }
    }
    if (def_.empty()) throw std::logic_error("no irreducible polynomial found");

    // multiplication via a generator: find a primitive element
    std::vector<long> modl(def_.begin(), def_.end());
    auto mul_codes = [&](ff_elt a, ff_elt b) {
        std::vector<long> va(m), vb(m);
        long ca = a, cb = b;
        for (long i = 0; i < m; ++i) {
            va[i] = ca % p; ca /= p;
            vb[i] = cb % p; cb /= p;
        }
        auto vc = poly_mod_mul(va, vb, modl, p);
        ff_elt c = 0;
        for (long i = m - 1; i >= 0; --i) c = c * p + static_cast<ff_elt>(vc[i]);
        return c;
    };
    log_.assign(q_, -1);
    exp_.assign(2 * (q_ - 1), 0);
    for (ff_elt cand = 1; cand < static_cast<ff_elt>(q_); ++cand) {
        ff_elt x = 1;
        long k = 0;
        bool prim = true;
        std::vector<long> seen(q_, -1);
        do {
            if (seen[x] >= 0) { prim = false; break; }
            seen[x] = k;
            x = mul_codes(x, cand);
            ++k;
        } while (x != 1);
        if (prim && k == q_ - 1) {
            gen_ = cand;
            for (ff_elt e = 1; e < static_cast<ff_elt>(q_); ++e) log_[e] = seen[e];
            x = 1;
            for (long e = 0; e < q_ - 1; ++e) {
                exp_[e] = x;
                exp_[e + q_ - 1] = x;
                x = mul_codes(x, cand);
            }
            break;
        }
    }
    if (log_[1] != 0) throw std::logic_error("no primitive element found");

    if (q_ <= kAddTableCap) {
        addt_.resize(static_cast<std::size_t>(q_) * q_);
        for (ff_elt a = 0; a < static_cast<ff_elt>(q_); ++a)
            for (ff_elt b = 0; b < static_cast<ff_elt>(q_); ++b)
                addt_[static_cast<std::size_t>(a) * q_ + b] = add_slow(a, b);
    }
}

ff_elt FiniteField::add_slow(ff_elt a, ff_elt b) const {
    ff_elt c = 0, mulp = 1;
    for (long i = 0; i < m_; ++i) {
        long da = (a / mulp) % p_, db = (b / mulp) % p_;
        c += static_cast<ff_elt>((da + db) % p_) * mulp;
        mulp *= p_;
    }
    return c;
}

ff_elt FiniteField::add(ff_elt a, ff_elt b) const {
    if (!addt_.empty()) return addt_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
}

ff_elt FiniteField::neg(ff_elt a) const {
    ff_elt c = 0, mulp = 1;
    for (long i = 0; i < m_; ++i) {
        long d = (a / mulp) % p_;
        c += static_cast<ff_elt>((p_ - d) % p_) * mulp;
        mulp *= p_;
    }
    return c;
}

ff_elt FiniteField::sub(ff_elt a, ff_elt b) const { return add(a, neg(b)); }

ff_elt FiniteField::inv(ff_elt a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return exp_[(q_ - 1) - log_[a]];
}

ff_elt FiniteField::pow(ff_elt a, long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("0^e with e <= 0");
        return 0;
    }
    long le = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_[le];
}

ff_elt FiniteField::trace_to(ff_elt a, long sub_m) const {
    if (m_ % sub_m != 0) throw std::invalid_argument("not a subfield degree");
    ff_elt s = 0, x = a;
    long steps = m_ / sub_m;
    long jump = 1;
    for (long i = 0; i < sub_m; ++i) jump *= p_;  // p^sub_m
    for (long i = 0; i < steps; ++i) {
        s = add(s, x);
        x = pow(x, jump);
    }
    return s;
}

ff_elt FiniteField::norm_to(ff_elt a, long sub_m) const {
    if (m_ % sub_m != 0) throw std::invalid_argument("not a subfield degree");
    ff_elt s = 1, x = a;
    long steps = m_ / sub_m;
    long jump = 1;
    for (long i = 0; i < sub_m; ++i) jump *= p_;
    for (long i = 0; i < steps; ++i) {
        s = mul(s, x);
        x = pow(x, jump);
    }
    return s;
}

bool FiniteField::in_subfield(ff_elt a, long sub_m) const {
    long jump = 1;
    for (long i = 0; i < sub_m; ++i) jump *= p_;
    return pow(a, jump) == a || a == 0;
}

long FiniteField::trace_to_prime(ff_elt a) const {
    ff_elt t = trace_to(a, 1);
    // an element of the prime subfield is encoded by its constant digit
    return t % p_;
}

long FiniteField::order(ff_elt a) const {
    if (a == 0) throw std::domain_error("order of zero");
    long l = log_[a];
    long g = std::gcd(l, q_ - 1);
    return (q_ - 1) / g;
}

std::vector<ff_elt> FiniteField::subfield_elements(long sub_m) const {
    std::vector<ff_elt> out;
    for (ff_elt a = 0; a < static_cast<ff_elt>(q_); ++a)
        if (in_subfield(a, sub_m)) out.push_back(a);
    return out;
}

const FiniteField* FiniteField::get(long p, long m) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<FiniteField>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = pool[{p, m}];
    if (!slot) slot.reset(new FiniteField(p, m));
    return slot.get();
}

AddChar::AddChar(const FiniteField* k, bool trivial_on_half_subfield)
    : k_(k), sign_(1), flagged_(trivial_on_half_subfield) {
    if (!trivial_on_half_subfield) {
        beta_ = 1;
        return;
    }
    if (k->m() % 2 != 0) throw std::invalid_argument("trivial-on-subfield character needs even degree");
    const long half = k->m() / 2;
    for (ff_elt b = 1; b < static_cast<ff_elt>(k->q()); ++b) {
        if (k->trace_to(b, half) == 0) {
            beta_ = b;
            break;
        }
    }
    if (beta_ == 0) throw std::logic_error("no trace-zero element found");
}

AddChar::AddChar(const FiniteField* k, ff_elt beta, int sign) : k_(k), beta_(beta), sign_(sign >= 0 ? 1 : -1) {}

}  // namespace glfq
