#include "glfq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "glfq/util.hpp"

namespace glfq {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size()) {
        mpz_class lead = num.back();
        if (lead == 0) {
            num.pop_back();
            continue;
        }
        if (lead % den.back() != 0) throw std::logic_error("poly_divexact: non-exact");
        mpz_class c = lead / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) break;
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

std::vector<mpz_class> cyclotomic_poly(long n, std::map<long, std::vector<mpz_class>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by all Phi_d, d | n, d < n
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divexact(std::move(num), cyclotomic_poly(d, memo));
    }
    memo[n] = num;
    return num;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

CycloField::CycloField(long conductor) : n_(conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    std::map<long, std::vector<mpz_class>> memo;
    poly_ = cyclotomic_poly(conductor, memo);
    phi_ = static_cast<long>(poly_.size()) - 1;
    if (phi_ != euler_phi(conductor)) throw std::logic_error("phi mismatch");
    // reduction rows: x^(phi + k) mod Phi, iteratively
    if (phi_ >= 1) {
        red_.resize(std::max<long>(phi_ - 1, 0));
        std::vector<mpz_class> cur(phi_, 0);
        // x^phi = -(poly_[0] + ... + poly_[phi-1] x^(phi-1))
        std::vector<mpz_class> xphi(phi_);
        for (long i = 0; i < phi_; ++i) xphi[i] = -poly_[i];
        for (long k = 0; k + 1 < phi_; ++k) {
            if (k == 0) {
                cur = xphi;
            } else {
                // multiply by x and reduce
                mpz_class top = cur[phi_ - 1];
                for (long i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
                cur[0] = 0;
                if (top != 0)
                    for (long i = 0; i < phi_; ++i) cur[i] += top * xphi[i];
            }
            red_[k] = cur;
        }
    }
    zeta_.resize(conductor);
    zeta_done_.assign(conductor, false);
}

const std::vector<mpz_class>& CycloField::zeta_power(long e) const {
    e %= n_;
    if (e < 0) e += n_;
    if (!zeta_done_[e]) {
        std::vector<mpz_class> v(phi_, 0);
        if (e < phi_) {
            v[e] = 1;
        } else {
            v = red_[e - phi_];
        }
        zeta_[e] = std::move(v);
        zeta_done_[e] = true;
    }
    return zeta_[e];
}

const CycloField* CycloField::get(long conductor) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloField>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = pool[conductor];
    if (!slot) slot.reset(new CycloField(conductor));
    return slot.get();
}

Cyclo::Cyclo(const CycloField* f, std::vector<mpq_class> coeffs) : f_(f) {
    if (static_cast<long>(coeffs.size()) != f->degree())
        throw std::invalid_argument("coefficient vector length must be phi(N)");
    mpz_class lcm = 1;
    for (auto& c : coeffs) {
        c.canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    num_.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        num_[i] = coeffs[i].get_num() * (lcm / coeffs[i].get_den());
    den_ = lcm;
    normalize();
}

void Cyclo::normalize() {
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0) {
        den_ = 1;  // zero element
        return;
    }
    if (g != 1) {
        for (auto& c : num_) c /= g;
        den_ /= g;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
}

Cyclo Cyclo::zeta(const CycloField* f, long exponent) {
    Cyclo r(f);
    const auto& v = f->zeta_power(exponent);
    r.num_ = v;
    return r;
}

Cyclo Cyclo::integer(const CycloField* f, const mpz_class& v) {
    Cyclo r(f);
    r.num_[0] = v;
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (den_ != 1 || num_[0] != 1) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

mpq_class Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("not rational");
    mpq_class r(num_[0], den_);
    r.canonicalize();
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo r(*this);
    r += o;
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    Cyclo r(*this);
    r -= o;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (f_ != o.f_) throw std::invalid_argument("conductor mismatch");
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class a = o.den_ / g, b = den_ / g;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * a + o.num_[i] * b;
        den_ *= a;
    }
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (f_ != o.f_) throw std::invalid_argument("conductor mismatch");
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class a = o.den_ / g, b = den_ / g;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * a - o.num_[i] * b;
        den_ *= a;
    }
    normalize();
    return *this;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (f_ != o.f_) throw std::invalid_argument("conductor mismatch");
    const long d = f_->degree();
    Cyclo r(f_);
    // sparse-aware convolution
    std::vector<mpz_class> conv(2 * d - 1, 0);
    for (long i = 0; i < d; ++i) {
        if (num_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (o.num_[j] == 0) continue;
            conv[i + j] += num_[i] * o.num_[j];
        }
    }
    for (long i = 0; i < d; ++i) r.num_[i] = conv[i];
    for (long k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = f_->reduction_row(k - d);
        for (long i = 0; i < d; ++i)
            if (row[i] != 0) r.num_[i] += conv[k] * row[i];
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (f_ != o.f_) {
        // allow comparing across compatible conductors via embedding
        const CycloField* big = f_->conductor() % o.f_->conductor() == 0 ? f_ : o.f_;
        return embed(big) == o.embed(big);
    }
    return den_ == o.den_ && num_ == o.num_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_N)");
    if (is_rational()) {
        mpq_class v = rational_value();
        return Cyclo(f_, mpq_class(1) / v);
    }
    // extended Euclid in Q[x] against Phi_N
    using Poly = std::vector<mpq_class>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    const long d = f_->degree();
    Poly a(f_->phi_poly().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mpq_class(f_->phi_poly()[i]);
    Poly b(d);
    for (long i = 0; i < d; ++i) b[i] = mpq_class(num_[i], den_);
    trim(b);
    Poly s0(1, 0), s1(1, 1);  // coefficients of b in the Bezout identity
    trim(s0);
    while (true) {
        // a = q*b + r
        Poly r = a;
        Poly q;
        while (r.size() >= b.size()) {
            mpq_class c = r.back() / b.back();
            std::size_t shift = r.size() - b.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            trim(r);
            if (r.empty()) break;
        }
        // s_next = s0 - q*s1
        Poly sn = s0;
        if (sn.size() < q.size() + s1.size()) sn.resize(q.size() + s1.size() == 0 ? 0 : q.size() + s1.size() - 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) {
                if (sn.size() < i + j + 1) sn.resize(i + j + 1, 0);
                sn[i + j] -= q[i] * s1[j];
            }
        }
        trim(sn);
        if (r.empty()) {
            if (b.size() != 1) throw std::logic_error("element not invertible mod Phi_N");
            // b is the gcd (a nonzero constant); inverse = s1 / b
            std::vector<mpq_class> coeffs(d, 0);
            for (std::size_t i = 0; i < s1.size() && i < static_cast<std::size_t>(d); ++i)
                coeffs[i] = s1[i] / b[0];
            return Cyclo(f_, std::move(coeffs));
        }
        a = b;
        b = r;
        s0 = s1;
        s1 = sn;
    }
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r = Cyclo::integer(f_, 1);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Cyclo Cyclo::galois(long e) const {
    const long n = f_->conductor();
    long g = std::gcd(((e % n) + n) % n, n);
    if (g != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    Cyclo r(f_);
    for (long i = 0; i < f_->degree(); ++i) {
        if (num_[i] == 0) continue;
        const auto& img = f_->zeta_power(i * e % n);
        for (long j = 0; j < f_->degree(); ++j)
            if (img[j] != 0) r.num_[j] += num_[i] * img[j];
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

Cyclo Cyclo::conj() const { return galois(f_->conductor() - 1); }

Cyclo Cyclo::scaled(const mpq_class& c) const {
    Cyclo r(*this);
    for (auto& x : r.num_) x *= c.get_num();
    r.den_ *= c.get_den();
    r.normalize();
    return r;
}

Cyclo Cyclo::times_zeta(long e) const {
    Cyclo r(f_);
    const long n = f_->conductor();
    e = ((e % n) + n) % n;
    for (long i = 0; i < f_->degree(); ++i) {
        if (num_[i] == 0) continue;
        const auto& img = f_->zeta_power((i + e) % n);
        for (long j = 0; j < f_->degree(); ++j)
            if (img[j] != 0) r.num_[j] += num_[i] * img[j];
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

void Cyclo::add_scaled(const Cyclo& x, const mpz_class& c) {
    if (c == 0 || x.is_zero()) return;
    if (f_ != x.f_) throw std::invalid_argument("conductor mismatch");
    if (den_ == x.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            if (x.num_[i] != 0) num_[i] += c * x.num_[i];
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), x.den_.get_mpz_t());
        mpz_class a = x.den_ / g, b = den_ / g;
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= a;
            if (x.num_[i] != 0) num_[i] += c * b * x.num_[i];
        }
        den_ *= a;
    }
    normalize();
}

Cyclo Cyclo::embed(const CycloField* bigger) const {
    if (bigger == f_) return *this;
    const long n = f_->conductor(), m = bigger->conductor();
    if (m % n != 0) throw std::invalid_argument("conductor does not divide target");
    const long step = m / n;
    Cyclo r(bigger);
    for (long i = 0; i < f_->degree(); ++i) {
        if (num_[i] == 0) continue;
        const auto& img = bigger->zeta_power(i * step % m);
        for (long j = 0; j < bigger->degree(); ++j)
            if (img[j] != 0) r.num_[j] += num_[i] * img[j];
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < f_->degree(); ++i) {
        if (num_[i] == 0) continue;
        mpq_class c(num_[i], den_);
        c.canonicalize();
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpq_class ac = abs(c);
        if (i == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t Cyclo::hash() const {
    std::uint64_t h = fnv1a64(den_.get_str());
    for (const auto& c : num_) h = fnv1a64(c.get_str(), h);
    return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& v) { return os << v.to_string(); }

Cyclo sqrt_prime_power(const CycloField* f, long p, long m, SqrtConvention conv) {
    const long n = f->conductor();
    if (conv == SqrtConvention::galois) {
        if (m % 2 != 0) throw std::invalid_argument("galois sqrt convention needs even field degree");
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), p, m / 2);
        return Cyclo::integer(f, v);
    }
    if (m % 2 == 0) {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), p, m / 2);
        return Cyclo::integer(f, v);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, (m - 1) / 2);
    if (p == 2) {
        if (n % 8 != 0) throw std::invalid_argument("sqrt(2) needs 8 | N");
        Cyclo g = Cyclo::zeta(f, n / 8) + Cyclo::zeta(f, n - n / 8);
        return g.scaled(mpq_class(scale));
    }
    if (n % (4 * p) != 0) throw std::invalid_argument("generic sqrt needs 4p | N");
    // quadratic Gauss sum of F_p
    Cyclo g(f);
    for (long x = 1; x < p; ++x) {
        long chi = power_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
        Cyclo term = Cyclo::zeta(f, (n / p) * x);
        if (chi == 1) g += term;
        else g -= term;
    }
    if (p % 4 == 3) g = g * Cyclo::zeta(f, n / 4);
    return g.scaled(mpq_class(scale));
}

}  // namespace glfq
