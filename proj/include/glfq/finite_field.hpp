#pragma once

#include <cstdint>
#include <vector>

#include "glfq/cyclotomic.hpp"

namespace glfq {

using ff_elt = std::uint32_t;  // element code: base-p digit vector packed as an integer

// F_{p^m} with a deterministically chosen defining polynomial (the
// lexicographically first monic irreducible of degree m over F_p).
// Elements are codes in [0, p^m); arithmetic goes through log/antilog
// tables, so fields are expected to stay desk-sized.
class FiniteField {
public:
    static const FiniteField* get(long p, long m);  // interned

    long p() const { return p_; }
    long m() const { return m_; }
    long q() const { return q_; }
    ff_elt zero() const { return 0; }
    ff_elt one() const { return 1; }
    ff_elt generator() const { return gen_; }
    const std::vector<ff_elt>& defining_poly() const { return def_; }

    ff_elt from_int(long v) const {  // prime-subfield embedding
        long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<ff_elt>(r);
    }
    ff_elt add(ff_elt a, ff_elt b) const;
    ff_elt sub(ff_elt a, ff_elt b) const;
    ff_elt neg(ff_elt a) const;
    ff_elt mul(ff_elt a, ff_elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    ff_elt inv(ff_elt a) const;
    ff_elt div(ff_elt a, ff_elt b) const { return mul(a, inv(b)); }
    ff_elt pow(ff_elt a, long e) const;
    ff_elt frobenius(ff_elt a) const { return pow(a, p_); }

    // trace/norm to the subfield of degree sub_m | m (result lies in that
    // subfield, still encoded in this field)
    ff_elt trace_to(ff_elt a, long sub_m) const;
    ff_elt norm_to(ff_elt a, long sub_m) const;
    bool in_subfield(ff_elt a, long sub_m) const;
    // absolute trace as an integer in [0, p)
    long trace_to_prime(ff_elt a) const;

    long order(ff_elt a) const;  // multiplicative order, a != 0

    // all elements of the subfield of degree sub_m
    std::vector<ff_elt> subfield_elements(long sub_m) const;

private:
    FiniteField(long p, long m);
    long p_, m_, q_;
    std::vector<ff_elt> def_;  // monic defining polynomial, length m+1
    ff_elt gen_;
    std::vector<long> log_;      // log_[a] for a != 0
    std::vector<ff_elt> exp_;    // exp_[k] = gen^k, doubled length
    std::vector<ff_elt> addt_;   // full addition table (q <= table cap) or empty
    ff_elt add_slow(ff_elt a, ff_elt b) const;
};

// Additive character psi of F_q with values in mu_p: psi(x) = zeta_p^exponent(x),
// exponent(x) = Tr_{k/F_p}(beta x).  The "trivial on k0" flavour picks beta in
// ker(Tr_{k/k0}) \ {0}, smallest in code order.
class AddChar {
public:
    AddChar() = default;
    AddChar(const FiniteField* k, bool trivial_on_half_subfield);
    // explicit beta and sign (sign -1 gives the inverse character)
    AddChar(const FiniteField* k, ff_elt beta, int sign);

    const FiniteField* field() const { return k_; }
    ff_elt beta() const { return beta_; }
    int sign() const { return sign_; }
    bool trivial_on_subfield() const { return flagged_; }

    // exponent t in [0, p) with psi(x) = zeta_p^t
    long exponent(ff_elt x) const {
        long t = k_->trace_to_prime(k_->mul(beta_, x)) * sign_;
        t %= k_->p();
        return t < 0 ? t + k_->p() : t;
    }
    Cyclo value(const CycloField* f, ff_elt x) const {
        return Cyclo::zeta(f, (f->conductor() / k_->p()) * exponent(x));
    }
    AddChar inverse() const { return AddChar(k_, beta_, -sign_); }
    // psi^a : x -> psi(a x)
    AddChar twist(ff_elt a) const { return AddChar(k_, k_->mul(beta_, a), sign_); }
    bool is_trivial() const { return beta_ == 0; }

private:
    const FiniteField* k_ = nullptr;
    ff_elt beta_ = 0;
    int sign_ = 1;
    bool flagged_ = false;
};

}  // namespace glfq
