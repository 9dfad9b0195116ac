#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace glfq {

// Shared per-conductor context: the cyclotomic polynomial Phi_N and the
// reduction rows x^(phi+k) mod Phi_N used by multiplication.
class CycloField {
public:
    static const CycloField* get(long conductor);  // interned, never freed

    long conductor() const { return n_; }
    long degree() const { return phi_; }
    const std::vector<mpz_class>& phi_poly() const { return poly_; }
    // x^(degree+k) mod Phi_N for k in [0, degree-2]; vectors of length degree
    const std::vector<mpz_class>& reduction_row(long k) const { return red_[k]; }
    // power basis coordinates of zeta_N^e (e taken mod N)
    const std::vector<mpz_class>& zeta_power(long e) const;

private:
    explicit CycloField(long conductor);
    long n_ = 1, phi_ = 1;
    std::vector<mpz_class> poly_;
    std::vector<std::vector<mpz_class>> red_;
    mutable std::vector<std::vector<mpz_class>> zeta_;  // cached, size N
    mutable std::vector<bool> zeta_done_;
};

// Exact element of Q(zeta_N): integer numerator vector in the power basis
// 1, zeta, ..., zeta^(phi(N)-1), over a positive common denominator with
// content coprime to it.  The representation is canonical, so equality is
// coefficient-wise.
class Cyclo {
public:
    Cyclo() : f_(CycloField::get(1)), num_(1, 0), den_(1) {}
    explicit Cyclo(const CycloField* f) : f_(f), num_(f->degree(), 0), den_(1) {}
    Cyclo(const CycloField* f, long value) : f_(f), num_(f->degree(), 0), den_(1) {
        num_[0] = value;
    }
    Cyclo(const CycloField* f, const mpq_class& value) : f_(f), num_(f->degree(), 0) {
        num_[0] = value.get_num();
        den_ = value.get_den();
    }
    // raw coefficient vector (length phi(N)) of rationals; normalized on entry
    Cyclo(const CycloField* f, std::vector<mpq_class> coeffs);

    static Cyclo zeta(const CycloField* f, long exponent = 1);
    static Cyclo integer(const CycloField* f, const mpz_class& v);

    const CycloField* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inverse() const;  // throws std::domain_error on zero
    Cyclo pow(long e) const;
    // the automorphism zeta -> zeta^(-1); fixes rationals
    Cyclo conj() const;
    // any Galois twist zeta -> zeta^e with gcd(e, N) = 1
    Cyclo galois(long e) const;
    Cyclo scaled(const mpq_class& c) const;
    // multiply by zeta_N^e (cheap monomial shift)
    Cyclo times_zeta(long e) const;

    // acc += c * x with integer c, fast path shared with the group sums
    void add_scaled(const Cyclo& x, const mpz_class& c);

    // move this element into the cyclotomic field of larger conductor M
    // (current N must divide M)
    Cyclo embed(const CycloField* bigger) const;

    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    // true when every coefficient denominator is coprime to ell
    bool is_integral_away_from(long ell) const { return den_ % ell != 0; }

    std::string to_string() const;  // human readable, e.g. "1/2 + 3*z^5"
    std::uint64_t hash() const;

private:
    void normalize();
    const CycloField* f_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& v);

enum class SqrtConvention { galois, generic };

// Exact square root of q = p^m in Q(zeta_N) (requires 4p | N when a Gauss
// sum is involved).  Galois convention: p^(m/2), m even.  Generic
// convention: p^(m/2) for even m; for odd m the quadratic Gauss sum of F_p
// (adjusted by zeta_4 when p = 3 mod 4), or zeta_8 + zeta_8^(-1) when p = 2.
Cyclo sqrt_prime_power(const CycloField* f, long p, long m, SqrtConvention conv);

}  // namespace glfq
