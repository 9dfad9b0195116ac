#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace glfq {

// Raised when an enumeration or linear-algebra request exceeds the
// configured budget.  Carries the offending cardinality so callers can
// report it instead of silently truncating.
class TooLargeError : public std::runtime_error {
public:
    TooLargeError(const std::string& what, long long cardinality, long long budget)
        : std::runtime_error(what + ": size " + std::to_string(cardinality) +
                             " exceeds budget " + std::to_string(budget)),
          cardinality(cardinality), budget(budget) {}
    long long cardinality;
    long long budget;
};

class NonIntegralError : public std::runtime_error {
public:
    explicit NonIntegralError(const std::string& what) : std::runtime_error(what) {}
};

struct Budgets {
    long long group_elements = 250000;  // max |G| materialized
    long long dense_dim = 2500;         // max |G| for dense-function operations
};

// Deterministic RNG; the seed is recorded in every report that uses it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}
    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return eng_(); }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    return fnv1a64(s.data(), s.size(), h);
}

inline long mul_order(long a, long mod) {
    // multiplicative order of a modulo mod, gcd(a, mod) = 1
    long x = a % mod;
    if (x < 0) x += mod;
    long ord = 1;
    long y = x;
    while (y != 1 % mod) {
        y = static_cast<long>((static_cast<long long>(y) * x) % mod);
        ++ord;
        if (ord > mod) throw std::logic_error("mul_order: not a unit");
    }
    return ord;
}

inline long long power_mod(long long a, long long e, long long mod) {
    long long r = 1 % mod;
    a %= mod;
    if (a < 0) a += mod;
    while (e > 0) {
        if (e & 1) r = (__int128)r * a % mod;
        a = (__int128)a * a % mod;
        e >>= 1;
    }
    return r;
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long v2(long a) {
    long v = 0;
    while (a % 2 == 0) { a /= 2; ++v; }
    return v;
}

}  // namespace glfq
