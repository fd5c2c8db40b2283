#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "klsum/errors.hpp"

namespace klsum::arith {

// Resource caps. Inputs past these raise capacity_error rather than
// silently eating memory or wall time.
inline constexpr std::uint64_t kSievePrimesCap = 100'000'000;
inline constexpr std::uint64_t kFactorizeBound = 1'000'000'000'000ULL;
inline constexpr std::uint64_t kSpfTableLimit = 10'000'000;

struct PrimeFactor {
    std::uint64_t prime;
    int exponent;
};

// An integer together with its full prime factorization. Primes are
// strictly increasing, exponents >= 1, and the product of p^e equals n;
// n = 1 carries an empty factor list.
class FactoredInteger {
public:
    FactoredInteger(std::uint64_t n, std::vector<PrimeFactor> factors);

    std::uint64_t value() const { return n_; }
    const std::vector<PrimeFactor>& factors() const { return factors_; }

    // omega(n): number of distinct prime factors
    int omega() const { return static_cast<int>(factors_.size()); }
    bool squarefree() const;
    // log n computed as sum of e * log p
    double log_value() const;

private:
    std::uint64_t n_;
    std::vector<PrimeFactor> factors_;
};

// P^-(n) with the convention P^-(1) = infinity. The sentinel is a real
// variant, not a large integer, so a comparison against it cannot be
// written by accident; use exceeds()/value().
class SmallestPrime {
public:
    static SmallestPrime infinity() { return SmallestPrime(0, true); }
    static SmallestPrime at(std::uint64_t p) { return SmallestPrime(p, false); }

    bool is_infinity() const { return infinite_; }
    std::uint64_t value() const {
        if (infinite_) throw domain_error("P^-(1) is infinite, it has no integer value");
        return p_;
    }
    // P^-(n) > bound, with infinity exceeding everything
    bool exceeds(double bound) const { return infinite_ || static_cast<double>(p_) > bound; }

private:
    SmallestPrime(std::uint64_t p, bool inf) : p_(p), infinite_(inf) {}
    std::uint64_t p_;
    bool infinite_;
};

// All primes <= limit, ascending. limit >= 2 required.
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

// Deterministic factorization: smallest-prime-factor table below
// kSpfTableLimit, trial division up to kFactorizeBound.
FactoredInteger factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// mu(n): 0 when n has a square factor, else (-1)^omega(n)
int mobius(const FactoredInteger& f);

// Lambda(n) = log p when n = p^k, else 0
double von_mangoldt(const FactoredInteger& f);

// Lambda_2(n) = (mu * log^2)(n), evaluated through the identity
// Lambda_2 = Lambda log + Lambda*Lambda (the convolution term is zero
// unless n has at most two distinct prime factors).
double von_mangoldt2(const FactoredInteger& f);

// Inverse of a modulo n, in [0, n). Requires gcd(a, n) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

SmallestPrime smallest_prime_factor(const FactoredInteger& f);
// P^+(n), with P^+(1) = 1
std::uint64_t largest_prime_factor(const FactoredInteger& f);

// Calls fn(d) for every divisor d of f, in a fixed deterministic order.
template <class Fn>
void for_each_divisor(const FactoredInteger& f, Fn&& fn) {
    const auto& fs = f.factors();
    std::vector<std::uint64_t> divs{1};
    for (const auto& pf : fs) {
        std::size_t count = divs.size();
        std::uint64_t pe = 1;
        for (int e = 1; e <= pf.exponent; ++e) {
            pe *= pf.prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pe);
        }
    }
    for (std::uint64_t d : divs) fn(d);
}

// Calls fn(d, mu_d, log_d) for every squarefree divisor d of f. Each
// prime's log is taken once per call, so the 2^omega divisor values cost
// only omega log evaluations.
template <class Fn>
void for_each_squarefree_divisor(const FactoredInteger& f, Fn&& fn) {
    const auto& fs = f.factors();
    struct Entry {
        std::uint64_t d;
        int mu;
        double logd;
    };
    std::vector<Entry> divs{{1, 1, 0.0}};
    for (const auto& pf : fs) {
        double logp = std::log(static_cast<double>(pf.prime));
        std::size_t count = divs.size();
        for (std::size_t i = 0; i < count; ++i)
            divs.push_back({divs[i].d * pf.prime, -divs[i].mu, divs[i].logd + logp});
    }
    for (const auto& e : divs) fn(e.d, e.mu, e.logd);
}

} // namespace klsum::arith
