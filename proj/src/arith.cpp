#include "klsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

namespace klsum::arith {

FactoredInteger::FactoredInteger(std::uint64_t n, std::vector<PrimeFactor> factors)
    : n_(n), factors_(std::move(factors)) {
    if (n == 0) throw domain_error("FactoredInteger: value must be positive");
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& pf : factors_) {
        if (pf.prime <= last)
            throw domain_error("FactoredInteger: primes must be strictly increasing");
        if (pf.exponent < 1)
            throw domain_error("FactoredInteger: exponents must be >= 1");
        last = pf.prime;
        for (int e = 0; e < pf.exponent; ++e) prod *= pf.prime;
    }
    if (prod != n_)
        throw domain_error("FactoredInteger: factorization does not multiply back to " +
                           std::to_string(n_));
}

bool FactoredInteger::squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimeFactor& pf) { return pf.exponent == 1; });
}

double FactoredInteger::log_value() const {
    double s = 0.0;
    for (const auto& pf : factors_) s += pf.exponent * std::log(static_cast<double>(pf.prime));
    return s;
}

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw domain_error("sieve_primes: limit must be >= 2");
    if (limit > kSievePrimesCap)
        throw capacity_error("sieve_primes: limit " + std::to_string(limit) +
                             " exceeds cap " + std::to_string(kSievePrimesCap));
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return primes;
}

namespace {

// Smallest-prime-factor table for fast repeated factorization; built on
// first use and immutable afterwards.
const std::vector<std::uint32_t>& spf_table() {
    static std::vector<std::uint32_t> table;
    static std::once_flag flag;
    std::call_once(flag, [] {
        table.assign(kSpfTableLimit + 1, 0);
        for (std::uint64_t i = 2; i <= kSpfTableLimit; ++i) {
            if (table[i] != 0) continue;
            for (std::uint64_t j = i; j <= kSpfTableLimit; j += i)
                if (table[j] == 0) table[j] = static_cast<std::uint32_t>(i);
        }
    });
    return table;
}

// Primes up to sqrt(kFactorizeBound), for trial division past the table.
const std::vector<std::uint32_t>& trial_primes() {
    static std::vector<std::uint32_t> primes;
    static std::once_flag flag;
    std::call_once(flag, [] { primes = sieve_primes(1'000'000); });
    return primes;
}

void push_factor(std::vector<PrimeFactor>& out, std::uint64_t p, int e) {
    out.push_back(PrimeFactor{p, e});
}

} // namespace

FactoredInteger factorize(std::uint64_t n) {
    if (n == 0) throw domain_error("factorize: n must be positive");
    if (n > kFactorizeBound)
        throw capacity_error("factorize: n " + std::to_string(n) + " exceeds bound " +
                             std::to_string(kFactorizeBound));
    std::uint64_t orig = n;
    std::vector<PrimeFactor> factors;
    if (n <= kSpfTableLimit) {
        const auto& spf = spf_table();
        while (n > 1) {
            std::uint64_t p = spf[n];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            push_factor(factors, p, e);
        }
        return FactoredInteger(orig, std::move(factors));
    }
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            push_factor(factors, p, e);
        }
    }
    if (n > 1) push_factor(factors, n, 1);
    std::sort(factors.begin(), factors.end(),
              [](const PrimeFactor& a, const PrimeFactor& b) { return a.prime < b.prime; });
    return FactoredInteger(orig, std::move(factors));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.omega() == 1 && f.factors()[0].exponent == 1;
}

int mobius(const FactoredInteger& f) {
    if (!f.squarefree()) return 0;
    return (f.omega() % 2 == 0) ? 1 : -1;
}

double von_mangoldt(const FactoredInteger& f) {
    if (f.omega() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors()[0].prime));
}

double von_mangoldt2(const FactoredInteger& f) {
    // Lambda_2 = Lambda log + Lambda*Lambda. The inner convolution
    // (Lambda*Lambda)(n) is (k-1) log^2 p on n = p^k, 2 log p log q when
    // n has exactly the two prime divisors p and q, and 0 otherwise.
    double term = von_mangoldt(f) * f.log_value();
    if (f.omega() == 1) {
        double lp = std::log(static_cast<double>(f.factors()[0].prime));
        term += (f.factors()[0].exponent - 1) * lp * lp;
    } else if (f.omega() == 2) {
        double lp = std::log(static_cast<double>(f.factors()[0].prime));
        double lq = std::log(static_cast<double>(f.factors()[1].prime));
        term += 2.0 * lp * lq;
    }
    return term;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw domain_error("mod_inverse: modulus must be positive");
    if (n == 1) return 0;
    std::int64_t r0 = static_cast<std::int64_t>(n), r1 = static_cast<std::int64_t>(a % n);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw domain_error("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                           std::to_string(n));
    if (t0 < 0) t0 += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t0);
}

SmallestPrime smallest_prime_factor(const FactoredInteger& f) {
    if (f.value() == 1) return SmallestPrime::infinity();
    return SmallestPrime::at(f.factors().front().prime);
}

std::uint64_t largest_prime_factor(const FactoredInteger& f) {
    if (f.value() == 1) return 1;
    return f.factors().back().prime;
}

} // namespace klsum::arith
