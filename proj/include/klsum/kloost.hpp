#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klsum/arith.hpp"

namespace klsum::kloost {

// Default cap for batch evaluation over primes p <= x.
inline constexpr std::uint64_t kBatchPrimesCap = 200'000;

struct KloostermanValue {
    std::uint64_t a;             // residue, reduced mod n
    std::uint64_t n;             // modulus >= 1
    double value;                // the real normalized sum
    std::optional<double> theta; // angle in [0,pi], present for prime n with gcd(a,n)=1
};

// cos/sin of 2*pi*k/n for k in [0,n), filled symmetrically so that
// cos[n-k] == cos[k] and sin[n-k] == -sin[k] hold exactly.
struct ModTables {
    std::vector<double> cos_tab;
    std::vector<double> sin_tab;
};
ModTables build_mod_tables(std::uint64_t n);

// inv[v] = v^{-1} mod n for every unit v, 0 at non-units. Uses one
// extended gcd plus O(n) multiplications (prefix-product inversion).
std::vector<std::uint32_t> unit_inverses(std::uint64_t n);

// Normalized sum (1/sqrt n) sum_{v mod n, gcd(v,n)=1} e((v + a*vbar)/n),
// by direct summation in ascending-v order with compensated accumulation.
// The imaginary part cancels by the v <-> n-v symmetry and is asserted
// < 1e-9 before being dropped. n = 1 returns 1.
double kl_direct(std::uint64_t a, std::uint64_t n);

// Same value via twisted multiplicativity across coprime splits
// n = n1*n2, Kl(a, n1*n2) = Kl(a*n2bar^2, n1) * Kl(a*n1bar^2, n2),
// recursing down to prime powers. Requires gcd(a, n) = 1.
double kl_crt(std::uint64_t a, const arith::FactoredInteger& f);

// theta in [0,pi] with Kl(a,p) = 2 cos(theta). Requires p prime,
// gcd(a,p) = 1.
double angle(std::uint64_t a, std::uint64_t p);

// One KloostermanValue per prime p <= x, ascending, theta filled in.
// Data-parallel over p with a deterministic ordered merge.
std::vector<KloostermanValue> kl_batch_primes(std::uint64_t x, std::uint64_t a);

struct WeilCheck {
    double bound_used; // 2^omega(n) when 32 does not divide n, else 2^{omega(n)+1/2}
    double abs_value;
    bool satisfied;    // abs_value <= bound_used + 1e-9
};
WeilCheck weil_check(std::uint64_t a, const arith::FactoredInteger& f);

} // namespace klsum::kloost
