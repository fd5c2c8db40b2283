#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "klsum/arith.hpp"
#include "klsum/chars.hpp"

namespace klsum::identities {

// Outcome of one identity check over a range of n. `constant` is filled
// by checks that resolve a normalization; the residual fields are filled
// by the sign-resolution check (one residual per candidate sign).
struct IdentityReport {
    std::string name;
    std::string range;
    double deviation = 0.0;
    std::optional<double> constant;
    std::optional<double> residual_plus;
    std::optional<double> residual_minus;
};

// lambda_tilde_r(n) = sum_{d|n} mu(d) (log(sqrt(n)/d))^r, r in {1,2}
double lambda_tilde(const arith::FactoredInteger& f, int r);

// nu = mu * (mu chi): multiplicative with nu(p) = -(1 + chi(p)),
// nu(p^2) = chi(p), nu(p^e) = 0 for e >= 3; evaluated prime-by-prime.
double nu(const arith::FactoredInteger& f, const chars::RealPrimitiveCharacter& chi);

// Max deviation over 2 <= n <= x of lambda_tilde_1 = Lambda and
// lambda_tilde_2 = Lambda_2 - Lambda log n. Requires x <= 1e6.
IdentityReport check_lambda_identities(std::uint64_t x);

// On squarefree n <= x: lambda_tilde_1 vanishes off primes and
// lambda_tilde_2 vanishes off products of exactly two primes.
IdentityReport check_support_properties(std::uint64_t x);

// (1/2^r) sum over ordered triples n = a*b*c of nu(b) chi(a) (log(ab/c))^r.
// Requires gcd(n, D) = 1.
double convolution_rhs(const arith::FactoredInteger& f, int r,
                       const chars::RealPrimitiveCharacter& chi);

// Finds c_r in {+1,-1} minimizing max_{n<=x squarefree, (n,D)=1}
// |lambda_tilde_r(n) - c_r * convolution_rhs(n)|. The report carries the
// winning constant, its residual as `deviation`, and both per-sign
// residuals; no exception when both residuals are large. x <= 1e4.
IdentityReport resolve_convolution_sign(std::uint64_t x,
                                        const chars::RealPrimitiveCharacter& chi, int r);

struct TailSums {
    double non_e2_sum;        // sum of lambda_tilde_2(n), n <= x not a product
                              // of two distinct primes
    double shared_factor_sum; // sum of lambda_tilde_2(n), n <= x, gcd(n,D) > 1
    double non_e2_ratio;      // non_e2_sum / x
    double shared_ratio;      // shared_factor_sum / (x log log x)
};
// Requires x <= 1e6.
TailSums tail_sums(std::uint64_t x, const chars::RealPrimitiveCharacter& chi);

} // namespace klsum::identities
