#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "klsum/arith.hpp"

namespace klsum::sieve {

// Cap on the number of stored sieve weights.
inline constexpr std::size_t kWeightTableCap = 10'000'000;

// Upper-bound combinatorial sieve weights (Rosser-Iwaniec form):
// xi_d = mu(d) on squarefree d = p1...pr with z > p1 > ... > pr and,
// for every odd m <= r, p1...p_{m-1} p_m^{beta+1} < y; xi_1 = 1; xi_d = 0
// elsewhere. Immutable after construction; evaluation is pure.
class BetaSieve {
public:
    // Requires z >= 2, z^2 <= y, beta >= 1. With strict_z (the default)
    // the support uses primes p < z, otherwise p <= z.
    BetaSieve(double y, double z, double beta, bool strict_z = true);

    double level() const { return y_; }
    double sift_limit() const { return z_; }
    double beta() const { return beta_; }
    bool strict_z() const { return strict_z_; }

    // xi_d, 0 off the support
    int xi(std::uint64_t d) const;

    // theta(n) = sum_{d|n} xi_d
    double theta(const arith::FactoredInteger& f) const;

    // theta'(n) = sum_{d|n} xi_d log(n/d), cross-checked on every call
    // against the equivalent form sum_{d|n} theta(n/d) Lambda(d); a
    // disagreement beyond 1e-9 raises identity_violation.
    double theta_prime(const arith::FactoredInteger& f) const;

    // nonzero weights, ascending in d
    const std::vector<std::pair<std::uint64_t, int>>& weights() const { return weights_; }

private:
    double y_, z_, beta_;
    bool strict_z_;
    std::vector<std::pair<std::uint64_t, int>> weights_;
};

// CSV export of the weight table, columns "d,xi_d".
void write_weights_csv(const BetaSieve& s, std::ostream& os);

// (sum_d xi_d f(d)/d) * prod_{p<=z} (1 + f(p)/p) for a multiplicative f
// given by its values at primes. A monitored ratio: the sieve's
// fundamental lemma says the first factor is O(prod^{-1}).
double fundlem_ratio(const BetaSieve& s, const std::function<double(std::uint64_t)>& f_at_prime);

// [sum_{n<=x} theta'(n) f(n)] / [x prod_{z<p<=x} (1 + f(p)/p)] for a
// multiplicative f supported on squarefree n.
double sieved_mult_sum_ratio(const BetaSieve& s,
                             const std::function<double(std::uint64_t)>& f_at_prime,
                             std::uint64_t x);

} // namespace klsum::sieve
