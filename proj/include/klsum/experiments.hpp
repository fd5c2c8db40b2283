#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "klsum/chars.hpp"
#include "klsum/sieve.hpp"

namespace klsum::experiments {

// Caps: prime sums are O(sum p) in the modulus, triple sums walk the
// divisor lattice of every integer in the window.
inline constexpr std::uint64_t kHorizontalCap = 200'000;
inline constexpr double kSumCapR1 = 100'000.0; // r=1 weight lives on primes
inline constexpr double kSumCapR2 = 10'000.0;  // general-n triple walks
inline constexpr double kASumCap = 10'000.0;
inline constexpr double kLodCap = 100'000.0;
inline constexpr std::uint64_t kSignScanCap = 1'000'000;

// Bump phi(t) = M exp(1 - 1/(1 - ((t-c)/w)^2)) on (c-w, c+w), 0 outside;
// smooth and compactly supported in the positive reals.
class SmoothWeight {
public:
    // dominating asks for phi >= 1 on [1,2], verified at construction
    SmoothWeight(double center, double half_width, double amplitude, bool dominating = false);

    // support (1,2), peak 1 at t = 1.5
    static SmoothWeight unit_bump();
    // support (1/2, 5/2), amplitude e^{1/3} so phi(1) = phi(2) = 1 exactly
    static SmoothWeight dominating_bump();

    double center() const { return c_; }
    double half_width() const { return w_; }
    double amplitude() const { return m_; }
    bool dominating() const { return dominating_; }

    double lower() const { return c_ - w_; }
    double upper() const { return c_ + w_; }

private:
    double c_, w_, m_;
    bool dominating_;
};

double smooth_phi(double t, const SmoothWeight& w);

// Parameters of one experiment: x, epsilon in (0, 1/2), r in {1,2}, a
// character, and the derived scales y = x^eps, z = x^{eps/(log eps)^2},
// u = x^{1/(log eps)^2}. z is clamped into [2, sqrt(y)] when the formula
// value violates z^2 <= y (z_clamped records this); the admissibility
// condition D^8 <= x^{eps^2} is reported, not enforced.
struct ExperimentConfig {
    double x;
    double epsilon;
    int r;
    chars::RealPrimitiveCharacter chi;
    double y;
    double z;
    double u;
    bool z_clamped;
    bool admissible;

    static ExperimentConfig make(double x, double epsilon, int r, std::int64_t discriminant);
};

// The sieve the experiments use: level y, sift limit z from the config.
sieve::BetaSieve build_sieve_for(const ExperimentConfig& cfg, double beta = 2.0,
                                 bool strict_z = true);

// S(x) = sum_{(n,D)=1} mu^2(n) phi(n/x) theta'(n) lambda_tilde_r(n) Kl(1,n)
double sum_S(const ExperimentConfig& cfg, const sieve::BetaSieve& s, const SmoothWeight& w);

// sum over ordered triples (a,b,c), (abc,D)=1, of
// mu^2(abc) phi(abc/x) theta'(abc) nu(b) chi(a) (log(ab/c))^r Kl(1,abc)
double triple_sum(const ExperimentConfig& cfg, const sieve::BetaSieve& s, const SmoothWeight& w);

struct SumDecomposition {
    double S_total_direct; // sum_S above
    double S_L;            // b > 1 part of the triple sum
    double S_N;            // b = 1, min{a,c} <= sqrt(x)/y^3
    double S_C;            // b = 1, min{a,c} >  sqrt(x)/y^3
    double triple_sum;     // all triples, summed in one pass
    ExperimentConfig config;
};

// Splits the triple-sum lattice by (b>1) / (b=1, min small) / (b=1, min
// large). The partition S_L + S_N + S_C = triple_sum is enforced to 1e-6
// relative; a violation raises identity_violation.
SumDecomposition decompose(const ExperimentConfig& cfg, const sieve::BetaSieve& s,
                           const SmoothWeight& w);

struct HorizontalSum {
    double sum;          // sum_{p <= x} Kl(1,p)
    std::uint64_t pi_x;  // number of primes
    double ratio;        // sum / pi_x
};
HorizontalSum horizontal_sum(std::uint64_t x);

struct ASum {
    double A;          // sum over ordered prime pairs, x < pq <= 2x, of
                       // log(pq) log(p) log(q) |Kl(1,pq)|; p = q allowed
    double normalized; // A / (x log^2 x)
};
// Sharp window (x, 2x] by default; with a weight, the window is phi's
// support and each term carries phi(pq/x).
ASum a_sum(double x, const std::optional<SmoothWeight>& w = std::nullopt);

struct LodRow {
    std::uint64_t q;
    double inner_abs; // |sum_{n = 0 mod q} phi(n/x) chi(n) Kl(1,n)|
};
struct LodProbe {
    double total; // sum over q <= Q of inner_abs
    std::vector<LodRow> rows;
};
// chi_fn is any completely multiplicative {-1,0,1}-valued evaluator
// (a primitive character or a principal one). Requires Q <= sqrt(x).
LodProbe lod_probe(double x, std::uint64_t Q, const std::function<int(std::uint64_t)>& chi_fn,
                   const SmoothWeight& w, bool squarefree_only);

struct CentralSplit {
    double S1;    // contribution of n with u-smooth part <= x^{1/10}
    double S2;    // the complement
    double total; // the unsigned central sum, accumulated in one pass
};
// Unsigned analogue of the S_C region on the sharp window (x, 2x]:
// ordered pairs (a,c), ac squarefree coprime to D, min{a,c} > sqrt(x)/y^3,
// summand mu^2(ac) theta'(ac) |Kl(1,ac)|, split by the u-smooth part of
// ac against x^{1/10}. S1 + S2 = total is enforced to 1e-9.
CentralSplit central_smooth_split(const ExperimentConfig& cfg, const sieve::BetaSieve& s);

struct SignChangePair {
    std::uint64_t n_pos; // first n in range: squarefree, omega = 2, Kl(1,n) > 0
    std::uint64_t n_neg; // first with Kl(1,n) < 0
    double kl_pos;
    double kl_neg;
};
// Scans squarefree n in [lo, hi] with omega(n) = 2; empty when the range
// does not expose both signs.
std::optional<SignChangePair> sign_change_scan(std::uint64_t lo, std::uint64_t hi);

} // namespace klsum::experiments
