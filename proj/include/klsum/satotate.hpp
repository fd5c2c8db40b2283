#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klsum::satotate {

// Cap on the prime for vertical-family generation (the work is O(p^2)).
inline constexpr std::uint64_t kVerticalCap = 100'000;

// A batch of angles in [0,pi] with a provenance label such as
// "vertical p=10007". Validated on construction.
class AngleSample {
public:
    AngleSample(std::vector<double> angles, std::string label);

    const std::vector<double>& angles() const { return angles_; }
    const std::string& label() const { return label_; }

private:
    std::vector<double> angles_;
    std::string label_;
};

// CDF of the measure (2/pi) sin^2(theta) dtheta on [0,pi]:
// theta/pi - sin(2 theta)/(2 pi).
double st_cdf(double theta);

// Kl(a,p) for a = 1..p-1, index a-1. Shared tables and one batch
// inversion make the whole family O(p^2) with O(p) setup.
std::vector<double> vertical_values(std::uint64_t p);

// Angles of the vertical family {theta_{a,p} : 1 <= a < p}.
AngleSample vertical_sample(std::uint64_t p);

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of the
// sample and st_cdf.
double ks_distance(const AngleSample& s);

// Mean of |2 cos theta| over the sample.
double mean_abs(const AngleSample& s);

// Mean of |Kl(b^2 mod p, p)| over b = 1..p-1.
double mean_abs_squares(std::uint64_t p);

struct StConstants {
    double c_abs;   // 8/(3 pi): limit mean of |2 cos theta|
    double c_kappa; // 4/(3 pi)
    double c_f;     // 16/(3 pi)
};
StConstants st_constants();

// All three vertical statistics from one pass over the family.
struct VerticalStats {
    double ks;
    double mean_abs;
    double mean_abs_squares;
};
VerticalStats vertical_stats(std::uint64_t p);

} // namespace klsum::satotate
