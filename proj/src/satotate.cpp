#include "klsum/satotate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "klsum/arith.hpp"
#include "klsum/errors.hpp"
#include "klsum/kloost.hpp"
#include "klsum/parallel.hpp"
#include "klsum/summation.hpp"

namespace klsum::satotate {

AngleSample::AngleSample(std::vector<double> angles, std::string label)
    : angles_(std::move(angles)), label_(std::move(label)) {
    for (double t : angles_)
        if (!(t >= 0.0 && t <= std::numbers::pi))
            throw domain_error("AngleSample(" + label_ + "): angle " + std::to_string(t) +
                               " outside [0, pi]");
}

double st_cdf(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw domain_error("st_cdf: theta " + std::to_string(theta) + " outside [0, pi]");
    return theta / std::numbers::pi - std::sin(2.0 * theta) / (2.0 * std::numbers::pi);
}

namespace {

void check_vertical_pre(std::uint64_t p) {
    if (p > kVerticalCap)
        throw capacity_error("vertical family: p " + std::to_string(p) + " exceeds cap " +
                             std::to_string(kVerticalCap));
    if (!arith::is_prime(p))
        throw domain_error("vertical family: modulus " + std::to_string(p) + " is not prime");
}

} // namespace

std::vector<double> vertical_values(std::uint64_t p) {
    check_vertical_pre(p);
    kloost::ModTables t = kloost::build_mod_tables(p);
    std::vector<std::uint32_t> inv = kloost::unit_inverses(p);
    double rt = std::sqrt(static_cast<double>(p));
    std::vector<double> values(p - 1);
    parallel_for(p - 1, [&](std::size_t i) {
        std::uint64_t a = i + 1;
        KahanSum re, im;
        for (std::uint64_t v = 1; v < p; ++v) {
            std::uint64_t k = (v + a * inv[v]) % p;
            re.add(t.cos_tab[k]);
            im.add(t.sin_tab[k]);
        }
        if (std::abs(im.value() / rt) >= 1e-9)
            throw identity_violation("vertical_values: imaginary part did not cancel at a = " +
                                     std::to_string(a));
        values[i] = re.value() / rt;
    });
    return values;
}

AngleSample vertical_sample(std::uint64_t p) {
    std::vector<double> values = vertical_values(p);
    std::vector<double> angles(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double c = values[i] / 2.0;
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        angles[i] = std::acos(c);
    }
    return AngleSample(std::move(angles), "vertical p=" + std::to_string(p));
}

double ks_distance(const AngleSample& s) {
    if (s.angles().empty()) throw domain_error("ks_distance: empty sample");
    std::vector<double> sorted = s.angles();
    std::sort(sorted.begin(), sorted.end());
    const double m = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double f = st_cdf(sorted[i]);
        d = std::max(d, f - static_cast<double>(i) / m);
        d = std::max(d, static_cast<double>(i + 1) / m - f);
    }
    return d;
}

double mean_abs(const AngleSample& s) {
    if (s.angles().empty()) throw domain_error("mean_abs: empty sample");
    KahanSum sum;
    for (double t : s.angles()) sum.add(std::abs(2.0 * std::cos(t)));
    return sum.value() / static_cast<double>(s.angles().size());
}

double mean_abs_squares(std::uint64_t p) {
    std::vector<double> values = vertical_values(p);
    KahanSum sum;
    for (std::uint64_t b = 1; b < p; ++b) {
        std::uint64_t a = b * b % p;
        sum.add(std::abs(values[a - 1]));
    }
    return sum.value() / static_cast<double>(p - 1);
}

StConstants st_constants() {
    const double pi = std::numbers::pi;
    return StConstants{8.0 / (3.0 * pi), 4.0 / (3.0 * pi), 16.0 / (3.0 * pi)};
}

VerticalStats vertical_stats(std::uint64_t p) {
    std::vector<double> values = vertical_values(p);
    std::vector<double> angles(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double c = values[i] / 2.0;
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        angles[i] = std::acos(c);
    }
    AngleSample sample(std::move(angles), "vertical p=" + std::to_string(p));
    KahanSum sq;
    for (std::uint64_t b = 1; b < p; ++b) sq.add(std::abs(values[b * b % p - 1]));
    return VerticalStats{ks_distance(sample), mean_abs(sample),
                         sq.value() / static_cast<double>(p - 1)};
}

} // namespace klsum::satotate
