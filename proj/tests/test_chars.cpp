#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "klsum/chars.hpp"
#include "klsum/errors.hpp"

#include "oracles.hpp"

using namespace klsum;
using namespace klsum::chars;

namespace {

// Definitional re-check with the slow factorizer.
bool fundamental_slow(std::int64_t d) {
    if (d == 0) return false;
    auto sqfree = [](std::int64_t m) {
        if (m == 0) return false;
        return oracle::squarefree_slow(static_cast<std::uint64_t>(m < 0 ? -m : m));
    };
    std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return sqfree(d);
    if (r == 0) {
        std::int64_t m = d / 4;
        std::int64_t rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && sqfree(m);
    }
    return false;
}

std::vector<std::int64_t> fundamentals_upto(std::int64_t bound) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = -bound; d <= bound; ++d)
        if (d != 1 && d != 0 && fundamental_slow(d)) ds.push_back(d);
    return ds;
}

} // namespace

TEST_SUITE("chars") {

TEST_CASE("kronecker symbol agrees with Euler's criterion at odd prime bottoms") {
    for (std::uint64_t p = 3; p <= 199; p += 2) {
        if (!oracle::is_prime_slow(p)) continue;
        for (std::int64_t a = -2 * static_cast<std::int64_t>(p); a <= 2 * static_cast<std::int64_t>(p); ++a)
            CHECK(kronecker_symbol(a, static_cast<std::int64_t>(p)) == oracle::legendre_euler(a, p));
    }
}

TEST_CASE("kronecker symbol edge bottoms") {
    // bottom 0: nonzero only at a = +-1
    CHECK(kronecker_symbol(1, 0) == 1);
    CHECK(kronecker_symbol(-1, 0) == 1);
    CHECK(kronecker_symbol(2, 0) == 0);
    CHECK(kronecker_symbol(-7, 0) == 0);
    // bottom 1 and -1
    for (std::int64_t a = -9; a <= 9; ++a) {
        CHECK(kronecker_symbol(a, 1) == 1);
        CHECK(kronecker_symbol(a, -1) == (a < 0 ? -1 : 1));
    }
    // bottom 2: period 8 pattern in a
    for (std::int64_t a = -24; a <= 24; ++a) {
        int expected;
        std::int64_t r = ((a % 8) + 8) % 8;
        if (a % 2 == 0) expected = 0;
        else if (r == 1 || r == 7) expected = 1;
        else expected = -1;
        CHECK(kronecker_symbol(a, 2) == expected);
    }
}

TEST_CASE("kronecker symbol is multiplicative in both arguments") {
    for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t b = -12; b <= 12; ++b)
            for (std::int64_t n = -12; n <= 12; ++n) {
                // (.|-1) sees only the sign of the top, so a zero factor
                // next to a negative one breaks multiplicativity there
                if (n == -1 && a * b == 0 && (a < 0 || b < 0)) continue;
                CHECK(kronecker_symbol(a * b, n) ==
                      kronecker_symbol(a, n) * kronecker_symbol(b, n));
            }
    for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t m = -12; m <= 12; ++m)
            for (std::int64_t n = -12; n <= 12; ++n) {
                if (m == 0 || n == 0) continue;
                CHECK(kronecker_symbol(a, m * n) ==
                      kronecker_symbol(a, m) * kronecker_symbol(a, n));
            }
}

TEST_CASE("fundamental discriminant predicate matches the definition") {
    for (std::int64_t d = -300; d <= 300; ++d)
        CHECK(is_fundamental_discriminant(d) == fundamental_slow(d));
    CHECK(is_fundamental_discriminant(5));
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(12));
    CHECK_FALSE(is_fundamental_discriminant(9));
    CHECK_FALSE(is_fundamental_discriminant(4));
}

TEST_CASE("character construction rejects bad discriminants") {
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(0), domain_error);
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(1), domain_error);
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(-1), domain_error);
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(7), domain_error);  // 3 mod 4
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(9), domain_error);  // square
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(-6), domain_error); // 2 mod 4
    CHECK_THROWS_AS(RealPrimitiveCharacter::from_discriminant(20), domain_error); // m = 5 = 1 mod 4
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(-3));
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(-4));
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(5));
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(8));
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(-8));
    CHECK_NOTHROW(RealPrimitiveCharacter::from_discriminant(12));
}

TEST_CASE("characters are periodic, completely multiplicative, and unit-supported") {
    for (std::int64_t d : fundamentals_upto(60)) {
        auto chi = RealPrimitiveCharacter::from_discriminant(d);
        auto D = static_cast<std::int64_t>(chi.modulus());
        CHECK(chi.modulus() == static_cast<std::uint64_t>(d < 0 ? -d : d));

        for (std::int64_t n = -30; n <= 30; ++n) {
            CHECK(chi(n) == chi(n + D));
            CHECK(chi(n) == chi(n - 3 * D));
            for (std::int64_t m = -30; m <= 30; ++m) CHECK(chi(n * m) == chi(n) * chi(m));
        }
        // support = units; full-period sum = 0
        int period_sum = 0;
        for (std::int64_t n = 0; n < D; ++n) {
            bool unit = oracle::gcd(static_cast<std::uint64_t>(n), chi.modulus()) == 1;
            CHECK((chi(n) != 0) == unit);
            period_sum += chi(n);
        }
        CHECK(period_sum == 0);
        // parity matches the sign of the discriminant
        CHECK(chi(-1) == (d > 0 ? 1 : -1));
        CHECK(chi.parity() == (d > 0 ? 0 : 1));
    }
}

TEST_CASE("closed-form L(1, chi) reproduces the classical constants") {
    const double pi = std::numbers::pi;
    auto m3 = RealPrimitiveCharacter::from_discriminant(-3);
    CHECK(std::abs(m3.l_one() - pi / (3.0 * std::sqrt(3.0))) < 1e-12);

    auto m4 = RealPrimitiveCharacter::from_discriminant(-4);
    CHECK(std::abs(m4.l_one() - pi / 4.0) < 1e-12);

    auto p5 = RealPrimitiveCharacter::from_discriminant(5);
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(p5.l_one() - 2.0 / std::sqrt(5.0) * std::log(golden)) < 1e-12);
    CHECK(std::abs(p5.l_one() - 0.4304089409640040) < 1e-12);
}

TEST_CASE("closed-form L(1, chi) matches the partial-sum evaluation") {
    for (std::int64_t d : fundamentals_upto(60)) {
        auto chi = RealPrimitiveCharacter::from_discriminant(d);
        double slow = oracle::l_one_partial([&](std::int64_t n) { return chi(n); },
                                            chi.modulus(), 3'000'000);
        CHECK(std::abs(chi.l_one() - slow) < 1e-8);
        CHECK(chi.l_one() > 0.0);
    }
}

TEST_CASE("eta is L(1, chi) scaled by the log of the modulus") {
    const double pi = std::numbers::pi;
    auto m3 = RealPrimitiveCharacter::from_discriminant(-3);
    CHECK(std::abs(m3.eta() - pi / (3.0 * std::sqrt(3.0)) * std::log(3.0)) < 1e-12);
    auto p8 = RealPrimitiveCharacter::from_discriminant(8);
    CHECK(std::abs(p8.eta() - p8.l_one() * std::log(8.0)) < 1e-15);
}

TEST_CASE("principal character") {
    CHECK_THROWS_AS(principal_char(0, 5), domain_error);
    for (std::int64_t n = -10; n <= 10; ++n) CHECK(principal_char(1, n) == 1);
    for (std::int64_t n = 0; n < 12; ++n)
        CHECK(principal_char(12, n) == ((n == 1 || n == 5 || n == 7 || n == 11) ? 1 : 0));
    CHECK(principal_char(12, -5) == 1);
    CHECK(principal_char(12, 17) == 1);
    CHECK(principal_char(12, -4) == 0);
}

} // TEST_SUITE
