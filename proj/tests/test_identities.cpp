#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "klsum/arith.hpp"
#include "klsum/chars.hpp"
#include "klsum/errors.hpp"
#include "klsum/identities.hpp"

#include "oracles.hpp"

using namespace klsum;
using namespace klsum::identities;

namespace {

// nu = mu * (mu chi) straight from the convolution.
double nu_slow(std::uint64_t n, const chars::RealPrimitiveCharacter& chi) {
    double s = 0.0;
    for (std::uint64_t d : oracle::divisors_slow(n)) {
        std::uint64_t e = n / d;
        s += oracle::mobius_slow(d) * oracle::mobius_slow(e) *
             chi(static_cast<std::int64_t>(e));
    }
    return s;
}

// (1/2^r) sum over ordered triples abc = n of nu(b) chi(a) (log(ab/c))^r.
double convolution_rhs_slow(std::uint64_t n, int r, const chars::RealPrimitiveCharacter& chi) {
    double s = 0.0;
    for (std::uint64_t a : oracle::divisors_slow(n))
        for (std::uint64_t b : oracle::divisors_slow(n / a)) {
            std::uint64_t c = n / (a * b);
            double nb = nu_slow(b, chi);
            if (nb == 0.0) continue;
            double t = std::log(static_cast<double>(a) * static_cast<double>(b) /
                                static_cast<double>(c));
            s += chi(static_cast<std::int64_t>(a)) * nb * (r == 1 ? t : t * t);
        }
    return s / (r == 1 ? 2.0 : 4.0);
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("divisor-weighted log sums match the brute-force definition") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        auto f = arith::factorize(n);
        for (int r : {1, 2})
            CHECK(std::abs(lambda_tilde(f, r) - oracle::lambda_tilde_slow(n, r)) < 1e-9);
    }
    CHECK_THROWS_AS(lambda_tilde(arith::factorize(6), 3), domain_error);
    CHECK_THROWS_AS(lambda_tilde(arith::factorize(6), 0), domain_error);
}

TEST_CASE("first log power recovers the von Mangoldt function") {
    for (std::uint64_t n = 2; n <= 20000; ++n)
        CHECK(std::abs(lambda_tilde(arith::factorize(n), 1) - oracle::von_mangoldt_slow(n)) <
              1e-9);
}

TEST_CASE("second log power equals the square-log convolution minus its diagonal") {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        double lam2 = oracle::von_mangoldt_slow(n) * std::log(static_cast<double>(n)) +
                      oracle::lambda_conv_slow(n);
        double expected = lam2 - oracle::von_mangoldt_slow(n) * std::log(static_cast<double>(n));
        CHECK(std::abs(lambda_tilde(arith::factorize(n), 2) - expected) < 1e-9);
    }
}

TEST_CASE("support on squarefree integers") {
    for (std::uint64_t n = 2; n <= 20000; ++n) {
        auto f = arith::factorize(n);
        if (!f.squarefree()) continue;
        if (f.omega() != 1) CHECK(std::abs(lambda_tilde(f, 1)) < 1e-10);
        if (f.omega() != 2) CHECK(std::abs(lambda_tilde(f, 2)) < 1e-10);
        if (f.omega() == 2) {
            // exactly 2 log p log q on products of two distinct primes
            double lp = std::log(static_cast<double>(f.factors()[0].prime));
            double lq = std::log(static_cast<double>(f.factors()[1].prime));
            CHECK(std::abs(lambda_tilde(f, 2) - 2.0 * lp * lq) < 1e-9);
        }
    }
}

TEST_CASE("range checks on the bundled identity scans") {
    auto lam = check_lambda_identities(50'000);
    CHECK(lam.deviation < 1e-9);
    CHECK(lam.name == "lambda_tilde_vs_von_mangoldt");
    auto sup = check_support_properties(20'000);
    CHECK(sup.deviation < 1e-10);
    CHECK_THROWS_AS(check_lambda_identities(2'000'000), capacity_error);
}

TEST_CASE("sign-twisted Mobius convolution is multiplicative with the closed prime values") {
    for (std::int64_t d : {std::int64_t(5), std::int64_t(12), std::int64_t(-3), std::int64_t(-4)}) {
        auto chi = chars::RealPrimitiveCharacter::from_discriminant(d);
        for (std::uint64_t n = 1; n <= 3000; ++n)
            CHECK(std::abs(nu(arith::factorize(n), chi) - nu_slow(n, chi)) < 1e-12);
        // closed values at prime powers
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            double chip = chi(static_cast<std::int64_t>(p));
            CHECK(nu(arith::factorize(p), chi) == -(1.0 + chip));
            CHECK(nu(arith::factorize(p * p), chi) == chip);
            CHECK(nu(arith::factorize(p * p * p), chi) == 0.0);
        }
    }
}

TEST_CASE("triple convolution matches its brute-force expansion") {
    auto chi5 = chars::RealPrimitiveCharacter::from_discriminant(5);
    auto chi12 = chars::RealPrimitiveCharacter::from_discriminant(12);
    for (std::uint64_t n = 1; n <= 400; ++n) {
        for (const auto* chi : {&chi5, &chi12}) {
            if (oracle::gcd(n, chi->modulus()) != 1) {
                CHECK_THROWS_AS(convolution_rhs(arith::factorize(n), 1, *chi), domain_error);
                continue;
            }
            for (int r : {1, 2})
                CHECK(std::abs(convolution_rhs(arith::factorize(n), r, *chi) -
                               convolution_rhs_slow(n, r, *chi)) < 1e-9);
        }
    }
}

TEST_CASE("the convolution identity holds with sign -1 for r=1 and +1 for r=2") {
    for (std::int64_t d : {std::int64_t(5), std::int64_t(12)}) {
        auto chi = chars::RealPrimitiveCharacter::from_discriminant(d);
        auto r1 = resolve_convolution_sign(2000, chi, 1);
        REQUIRE(r1.constant.has_value());
        CHECK(*r1.constant == -1.0);
        CHECK(r1.deviation < 1e-9);
        REQUIRE(r1.residual_plus.has_value());
        CHECK(*r1.residual_plus > 0.1); // the wrong sign misses badly

        auto r2 = resolve_convolution_sign(2000, chi, 2);
        REQUIRE(r2.constant.has_value());
        CHECK(*r2.constant == 1.0);
        CHECK(r2.deviation < 1e-9);
        REQUIRE(r2.residual_minus.has_value());
        CHECK(*r2.residual_minus > 0.1);
    }
}

TEST_CASE("tail sums match direct summation") {
    auto chi = chars::RealPrimitiveCharacter::from_discriminant(5);
    auto t = tail_sums(500, chi);

    double non_e2 = 0.0, shared = 0.0;
    for (std::uint64_t n = 2; n <= 500; ++n) {
        double lt2 = oracle::lambda_tilde_slow(n, 2);
        bool e2 = oracle::squarefree_slow(n) && oracle::factor_slow(n).size() == 2;
        if (!e2) non_e2 += lt2;
        if (oracle::gcd(n, 5) != 1) shared += lt2;
    }
    CHECK(std::abs(t.non_e2_sum - non_e2) < 1e-8);
    CHECK(std::abs(t.shared_factor_sum - shared) < 1e-8);
    CHECK(std::abs(t.non_e2_ratio - non_e2 / 500.0) < 1e-10);
    CHECK(std::abs(t.shared_ratio - shared / (500.0 * std::log(std::log(500.0)))) < 1e-10);
    // the excluded terms are a vanishing fraction of the total mass x log x
    CHECK(std::abs(t.non_e2_ratio) < std::log(500.0));
}

} // TEST_SUITE
