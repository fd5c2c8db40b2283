#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "klsum/arith.hpp"
#include "klsum/errors.hpp"
#include "klsum/kloost.hpp"
#include "klsum/parallel.hpp"

#include "oracles.hpp"

using namespace klsum;
using namespace klsum::kloost;

TEST_SUITE("kloost") {

TEST_CASE("direct evaluation matches the naive complex sum") {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        for (std::uint64_t a : {std::uint64_t(0), std::uint64_t(1), std::uint64_t(2), n - 1}) {
            double got = kl_direct(a, n);
            double want = oracle::kl_naive(a, n);
            CHECK(std::abs(got - want) < 1e-10);
        }
    }
}

TEST_CASE("classical closed values") {
    CHECK(kl_direct(1, 1) == 1.0);
    CHECK(std::abs(kl_direct(1, 2) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(kl_direct(1, 3) + 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(kl_direct(1, 6) + 1.0 / std::sqrt(6.0)) < 1e-14);
    // a = 0 degenerates to a Ramanujan sum: -1/sqrt(p) at primes
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 101ULL})
        CHECK(std::abs(kl_direct(0, p) + 1.0 / std::sqrt(static_cast<double>(p))) < 1e-12);
}

TEST_CASE("periodicity in the residue") {
    for (std::uint64_t n : {5ULL, 12ULL, 35ULL, 91ULL})
        for (std::uint64_t a = 0; a < n; ++a)
            CHECK(kl_direct(a, n) == doctest::Approx(kl_direct(a + n, n)).epsilon(1e-15).scale(1.0));
}

TEST_CASE("multiplicative splitting agrees with direct evaluation") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        auto f = arith::factorize(n);
        CHECK(std::abs(kl_crt(1, f) - kl_direct(1, n)) < 1e-9);
        if (oracle::gcd(5, n) == 1) CHECK(std::abs(kl_crt(5, f) - kl_direct(5, n)) < 1e-9);
    }
    CHECK(std::abs(kl_crt(1, arith::factorize(35)) - oracle::kl_naive(1, 35)) < 1e-12);
    CHECK_THROWS_AS(kl_crt(5, arith::factorize(35)), domain_error);
    CHECK_THROWS_AS(kl_crt(0, arith::factorize(4)), domain_error);
}

TEST_CASE("angles invert the cosine parametrization") {
    CHECK(std::abs(angle(1, 3) - std::acos(-1.0 / (2.0 * std::sqrt(3.0)))) < 1e-12);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 41ULL, 97ULL})
        for (std::uint64_t a = 1; a < p; ++a) {
            double th = angle(a, p);
            CHECK(th >= 0.0);
            CHECK(th <= 4.0 * std::atan(1.0));
            CHECK(std::abs(2.0 * std::cos(th) - kl_direct(a, p)) < 1e-12);
        }
    CHECK_THROWS_AS(angle(1, 4), domain_error);  // modulus not prime
    CHECK_THROWS_AS(angle(3, 3), domain_error);  // residue divisible by p
    CHECK_THROWS_AS(angle(14, 7), domain_error);
}

TEST_CASE("batch over primes matches pointwise evaluation and fills angles") {
    auto batch = kl_batch_primes(500, 1);
    auto primes = arith::sieve_primes(500);
    REQUIRE(batch.size() == primes.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(batch[i].n == primes[i]);
        CHECK(batch[i].a == 1);
        CHECK(batch[i].value == kl_direct(1, primes[i]));
        REQUIRE(batch[i].theta.has_value());
        CHECK(std::abs(2.0 * std::cos(*batch[i].theta) - batch[i].value) < 1e-12);
    }
    // residue 0 has no angle
    auto degenerate = kl_batch_primes(50, 0);
    for (const auto& kv : degenerate) CHECK_FALSE(kv.theta.has_value());
    CHECK_THROWS_AS(kl_batch_primes(300'000, 1), capacity_error);
}

TEST_CASE("batch results are identical under any thread count") {
    set_num_threads(1);
    auto one = kl_batch_primes(2000, 1);
    set_num_threads(7);
    auto many = kl_batch_primes(2000, 1);
    set_num_threads(1);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].value == many[i].value); // bitwise
        CHECK(*one[i].theta == *many[i].theta);
    }
}

TEST_CASE("square-root cancellation bound holds with the power-of-32 refinement") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        auto f = arith::factorize(n);
        auto w = weil_check(1, f);
        CHECK(w.satisfied);
        double expect = std::pow(2.0, f.omega() + (n % 32 == 0 ? 0.5 : 0.0));
        CHECK(std::abs(w.bound_used - expect) < 1e-12);
        CHECK(std::abs(w.abs_value - std::abs(kl_crt(1, f))) < 1e-9);
    }
    auto w64 = weil_check(1, arith::factorize(64));
    CHECK(std::abs(w64.bound_used - std::pow(2.0, 1.5)) < 1e-12);
    auto w96 = weil_check(1, arith::factorize(96));
    CHECK(std::abs(w96.bound_used - std::pow(2.0, 2.5)) < 1e-12);
    auto w48 = weil_check(1, arith::factorize(48)); // 32 does not divide 48
    CHECK(std::abs(w48.bound_used - std::pow(2.0, 2.0)) < 1e-12);
}

TEST_CASE("unit inverse batch matches the searched inverses") {
    for (std::uint64_t n : {1ULL, 2ULL, 12ULL, 97ULL, 360ULL}) {
        auto inv = unit_inverses(n);
        REQUIRE(inv.size() == n);
        for (std::uint64_t v = 0; v < n; ++v) {
            if (oracle::gcd(v, n) == 1)
                CHECK(inv[v] == oracle::inverse_by_search(v, n));
            else
                CHECK(inv[v] == 0);
        }
    }
}

TEST_CASE("trig tables close the mirror symmetry exactly") {
    auto t = build_mod_tables(97);
    for (std::uint64_t k = 1; k < 97; ++k) {
        CHECK(t.cos_tab[97 - k] == t.cos_tab[k]);
        CHECK(t.sin_tab[97 - k] == -t.sin_tab[k]);
    }
}

} // TEST_SUITE
