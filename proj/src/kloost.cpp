#include "klsum/kloost.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "klsum/errors.hpp"
#include "klsum/parallel.hpp"
#include "klsum/summation.hpp"

namespace klsum::kloost {

ModTables build_mod_tables(std::uint64_t n) {
    ModTables t;
    t.cos_tab.resize(n);
    t.sin_tab.resize(n);
    const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
    // fill k <= n/2 directly, mirror the rest so the k <-> n-k symmetry
    // holds exactly in floating point
    for (std::uint64_t k = 0; k <= n / 2; ++k) {
        double x = w * static_cast<double>(k);
        t.cos_tab[k] = std::cos(x);
        t.sin_tab[k] = std::sin(x);
    }
    for (std::uint64_t k = n / 2 + 1; k < n; ++k) {
        t.cos_tab[k] = t.cos_tab[n - k];
        t.sin_tab[k] = -t.sin_tab[n - k];
    }
    return t;
}

std::vector<std::uint32_t> unit_inverses(std::uint64_t n) {
    if (n == 0) throw domain_error("unit_inverses: modulus must be positive");
    if (n > (std::uint64_t(1) << 32))
        throw capacity_error("unit_inverses: modulus too large for table");
    std::vector<std::uint32_t> inv(n, 0);
    if (n == 1) return inv;
    std::vector<std::uint32_t> units;
    units.reserve(n);
    for (std::uint64_t v = 1; v < n; ++v)
        if (std::gcd(v, n) == 1) units.push_back(static_cast<std::uint32_t>(v));
    // prefix products, one egcd at the top, then back-substitution
    std::vector<std::uint32_t> prefix(units.size());
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < units.size(); ++i) {
        acc = acc * units[i] % n;
        prefix[i] = static_cast<std::uint32_t>(acc);
    }
    std::uint64_t inv_acc = arith::mod_inverse(acc, n);
    for (std::size_t i = units.size(); i-- > 0;) {
        std::uint64_t before = (i == 0) ? 1 : prefix[i - 1];
        inv[units[i]] = static_cast<std::uint32_t>(before * inv_acc % n);
        inv_acc = inv_acc * units[i] % n;
    }
    return inv;
}

namespace {

struct DirectSum {
    double real;
    double imag;
};

DirectSum kl_direct_sum(std::uint64_t a, std::uint64_t n, const ModTables& t,
                        const std::vector<std::uint32_t>& inv) {
    KahanSum re, im;
    std::uint64_t ar = a % n;
    for (std::uint64_t v = 1; v < n; ++v) {
        if (inv[v] == 0) continue;
        std::uint64_t k = (v + ar * inv[v]) % n;
        re.add(t.cos_tab[k]);
        im.add(t.sin_tab[k]);
    }
    double rt = std::sqrt(static_cast<double>(n));
    return DirectSum{re.value() / rt, im.value() / rt};
}

void assert_real(double imag, std::uint64_t a, std::uint64_t n) {
    if (std::abs(imag) >= 1e-9)
        throw identity_violation("kl_direct(" + std::to_string(a) + ", " + std::to_string(n) +
                                 "): imaginary part " + std::to_string(imag) +
                                 " did not cancel");
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

double kl_crt_split(std::uint64_t a, const std::vector<arith::PrimeFactor>& parts,
                    std::size_t lo, std::uint64_t n) {
    if (lo + 1 == parts.size()) return kl_direct(a % n, n);
    std::uint64_t q = 1;
    for (int e = 0; e < parts[lo].exponent; ++e) q *= parts[lo].prime;
    std::uint64_t rest = n / q;
    std::uint64_t inv_rest = arith::mod_inverse(rest % q, q);
    std::uint64_t inv_q = arith::mod_inverse(q % rest, rest);
    std::uint64_t a1 = mulmod(mulmod(a % q, inv_rest, q), inv_rest, q);
    std::uint64_t a2 = mulmod(mulmod(a % rest, inv_q, rest), inv_q, rest);
    return kl_direct(a1, q) * kl_crt_split(a2, parts, lo + 1, rest);
}

} // namespace

double kl_direct(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw domain_error("kl_direct: modulus must be >= 1");
    if (n == 1) return 1.0;
    ModTables t = build_mod_tables(n);
    std::vector<std::uint32_t> inv = unit_inverses(n);
    DirectSum s = kl_direct_sum(a, n, t, inv);
    assert_real(s.imag, a, n);
    return s.real;
}

double kl_crt(std::uint64_t a, const arith::FactoredInteger& f) {
    std::uint64_t n = f.value();
    if (n == 1) return 1.0;
    if (std::gcd(a % n, n) != 1)
        throw domain_error("kl_crt: gcd(a, n) = " + std::to_string(std::gcd(a % n, n)) +
                           " > 1; the twisted identity needs an invertible residue");
    return kl_crt_split(a % n, f.factors(), 0, n);
}

double angle(std::uint64_t a, std::uint64_t p) {
    if (!arith::is_prime(p)) throw domain_error("angle: modulus " + std::to_string(p) + " is not prime");
    if (a % p == 0) throw domain_error("angle: residue must be coprime to p");
    double v = kl_direct(a % p, p) / 2.0;
    if (v > 1.0) v = 1.0;
    if (v < -1.0) v = -1.0;
    return std::acos(v);
}

std::vector<KloostermanValue> kl_batch_primes(std::uint64_t x, std::uint64_t a) {
    if (x < 2) throw domain_error("kl_batch_primes: x must be >= 2");
    if (x > kBatchPrimesCap)
        throw capacity_error("kl_batch_primes: x " + std::to_string(x) + " exceeds cap " +
                             std::to_string(kBatchPrimesCap));
    std::vector<std::uint32_t> primes = arith::sieve_primes(x);
    std::vector<KloostermanValue> out(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        std::uint64_t p = primes[i];
        double v = kl_direct(a % p, p);
        std::optional<double> theta;
        if (a % p != 0) {
            double c = v / 2.0;
            if (c > 1.0) c = 1.0;
            if (c < -1.0) c = -1.0;
            theta = std::acos(c);
        }
        out[i] = KloostermanValue{a % p, p, v, theta};
    });
    return out;
}

WeilCheck weil_check(std::uint64_t a, const arith::FactoredInteger& f) {
    std::uint64_t n = f.value();
    bool div32 = (n % 32 == 0);
    double bound = std::pow(2.0, static_cast<double>(f.omega()) + (div32 ? 0.5 : 0.0));
    double v = std::abs(kl_direct(a, n));
    return WeilCheck{bound, v, v <= bound + 1e-9};
}

} // namespace klsum::kloost
