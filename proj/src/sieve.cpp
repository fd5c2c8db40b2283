#include "klsum/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "klsum/errors.hpp"
#include "klsum/summation.hpp"

namespace klsum::sieve {

namespace {

// DFS over chains z > p1 > ... > pr. `d`/`logd` carry the product so far,
// `mu` its sign; depth m is 1-based for the odd-m level condition
// p1...p_{m-1} p_m^{beta+1} < y, i.e. d_prev * p^{beta+1} < y.
struct Builder {
    const std::vector<std::uint32_t>& primes; // descending, all < z (or <= z)
    double y;
    double beta;
    std::vector<std::pair<std::uint64_t, int>>& out;

    void extend(std::uint64_t d, int mu, std::size_t next, int depth) {
        // The reject conditions are monotone along the descending prime
        // list, so the failing primes form a prefix: jump past it instead
        // of scanning it. The per-prime checks below stay as the source of
        // truth; the jump only skips primes they would reject.
        auto begin = primes.begin() + static_cast<std::ptrdiff_t>(next);
        auto start = (depth % 2 == 1)
                         ? std::partition_point(begin, primes.end(),
                                                [&](std::uint32_t p) {
                                                    double lvl = static_cast<double>(d) *
                                                                 std::pow(static_cast<double>(p),
                                                                          beta + 1.0);
                                                    return !(lvl < y);
                                                })
                         : std::partition_point(begin, primes.end(), [&](std::uint32_t p) {
                               return static_cast<double>(d) * static_cast<double>(p) > y;
                           });
        for (std::size_t i = static_cast<std::size_t>(start - primes.begin()); i < primes.size();
             ++i) {
            std::uint64_t p = primes[i];
            double dp = static_cast<double>(d) * static_cast<double>(p);
            if (dp > y) continue; // smaller primes may still fit
            if (depth % 2 == 1) {
                // odd level: d * p^{beta+1} must stay below y
                double lvl = static_cast<double>(d) *
                             std::pow(static_cast<double>(p), beta + 1.0);
                if (!(lvl < y)) continue;
            }
            std::uint64_t nd = d * p;
            if (out.size() >= kWeightTableCap)
                throw capacity_error("BetaSieve: weight table exceeds cap " +
                                     std::to_string(kWeightTableCap));
            out.emplace_back(nd, -mu);
            extend(nd, -mu, i + 1, depth + 1);
        }
    }
};

} // namespace

BetaSieve::BetaSieve(double y, double z, double beta, bool strict_z)
    : y_(y), z_(z), beta_(beta), strict_z_(strict_z) {
    if (!(z >= 2.0)) throw domain_error("BetaSieve: z must be >= 2");
    if (!(z * z <= y)) throw domain_error("BetaSieve: need z^2 <= y (z = " + std::to_string(z) +
                                          ", y = " + std::to_string(y) + ")");
    if (!(beta >= 1.0)) throw domain_error("BetaSieve: beta must be >= 1");
    std::uint64_t pmax = static_cast<std::uint64_t>(std::floor(z));
    std::vector<std::uint32_t> primes;
    if (pmax >= 2) {
        primes = arith::sieve_primes(pmax);
        if (strict_z_) {
            while (!primes.empty() && static_cast<double>(primes.back()) >= z) primes.pop_back();
        }
    }
    std::reverse(primes.begin(), primes.end()); // descending: chains pick p1 > p2 > ...
    weights_.emplace_back(1, 1);
    Builder b{primes, y_, beta_, weights_};
    b.extend(1, 1, 0, 1);
    std::sort(weights_.begin(), weights_.end());
}

int BetaSieve::xi(std::uint64_t d) const {
    auto it = std::lower_bound(weights_.begin(), weights_.end(), d,
                               [](const auto& w, std::uint64_t v) { return w.first < v; });
    if (it == weights_.end() || it->first != d) return 0;
    return it->second;
}

double BetaSieve::theta(const arith::FactoredInteger& f) const {
    double s = 0.0;
    arith::for_each_squarefree_divisor(f, [&](std::uint64_t d, int, double) {
        s += static_cast<double>(xi(d));
    });
    return s;
}

double BetaSieve::theta_prime(const arith::FactoredInteger& f) const {
    const double logn = f.log_value();
    KahanSum a;
    arith::for_each_squarefree_divisor(f, [&](std::uint64_t d, int, double logd) {
        int x = xi(d);
        if (x != 0) a.add(static_cast<double>(x) * (logn - logd));
    });
    // cross-check: theta'(n) = sum_{p^k || n} theta(n/p^k') log p summed over
    // prime powers p^k' <= p^k, i.e. sum_{d|n} theta(n/d) Lambda(d)
    KahanSum b;
    const auto& fs = f.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        double logp = std::log(static_cast<double>(fs[i].prime));
        std::uint64_t pk = 1;
        for (int e = 1; e <= fs[i].exponent; ++e) {
            pk *= fs[i].prime;
            std::vector<arith::PrimeFactor> rest;
            rest.reserve(fs.size());
            for (std::size_t j = 0; j < fs.size(); ++j) {
                if (i == j) {
                    if (e < fs[j].exponent)
                        rest.push_back({fs[j].prime, fs[j].exponent - e});
                } else {
                    rest.push_back(fs[j]);
                }
            }
            b.add(theta(arith::FactoredInteger(f.value() / pk, std::move(rest))) * logp);
        }
    }
    if (std::abs(a.value() - b.value()) > 1e-9)
        throw identity_violation("theta_prime(" + std::to_string(f.value()) +
                                 "): the two divisor-sum forms disagree: " +
                                 std::to_string(a.value()) + " vs " + std::to_string(b.value()));
    return a.value();
}

void write_weights_csv(const BetaSieve& s, std::ostream& os) {
    os << "d,xi_d\n";
    for (const auto& [d, x] : s.weights()) os << d << "," << x << "\n";
}

double fundlem_ratio(const BetaSieve& s, const std::function<double(std::uint64_t)>& f_at_prime) {
    KahanSum num;
    for (const auto& [d, x] : s.weights()) {
        double fd = 1.0;
        if (d > 1)
            for (const auto& pf : arith::factorize(d).factors()) fd *= f_at_prime(pf.prime);
        num.add(static_cast<double>(x) * fd / static_cast<double>(d));
    }
    double prod = 1.0;
    std::uint64_t pmax = static_cast<std::uint64_t>(std::floor(s.sift_limit()));
    if (pmax >= 2)
        for (std::uint32_t p : arith::sieve_primes(pmax))
            prod *= 1.0 + f_at_prime(p) / static_cast<double>(p);
    return num.value() * prod;
}

double sieved_mult_sum_ratio(const BetaSieve& s,
                             const std::function<double(std::uint64_t)>& f_at_prime,
                             std::uint64_t x) {
    KahanSum lhs;
    for (std::uint64_t n = 1; n <= x; ++n) {
        auto f = arith::factorize(n);
        double fn;
        if (n == 1) {
            fn = 1.0;
        } else if (!f.squarefree()) {
            continue; // f supported on squarefree n
        } else {
            fn = 1.0;
            for (const auto& pf : f.factors()) fn *= f_at_prime(pf.prime);
        }
        if (fn != 0.0) lhs.add(s.theta_prime(f) * fn);
    }
    double prod = 1.0;
    for (std::uint32_t p : arith::sieve_primes(x))
        if (static_cast<double>(p) > s.sift_limit()) prod *= 1.0 + f_at_prime(p) / static_cast<double>(p);
    double rhs = static_cast<double>(x) * prod;
    return lhs.value() / rhs;
}

} // namespace klsum::sieve
