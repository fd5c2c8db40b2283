#include "klsum/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "klsum/errors.hpp"
#include "klsum/identities.hpp"
#include "klsum/kloost.hpp"
#include "klsum/parallel.hpp"
#include "klsum/summation.hpp"

namespace klsum::experiments {

SmoothWeight::SmoothWeight(double center, double half_width, double amplitude, bool dominating)
    : c_(center), w_(half_width), m_(amplitude), dominating_(dominating) {
    if (!(w_ > 0.0)) throw domain_error("SmoothWeight: half-width must be positive");
    if (!(m_ > 0.0)) throw domain_error("SmoothWeight: amplitude must be positive");
    if (!(c_ - w_ >= 0.0))
        throw domain_error("SmoothWeight: support must stay inside the positive reals");
    if (dominating_) {
        // the bump is unimodal, so phi >= 1 on [1,2] iff both endpoints
        // qualify and [1,2] sits inside the support
        if (!(lower() < 1.0 && upper() > 2.0 && smooth_phi(1.0, *this) >= 1.0 - 1e-9 &&
              smooth_phi(2.0, *this) >= 1.0 - 1e-9))
            throw domain_error("SmoothWeight: dominating bump must satisfy phi >= 1 on [1,2]");
    }
}

SmoothWeight SmoothWeight::unit_bump() { return SmoothWeight(1.5, 0.5, 1.0, false); }

SmoothWeight SmoothWeight::dominating_bump() {
    return SmoothWeight(1.5, 1.0, std::exp(1.0 / 3.0), true);
}

double smooth_phi(double t, const SmoothWeight& w) {
    double s = (t - w.center()) / w.half_width();
    double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return w.amplitude() * std::exp(1.0 - 1.0 / (1.0 - s2));
}

ExperimentConfig ExperimentConfig::make(double x, double epsilon, int r,
                                        std::int64_t discriminant) {
    if (!(x >= 2.0)) throw domain_error("ExperimentConfig: x must be >= 2");
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw domain_error("ExperimentConfig: epsilon must lie in (0, 1/2)");
    if (r != 1 && r != 2) throw domain_error("ExperimentConfig: r must be 1 or 2");
    auto chi = chars::RealPrimitiveCharacter::from_discriminant(discriminant);
    double le2 = std::log(epsilon) * std::log(epsilon);
    double y = std::pow(x, epsilon);
    double z = std::pow(x, epsilon / le2);
    double u = std::pow(x, 1.0 / le2);
    bool clamped = false;
    if (z * z > y) {
        // the formula scale violates z^2 <= y at small x; pull z down to
        // the largest admissible value
        z = std::sqrt(y);
        while (z * z > y) z = std::nextafter(z, 0.0);
        clamped = true;
    }
    if (z < 2.0) {
        z = 2.0;
        clamped = true;
        if (z * z > y)
            throw domain_error("ExperimentConfig: y = " + std::to_string(y) +
                               " < 4 leaves no room for any sift limit");
    }
    double D = static_cast<double>(chi.modulus());
    bool admissible = std::pow(D, 8.0) <= std::pow(x, epsilon * epsilon);
    return ExperimentConfig{x, epsilon, r, std::move(chi), y, z, u, clamped, admissible};
}

sieve::BetaSieve build_sieve_for(const ExperimentConfig& cfg, double beta, bool strict_z) {
    return sieve::BetaSieve(cfg.y, cfg.z, beta, strict_z);
}

namespace {

double pow_r(double v, int r) { return r == 1 ? v : v * v; }

void check_window_cap(const ExperimentConfig& cfg) {
    double cap = cfg.r == 1 ? kSumCapR1 : kSumCapR2;
    if (cfg.x > cap)
        throw capacity_error("x = " + std::to_string(cfg.x) + " exceeds the r=" +
                             std::to_string(cfg.r) + " cap " + std::to_string(cap));
}

struct Window {
    std::uint64_t lo; // first integer with phi(n/x) possibly nonzero
    std::uint64_t hi; // last such integer
};

Window integer_window(double x, const SmoothWeight& w) {
    double lo = x * w.lower();
    double hi = x * w.upper();
    std::uint64_t nlo = static_cast<std::uint64_t>(std::floor(lo)) + 1;
    std::uint64_t nhi = hi <= 1.0 ? 0 : static_cast<std::uint64_t>(std::ceil(hi)) - 1;
    if (nlo < 1) nlo = 1;
    return Window{nlo, nhi};
}

struct WindowTerm {
    arith::FactoredInteger f;
    double phi;
    double thetap;
    double kl;
};

// squarefree integers coprime to D in phi's window, with per-n weights;
// Kl(1,n) is the expensive part and runs data-parallel with per-index
// slots, so the result is independent of the thread count
std::vector<WindowTerm> window_terms(const ExperimentConfig& cfg, const sieve::BetaSieve& s,
                                     const SmoothWeight& w) {
    Window win = integer_window(cfg.x, w);
    std::vector<WindowTerm> terms;
    for (std::uint64_t n = win.lo; n <= win.hi; ++n) {
        if (std::gcd(n, cfg.chi.modulus()) != 1) continue;
        auto f = arith::factorize(n);
        if (!f.squarefree()) continue;
        double phi = smooth_phi(static_cast<double>(n) / cfg.x, w);
        if (phi == 0.0) continue;
        double tp = s.theta_prime(f);
        terms.push_back(WindowTerm{std::move(f), phi, tp, 0.0});
    }
    parallel_for(terms.size(),
                 [&](std::size_t i) { terms[i].kl = kloost::kl_crt(1, terms[i].f); });
    return terms;
}

// one leaf bucket per ordered factorization n = a*b*c
struct TripleInner {
    double L = 0.0; // b > 1
    double N = 0.0; // b = 1, min{a,c} <= threshold
    double C = 0.0; // b = 1, min{a,c} > threshold
    double T = 0.0; // every leaf, single accumulator
};

struct TripleWalker {
    const std::vector<arith::PrimeFactor>& fs;
    const chars::RealPrimitiveCharacter& chi;
    int r;
    double threshold;
    TripleInner inner;

    void rec(std::size_t i, std::uint64_t a, std::uint64_t c, double la, double lb, double lc,
             double chi_a, double nu_b, bool b_gt1) {
        if (i == fs.size()) {
            if (b_gt1) {
                double t = nu_b * chi_a * pow_r(la + lb - lc, r);
                inner.L += t;
                inner.T += t;
            } else {
                double t = chi_a * pow_r(la - lc, r);
                if (static_cast<double>(std::min(a, c)) <= threshold)
                    inner.N += t;
                else
                    inner.C += t;
                inner.T += t;
            }
            return;
        }
        std::uint64_t p = fs[i].prime;
        double logp = std::log(static_cast<double>(p));
        int chi_p = chi(static_cast<std::int64_t>(p));
        // assign p to a, then b, then c
        rec(i + 1, a * p, c, la + logp, lb, lc, chi_a * chi_p, nu_b, b_gt1);
        double nu_factor = -(1.0 + chi_p);
        if (nu_factor != 0.0)
            rec(i + 1, a, c, la, lb + logp, lc, chi_a, nu_b * nu_factor, true);
        rec(i + 1, a, c * p, la, lb, lc + logp, chi_a, nu_b, b_gt1);
    }
};

TripleInner walk_triples(const arith::FactoredInteger& f,
                         const chars::RealPrimitiveCharacter& chi, int r, double threshold) {
    TripleWalker w{f.factors(), chi, r, threshold, {}};
    w.rec(0, 1, 1, 0.0, 0.0, 0.0, 1.0, 1.0, false);
    return w.inner;
}

} // namespace

double sum_S(const ExperimentConfig& cfg, const sieve::BetaSieve& s, const SmoothWeight& w) {
    check_window_cap(cfg);
    Window win = integer_window(cfg.x, w);
    // on squarefree n, lambda_tilde_1 lives on primes and lambda_tilde_2
    // on products of two primes; everything else contributes exactly 0
    int want_omega = cfg.r;
    std::vector<arith::FactoredInteger> fs;
    for (std::uint64_t n = win.lo; n <= win.hi; ++n) {
        if (std::gcd(n, cfg.chi.modulus()) != 1) continue;
        auto f = arith::factorize(n);
        if (!f.squarefree() || f.omega() != want_omega) continue;
        fs.push_back(std::move(f));
    }
    std::vector<double> kl(fs.size());
    parallel_for(fs.size(), [&](std::size_t i) { kl[i] = kloost::kl_crt(1, fs[i]); });
    KahanSum total;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        double n = static_cast<double>(fs[i].value());
        total.add(smooth_phi(n / cfg.x, w) * s.theta_prime(fs[i]) *
                  identities::lambda_tilde(fs[i], cfg.r) * kl[i]);
    }
    return total.value();
}

double triple_sum(const ExperimentConfig& cfg, const sieve::BetaSieve& s,
                  const SmoothWeight& w) {
    check_window_cap(cfg);
    std::vector<WindowTerm> terms = window_terms(cfg, s, w);
    double threshold = std::sqrt(cfg.x) / std::pow(cfg.y, 3.0);
    std::vector<double> inner(terms.size());
    parallel_for(terms.size(), [&](std::size_t i) {
        inner[i] = walk_triples(terms[i].f, cfg.chi, cfg.r, threshold).T;
    });
    KahanSum total;
    for (std::size_t i = 0; i < terms.size(); ++i)
        total.add(terms[i].phi * terms[i].thetap * terms[i].kl * inner[i]);
    return total.value();
}

SumDecomposition decompose(const ExperimentConfig& cfg, const sieve::BetaSieve& s,
                           const SmoothWeight& w) {
    check_window_cap(cfg);
    std::vector<WindowTerm> terms = window_terms(cfg, s, w);
    double threshold = std::sqrt(cfg.x) / std::pow(cfg.y, 3.0);
    std::vector<TripleInner> inner(terms.size());
    parallel_for(terms.size(), [&](std::size_t i) {
        inner[i] = walk_triples(terms[i].f, cfg.chi, cfg.r, threshold);
    });
    KahanSum sl, sn, sc, tt;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double wgt = terms[i].phi * terms[i].thetap * terms[i].kl;
        sl.add(wgt * inner[i].L);
        sn.add(wgt * inner[i].N);
        sc.add(wgt * inner[i].C);
        tt.add(wgt * inner[i].T);
    }
    SumDecomposition d{sum_S(cfg, s, w), sl.value(), sn.value(), sc.value(), tt.value(), cfg};
    double lhs = d.S_L + d.S_N + d.S_C;
    double tol = 1e-6 * std::max(1.0, std::abs(d.triple_sum));
    if (std::abs(lhs - d.triple_sum) > tol)
        throw identity_violation("decompose: S_L + S_N + S_C = " + std::to_string(lhs) +
                                 " fail to partition the triple sum " +
                                 std::to_string(d.triple_sum));
    return d;
}

HorizontalSum horizontal_sum(std::uint64_t x) {
    if (x > kHorizontalCap)
        throw capacity_error("horizontal_sum: x exceeds cap " + std::to_string(kHorizontalCap));
    auto batch = kloost::kl_batch_primes(x, 1);
    KahanSum sum;
    for (const auto& kv : batch) sum.add(kv.value);
    double s = sum.value();
    return HorizontalSum{s, batch.size(), s / static_cast<double>(batch.size())};
}

ASum a_sum(double x, const std::optional<SmoothWeight>& w) {
    if (!(x >= 2.0)) throw domain_error("a_sum: x must be >= 2");
    if (x > kASumCap) throw capacity_error("a_sum: x exceeds cap " + std::to_string(kASumCap));
    double lo = w ? x * w->lower() : x;       // window (lo, hi]
    double hi = w ? x * w->upper() : 2.0 * x; // sharp: (x, 2x]
    std::uint64_t qmax = static_cast<std::uint64_t>(std::floor(hi / 2.0));
    std::vector<std::uint32_t> primes =
        qmax >= 2 ? arith::sieve_primes(qmax) : std::vector<std::uint32_t>{};
    KahanSum total;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        if (static_cast<double>(p) * p > hi) break;
        for (std::size_t j = i; j < primes.size(); ++j) {
            std::uint64_t q = primes[j];
            double n = static_cast<double>(p) * static_cast<double>(q);
            if (n > hi) break;
            if (n <= lo) continue;
            std::uint64_t nn = p * q;
            double kl = p == q ? kloost::kl_direct(1, nn) : kloost::kl_crt(1, arith::factorize(nn));
            double term = std::log(n) * std::log(static_cast<double>(p)) *
                          std::log(static_cast<double>(q)) * std::abs(kl);
            if (w) term *= smooth_phi(n / x, *w);
            total.add(p == q ? term : 2.0 * term);
        }
    }
    double A = total.value();
    double lg = std::log(x);
    return ASum{A, A / (x * lg * lg)};
}

LodProbe lod_probe(double x, std::uint64_t Q, const std::function<int(std::uint64_t)>& chi_fn,
                   const SmoothWeight& w, bool squarefree_only) {
    if (!(x >= 2.0)) throw domain_error("lod_probe: x must be >= 2");
    if (x > kLodCap) throw capacity_error("lod_probe: x exceeds cap " + std::to_string(kLodCap));
    if (Q < 1) throw domain_error("lod_probe: Q must be >= 1");
    if (static_cast<double>(Q) > std::sqrt(x))
        throw domain_error("lod_probe: Q = " + std::to_string(Q) + " exceeds sqrt(x)");
    Window win = integer_window(x, w);
    // per-n weights phi(n/x) chi(n) Kl(1,n); zero at filtered-out n
    std::vector<double> val(win.hi - win.lo + 1, 0.0);
    std::vector<std::uint64_t> active;
    for (std::uint64_t n = win.lo; n <= win.hi; ++n) {
        if (chi_fn(n) == 0) continue;
        if (squarefree_only && !arith::factorize(n).squarefree()) continue;
        if (smooth_phi(static_cast<double>(n) / x, w) == 0.0) continue;
        active.push_back(n);
    }
    parallel_for(active.size(), [&](std::size_t i) {
        std::uint64_t n = active[i];
        double kl = kloost::kl_crt(1, arith::factorize(n));
        val[n - win.lo] =
            smooth_phi(static_cast<double>(n) / x, w) * static_cast<double>(chi_fn(n)) * kl;
    });
    LodProbe probe;
    probe.rows.reserve(Q);
    KahanSum total;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        KahanSum inner;
        std::uint64_t first = ((win.lo + q - 1) / q) * q;
        for (std::uint64_t n = first; n <= win.hi; n += q) inner.add(val[n - win.lo]);
        double abs_inner = std::abs(inner.value());
        probe.rows.push_back(LodRow{q, abs_inner});
        total.add(abs_inner);
    }
    probe.total = total.value();
    return probe;
}

CentralSplit central_smooth_split(const ExperimentConfig& cfg, const sieve::BetaSieve& s) {
    check_window_cap(cfg);
    double x = cfg.x;
    std::uint64_t nlo = static_cast<std::uint64_t>(std::floor(x)) + 1;
    std::uint64_t nhi = static_cast<std::uint64_t>(std::floor(2.0 * x));
    double threshold = std::sqrt(x) / std::pow(cfg.y, 3.0);
    double smooth_bound = std::pow(x, 0.1);
    struct Row {
        arith::FactoredInteger f;
        double count;  // ordered pairs (a,c), ac = n, min{a,c} > threshold
        bool smooth;   // u-smooth part of n <= x^{1/10}
        double kl = 0.0;
    };
    std::vector<Row> rows;
    for (std::uint64_t n = nlo; n <= nhi; ++n) {
        if (std::gcd(n, cfg.chi.modulus()) != 1) continue;
        auto f = arith::factorize(n);
        if (!f.squarefree()) continue;
        std::uint64_t count = 0;
        arith::for_each_divisor(f, [&](std::uint64_t a) {
            if (static_cast<double>(a) > threshold &&
                static_cast<double>(n / a) > threshold)
                ++count;
        });
        if (count == 0) continue;
        std::uint64_t smooth_part = 1;
        for (const auto& pf : f.factors())
            if (static_cast<double>(pf.prime) <= cfg.u) smooth_part *= pf.prime;
        bool smooth = static_cast<double>(smooth_part) <= smooth_bound;
        rows.push_back(Row{std::move(f), static_cast<double>(count), smooth});
    }
    parallel_for(rows.size(), [&](std::size_t i) { rows[i].kl = kloost::kl_crt(1, rows[i].f); });
    KahanSum s1, s2, total;
    for (const auto& row : rows) {
        double wgt = s.theta_prime(row.f) * std::abs(row.kl) * row.count;
        (row.smooth ? s1 : s2).add(wgt);
        total.add(wgt);
    }
    CentralSplit split{s1.value(), s2.value(), total.value()};
    if (std::abs(split.S1 + split.S2 - split.total) > 1e-9)
        throw identity_violation("central_smooth_split: S1 + S2 = " +
                                 std::to_string(split.S1 + split.S2) +
                                 " fails to partition the central sum " +
                                 std::to_string(split.total));
    return split;
}

std::optional<SignChangePair> sign_change_scan(std::uint64_t lo, std::uint64_t hi) {
    if (hi > kSignScanCap)
        throw capacity_error("sign_change_scan: hi exceeds cap " + std::to_string(kSignScanCap));
    if (lo < 1 || lo > hi) throw domain_error("sign_change_scan: need 1 <= lo <= hi");
    std::optional<std::pair<std::uint64_t, double>> pos, neg;
    for (std::uint64_t n = lo; n <= hi && !(pos && neg); ++n) {
        auto f = arith::factorize(n);
        if (!f.squarefree() || f.omega() != 2) continue;
        double v = kloost::kl_crt(1, f);
        if (v > 0.0 && !pos) pos = {n, v};
        if (v < 0.0 && !neg) neg = {n, v};
    }
    if (pos && neg) return SignChangePair{pos->first, neg->first, pos->second, neg->second};
    return std::nullopt;
}

} // namespace klsum::experiments
