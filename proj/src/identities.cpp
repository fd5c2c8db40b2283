#include "klsum/identities.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "klsum/errors.hpp"
#include "klsum/summation.hpp"

namespace klsum::identities {

namespace {

std::string range_str(std::uint64_t x) { return "2.." + std::to_string(x); }

double pow_r(double v, int r) { return r == 1 ? v : v * v; }

void check_r(int r) {
    if (r != 1 && r != 2)
        throw domain_error("r = " + std::to_string(r) + " unsupported; only r in {1,2}");
}

// nu at a prime power p^e given chi(p)
double nu_prime_power(int chi_p, int e) {
    if (e == 1) return -(1.0 + chi_p);
    if (e == 2) return chi_p;
    return 0.0;
}

} // namespace

double lambda_tilde(const arith::FactoredInteger& f, int r) {
    check_r(r);
    const double half_log = f.log_value() / 2.0;
    KahanSum s;
    arith::for_each_squarefree_divisor(f, [&](std::uint64_t, int mu, double logd) {
        s.add(mu * pow_r(half_log - logd, r));
    });
    return s.value();
}

double nu(const arith::FactoredInteger& f, const chars::RealPrimitiveCharacter& chi) {
    double v = 1.0;
    for (const auto& pf : f.factors()) {
        v *= nu_prime_power(chi(static_cast<std::int64_t>(pf.prime)), pf.exponent);
        if (v == 0.0) break;
    }
    return v;
}

IdentityReport check_lambda_identities(std::uint64_t x) {
    if (x > 1'000'000) throw capacity_error("check_lambda_identities: x > 1e6");
    double dev = 0.0;
    for (std::uint64_t n = 2; n <= x; ++n) {
        auto f = arith::factorize(n);
        double l1 = lambda_tilde(f, 1);
        double l2 = lambda_tilde(f, 2);
        double lam = arith::von_mangoldt(f);
        double d1 = std::abs(l1 - lam);
        double d2 = std::abs(l2 - (arith::von_mangoldt2(f) - lam * f.log_value()));
        dev = std::max(dev, std::max(d1, d2));
    }
    return IdentityReport{"lambda_tilde_vs_von_mangoldt", range_str(x), dev, {}, {}, {}};
}

IdentityReport check_support_properties(std::uint64_t x) {
    if (x > 1'000'000) throw capacity_error("check_support_properties: x > 1e6");
    double dev = 0.0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        auto f = arith::factorize(n);
        if (!f.squarefree()) continue;
        if (f.omega() != 1) dev = std::max(dev, std::abs(lambda_tilde(f, 1)));
        if (f.omega() != 2) dev = std::max(dev, std::abs(lambda_tilde(f, 2)));
    }
    return IdentityReport{"lambda_tilde_support", "1.." + std::to_string(x), dev, {}, {}, {}};
}

double convolution_rhs(const arith::FactoredInteger& f, int r,
                       const chars::RealPrimitiveCharacter& chi) {
    check_r(r);
    if (std::gcd(f.value(), chi.modulus()) != 1)
        throw domain_error("convolution_rhs: n = " + std::to_string(f.value()) +
                           " shares a factor with D = " + std::to_string(chi.modulus()));
    const auto& fs = f.factors();
    KahanSum total;
    // walk ordered factorizations n = a*b*c prime by prime, carrying
    // chi(a), nu(b) and the logs of a, b, c
    struct Walker {
        const std::vector<arith::PrimeFactor>& fs;
        const chars::RealPrimitiveCharacter& chi;
        int r;
        KahanSum& total;

        void rec(std::size_t i, double chi_a, double nu_b, double la, double lb, double lc) {
            if (i == fs.size()) {
                double base = la + lb - lc;
                double v = chi_a * nu_b * (r == 1 ? base : base * base);
                if (v != 0.0) total.add(v);
                return;
            }
            const auto& pf = fs[i];
            int chi_p = chi(static_cast<std::int64_t>(pf.prime));
            double logp = std::log(static_cast<double>(pf.prime));
            for (int ea = 0; ea <= pf.exponent; ++ea) {
                for (int eb = 0; eb + ea <= pf.exponent; ++eb) {
                    int ec = pf.exponent - ea - eb;
                    double ca = chi_a;
                    for (int t = 0; t < ea; ++t) ca *= chi_p;
                    double nb = nu_b * (eb == 0 ? 1.0 : nu_prime_power(chi_p, eb));
                    if (nb == 0.0) continue; // the whole branch contributes 0
                    rec(i + 1, ca, nb, la + ea * logp, lb + eb * logp, lc + ec * logp);
                }
            }
        }
    };
    Walker w{fs, chi, r, total};
    w.rec(0, 1.0, 1.0, 0.0, 0.0, 0.0);
    return total.value() / pow_r(2.0, r);
}

IdentityReport resolve_convolution_sign(std::uint64_t x,
                                        const chars::RealPrimitiveCharacter& chi, int r) {
    check_r(r);
    if (x > 10'000) throw capacity_error("resolve_convolution_sign: x > 1e4");
    double res_plus = 0.0, res_minus = 0.0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (std::gcd(n, chi.modulus()) != 1) continue;
        auto f = arith::factorize(n);
        if (!f.squarefree()) continue;
        double lt = lambda_tilde(f, r);
        double rhs = convolution_rhs(f, r, chi);
        res_plus = std::max(res_plus, std::abs(lt - rhs));
        res_minus = std::max(res_minus, std::abs(lt + rhs));
    }
    IdentityReport rep;
    rep.name = "convolution_sign_r" + std::to_string(r);
    rep.range = "1.." + std::to_string(x) + " squarefree coprime to " +
                std::to_string(chi.modulus());
    rep.residual_plus = res_plus;
    rep.residual_minus = res_minus;
    if (res_plus <= res_minus) {
        rep.deviation = res_plus;
        rep.constant = 1.0;
    } else {
        rep.deviation = res_minus;
        rep.constant = -1.0;
    }
    return rep;
}

TailSums tail_sums(std::uint64_t x, const chars::RealPrimitiveCharacter& chi) {
    if (x > 1'000'000) throw capacity_error("tail_sums: x > 1e6");
    KahanSum non_e2, shared;
    for (std::uint64_t n = 2; n <= x; ++n) {
        auto f = arith::factorize(n);
        bool is_e2 = f.squarefree() && f.omega() == 2; // pq with p != q
        double l2 = 0.0;
        bool need = !is_e2 || std::gcd(n, chi.modulus()) != 1;
        if (!need) continue;
        l2 = lambda_tilde(f, 2);
        if (!is_e2) non_e2.add(l2);
        if (std::gcd(n, chi.modulus()) != 1) shared.add(l2);
    }
    TailSums t;
    t.non_e2_sum = non_e2.value();
    t.shared_factor_sum = shared.value();
    t.non_e2_ratio = t.non_e2_sum / static_cast<double>(x);
    double lll = std::log(std::log(static_cast<double>(x)));
    t.shared_ratio = t.shared_factor_sum / (static_cast<double>(x) * lll);
    return t;
}

} // namespace klsum::identities
