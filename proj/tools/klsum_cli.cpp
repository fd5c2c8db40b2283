// Command-line front end: every experiment and table generator, with
// key=value config files, CSV/JSON output, and a run manifest per
// invocation. Exit codes: 0 success, 2 I/O, 3 argument/domain error,
// 4 identity failure, 5 capacity.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "klsum/arith.hpp"
#include "klsum/chars.hpp"
#include "klsum/errors.hpp"
#include "klsum/experiments.hpp"
#include "klsum/fixtures.hpp"
#include "klsum/format.hpp"
#include "klsum/identities.hpp"
#include "klsum/kloost.hpp"
#include "klsum/parallel.hpp"
#include "klsum/satotate.hpp"
#include "klsum/sieve.hpp"

namespace {

using nlohmann::json;
namespace ex = klsum::experiments;

// One run's bookkeeping: experiment parameters (hashed), execution
// parameters (not hashed), output paths, wall clock.
struct Run {
    std::string command;
    json params = json::object();
    json exec = json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw klsum::io_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw klsum::io_error("write to " + path + " failed");
}

// Emit the result (file or stdout) and the manifest next to it.
void finish(Run& run, const std::string& output, const json& result) {
    if (!output.empty()) {
        write_text_file(output, result.dump(2) + "\n");
        run.outputs.push_back(output);
    } else {
        std::cout << result.dump(2) << "\n";
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - run.t0)
                         .count();
    json config = run.params;
    for (auto& [k, v] : run.exec.items()) config[k] = v;
    json manifest{{"command", run.command},
                  {"config", config},
                  {"config_hash", klsum::fixtures::config_hash(run.params)},
                  {"wall_ms", wall_ms},
                  {"outputs", run.outputs}};
    std::string mpath = output.empty() ? run.command + ".manifest.json"
                                       : output + ".manifest.json";
    write_text_file(mpath, manifest.dump(2) + "\n");
}

ex::SmoothWeight bump_by_name(const std::string& name) {
    if (name == "unit") return ex::SmoothWeight::unit_bump();
    if (name == "dominating") return ex::SmoothWeight::dominating_bump();
    throw klsum::domain_error("unknown bump '" + name + "' (want unit or dominating)");
}

json report_to_json(const klsum::identities::IdentityReport& r) {
    json j{{"name", r.name}, {"range", r.range}, {"deviation", r.deviation}};
    j["constant"] = r.constant ? json(*r.constant) : json(nullptr);
    if (r.residual_plus) j["residual_plus"] = *r.residual_plus;
    if (r.residual_minus) j["residual_minus"] = *r.residual_minus;
    return j;
}

// ---------------------------------------------------------------- kl-table

void cmd_kl_table(Run& run, std::uint64_t x, std::uint64_t a, const std::string& output) {
    auto batch = klsum::kloost::kl_batch_primes(x, a);
    std::string csv = "p,kl,theta\n";
    for (const auto& kv : batch) {
        csv += std::to_string(kv.n) + "," + klsum::num17(kv.value) + ",";
        if (kv.theta) csv += klsum::num17(*kv.theta);
        csv += "\n";
    }
    write_text_file(output, csv);
    run.outputs.push_back(output);
    json result{{"rows", batch.size()}, {"path", output}};
    finish(run, "", result);
}

// ---------------------------------------------------------------- satotate

void cmd_satotate(Run& run, std::uint64_t p, const std::string& output) {
    auto stats = klsum::satotate::vertical_stats(p);
    json result{{"p", p},
                {"ks", stats.ks},
                {"mean_abs", stats.mean_abs},
                {"mean_abs_squares", stats.mean_abs_squares}};
    finish(run, output, result);
}

// --------------------------------------------------------------- decompose

json decomposition_json(const ex::SumDecomposition& d, double beta, const std::string& bump) {
    const auto& cfg = d.config;
    json j{{"x", cfg.x},
           {"epsilon", cfg.epsilon},
           {"r", cfg.r},
           {"discriminant", cfg.chi.discriminant()},
           {"beta", beta},
           {"bump", bump},
           {"y", cfg.y},
           {"z", cfg.z},
           {"u", cfg.u},
           {"z_clamped", cfg.z_clamped},
           {"admissible", cfg.admissible},
           {"S_total_direct", d.S_total_direct},
           {"S_L", d.S_L},
           {"S_N", d.S_N},
           {"S_C", d.S_C},
           {"triple_sum", d.triple_sum},
           {"partition_residual", d.S_L + d.S_N + d.S_C - d.triple_sum}};
    j["triple_over_S"] =
        d.S_total_direct != 0.0 ? json(d.triple_sum / d.S_total_direct) : json(nullptr);
    return j;
}

void cmd_decompose(Run& run, double x, double eps, int r, std::int64_t disc, double beta,
                   bool non_strict_z, const std::string& bump, const std::string& output) {
    auto cfg = ex::ExperimentConfig::make(x, eps, r, disc);
    if (!cfg.admissible)
        std::cerr << "warning: admissibility D^8 <= x^(eps^2) fails for D = "
                  << cfg.chi.modulus() << ", x = " << x << "; proceeding\n";
    if (cfg.z_clamped)
        std::cerr << "warning: sift limit clamped to keep z^2 <= y (z = " << cfg.z << ")\n";
    auto s = ex::build_sieve_for(cfg, beta, !non_strict_z);
    auto d = ex::decompose(cfg, s, bump_by_name(bump));
    finish(run, output, decomposition_json(d, beta, bump));
}

// ----------------------------------------------------------- identity-suite

void cmd_identity_suite(Run& run, std::uint64_t x_max, std::int64_t disc,
                        const std::string& output) {
    namespace id = klsum::identities;
    auto chi = klsum::chars::RealPrimitiveCharacter::from_discriminant(disc);
    std::uint64_t x_range = std::min<std::uint64_t>(x_max, 1'000'000);
    std::uint64_t x_sign = std::min<std::uint64_t>(x_max, 10'000);
    std::vector<id::IdentityReport> reports{
        id::check_lambda_identities(x_range),
        id::check_support_properties(x_range),
        id::resolve_convolution_sign(x_sign, chi, 1),
        id::resolve_convolution_sign(x_sign, chi, 2),
    };
    json result = json::array();
    double worst = 0.0;
    for (const auto& r : reports) {
        result.push_back(report_to_json(r));
        worst = std::max(worst, r.deviation);
    }
    auto tails = id::tail_sums(x_range, chi);
    result.push_back(json{{"name", "tail_sums"},
                          {"range", "2.." + std::to_string(x_range)},
                          {"non_e2_sum", tails.non_e2_sum},
                          {"shared_factor_sum", tails.shared_factor_sum},
                          {"non_e2_ratio", tails.non_e2_ratio},
                          {"shared_ratio", tails.shared_ratio}});
    finish(run, output, result);
    if (worst >= 1e-9)
        throw klsum::identity_violation("identity suite failed: max deviation " +
                                        klsum::num17(worst));
}

// ---------------------------------------------------------------- lod-probe

void cmd_lod_probe(Run& run, double x, std::uint64_t Q, std::int64_t disc,
                   std::uint64_t principal_mod, bool squarefree_only, const std::string& bump,
                   const std::string& csv_path, const std::string& output) {
    std::function<int(std::uint64_t)> chi_fn;
    std::string chi_desc;
    std::optional<klsum::chars::RealPrimitiveCharacter> chi;
    if (disc != 0) {
        chi = klsum::chars::RealPrimitiveCharacter::from_discriminant(disc);
        chi_fn = [&chi](std::uint64_t n) { return (*chi)(static_cast<std::int64_t>(n)); };
        chi_desc = "discriminant " + std::to_string(disc);
    } else {
        chi_fn = [principal_mod](std::uint64_t n) {
            return klsum::chars::principal_char(principal_mod, static_cast<std::int64_t>(n));
        };
        chi_desc = "principal mod " + std::to_string(principal_mod);
    }
    auto probe = ex::lod_probe(x, Q, chi_fn, bump_by_name(bump), squarefree_only);
    if (!csv_path.empty()) {
        std::string csv = "q,inner_abs\n";
        for (const auto& row : probe.rows)
            csv += std::to_string(row.q) + "," + klsum::num17(row.inner_abs) + "\n";
        write_text_file(csv_path, csv);
        run.outputs.push_back(csv_path);
    }
    json rows = json::array();
    for (const auto& row : probe.rows)
        rows.push_back(json{{"q", row.q}, {"inner_abs", row.inner_abs}});
    json result{{"x", x},
                {"Q", Q},
                {"chi", chi_desc},
                {"squarefree_only", squarefree_only},
                {"total", probe.total},
                {"per_q", rows}};
    finish(run, output, result);
}

// ---------------------------------------------------------------- sign-scan

void cmd_sign_scan(Run& run, std::uint64_t lo, std::uint64_t hi, const std::string& output) {
    auto pair = ex::sign_change_scan(lo, hi);
    json result{{"lo", lo}, {"hi", hi}, {"found", pair.has_value()}};
    if (pair) {
        result["pair"] = json{{"n_pos", pair->n_pos},
                              {"n_neg", pair->n_neg},
                              {"kl_pos", pair->kl_pos},
                              {"kl_neg", pair->kl_neg},
                              {"product", pair->kl_pos * pair->kl_neg}};
    }
    finish(run, output, result);
}

// -------------------------------------------------------------------- a-sum

void cmd_a_sum(Run& run, double x, bool smooth, const std::string& output) {
    std::optional<ex::SmoothWeight> w;
    if (smooth) w = ex::SmoothWeight::dominating_bump();
    auto a = ex::a_sum(x, w);
    json result{{"x", x}, {"smooth", smooth}, {"A", a.A}, {"normalized", a.normalized}};
    finish(run, output, result);
}

// -------------------------------------------------------------------- l-one

void cmd_l_one(Run& run, std::int64_t disc, const std::string& output) {
    auto chi = klsum::chars::RealPrimitiveCharacter::from_discriminant(disc);
    json result{{"discriminant", disc},
                {"modulus", chi.modulus()},
                {"parity", chi.parity()},
                {"l_one", chi.l_one()},
                {"eta", chi.eta()}};
    finish(run, output, result);
}

// ------------------------------------------------------------- gen-fixtures

// Regenerates every frozen regression value. Run once; the file is
// checked in and later runs compare against it.
void cmd_gen_fixtures(Run& run, const std::string& out_path) {
    namespace fx = klsum::fixtures;
    auto set = fx::FixtureSet::load(out_path);

    for (std::uint64_t p : {std::uint64_t(1009), std::uint64_t(10007)}) {
        auto stats = klsum::satotate::vertical_stats(p);
        json params{{"p", p}};
        set.set("vertical_stats", fx::config_hash(params),
                json{{"ks", stats.ks},
                     {"mean_abs", stats.mean_abs},
                     {"mean_abs_squares", stats.mean_abs_squares}});
    }

    for (std::int64_t disc : {5, 12}) {
        auto chi = klsum::chars::RealPrimitiveCharacter::from_discriminant(disc);
        for (int r : {1, 2}) {
            auto rep = klsum::identities::resolve_convolution_sign(5000, chi, r);
            json params{{"x", 5000}, {"discriminant", disc}, {"r", r}};
            set.set("convolution_sign", fx::config_hash(params),
                    json{{"constant", *rep.constant}, {"residual", rep.deviation}});
        }
    }

    for (double x : {100.0, 1000.0, 10000.0}) {
        auto a = ex::a_sum(x, std::nullopt);
        json params{{"x", x}, {"smooth", false}};
        set.set("a_sum", fx::config_hash(params),
                json{{"A", a.A}, {"normalized", a.normalized}});
    }

    struct DecompCase {
        double x, eps;
        int r;
        std::int64_t d;
    };
    for (const auto& c : {DecompCase{1e4, 0.2, 2, 5}, DecompCase{1e4, 0.25, 1, 5}}) {
        auto cfg = ex::ExperimentConfig::make(c.x, c.eps, c.r, c.d);
        auto s = ex::build_sieve_for(cfg);
        auto d = ex::decompose(cfg, s, ex::SmoothWeight::unit_bump());
        json params{{"x", c.x},     {"epsilon", c.eps},  {"r", c.r},
                    {"discriminant", c.d}, {"beta", 2.0}, {"strict_z", true},
                    {"bump", "unit"}};
        set.set("decompose", fx::config_hash(params),
                json{{"S_total_direct", d.S_total_direct},
                     {"S_L", d.S_L},
                     {"S_N", d.S_N},
                     {"S_C", d.S_C},
                     {"triple_sum", d.triple_sum}});
        auto split = ex::central_smooth_split(cfg, s);
        set.set("central_split", fx::config_hash(params),
                json{{"S1", split.S1}, {"S2", split.S2}, {"total", split.total}});
    }

    {
        auto h = ex::horizontal_sum(100'000);
        json params{{"x", 100'000}};
        set.set("horizontal", fx::config_hash(params),
                json{{"sum", h.sum}, {"pi_x", h.pi_x}, {"ratio", h.ratio}});
    }

    {
        auto probe = ex::lod_probe(
            1000.0, 31,
            [](std::uint64_t n) {
                return klsum::chars::principal_char(1, static_cast<std::int64_t>(n));
            },
            ex::SmoothWeight::unit_bump(), false);
        json params{{"x", 1000.0}, {"Q", 31}, {"chi", "principal mod 1"},
                    {"squarefree_only", false}, {"bump", "unit"}};
        set.set("lod_probe", fx::config_hash(params), json{{"total", probe.total}});
    }

    {
        klsum::sieve::BetaSieve s(1e4, 100.0, 2.0);
        auto c = klsum::satotate::st_constants();
        json p1{{"y", 1e4}, {"z", 100.0}, {"beta", 2.0}, {"f", "1"}};
        set.set("fundlem_ratio", fx::config_hash(p1),
                klsum::sieve::fundlem_ratio(s, [](std::uint64_t) { return 1.0; }));
        json p2{{"y", 1e4}, {"z", 100.0}, {"beta", 2.0}, {"f", "16/(3pi)"}};
        set.set("fundlem_ratio", fx::config_hash(p2),
                klsum::sieve::fundlem_ratio(s, [&](std::uint64_t) { return c.c_f; }));
    }

    {
        klsum::sieve::BetaSieve s(1000.0, 30.0, 2.0);
        json p1{{"y", 1000.0}, {"z", 30.0}, {"beta", 2.0}, {"f", "mu^2"}, {"x", 10'000}};
        set.set("sieved_mult_sum_ratio", fx::config_hash(p1),
                klsum::sieve::sieved_mult_sum_ratio(s, [](std::uint64_t) { return 1.0; },
                                                    10'000));
        json p2{{"y", 1000.0}, {"z", 30.0}, {"beta", 2.0}, {"f", "4"}, {"x", 10'000}};
        set.set("sieved_mult_sum_ratio", fx::config_hash(p2),
                klsum::sieve::sieved_mult_sum_ratio(s, [](std::uint64_t) { return 4.0; },
                                                    10'000));
    }

    set.save(out_path);
    run.outputs.push_back(out_path);
    finish(run, "", json{{"fixtures", set.size()}, {"path", out_path}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for Kloosterman sums, real characters, sieve "
                 "weights, and their summation experiments"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads,
                   "Worker threads; every result is identical for any value")
        ->capture_default_str();
    app.set_config("--config", "",
                   "INI/TOML file; put options for a subcommand under a [its-name] section");

    // ----- kl-table
    auto* t = app.add_subcommand("kl-table", "CSV of Kl(a,p) and its angle for primes p <= x");
    struct {
        std::uint64_t x = 100;
        std::uint64_t a = 1;
        std::string output = "kl_table.csv";
    } tbl;
    t->add_option("--x", tbl.x, "Prime bound")->capture_default_str();
    t->add_option("--a", tbl.a, "Residue a")->capture_default_str();
    t->add_option("--output", tbl.output, "CSV path")->capture_default_str();
    t->configurable();

    // ----- satotate
    auto* st = app.add_subcommand("satotate", "Vertical-family statistics at a prime p");
    struct {
        std::uint64_t p = 101;
        std::string output;
    } sat;
    st->add_option("--p", sat.p, "Prime modulus")->capture_default_str();
    st->add_option("--output", sat.output, "JSON path (stdout when omitted)");
    st->configurable();

    // ----- decompose
    auto* dc = app.add_subcommand("decompose",
                                  "Split the triple sum into lacunary/narrow/central parts");
    struct {
        double x = 1e4;
        double epsilon = 0.2;
        int r = 2;
        std::int64_t discriminant = 5;
        double beta = 2.0;
        bool non_strict_z = false;
        std::string bump = "unit";
        std::string output;
    } dec;
    dc->add_option("--x", dec.x, "Scale x")->capture_default_str();
    dc->add_option("--epsilon", dec.epsilon, "Exponent in y = x^epsilon")->capture_default_str();
    dc->add_option("--r", dec.r, "Log power r (1 or 2)")->capture_default_str();
    dc->add_option("--discriminant", dec.discriminant, "Fundamental discriminant")
        ->capture_default_str();
    dc->add_option("--beta", dec.beta, "Sieve beta")->capture_default_str();
    dc->add_flag("--non-strict-z", dec.non_strict_z, "Allow primes p = z in the sieve support");
    dc->add_option("--bump", dec.bump, "Weight: unit or dominating")->capture_default_str();
    dc->add_option("--output", dec.output, "JSON path (stdout when omitted)");
    dc->configurable();

    // ----- identity-suite
    auto* is = app.add_subcommand("identity-suite",
                                  "Check every divisor-sum identity and resolve signs");
    struct {
        std::uint64_t x_max = 1000;
        std::int64_t discriminant = 5;
        std::string output;
    } ids;
    is->add_option("--x-max", ids.x_max, "Range bound")->capture_default_str();
    is->add_option("--discriminant", ids.discriminant, "Fundamental discriminant")
        ->capture_default_str();
    is->add_option("--output", ids.output, "JSON path (stdout when omitted)");
    is->configurable();

    // ----- lod-probe
    auto* lp = app.add_subcommand("lod-probe",
                                  "Average of twisted sums over progressions q <= Q");
    struct {
        double x = 1000;
        std::uint64_t Q = 31;
        std::int64_t discriminant = 0;
        std::uint64_t principal_mod = 1;
        bool squarefree_only = false;
        std::string bump = "unit";
        std::string csv;
        std::string output;
    } lod;
    lp->add_option("--x", lod.x, "Scale x")->capture_default_str();
    lp->add_option("--Q", lod.Q, "Modulus bound (<= sqrt(x))")->capture_default_str();
    lp->add_option("--discriminant", lod.discriminant,
                   "Twist by this character (0: use --principal-modulus)")
        ->capture_default_str();
    lp->add_option("--principal-modulus", lod.principal_mod,
                   "Principal character modulus when no discriminant given")
        ->capture_default_str();
    lp->add_flag("--squarefree-only", lod.squarefree_only, "Restrict n to squarefree");
    lp->add_option("--bump", lod.bump, "Weight: unit or dominating")->capture_default_str();
    lp->add_option("--csv", lod.csv, "Also write the per-q table to this CSV path");
    lp->add_option("--output", lod.output, "JSON path (stdout when omitted)");
    lp->configurable();

    // ----- sign-scan
    auto* sc = app.add_subcommand("sign-scan",
                                  "First products of two primes with opposite Kl(1,n) signs");
    struct {
        std::uint64_t lo = 6;
        std::uint64_t hi = 100;
        std::string output;
    } scan;
    sc->add_option("lo", scan.lo, "Lower bound")->required();
    sc->add_option("hi", scan.hi, "Upper bound")->required();
    sc->add_option("--output", scan.output, "JSON path (stdout when omitted)");
    sc->configurable();

    // ----- a-sum
    auto* as = app.add_subcommand("a-sum", "Weighted |Kl(1,pq)| sum over prime pairs");
    struct {
        double x = 100;
        bool smooth = false;
        std::string output;
    } asum;
    as->add_option("--x", asum.x, "Window start; pairs with x < pq <= 2x")
        ->capture_default_str();
    as->add_flag("--smooth", asum.smooth, "Weight by the dominating bump instead of the "
                                          "sharp window");
    as->add_option("--output", asum.output, "JSON path (stdout when omitted)");
    as->configurable();

    // ----- l-one
    auto* lo = app.add_subcommand("l-one", "L(1, chi) and eta for a fundamental discriminant");
    struct {
        std::int64_t discriminant = -3;
        std::string output;
    } lone;
    lo->add_option("--discriminant", lone.discriminant, "Fundamental discriminant")
        ->capture_default_str();
    lo->add_option("--output", lone.output, "JSON path (stdout when omitted)");
    lo->configurable();

    // ----- gen-fixtures
    auto* gf = app.add_subcommand("gen-fixtures",
                                  "Regenerate the frozen regression values");
    struct {
        std::string out = "tests/fixtures/fixtures.json";
    } gen;
    gf->add_option("--out", gen.out, "Fixtures file")->capture_default_str();

    // Let the global --threads option appear after the subcommand name too.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        klsum::set_num_threads(threads);
        Run run;
        if (t->parsed()) {
            run.command = "kl-table";
            run.params = {{"x", tbl.x}, {"a", tbl.a}};
            run.exec = {{"threads", threads}, {"output", tbl.output}};
            cmd_kl_table(run, tbl.x, tbl.a, tbl.output);
        } else if (st->parsed()) {
            run.command = "satotate";
            run.params = {{"p", sat.p}};
            run.exec = {{"threads", threads}, {"output", sat.output}};
            cmd_satotate(run, sat.p, sat.output);
        } else if (dc->parsed()) {
            run.command = "decompose";
            run.params = {{"x", dec.x},           {"epsilon", dec.epsilon},
                          {"r", dec.r},           {"discriminant", dec.discriminant},
                          {"beta", dec.beta},     {"strict_z", !dec.non_strict_z},
                          {"bump", dec.bump}};
            run.exec = {{"threads", threads}, {"output", dec.output}};
            cmd_decompose(run, dec.x, dec.epsilon, dec.r, dec.discriminant, dec.beta,
                          dec.non_strict_z, dec.bump, dec.output);
        } else if (is->parsed()) {
            run.command = "identity-suite";
            run.params = {{"x_max", ids.x_max}, {"discriminant", ids.discriminant}};
            run.exec = {{"threads", threads}, {"output", ids.output}};
            cmd_identity_suite(run, ids.x_max, ids.discriminant, ids.output);
        } else if (lp->parsed()) {
            run.command = "lod-probe";
            run.params = {{"x", lod.x},
                          {"Q", lod.Q},
                          {"discriminant", lod.discriminant},
                          {"principal_modulus", lod.principal_mod},
                          {"squarefree_only", lod.squarefree_only},
                          {"bump", lod.bump}};
            run.exec = {{"threads", threads}, {"output", lod.output}, {"csv", lod.csv}};
            cmd_lod_probe(run, lod.x, lod.Q, lod.discriminant, lod.principal_mod,
                          lod.squarefree_only, lod.bump, lod.csv, lod.output);
        } else if (sc->parsed()) {
            run.command = "sign-scan";
            run.params = {{"lo", scan.lo}, {"hi", scan.hi}};
            run.exec = {{"threads", threads}, {"output", scan.output}};
            cmd_sign_scan(run, scan.lo, scan.hi, scan.output);
        } else if (as->parsed()) {
            run.command = "a-sum";
            run.params = {{"x", asum.x}, {"smooth", asum.smooth}};
            run.exec = {{"threads", threads}, {"output", asum.output}};
            cmd_a_sum(run, asum.x, asum.smooth, asum.output);
        } else if (lo->parsed()) {
            run.command = "l-one";
            run.params = {{"discriminant", lone.discriminant}};
            run.exec = {{"threads", threads}, {"output", lone.output}};
            cmd_l_one(run, lone.discriminant, lone.output);
        } else if (gf->parsed()) {
            run.command = "gen-fixtures";
            run.params = {{"regenerate", true}};
            run.exec = {{"threads", threads}, {"out", gen.out}};
            cmd_gen_fixtures(run, gen.out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    } catch (const klsum::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const klsum::identity_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const klsum::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const klsum::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
