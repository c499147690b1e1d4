// Command-line front end: exponent curve sweeps, Monte Carlo simulation, and
// oracle-equivalence verification.
//
// Exit codes: 0 success, 1 usage error, 2 invariant/assertion failure,
// 3 resource guard tripped.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flashhelp/awgn.hpp"
#include "flashhelp/entropy.hpp"
#include "flashhelp/errors.hpp"
#include "flashhelp/gaussian.hpp"
#include "flashhelp/mac.hpp"
#include "flashhelp/modulo.hpp"
#include "flashhelp/selfcheck.hpp"
#include "flashhelp/sim.hpp"
#include "flashhelp/typeclass.hpp"
#include "flashhelp/version.hpp"

using json = nlohmann::ordered_json;
using namespace flashhelp;

namespace {

constexpr double kLn2 = 0.69314718055994531;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// CSV token for an extended value; finite payloads are scaled for display
std::string token(const ExponentValue& e, double scale) {
    if (e.is_infinite()) return "inf";
    if (e.is_neg_infinite()) return "neg_inf";
    return fmt9(e.as_double() * scale);
}

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char extra;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.points, &extra) != 3 ||
        !(g.lo < g.hi) || g.points < 2)
        throw CLI::ValidationError("--grid", "expected lo:hi:points with lo < hi, points >= 2");
    return g;
}

double grid_at(const GridSpec& g, int i) {
    return g.lo + (g.hi - g.lo) * static_cast<double>(i) / static_cast<double>(g.points - 1);
}

Pmf parse_pmf(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open PMF file " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    std::vector<double> probs;
    std::string item;
    for (char& c : text)
        if (c == ',' || c == '\n' || c == '\t') c = ' ';
    std::istringstream is(text);
    double v;
    while (is >> v) probs.push_back(v);
    return Pmf(probs);
}

struct Output {
    std::ofstream file;
    bool to_file = false;
    std::ostream& stream() { return to_file ? file : std::cout; }

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file " + path);
            to_file = true;
        }
    }
};

void write_manifest_comment(std::ostream& os, const std::string& command, const json& config) {
    json m;
    m["tool"] = "flashhelp";
    m["version"] = kVersion;
    m["command"] = command;
    m["config"] = config;
    os << "# " << m.dump() << "\n";
}

void emit_plotscript(const std::string& csv_path, const std::vector<std::string>& columns) {
    std::ofstream os(csv_path + ".gnuplot");
    os << "set datafile separator \",\"\n";
    os << "set key autotitle columnhead\n";
    os << "set xlabel \"" << columns.front() << "\"\n";
    os << "plot ";
    for (std::size_t i = 1; i < columns.size(); ++i) {
        if (i > 1) os << ", ";
        os << "\"" << csv_path << "\" using 1:" << i + 1 << " with lines";
    }
    os << "\n";
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

// ---------------------------------------------------------------- exponent-awgn

struct AwgnArgs {
    double gamma = 1.0;
    double rate_helper = 0.0;
    std::string grid = "0.0:1.2:241";
    double tau = 0.0;
    double slack = 0.0;
    std::string units = "nats";
    std::string out;
    bool plotscript = false;
};

int cmd_exponent_awgn(const AwgnArgs& a) {
    GridSpec grid = parse_grid(a.grid);
    const double scale = a.units == "bits" ? 1.0 / kLn2 : 1.0;
    const bool explicit_design = a.tau > 0.0;
    auto provider = default_awgn_provider(a.gamma);
    Output out(a.out);
    json cfg{{"gamma", a.gamma},   {"rate_helper", a.rate_helper},
             {"grid", a.grid},     {"mode", explicit_design ? "explicit" : "limit"},
             {"units", a.units}};
    if (explicit_design) {
        cfg["tau"] = a.tau;
        cfg["slack"] = a.slack;
    }
    write_manifest_comment(out.stream(), "exponent-awgn", cfg);
    out.stream() << "R,E_wsp,E_achievable,regime\n";
    for (int i = 0; i < grid.points; ++i) {
        double r = grid_at(grid, i);
        ExponentValue wsp = wsp_awgn(r, a.gamma, a.rate_helper);
        ExponentValue ach = explicit_design
                                ? achievable_exponent(r, a.gamma, a.rate_helper, a.tau, a.slack,
                                                      provider)
                                : achievable_exponent_limit(r, a.gamma, a.rate_helper, provider);
        const char* regime = wsp.is_infinite() ? "infinite" : (wsp.is_zero() ? "zero" : "finite");
        out.stream() << fmt9(r * scale) << ',' << token(wsp, scale) << ',' << token(ach, scale)
                     << ',' << regime << "\n";
    }
    if (a.plotscript && !a.out.empty())
        emit_plotscript(a.out, {"R", "E_wsp", "E_achievable"});
    return 0;
}

// -------------------------------------------------------------- exponent-modulo

struct ModuloArgs {
    std::string pmf = "0.9,0.1";
    double rate_helper = 0.3;
    double tau = 0.0;      // 0 selects R_h / ln K
    double theta = -1.0;   // <0 selects the saturation threshold
    double rate = -1.0;    // <0 selects the midpoint of the finite regime
    std::string axis = "theta";
    std::string grid;
    std::string units = "nats";
    std::string out;
    bool plotscript = false;
};

int cmd_exponent_modulo(const ModuloArgs& a) {
    Pmf p = parse_pmf(a.pmf);
    const double scale = a.units == "bits" ? 1.0 / kLn2 : 1.0;
    const double lnk = std::log(static_cast<double>(p.size()));
    const double tau = a.tau > 0.0 ? a.tau : modulo_default_tau(p.size(), a.rate_helper);
    const double theta_fixed = a.theta >= 0.0 ? a.theta : theta_saturation(p);
    const double cap = lnk - shannon_entropy(p);
    const double rate_fixed = a.rate >= 0.0 ? a.rate : a.rate_helper + 0.5 * cap;
    std::string gridspec = a.grid;
    if (gridspec.empty())
        gridspec = a.axis == "theta" ? "0.0:" + std::to_string(theta_support_max(p) * 1.1) + ":121"
                                     : "0.0:" + std::to_string(lnk) + ":121";
    GridSpec grid = parse_grid(gridspec);
    ExponentValue overflow = overflow_exponent(p, a.rate_helper, tau);
    Output out(a.out);
    json cfg{{"pmf", p.probs()},    {"rate_helper", a.rate_helper}, {"tau", tau},
             {"theta", theta_fixed}, {"rate", rate_fixed},          {"axis", a.axis},
             {"grid", gridspec},     {"units", a.units}};
    write_manifest_comment(out.stream(), "exponent-modulo", cfg);
    const bool theta_axis = a.axis == "theta";
    out.stream() << (theta_axis ? "theta" : "R") << ",r_theta,E_theta,overflow,E_wsp\n";
    for (int i = 0; i < grid.points; ++i) {
        double x = grid_at(grid, i);
        double theta = theta_axis ? x : theta_fixed;
        double rate = theta_axis ? rate_fixed : x;
        out.stream() << fmt9(x * scale) << ',' << token(r_of_theta(p, theta), scale) << ','
                     << token(helper_failure_exponent(p, theta), scale) << ','
                     << token(overflow, scale) << ','
                     << token(wsp_modulo(p, rate, a.rate_helper), scale) << "\n";
    }
    if (a.plotscript && !a.out.empty())
        emit_plotscript(a.out, {theta_axis ? "theta" : "R", "r_theta", "E_theta", "overflow",
                                "E_wsp"});
    return 0;
}

// ----------------------------------------------------------------- exponent-mac

struct MacArgs {
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double rate_helper = 0.2;
    std::string grid = "0.0:1.0:51";
    std::string units = "nats";
    std::string out;
    bool plotscript = false;
};

int cmd_exponent_mac(const MacArgs& a) {
    // one grid spec per axis, comma separated; a single spec covers both
    std::string g1 = a.grid, g2 = a.grid;
    if (auto comma = a.grid.find(','); comma != std::string::npos) {
        g1 = a.grid.substr(0, comma);
        g2 = a.grid.substr(comma + 1);
    }
    GridSpec grid1 = parse_grid(g1), grid2 = parse_grid(g2);
    const double scale = a.units == "bits" ? 1.0 / kLn2 : 1.0;
    MacParams mac(a.gamma1, a.gamma2, 1.0);
    Output out(a.out);
    json cfg{{"gamma1", a.gamma1}, {"gamma2", a.gamma2}, {"rate_helper", a.rate_helper},
             {"grid", a.grid},     {"units", a.units}};
    write_manifest_comment(out.stream(), "exponent-mac", cfg);
    out.stream() << "R1,R2,E1,E2,E3,E_wsp,regime,R_h1,R_h2\n";
    for (int i = 0; i < grid1.points; ++i) {
        for (int j = 0; j < grid2.points; ++j) {
            RatePair rp{grid_at(grid1, i), grid_at(grid2, j)};
            MacWsp parts = wsp_mac_components(rp, mac, a.rate_helper);
            HelpSplit split = optimal_help_split(rp, a.rate_helper);
            out.stream() << fmt9(rp.r1 * scale) << ',' << fmt9(rp.r2 * scale) << ','
                         << token(parts.e1, scale) << ',' << token(parts.e2, scale) << ','
                         << token(parts.e3, scale) << ',' << token(parts.value(), scale) << ','
                         << to_string(classify_rate_point(rp, mac, a.rate_helper)) << ','
                         << fmt9(split.h1 * scale) << ',' << fmt9(split.h2 * scale) << "\n";
        }
    }
    if (a.plotscript && !a.out.empty()) emit_plotscript(a.out, {"R1", "R2", "E_wsp"});
    return 0;
}

// --------------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string scheme;
    double gamma = 1.0;
    double rate_helper = 0.5;
    double tau = 0.1;
    double slack = 1.0;
    double theta = 1.0;
    std::string pmf = "0.9,0.1";
    long segment = 64;
    long block = 200;
    double overhead_const = 1.0;
    double amplitude = -1.0;  // <0 selects sqrt(P)
    long long trials = 100000;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string power_policy = "report";
    bool exact = false;
    std::string out;
};

void write_summary_csv(const std::string& path, const std::string& scheme, const SimResult& sr,
                       const ExponentEstimate& est) {
    std::ofstream os(path, std::ios::binary);
    os << "scheme,trials,errors_total,helper_failures,decode_errors,error_rate,"
          "exponent_estimate,censored\n";
    os << scheme << ',' << sr.trials << ',' << sr.errors_total << ',' << sr.helper_failures << ','
       << sr.decode_errors << ',' << fmt9(sr.error_rate()) << ',' << fmt9(est.value) << ','
       << (est.censored ? "true" : "false") << "\n";
}

int cmd_simulate(const SimulateArgs& a) {
    RngPlan plan{a.seed, a.workers};
    json record;
    json manifest;
    manifest["tool"] = "flashhelp";
    manifest["version"] = kVersion;
    manifest["command"] = "simulate";
    manifest["scheme"] = a.scheme;
    manifest["seed"] = a.seed;

    SimResult sr;
    json assertions;
    std::string failed_assertion;

    if (a.scheme == "awgn-flash") {
        AwgnParams awgn(a.gamma, 1.0);  // P = gamma at unit noise variance
        FlashDesign design(a.rate_helper, a.tau, a.slack);
        double amplitude = a.amplitude > 0.0 ? a.amplitude : std::sqrt(awgn.power);
        AwgnFlashConfig cfg(awgn, design, a.segment, amplitude);
        manifest["config"] = json{{"power", awgn.power},
                                  {"sigma2", awgn.sigma2},
                                  {"rate_helper", a.rate_helper},
                                  {"tau", a.tau},
                                  {"slack", a.slack},
                                  {"segment_length", a.segment},
                                  {"amplitude_bound", amplitude},
                                  {"trials", a.trials},
                                  {"power_policy", a.power_policy}};
        sr = simulate_flash_awgn(cfg, a.trials, plan);
        FlashRate fr = flash_rate(a.rate_helper, a.tau, a.slack, awgn.power, awgn.sigma2);
        record["design"] = json{
            {"step", cfg.step()},
            {"grid_points_per_coord", cfg.grid_points_per_coord()},
            {"cube_rate_per_coord", cfg.cube_rate_per_coord()},
            {"flash_rate_full_block", fr.rate},
            {"flash_rate_clamped", fr.clamped},
            {"sphere_exponent_per_block", a.tau * chernoff_sphere_exponent(a.slack)}};
        record["exact_oracle"] = gaussian_sphere_tail(a.segment, a.slack).prob;
        bool decode_free = sr.decode_errors == 0;
        assertions["conditional_decode_error_free"] = decode_free;
        assertions["residual_within_half_step"] = sr.max_abs_residual <= cfg.step() / 2.0;
        if (!decode_free) failed_assertion = "conditional_decode_error_free";
        if (a.power_policy == "strict") {
            bool ok = sr.realized_power_mean() <= awgn.power;
            assertions["power_within_budget"] = ok;
            if (!ok && failed_assertion.empty()) failed_assertion = "power_within_budget";
        }
    } else if (a.scheme == "modulo-fixed") {
        ModuloParams mp{parse_pmf(a.pmf)};
        manifest["config"] = json{{"pmf", mp.noise.probs()},
                                  {"theta", a.theta},
                                  {"segment_length", a.segment},
                                  {"trials", a.trials}};
        if (a.exact || count_types(mp.alphabet_size(), a.segment) <= 1e7)
            record["exact_oracle"] = exact_error_modulo_fixed(mp, a.theta, a.segment);
        else
            record["exact_oracle"] = nullptr;
        sr = simulate_modulo_fixed(mp, a.theta, a.segment, a.trials, plan);
        const bool full_support = a.theta >= theta_support_max(mp.noise);
        record["design"] = json{{"theta_support_max", theta_support_max(mp.noise)},
                                {"full_support", full_support}};
        bool ok = !full_support || sr.errors_total == 0;
        assertions["full_support_error_free"] = ok;
        if (!ok) failed_assertion = "full_support_error_free";
    } else if (a.scheme == "modulo-variable") {
        ModuloParams mp{parse_pmf(a.pmf)};
        manifest["config"] = json{{"pmf", mp.noise.probs()},
                                  {"rate_helper", a.rate_helper},
                                  {"tau", a.tau},
                                  {"block_length", a.block},
                                  {"overhead_const", a.overhead_const},
                                  {"trials", a.trials}};
        const long t = std::max(1L, std::lround(a.tau * static_cast<double>(a.block)));
        const int K = mp.alphabet_size();
        if (a.exact || count_types(K, t) <= 1e7)
            record["exact_oracle"] =
                exact_overflow_modulo(mp, a.rate_helper, a.tau, a.block, a.overhead_const);
        else
            record["exact_oracle"] = nullptr;
        sr = simulate_modulo_variable(mp, a.rate_helper, a.tau, a.block, a.trials, plan,
                                      a.overhead_const);
        const double lmax = static_cast<double>(t) * std::log(static_cast<double>(K)) +
                            a.overhead_const * (K - 1) * std::log(static_cast<double>(t) + 1.0);
        const double buffer = static_cast<double>(a.block) * a.rate_helper;
        const bool margin = lmax < buffer;
        record["design"] = json{{"segment_length", t},
                                {"max_description_length", lmax},
                                {"buffer", buffer},
                                {"margin", margin}};
        bool ok = !margin || sr.errors_total == 0;
        assertions["margin_zero_overflow"] = ok;
        if (!ok) failed_assertion = "margin_zero_overflow";
    } else {
        throw std::invalid_argument("unknown scheme " + a.scheme);
    }

    ExponentEstimate est = estimate_exponent(sr, sr.block_length);
    ConfInterval ci = sr.ci95();
    record["manifest"] = manifest;
    record["result"] = json{{"trials", sr.trials},
                            {"errors_total", sr.errors_total},
                            {"helper_failures", sr.helper_failures},
                            {"decode_errors", sr.decode_errors},
                            {"error_rate", sr.error_rate()},
                            {"ci95", json::array({ci.lo, ci.hi})},
                            {"realized_power_mean", sr.realized_power_mean()},
                            {"max_abs_residual", sr.max_abs_residual},
                            {"exponent_estimate",
                             json{{"value", est.value},
                                  {"ci_lo", finite_or_null(est.ci_lo)},
                                  {"ci_hi", finite_or_null(est.ci_hi)},
                                  {"censored", est.censored},
                                  {"block_length", est.block_length}}}};
    record["assertions"] = assertions;

    // keep manifest first in the emitted record
    json ordered;
    ordered["manifest"] = record["manifest"];
    if (record.contains("design")) ordered["design"] = record["design"];
    if (record.contains("exact_oracle")) ordered["exact_oracle"] = record["exact_oracle"];
    ordered["result"] = record["result"];
    ordered["assertions"] = record["assertions"];

    Output out(a.out);
    out.stream() << ordered.dump() << "\n";
    if (!a.out.empty()) write_summary_csv(a.out + ".csv", a.scheme, sr, est);

    if (!failed_assertion.empty())
        throw InvariantError("simulate: assertion failed: " + failed_assertion);
    return 0;
}

// ----------------------------------------------------------------------- verify

int cmd_verify(bool quick, std::uint64_t seed) {
    auto suites = run_verify_suites(quick, seed);
    bool all_pass = true;
    std::printf("%-18s %-6s %-12s %-10s %s\n", "suite", "status", "max_dev", "tolerance",
                "detail");
    for (const auto& s : suites) {
        all_pass = all_pass && s.pass;
        std::printf("%-18s %-6s %-12.3e %-10.1e %s\n", s.name.c_str(),
                    s.pass ? "PASS" : "FAIL", s.max_deviation, s.tolerance, s.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "verify: all suites passed" : "verify: FAILURES present");
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error exponents and Monte Carlo simulation for helper-assisted channels"};
    app.require_subcommand(1);
    int exit_code = 0;

    AwgnArgs aw;
    auto* sub_awgn = app.add_subcommand("exponent-awgn", "AWGN exponent curves over a rate grid");
    sub_awgn->add_option("--gamma", aw.gamma, "SNR")->check(CLI::PositiveNumber);
    sub_awgn->add_option("--rate-helper", aw.rate_helper, "helper rate R_h (nats)");
    sub_awgn->add_option("--grid", aw.grid, "rate grid lo:hi:points");
    sub_awgn->add_option("--tau", aw.tau, "explicit design: segment fraction");
    sub_awgn->add_option("--slack", aw.slack, "explicit design: sphere slack s");
    sub_awgn->add_option("--units", aw.units, "nats|bits")
        ->check(CLI::IsMember({"nats", "bits"}));
    sub_awgn->add_option("--out", aw.out, "output CSV path (default stdout)");
    sub_awgn->add_flag("--emit-plotscript", aw.plotscript, "write a gnuplot script next to the CSV");
    sub_awgn->callback([&]() { exit_code = cmd_exponent_awgn(aw); });

    ModuloArgs mo;
    auto* sub_mod = app.add_subcommand("exponent-modulo", "modulo-additive exponent curves");
    sub_mod->add_option("--pmf", mo.pmf, "noise PMF, comma list or @file");
    sub_mod->add_option("--rate-helper", mo.rate_helper, "helper rate R_h (nats)");
    sub_mod->add_option("--tau", mo.tau, "segment fraction (default R_h/ln K)");
    sub_mod->add_option("--theta", mo.theta, "fixed theta for rate-axis sweeps");
    sub_mod->add_option("--rate", mo.rate, "fixed rate for theta-axis sweeps");
    sub_mod->add_option("--axis", mo.axis, "sweep axis")->check(CLI::IsMember({"theta", "rate"}));
    sub_mod->add_option("--grid", mo.grid, "axis grid lo:hi:points");
    sub_mod->add_option("--units", mo.units, "nats|bits")->check(CLI::IsMember({"nats", "bits"}));
    sub_mod->add_option("--out", mo.out, "output CSV path (default stdout)");
    sub_mod->add_flag("--emit-plotscript", mo.plotscript, "write a gnuplot script next to the CSV");
    sub_mod->callback([&]() { exit_code = cmd_exponent_modulo(mo); });

    MacArgs ma;
    auto* sub_mac = app.add_subcommand("exponent-mac", "Gaussian MAC exponent surface");
    sub_mac->add_option("--gamma1", ma.gamma1, "SNR of user 1")->check(CLI::PositiveNumber);
    sub_mac->add_option("--gamma2", ma.gamma2, "SNR of user 2")->check(CLI::PositiveNumber);
    sub_mac->add_option("--rate-helper", ma.rate_helper, "total helper rate R_h (nats)");
    sub_mac->add_option("--grid", ma.grid, "grid lo:hi:points[,lo:hi:points]");
    sub_mac->add_option("--units", ma.units, "nats|bits")->check(CLI::IsMember({"nats", "bits"}));
    sub_mac->add_option("--out", ma.out, "output CSV path (default stdout)");
    sub_mac->add_flag("--emit-plotscript", ma.plotscript, "write a gnuplot script next to the CSV");
    sub_mac->callback([&]() { exit_code = cmd_exponent_mac(ma); });

    SimulateArgs si;
    auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo of the helper schemes");
    sub_sim->add_option("--scheme", si.scheme, "awgn-flash|modulo-fixed|modulo-variable")
        ->required()
        ->check(CLI::IsMember({"awgn-flash", "modulo-fixed", "modulo-variable"}));
    sub_sim->add_option("--gamma", si.gamma, "SNR (awgn-flash; P = gamma, sigma2 = 1)");
    sub_sim->add_option("--rate-helper", si.rate_helper, "helper rate R_h (nats)");
    sub_sim->add_option("--tau", si.tau, "segment fraction");
    sub_sim->add_option("--slack", si.slack, "sphere slack s (awgn-flash)");
    sub_sim->add_option("--theta", si.theta, "description threshold (modulo-fixed)");
    sub_sim->add_option("--pmf", si.pmf, "noise PMF (modulo schemes)");
    sub_sim->add_option("--segment", si.segment, "segment length t");
    sub_sim->add_option("--block", si.block, "block length n (modulo-variable)");
    sub_sim->add_option("--overhead-const", si.overhead_const, "two-part-code overhead constant");
    sub_sim->add_option("--amplitude", si.amplitude, "codebook bound A (default sqrt(P))");
    sub_sim->add_option("--trials", si.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sub_sim->add_option("--seed", si.seed, "master seed");
    sub_sim->add_option("--workers", si.workers, "worker threads (0 = auto)");
    sub_sim->add_option("--power-policy", si.power_policy, "report|strict")
        ->check(CLI::IsMember({"report", "strict"}));
    sub_sim->add_flag("--exact", si.exact, "require the exact enumeration oracle");
    sub_sim->add_option("--out", si.out, "JSON-lines output path (default stdout)");
    sub_sim->callback([&]() { exit_code = cmd_simulate(si); });

    bool quick = false;
    std::uint64_t verify_seed = 20250901;
    auto* sub_ver = app.add_subcommand("verify", "run the oracle-equivalence suites");
    sub_ver->add_flag("--quick", quick, "reduced grids");
    sub_ver->add_option("--seed", verify_seed, "suite seed");
    sub_ver->callback([&]() { exit_code = cmd_verify(quick, verify_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const GuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
