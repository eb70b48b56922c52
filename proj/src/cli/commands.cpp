#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string_view>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "pivot_buffon/cli.hpp"
#include "pivot_buffon/closed_form.hpp"
#include "pivot_buffon/errors.hpp"
#include "pivot_buffon/montecarlo.hpp"
#include "pivot_buffon/stats.hpp"
#include "render.hpp"

namespace pivot_buffon::cli {

namespace {

// Two-sided 95% normal quantile for the reported Wilson intervals.
constexpr double kZ95 = 1.959963984540054;

std::string render(const Document& doc, Format format) {
    return format == Format::json ? render_json(doc) : render_csv({doc});
}

Document needle_params(double a, double b, double d, const std::optional<double>& phi) {
    Document params = {{"a", a}, {"b", b}, {"d", d}};
    if (phi) {
        params["phi"] = *phi;
    }
    return params;
}

Document exact_block(const PivotNeedle& needle, const Lattice& lattice,
                     const HitDistribution& dist, const std::optional<double>& phi) {
    const Modulus m = modulus(needle);
    Document exact = {{"source", std::string(to_string(dist.source))},
                      {"k_squared", m.k_squared()},
                      {"E_k", complete_e(m)},
                      {"mean_chord", mean_chord(needle)}};
    if (phi) {
        exact["chord"] = chord_length(needle, *phi);
    }
    exact["p_union"] = dist.p1 + dist.p2;
    exact["p_both"] = dist.p2;
    exact["p0"] = dist.p0;
    exact["p1"] = dist.p1;
    exact["p2"] = dist.p2;
    exact["expected_intersections"] = expected_intersections(needle, lattice);
    return exact;
}

Document probability_triple(const std::array<double, 3>& v) {
    return {{"p0", v[0]}, {"p1", v[1]}, {"p2", v[2]}};
}

Document estimate_block(const EstimateReport& report) {
    const auto& c = report.counts;
    Document wilson;
    const std::array<std::uint64_t, 3> hits{c.c0, c.c1, c.c2};
    for (int i = 0; i < 3; ++i) {
        const auto ci = stats::wilson_interval(hits[i], report.n_throws, kZ95);
        wilson[fmt::format("p{}_lo", i)] = ci.lo;
        wilson[fmt::format("p{}_hi", i)] = ci.hi;
    }
    return {{"counts",
             {{"c0", c.c0}, {"c1", c.c1}, {"c2", c.c2}, {"c_other", c.c_other}, {"sum_n", c.sum_n}}},
            {"p_hat", probability_triple({report.p_hat.p0, report.p_hat.p1, report.p_hat.p2})},
            {"std_errors", probability_triple(report.std_errors)},
            {"wilson95", wilson},
            {"mean_n_hat", report.mean_n_hat}};
}

SimulationConfig to_config(const SimulateOptions& opts) {
    return SimulationConfig{PivotNeedle(opts.a, opts.b), Lattice(opts.d), opts.n, opts.seed,
                            opts.chunks, opts.allow_long_needle};
}

Document simulate_params(const SimulateOptions& opts) {
    // n_chunks is deliberately absent: output must not depend on it.
    Document params = needle_params(opts.a, opts.b, opts.d, std::nullopt);
    params["n"] = opts.n;
    params["seed"] = opts.seed;
    if (opts.phi) {
        params["phi"] = *opts.phi;
    }
    return params;
}

EstimateReport simulate(const SimulateOptions& opts) {
    const auto config = to_config(opts);
    return opts.phi ? run_fixed_angle(config, *opts.phi) : run(config);
}

}  // namespace

std::string cmd_exact(const ExactOptions& opts) {
    const PivotNeedle needle(opts.a, opts.b);
    const Lattice lattice(opts.d);
    const HitDistribution dist = opts.phi ? fixed_angle_distribution(needle, lattice, *opts.phi)
                                          : hit_distribution(needle, lattice);
    Document doc = {{"params", needle_params(opts.a, opts.b, opts.d, opts.phi)},
                    {"exact", exact_block(needle, lattice, dist, opts.phi)}};
    return render(doc, opts.format);
}

std::string cmd_simulate(const SimulateOptions& opts) {
    const auto report = simulate(opts);
    Document doc = {{"params", simulate_params(opts)}, {"estimate", estimate_block(report)}};
    return render(doc, opts.format);
}

ValidateOutcome cmd_validate(const ValidateOptions& opts) {
    const auto& sim = opts.sim;
    if (sim.allow_long_needle) {
        throw InvalidConfigError("validate compares against the exact formulas, which need a + b <= d");
    }
    const PivotNeedle needle(sim.a, sim.b);
    const Lattice lattice(sim.d);
    const HitDistribution exact = sim.phi ? fixed_angle_distribution(needle, lattice, *sim.phi)
                                          : hit_distribution(needle, lattice);
    const auto report = simulate(sim);

    HitDistribution reference = exact;
    reference.p1 *= opts.inject_p1_scale;
    // Categories that vanish up to rounding are compared as exactly empty.
    bool collapsed = false;
    for (double* p : {&reference.p0, &reference.p1, &reference.p2}) {
        if (*p <= kSimplexTolerance) {
            *p = 0.0;
            collapsed = true;
        }
    }

    const auto z = stats::z_scores(report, reference);
    const auto chi = collapsed ? stats::chi_square_gof_collapsed(report.counts, reference)
                               : stats::chi_square_gof(report.counts, reference);
    const double mean_z = stats::mean_count_z(report, reference);

    bool pass = chi.p_value > kPValueThreshold;
    for (double zi : z) {
        pass = pass && std::abs(zi) < kZThreshold;
    }

    Document doc = {
        {"params", simulate_params(sim)},
        {"exact", exact_block(needle, lattice, exact, sim.phi)},
        {"estimate", estimate_block(report)},
        {"tests",
         {{"z", probability_triple(z)},
          {"mean_n_z", mean_z},
          {"chi_square",
           {{"statistic", chi.statistic},
            {"dof", chi.dof},
            {"p_value", chi.p_value},
            {"collapsed", collapsed}}},
          {"z_threshold", kZThreshold},
          {"p_value_threshold", kPValueThreshold},
          {"verdict", pass ? "PASS" : "FAIL"}}}};
    return ValidateOutcome{render(doc, sim.format), pass};
}

std::string cmd_sweep(const SweepOptions& opts) {
    if (opts.steps < 1) {
        throw InvalidConfigError("sweep needs at least one step");
    }
    const Lattice lattice(opts.d);
    // Validates total > 0 and total <= d once for the whole table.
    require_short_needle(PivotNeedle(opts.total, 0.0), lattice);

    std::vector<Document> rows;
    rows.reserve(opts.steps + 1);
    for (unsigned j = 0; j <= opts.steps; ++j) {
        const double r = static_cast<double>(j) / static_cast<double>(opts.steps);
        const double a = r * opts.total;
        const PivotNeedle needle(a, opts.total - a);
        const auto dist = hit_distribution(needle, lattice);
        const Modulus m = modulus(needle);
        rows.push_back({{"r", r},
                        {"a", needle.a()},
                        {"b", needle.b()},
                        {"p0", dist.p0},
                        {"p1", dist.p1},
                        {"p2", dist.p2},
                        {"k_squared", m.k_squared()},
                        {"E_k", complete_e(m)},
                        {"mean_chord", mean_chord(needle)}});
    }
    if (opts.format == Format::csv) {
        return render_csv(rows);
    }
    Document doc = {{"params", {{"d", opts.d}, {"total", opts.total}, {"steps", opts.steps}}},
                    {"sweep", rows}};
    return render_json(doc);
}

namespace {

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}};

void add_needle_options(CLI::App* cmd, double& a, double& b, double& d) {
    cmd->add_option("--a", a, "Length of arm C'A'")->required();
    cmd->add_option("--b", b, "Length of arm C'B'")->required();
    cmd->add_option("--d", d, "Spacing of the lattice lines")->required();
}

void add_format_option(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format (json or csv)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

std::uint64_t parse_seed(std::string_view text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw InvalidConfigError(fmt::format("{} = '{}' is not an unsigned 64-bit integer",
                                             kSeedEnvVar, text));
    }
    return value;
}

void resolve_seed(const CLI::Option* seed_opt, SimulateOptions& opts) {
    if (seed_opt->count() > 0) {
        return;
    }
    if (const char* env = std::getenv(kSeedEnvVar)) {
        opts.seed = parse_seed(env);
        return;
    }
    throw InvalidConfigError(
        fmt::format("a seed is required: pass --seed or set {}", kSeedEnvVar));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hit probabilities of a two-segment pivot needle on a lattice of parallel lines"};
    app.name(args.empty() ? "pivot-buffon" : args.front());
    app.require_subcommand(1);

    ExactOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "Evaluate the exact hit probabilities");
    add_needle_options(exact_cmd, exact.a, exact.b, exact.d);
    exact_cmd->add_option("--phi", exact.phi, "Hold the opening angle fixed (radians)");
    add_format_option(exact_cmd, exact.format);

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Estimate the hit probabilities by simulation");
    add_needle_options(sim_cmd, sim.a, sim.b, sim.d);
    sim_cmd->add_option("--n", sim.n, "Number of throws")->required();
    auto* sim_seed = sim_cmd->add_option("--seed", sim.seed, "Random seed");
    sim_cmd->add_option("--chunks", sim.chunks, "Number of work chunks")->capture_default_str();
    sim_cmd->add_option("--phi", sim.phi, "Hold the opening angle fixed (radians)");
    sim_cmd->add_flag("--allow-long-needle", sim.allow_long_needle,
                      "Simulate even when a + b > d");
    add_format_option(sim_cmd, sim.format);

    ValidateOptions val;
    auto* val_cmd =
        app.add_subcommand("validate", "Compare a simulation against the exact probabilities");
    add_needle_options(val_cmd, val.sim.a, val.sim.b, val.sim.d);
    val_cmd->add_option("--n", val.sim.n, "Number of throws")->required();
    auto* val_seed = val_cmd->add_option("--seed", val.sim.seed, "Random seed");
    val_cmd->add_option("--chunks", val.sim.chunks, "Number of work chunks")
        ->capture_default_str();
    val_cmd->add_option("--phi", val.sim.phi, "Hold the opening angle fixed (radians)");
    add_format_option(val_cmd, val.sim.format);
    val_cmd->add_option("--inject-p1-scale", val.inject_p1_scale)->group("");

    SweepOptions sweep;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Tabulate exact probabilities over the arm ratio a / (a + b)");
    sweep_cmd->add_option("--d", sweep.d, "Spacing of the lattice lines")->required();
    sweep_cmd->add_option("--total", sweep.total, "Fixed total length a + b")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "Number of intervals in [0, 1]")->required();
    add_format_option(sweep_cmd, sweep.format);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (exact_cmd->parsed()) {
            out << cmd_exact(exact);
        } else if (sim_cmd->parsed()) {
            resolve_seed(sim_seed, sim);
            if (sim.allow_long_needle && sim.a + sim.b > sim.d) {
                err << "warning: a + b > d; exact formulas do not apply and throws with three "
                       "or more intersections are tallied in c_other\n";
            }
            out << cmd_simulate(sim);
        } else if (val_cmd->parsed()) {
            resolve_seed(val_seed, val.sim);
            const auto outcome = cmd_validate(val);
            out << outcome.output;
            err << (outcome.pass ? "PASS" : "FAIL") << "\n";
            return outcome.pass ? kExitSuccess : kExitValidationFailed;
        } else if (sweep_cmd->parsed()) {
            out << cmd_sweep(sweep);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitSuccess;
}

}  // namespace pivot_buffon::cli
