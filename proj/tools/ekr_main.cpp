// Command-line harness for random Kneser subgraph experiments.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 infeasible
// parameters (e.g. n < 2r for stability modes), 3 resource budget
// exhausted at the whole-run level.

#include "ekr/experiment.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(text, &used, 0);  // decimal or 0x hex
    if (used != text.size())
        throw CLI::ValidationError("seed", "not a 64-bit integer: " + text);
    return value;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        if (part.empty()) continue;
        grid.push_back(std::stod(part));
    }
    return grid;
}

ekr::TrialMode parse_mode(const std::string& name) {
    if (name == "exceeds") return ekr::TrialMode::exceeds;
    if (name == "exact") return ekr::TrialMode::exact;
    if (name == "classify") return ekr::TrialMode::classify;
    throw CLI::ValidationError("mode", "expected exceeds|exact|classify");
}

std::optional<ekr::Backend> parse_backend(const std::string& name) {
    if (name == "auto") return std::nullopt;
    if (name == "materialized") return ekr::Backend::materialized;
    if (name == "lazy") return ekr::Backend::lazy;
    throw CLI::ValidationError("backend", "expected auto|materialized|lazy");
}

struct CommonOpts {
    std::string seed_text = "0";
    std::string backend = "auto";
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 0.0;
    int threads = 1;
    std::string out_path;
    std::string format = "csv";
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed_text, "master seed, decimal or 0x-hex");
    cmd->add_option("--backend", opts.backend, "auto|materialized|lazy");
    cmd->add_option("--max-nodes", opts.max_nodes, "solver node budget per call");
    cmd->add_option("--max-seconds", opts.max_seconds, "solver wall budget per call (0 = off)");
    cmd->add_option("--threads", opts.threads, "worker threads over trials");
    cmd->add_option("--out", opts.out_path, "write records to this file");
    cmd->add_option("--format", opts.format, "csv|jsonl record format");
    cmd->add_flag("--timings", opts.timings,
                  "emit measured elapsed_ms (breaks byte-for-byte reproducibility)");
}

void apply_common(ekr::ExperimentConfig& config, const CommonOpts& opts) {
    config.master_seed = parse_seed(opts.seed_text);
    config.forced_backend = parse_backend(opts.backend);
    config.budget.max_nodes = opts.max_nodes;
    config.budget.max_seconds = opts.max_seconds;
    config.threads = opts.threads;
    if (opts.format != "csv" && opts.format != "jsonl")
        throw CLI::ValidationError("format", "expected csv|jsonl");
}

void emit_records(const CommonOpts& opts, const ekr::ExperimentConfig& config,
                  const std::vector<ekr::TrialRecord>& records) {
    auto write = [&](std::ostream& out) {
        if (opts.format == "jsonl")
            ekr::write_records_jsonl(out, config, records, opts.timings);
        else
            ekr::write_records_csv(out, config, records, opts.timings);
    };
    if (opts.out_path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.out_path);
    write(file);
}

// Whole-run budget rule: producing no usable row at all is a run failure.
bool all_budget(const std::vector<ekr::TrialRecord>& records) {
    if (records.empty()) return false;
    for (const auto& rec : records)
        if (rec.status == ekr::TrialStatus::ok) return false;
    return true;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"random Kneser subgraph laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ekr::kToolVersion));

    // ---- calc ----------------------------------------------------------
    auto* calc = app.add_subcommand("calc", "closed-form quantities");
    calc->require_subcommand(1);

    int pc_n = 0, pc_r = 0;
    auto* calc_pc = calc->add_subcommand("pc", "critical retention probability");
    calc_pc->add_option("--n", pc_n)->required();
    calc_pc->add_option("--r", pc_r)->required();

    int mom_n = 0, mom_r = 0;
    double mom_p = 0.0;
    std::vector<long long> mom_is;
    auto* calc_moments = calc->add_subcommand("moments", "expected witness counts and bounds");
    calc_moments->add_option("--n", mom_n)->required();
    calc_moments->add_option("--r", mom_r)->required();
    calc_moments->add_option("--p", mom_p)->required();
    calc_moments->add_option("--i", mom_is, "near-star deficiency indices");

    // ---- graph stats ----------------------------------------------------
    auto* graph = app.add_subcommand("graph", "graph-level quantities");
    graph->require_subcommand(1);
    int gs_n = 0, gs_r = 0, gs_s = 0;
    auto* graph_stats = graph->add_subcommand("stats", "derived constants for (n, r, s)");
    graph_stats->add_option("--n", gs_n)->required();
    graph_stats->add_option("--r", gs_r)->required();
    graph_stats->add_option("--s", gs_s);

    // ---- trial ----------------------------------------------------------
    auto* trial = app.add_subcommand("trial", "independent trials at one retention level");
    int tr_n = 0, tr_r = 0, tr_trials = 1;
    double tr_p = 0.0;
    std::string tr_mode = "exceeds";
    bool tr_classify = false, tr_no_y = false;
    CommonOpts tr_opts;
    trial->add_option("--n", tr_n)->required();
    trial->add_option("--r", tr_r)->required();
    trial->add_option("--p", tr_p)->required();
    trial->add_option("--trials", tr_trials);
    trial->add_option("--mode", tr_mode, "exceeds|exact|classify");
    trial->add_flag("--classify", tr_classify, "shorthand for --mode classify");
    trial->add_flag("--no-y", tr_no_y, "skip the witness count");
    add_common(trial, tr_opts);

    // ---- sweep ----------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "coupled survival curve over a p-grid");
    int sw_n = 0, sw_r = 0, sw_trials = 1;
    std::string sw_grid;
    std::string sw_mode = "exceeds";
    bool sw_independent = false, sw_no_y = false;
    std::string sw_curve_out;
    CommonOpts sw_opts;
    sweep_cmd->add_option("--n", sw_n)->required();
    sweep_cmd->add_option("--r", sw_r)->required();
    sweep_cmd->add_option("--grid", sw_grid, "comma-separated retention probabilities")->required();
    sweep_cmd->add_option("--trials", sw_trials);
    sweep_cmd->add_option("--mode", sw_mode, "exceeds|exact|classify");
    sweep_cmd->add_flag("--independent", sw_independent,
                        "fresh randomness per grid point instead of coupling");
    sweep_cmd->add_flag("--no-y", sw_no_y, "skip the witness count");
    sweep_cmd->add_option("--curve-out", sw_curve_out, "also write the aggregated curve CSV");
    add_common(sweep_cmd, sw_opts);

    // ---- threshold ------------------------------------------------------
    auto* thr = app.add_subcommand("threshold", "bisect the empirical survival curve");
    int th_n = 0, th_r = 0, th_trials = 100;
    double th_target = 0.5, th_plo = 0.0, th_phi = 1.0, th_tol = 0.01;
    CommonOpts th_opts;
    thr->add_option("--n", th_n)->required();
    thr->add_option("--r", th_r)->required();
    thr->add_option("--target", th_target);
    thr->add_option("--trials", th_trials);
    thr->add_option("--plo", th_plo)->required();
    thr->add_option("--phi", th_phi)->required();
    thr->add_option("--tol", th_tol);
    add_common(thr, th_opts);

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "deterministic property battery");
    int vf_max_n = 12, vf_max_r = 3;
    std::string vf_seed = "0x5EED";
    verify->add_option("--max-n", vf_max_n);
    verify->add_option("--max-r", vf_max_r);
    verify->add_option("--seed", vf_seed);

    // ---- count-y --------------------------------------------------------
    auto* county = app.add_subcommand("count-y", "witness counts without solving");
    int cy_n = 0, cy_r = 0, cy_trials = 1;
    double cy_p = 0.0;
    CommonOpts cy_opts;
    county->add_option("--n", cy_n)->required();
    county->add_option("--r", cy_r)->required();
    county->add_option("--p", cy_p)->required();
    county->add_option("--trials", cy_trials);
    add_common(county, cy_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e), 0;
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e), 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (calc_pc->parsed()) {
        const double pc = ekr::p_critical(pc_n, pc_r);
        std::cout << "n=" << pc_n << " r=" << pc_r << "\n"
                  << "p_c=" << ekr::format_real(pc) << "\n"
                  << "ln_p_c=" << ekr::format_real(std::log(pc)) << "\n";
        return 0;
    }

    if (calc_moments->parsed()) {
        if (mom_is.empty()) mom_is = {1, 2, 3, 4};
        const ekr::MomentReport report = ekr::moments(mom_n, mom_r, mom_p, mom_is);
        std::cout << "n=" << report.n << " r=" << report.r
                  << " p=" << ekr::format_real(report.p) << "\n"
                  << "expected_y=" << ekr::format_real(report.e_y)
                  << " ln=" << ekr::format_real(report.e_y_ln) << "\n"
                  << "y_second_factorial=" << ekr::format_real(report.y2_approx)
                  << " ln=" << ekr::format_real(report.y2_approx_ln) << "\n";
        for (const auto& [i, bound] : report.near_star_bounds)
            std::cout << "near_star_bound[i=" << i << "]=" << ekr::format_real(bound)
                      << " ln=" << ekr::format_real(ekr::near_star_bound_ln(mom_n, mom_r, mom_p, i))
                      << "\n";
        for (const auto& [i, bound] : report.transfer_bounds)
            std::cout << "transfer_bound[i=" << i << "]=" << ekr::format_real(bound) << "\n";
        return 0;
    }

    if (graph_stats->parsed()) {
        const ekr::GraphSpec g = ekr::graph_constants(gs_n, gs_r, gs_s);
        std::cout << "n=" << g.n << " r=" << g.r << " s=" << g.s << "\n"
                  << "vertices=" << g.vertices << "\n"
                  << "star_size=" << g.star_size << "\n"
                  << "star_degree=" << g.star_degree << "\n"
                  << "degree=" << g.degree << "\n"
                  << "edges=" << g.edges << "\n"
                  << "ekr_range=" << (g.ekr_range() ? "yes" : "no") << "\n";
        if (g.s == 0 && g.r >= 2 && g.n > g.r)
            std::cout << "p_critical=" << ekr::format_real(ekr::p_critical(g.n, g.r))
                      << "\n";
        return 0;
    }

    if (trial->parsed()) {
        ekr::ExperimentConfig config;
        config.n = tr_n;
        config.r = tr_r;
        config.p_grid = {tr_p};
        config.trials = tr_trials;
        config.mode = tr_classify ? ekr::TrialMode::classify : parse_mode(tr_mode);
        config.with_y = !tr_no_y;
        apply_common(config, tr_opts);
        const auto records = ekr::run_trials(config);
        emit_records(tr_opts, config, records);
        return all_budget(records) ? 3 : 0;
    }

    if (sweep_cmd->parsed()) {
        ekr::ExperimentConfig config;
        config.n = sw_n;
        config.r = sw_r;
        config.p_grid = parse_grid(sw_grid);
        config.trials = sw_trials;
        config.mode = parse_mode(sw_mode);
        config.coupled = !sw_independent;
        config.with_y = !sw_no_y;
        apply_common(config, sw_opts);
        const ekr::SweepResult result = ekr::sweep(config);
        emit_records(sw_opts, config, result.records);
        if (!sw_curve_out.empty()) {
            std::ofstream file(sw_curve_out, std::ios::binary);
            if (!file)
                throw std::runtime_error("cannot open output file: " + sw_curve_out);
            ekr::write_curve_csv(file, config, result.curve);
        }
        if (!sw_opts.out_path.empty()) {
            // Records went to the file; show the curve on stdout.
            ekr::write_curve_csv(std::cout, config, result.curve);
        }
        return all_budget(result.records) ? 3 : 0;
    }

    if (thr->parsed()) {
        ekr::ExperimentConfig config;
        config.n = th_n;
        config.r = th_r;
        config.p_grid = {th_plo};  // replaced per probe
        config.trials = th_trials;
        config.mode = ekr::TrialMode::exceeds;
        config.with_y = false;
        apply_common(config, th_opts);
        const ekr::ThresholdEstimate est =
            ekr::threshold_bisect(config, th_target, th_plo, th_phi, th_tol);
        std::cout << "p_hat=" << ekr::format_real(est.p_hat) << "\n"
                  << "bracket=[" << ekr::format_real(est.bracket_low) << ","
                  << ekr::format_real(est.bracket_high) << "]\n"
                  << "prop_at_hat=" << ekr::format_real(est.prop_at_hat) << "\n"
                  << "wilson95=[" << ekr::format_real(est.interval.low) << ","
                  << ekr::format_real(est.interval.high) << "]\n"
                  << "evaluations=" << est.evaluations << "\n";
        if (th_n > th_r && th_r >= 2) {
            const double pc = ekr::p_critical(th_n, th_r);
            std::cout << "p_critical=" << ekr::format_real(pc) << "\n"
                      << "ratio=" << ekr::format_real(est.p_hat / pc) << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        const ekr::VerifyReport report =
            ekr::verify_suite(vf_max_n, vf_max_r, parse_seed(vf_seed));
        for (const auto& item : report.items)
            std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name
                      << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
        std::cout << (report.all_pass() ? "all checks passed" : "checks FAILED") << "\n";
        return report.all_pass() ? 0 : 1;
    }

    if (county->parsed()) {
        ekr::ExperimentConfig config;
        config.n = cy_n;
        config.r = cy_r;
        config.p_grid = {cy_p};
        config.trials = cy_trials;
        config.mode = ekr::TrialMode::y_only;
        apply_common(config, cy_opts);
        const auto records = ekr::run_trials(config);
        emit_records(cy_opts, config, records);
        long long total = 0, ok = 0;
        for (const auto& rec : records)
            if (rec.status == ekr::TrialStatus::ok && rec.y_count) {
                total += *rec.y_count;
                ++ok;
            }
        if (ok > 0 && cy_n >= 2 * cy_r) {
            std::cout << "# mean_y=" << ekr::format_real(static_cast<double>(total) / ok)
                      << " expected_y=" << ekr::format_real(ekr::expected_y(cy_n, cy_r, cy_p))
                      << " trials=" << ok << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ekr::infeasible_error& err) {
        std::cerr << "infeasible: " << err.what() << "\n";
        return 2;
    } catch (const ekr::no_crossing_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const ekr::budget_error& err) {
        std::cerr << "budget exhausted: " << err.what() << "\n";
        return 3;
    } catch (const CLI::Error& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
