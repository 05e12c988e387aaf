#include "ekr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace ekr {

namespace {

const char* mode_name(TrialMode mode) {
    switch (mode) {
        case TrialMode::exceeds: return "exceeds";
        case TrialMode::exact: return "exact";
        case TrialMode::classify: return "classify";
        case TrialMode::y_only: return "y-only";
    }
    return "?";
}

bool stability_mode(TrialMode mode) { return mode != TrialMode::y_only; }

}  // namespace

void validate_config(const ExperimentConfig& config) {
    graph_constants(config.n, config.r, config.s);  // throws on bad (n, r, s)
    if (config.trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (config.threads < 1)
        throw std::invalid_argument("config: threads must be >= 1");
    if (config.p_grid.empty())
        throw std::invalid_argument("config: empty probability grid");
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        const double p = config.p_grid[i];
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("config: grid value outside [0,1]");
        if (i > 0 && !(config.p_grid[i - 1] < p))
            throw std::invalid_argument("config: grid must be strictly increasing");
    }
    if (config.s != 0)
        throw infeasible_error("config: experiments run on disjointness adjacency (s = 0)");
    if (stability_mode(config.mode) && config.n < 2 * config.r)
        throw infeasible_error("config: stability modes need n >= 2r");
}

namespace {

TrialRecord run_point(const ExperimentConfig& config, const GraphSpec& g,
                      long long star_size, int trial, std::uint64_t seed, double p) {
    TrialRecord rec;
    rec.trial = trial;
    rec.seed = seed;
    rec.p = p;
    const Backend backend =
        config.forced_backend.value_or(default_backend(g, config.materialize_cap));
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const SubgraphSample sample =
            sample_subgraph(g, p, seed, backend, config.materialize_cap);
        switch (config.mode) {
            case TrialMode::exceeds: {
                std::uint64_t nodes = 0;
                rec.alpha_eq_star = !alpha_exceeds_star(sample, config.budget, &nodes);
                rec.nodes = nodes;
                break;
            }
            case TrialMode::exact: {
                const AlphaResult res = solve_alpha(sample, config.budget);
                rec.alpha = res.alpha;
                rec.nodes = res.nodes;
                rec.alpha_eq_star = (res.alpha == star_size);
                break;
            }
            case TrialMode::classify: {
                const StabilityVerdict verdict =
                    ekr_stability(sample, true, config.budget);
                rec.alpha_eq_star = verdict.alpha_eq_star;
                rec.stars_only = verdict.stars_only;
                rec.nodes = verdict.nodes;
                break;
            }
            case TrialMode::y_only:
                break;
        }
        if (config.with_y || config.mode == TrialMode::y_only)
            rec.y_count = count_y(sample);
        if (rec.y_count && *rec.y_count > 0 && rec.alpha_eq_star && *rec.alpha_eq_star)
            throw std::logic_error(
                "trial: witness count positive but solver reported alpha at star size");
        rec.status = TrialStatus::ok;
    } catch (const budget_error& err) {
        rec.status = TrialStatus::budget;
        rec.nodes = err.nodes;
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rec;
}

std::vector<TrialRecord> run_single_trial(const ExperimentConfig& config,
                                          const GraphSpec& g, long long star_size,
                                          int trial) {
    std::vector<TrialRecord> records;
    records.reserve(config.p_grid.size());
    const std::uint64_t trial_seed = derive_trial_seed(config.master_seed,
                                                       static_cast<std::uint64_t>(trial));
    for (std::size_t gi = 0; gi < config.p_grid.size(); ++gi) {
        const std::uint64_t seed =
            config.coupled ? trial_seed : derive_trial_seed(trial_seed, gi);
        records.push_back(
            run_point(config, g, star_size, trial, seed, config.p_grid[gi]));
    }
    if (config.coupled) {
        // Shared randomness makes the survival indicator monotone in p;
        // anything else is a defect, not noise.
        bool seen_true = false;
        for (const TrialRecord& rec : records) {
            if (rec.status != TrialStatus::ok || !rec.alpha_eq_star) continue;
            if (seen_true && !*rec.alpha_eq_star)
                throw std::logic_error("trial: coupled indicator not monotone in p");
            seen_true = seen_true || *rec.alpha_eq_star;
        }
    }
    return records;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
    validate_config(config);
    const GraphSpec g = graph_constants(config.n, config.r, config.s);
    const long long star_size = g.star_size.convert_to<long long>();

    std::vector<std::vector<TrialRecord>> per_trial(
        static_cast<std::size_t>(config.trials));
    const int workers = std::min(config.threads, config.trials);
    if (workers <= 1) {
        for (int t = 0; t < config.trials; ++t)
            per_trial[static_cast<std::size_t>(t)] =
                run_single_trial(config, g, star_size, t);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                while (true) {
                    const int t = next.fetch_add(1);
                    if (t >= config.trials) return;
                    per_trial[static_cast<std::size_t>(t)] =
                        run_single_trial(config, g, star_size, t);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<TrialRecord> flat;
    flat.reserve(static_cast<std::size_t>(config.trials) * config.p_grid.size());
    for (auto& records : per_trial)
        for (auto& rec : records) flat.push_back(std::move(rec));
    return flat;
}

WilsonInterval wilson_interval(long long successes, long long total, double z) {
    if (total <= 0) return {0.0, 1.0};
    const double t = static_cast<double>(total);
    const double p_hat = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p_hat + z2 / (2.0 * t)) / denom;
    const double half =
        z * std::sqrt(p_hat * (1.0 - p_hat) / t + z2 / (4.0 * t * t)) / denom;
    // The score interval contains the point estimate; enforce that
    // against the last-ulp rounding at the endpoints.
    return {std::min(p_hat, std::max(0.0, center - half)),
            std::max(p_hat, std::min(1.0, center + half))};
}

SweepResult sweep(const ExperimentConfig& config) {
    SweepResult result;
    result.records = run_trials(config);

    result.curve.reserve(config.p_grid.size());
    for (std::size_t gi = 0; gi < config.p_grid.size(); ++gi) {
        SweepPoint point;
        point.p = config.p_grid[gi];
        for (const TrialRecord& rec : result.records) {
            if (rec.p != point.p) continue;
            if (rec.status != TrialStatus::ok) {
                ++point.trials_excluded;
                continue;
            }
            ++point.trials_ok;
            if (rec.alpha_eq_star && *rec.alpha_eq_star) ++point.alpha_eq_count;
            if (rec.y_count && *rec.y_count > 0) ++point.y_positive_count;
        }
        point.p_hat = point.trials_ok > 0
                          ? static_cast<double>(point.alpha_eq_count) / point.trials_ok
                          : 0.0;
        point.interval = wilson_interval(point.alpha_eq_count, point.trials_ok);
        result.curve.push_back(point);
    }

    if (config.coupled && stability_mode(config.mode)) {
        bool clean = true;
        for (const SweepPoint& point : result.curve)
            if (point.trials_excluded > 0) clean = false;
        if (clean) {
            for (std::size_t i = 1; i < result.curve.size(); ++i)
                if (result.curve[i].p_hat < result.curve[i - 1].p_hat)
                    throw std::logic_error("sweep: coupled curve not nondecreasing");
        }
    }
    return result;
}

ThresholdEstimate threshold_bisect(const ExperimentConfig& config, double target,
                                   double p_low, double p_high, double tol) {
    if (!(p_low >= 0.0 && p_high <= 1.0 && p_low < p_high))
        throw std::invalid_argument("threshold: need 0 <= p_low < p_high <= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("threshold: tol must be positive");

    ExperimentConfig probe = config;
    int evaluations = 0;
    struct Eval {
        double prop;
        long long successes;
        long long ok;
    };
    auto eval = [&](double p) -> Eval {
        probe.p_grid = {p};
        ++evaluations;
        long long ok = 0, successes = 0;
        for (const TrialRecord& rec : run_trials(probe)) {
            if (rec.status != TrialStatus::ok || !rec.alpha_eq_star) continue;
            ++ok;
            if (*rec.alpha_eq_star) ++successes;
        }
        if (ok == 0)
            throw budget_error("threshold: every trial exhausted its budget", 0);
        return {static_cast<double>(successes) / static_cast<double>(ok), successes, ok};
    };

    const Eval low = eval(p_low);
    if (!(low.prop < target))
        throw no_crossing_error("threshold: curve already at target at p_low");
    Eval high = eval(p_high);
    if (!(high.prop >= target))
        throw no_crossing_error("threshold: curve below target at p_high");

    double lo = p_low, hi = p_high;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const Eval at_mid = eval(mid);
        if (at_mid.prop >= target) {  // ties move the bracket down
            hi = mid;
            high = at_mid;
        } else {
            lo = mid;
        }
    }

    ThresholdEstimate estimate;
    estimate.p_hat = hi;
    estimate.bracket_low = lo;
    estimate.bracket_high = hi;
    estimate.prop_at_hat = high.prop;
    estimate.interval = wilson_interval(high.successes, high.ok);
    estimate.evaluations = evaluations;
    return estimate;
}

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

void write_meta_comment(std::ostream& out, const ExperimentConfig& config) {
    out << "# tool=" << kToolName << " version=" << kToolVersion << " n=" << config.n
        << " r=" << config.r << " s=" << config.s << " trials=" << config.trials
        << " seed=" << config.master_seed << " mode=" << mode_name(config.mode)
        << " coupled=" << (config.coupled ? 1 : 0) << " grid=";
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        if (i) out << ',';
        out << format_real(config.p_grid[i]);
    }
    out << '\n';
}

template <typename T>
std::string opt_to_csv(const std::optional<T>& value) {
    if (!value) return "";
    if constexpr (std::is_same_v<T, bool>) return *value ? "1" : "0";
    else return std::to_string(*value);
}

template <typename T>
std::string opt_to_json(const std::optional<T>& value) {
    if (!value) return "null";
    if constexpr (std::is_same_v<T, bool>) return *value ? "true" : "false";
    else return std::to_string(*value);
}

const char* status_name(TrialStatus status) {
    return status == TrialStatus::ok ? "ok" : "budget";
}

}  // namespace

void write_records_csv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<TrialRecord>& records, bool include_timings) {
    write_meta_comment(out, config);
    out << kRecordHeader << '\n';
    for (const TrialRecord& rec : records) {
        out << config.n << ',' << config.r << ',' << config.s << ','
            << format_real(rec.p) << ',' << rec.seed << ',' << rec.trial << ','
            << status_name(rec.status) << ',' << opt_to_csv(rec.alpha_eq_star) << ','
            << opt_to_csv(rec.alpha) << ',' << opt_to_csv(rec.stars_only) << ','
            << opt_to_csv(rec.y_count) << ',' << rec.nodes << ','
            << (include_timings ? std::to_string(rec.elapsed_ms) : std::string())
            << '\n';
    }
}

void write_records_jsonl(std::ostream& out, const ExperimentConfig& config,
                         const std::vector<TrialRecord>& records,
                         bool include_timings) {
    out << "{\"tool\":\"" << kToolName << "\",\"version\":\"" << kToolVersion
        << "\",\"n\":" << config.n << ",\"r\":" << config.r << ",\"s\":" << config.s
        << ",\"trials\":" << config.trials << ",\"seed\":" << config.master_seed
        << ",\"mode\":\"" << mode_name(config.mode)
        << "\",\"coupled\":" << (config.coupled ? "true" : "false") << ",\"grid\":[";
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        if (i) out << ',';
        out << format_real(config.p_grid[i]);
    }
    out << "]}\n";
    for (const TrialRecord& rec : records) {
        out << "{\"n\":" << config.n << ",\"r\":" << config.r << ",\"s\":" << config.s
            << ",\"p\":" << format_real(rec.p) << ",\"seed\":" << rec.seed
            << ",\"trial\":" << rec.trial << ",\"status\":\"" << status_name(rec.status)
            << "\",\"alpha_eq_N\":" << opt_to_json(rec.alpha_eq_star)
            << ",\"alpha\":" << opt_to_json(rec.alpha)
            << ",\"stars_only\":" << opt_to_json(rec.stars_only)
            << ",\"y_count\":" << opt_to_json(rec.y_count) << ",\"nodes\":" << rec.nodes
            << ",\"elapsed_ms\":"
            << (include_timings ? std::to_string(rec.elapsed_ms) : std::string("null"))
            << "}\n";
    }
}

void write_curve_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<SweepPoint>& curve) {
    write_meta_comment(out, config);
    out << "p,trials_ok,trials_excluded,alpha_eq_count,p_hat,wilson_low,wilson_high,"
           "y_positive_count\n";
    for (const SweepPoint& point : curve) {
        out << format_real(point.p) << ',' << point.trials_ok << ','
            << point.trials_excluded << ',' << point.alpha_eq_count << ','
            << format_real(point.p_hat) << ',' << format_real(point.interval.low) << ','
            << format_real(point.interval.high) << ',' << point.y_positive_count
            << '\n';
    }
}

}  // namespace ekr
