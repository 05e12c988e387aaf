#pragma once

#include "ekr/solver.hpp"
#include "ekr/theory.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ekr {

inline constexpr const char* kToolName = "ekr";
inline constexpr const char* kToolVersion = "0.1.0";

enum class TrialMode { exceeds, exact, classify, y_only };

struct ExperimentConfig {
    int n = 0;
    int r = 0;
    int s = 0;
    std::vector<double> p_grid;  // strictly increasing, within [0,1]
    int trials = 1;
    std::uint64_t master_seed = 0;
    TrialMode mode = TrialMode::exceeds;
    bool with_y = true;    // also count star-extension witnesses per trial
    bool coupled = true;   // one seed per trial shared across the grid
    int threads = 1;
    SolverBudget budget;
    std::optional<Backend> forced_backend;  // default: materialized under the cap
    std::uint32_t materialize_cap = 20000;
};

// Throws std::invalid_argument on malformed configs and
// infeasible_error when a stability mode is asked for s != 0 or n < 2r.
void validate_config(const ExperimentConfig& config);

enum class TrialStatus { ok, budget };

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    double p = 0.0;
    TrialStatus status = TrialStatus::ok;
    std::optional<bool> alpha_eq_star;
    std::optional<long long> alpha;
    std::optional<bool> stars_only;
    std::optional<long long> y_count;
    std::uint64_t nodes = 0;
    long long elapsed_ms = 0;  // measured; kept out of files unless asked for
};

// Deterministic given the config: per-trial seeds derive from the
// master seed, execution order never shows in the output (records come
// back trial-major, grid ascending within a trial). Coupled runs assert
// that per-trial indicators are nondecreasing along the grid.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// 95% score interval by default.
WilsonInterval wilson_interval(long long successes, long long total,
                               double z = 1.959963984540054);

struct SweepPoint {
    double p = 0.0;
    int trials_ok = 0;
    int trials_excluded = 0;  // budget-exhausted, left out of proportions
    int alpha_eq_count = 0;
    int y_positive_count = 0;
    double p_hat = 0.0;
    WilsonInterval interval;
};

struct SweepResult {
    std::vector<TrialRecord> records;
    std::vector<SweepPoint> curve;
};

SweepResult sweep(const ExperimentConfig& config);

class no_crossing_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ThresholdEstimate {
    double p_hat = 0.0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    double prop_at_hat = 0.0;
    WilsonInterval interval;
    int evaluations = 0;
};

// Bisection on the empirical survival curve, coupled across probes by
// the shared per-trial seeds. Requires the curve to bracket the target
// strictly from below at p_low; ties break toward lower p.
ThresholdEstimate threshold_bisect(const ExperimentConfig& config, double target,
                                   double p_low, double p_high, double tol);

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool all_pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }
};

// Deterministic property battery over graphs bounded by max_n, max_r.
VerifyReport verify_suite(int max_n, int max_r, std::uint64_t seed = 0x5EEDULL);

// 17 significant digits, locale-independent.
std::string format_real(double value);

// Column schema shared by CSV and JSONL output.
inline constexpr const char* kRecordHeader =
    "n,r,s,p,seed,trial,status,alpha_eq_N,alpha,stars_only,y_count,nodes,elapsed_ms";

// A leading comment line carries tool name, version and the config
// echo; everything written is byte-stable for a fixed config. Timings
// are only emitted on request since they would break that.
void write_records_csv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<TrialRecord>& records,
                       bool include_timings = false);
void write_records_jsonl(std::ostream& out, const ExperimentConfig& config,
                         const std::vector<TrialRecord>& records,
                         bool include_timings = false);
void write_curve_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<SweepPoint>& curve);

}  // namespace ekr
