#ifndef WVC_EXPERIMENT_HPP
#define WVC_EXPERIMENT_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wvc/graph.hpp"
#include "wvc/run.hpp"

namespace wvc {

struct ExperimentConfig {
    Algorithm algorithm{Algorithm::gsemo};
    std::uint64_t trials{1};
    std::uint64_t seed{1}; // trial t runs with seed + t
    std::optional<std::uint64_t> budget;
    std::optional<double> target_ratio;
    std::optional<double> epsilon; // target ratio 1 + epsilon
    bool check_bounds{false};
    bool require_zero_string{false};
    unsigned threads{1};
};

/// One CSV row. Absent hitting times mean the milestone was not reached.
struct TrialRecord {
    std::uint64_t seed{0};
    std::optional<std::uint64_t> iters_to_zero_string;
    std::optional<std::uint64_t> iters_to_cover;
    std::optional<std::uint64_t> iters_to_target;
    std::uint64_t max_archive{0};
    std::optional<Weight> best_cost;
    std::optional<Weight> opt;
    std::optional<double> ratio; // absent when opt is unknown; +inf without a cover
    bool censored{true};

    friend auto operator==(TrialRecord const&, TrialRecord const&) -> bool = default;
};

struct TrialResult {
    TrialRecord record;
    RunTrace trace;
};

/// best / opt, with 0/0 = 1 and c/0 = inf for c > 0.
auto approximation_ratio(Weight best, Weight opt) -> double;

auto termination_of(ExperimentConfig const& config) -> Termination;

/// Throws std::invalid_argument on an unusable configuration.
void validate(ExperimentConfig const& config, std::optional<Weight> opt);

auto run_trial(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
               std::uint64_t seed, std::atomic<bool> const* cancel = nullptr) -> TrialResult;

auto make_record(RunTrace const& trace, std::optional<Weight> opt) -> TrialRecord;

inline constexpr std::string_view csv_header =
    "seed,iters_to_zero_string,iters_to_cover,iters_to_target,max_archive,best_cost,opt,ratio,censored";

auto to_csv_row(TrialRecord const& r) -> std::string;
auto parse_csv_row(std::string_view row) -> TrialRecord;
auto to_csv(std::vector<TrialRecord> const& rows) -> std::string;
auto parse_csv(std::string_view text) -> std::vector<TrialRecord>;

auto to_json(TrialRecord const& r) -> nlohmann::ordered_json;

/// Order statistic by nearest rank: element ceil(q * N) - 1 of the sorted
/// sample (element 0 for q = 0).
auto quantile(std::vector<std::uint64_t> sorted, double q) -> std::uint64_t;

/// Reference magnitude of the expected-time bound for the algorithm on g,
/// hidden constants set to 1 and base-2 logarithms.
struct BoundReference {
    std::string expression;
    double value{0.0};
};
auto theorem_bound(Algorithm a, WeightedGraph const& g, std::optional<Weight> opt, std::optional<double> epsilon)
    -> BoundReference;

struct ExperimentResult {
    std::vector<TrialRecord> records; // sorted by seed
    std::uint64_t bound_violations{0};
    bool interrupted{false};
};

/// Runs config.trials trials on config.threads workers. Output is identical
/// for any thread count.
auto run_experiment(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
                    std::atomic<bool> const* cancel = nullptr) -> ExperimentResult;

/// Summary derived from the rows only (plus the bound-violation count and
/// instance description).
auto summarize(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
               ExperimentResult const& result) -> nlohmann::ordered_json;

/// JSON report of a single run (`run` subcommand).
auto run_report(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
                TrialResult const& trial) -> nlohmann::ordered_json;

/// Text report of a single run.
auto run_report_text(WeightedGraph const& g, ExperimentConfig const& config, TrialResult const& trial)
    -> std::string;

} // namespace wvc

#endif
