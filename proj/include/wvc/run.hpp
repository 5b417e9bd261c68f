#ifndef WVC_RUN_HPP
#define WVC_RUN_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "wvc/archive.hpp"
#include "wvc/graph.hpp"
#include "wvc/rng.hpp"

namespace wvc {

enum class Algorithm { gsemo, gsemo_alt, demo, dpbea };

auto parse_algorithm(std::string_view name) -> Algorithm;
auto to_string(Algorithm a) -> std::string_view;
auto discipline_of(Algorithm a) -> Discipline;

enum class TargetKind { none, any_cover, ratio };

/// When to stop. At least one of budget / target must be given; a ratio
/// target needs the optimum.
struct Termination {
    std::optional<std::uint64_t> budget; // loop iterations after initialisation
    TargetKind target{TargetKind::any_cover};
    double ratio{1.0};
    /// Keep going after the target is hit until 0^n has entered the archive.
    bool require_zero_string{false};
};

struct RunConfig {
    Termination termination;
    std::optional<Weight> opt;
    /// Check the population bound of the algorithm after every iteration.
    bool check_bounds{false};
    /// Keep a per-iteration history (iteration, archive size, best cover).
    bool record_history{true};
    /// Polled periodically; a set flag ends the run early.
    std::atomic<bool> const* cancel{nullptr};
};

inline constexpr Weight no_cover = -1;

struct IterationRecord {
    std::uint64_t iteration{0};
    std::size_t archive_size{0};
    Weight best_cover{no_cover};
};

/// Iteration 0 is the initial individual; iteration t >= 1 is one parent
/// selection, one mutation and one insertion attempt. Milestones are the
/// first iteration at which a qualifying individual entered the archive.
struct RunTrace {
    Algorithm algorithm{Algorithm::gsemo};
    std::uint64_t seed{0};
    std::uint64_t iterations{0};
    std::optional<std::uint64_t> hit_zero_string;
    std::optional<std::uint64_t> hit_cover;
    std::optional<std::uint64_t> hit_target;
    std::optional<Weight> best_cover_cost;
    std::optional<Genotype> best_cover;
    std::size_t max_archive_size{0};
    std::size_t final_archive_size{0};
    std::uint64_t bound_violations{0};
    std::uint64_t lp_evaluations{0};
    bool cancelled{false};
    std::vector<IterationRecord> history;
};

/// Population-size limits checked under check_bounds.
struct ArchiveLimits {
    std::optional<std::uint64_t> semo;  // 2*OPT + 1
    std::uint64_t demo{0};              // 2k - 1
    std::uint64_t dpbea_total{0};       // 2(n + 1)
};

auto archive_limits(WeightedGraph const& g, std::optional<Weight> opt) -> ArchiveLimits;

/// Number of bound violations in the current archive (0 when all hold).
auto count_bound_violations(Archive const& archive, ArchiveLimits const& limits) -> std::uint64_t;

/// True if `cost` meets the termination target given the optimum.
auto meets_target(Termination const& t, std::optional<Weight> opt, Weight cost) -> bool;

/// Throws std::invalid_argument for an unusable termination spec.
void validate(Termination const& t, std::optional<Weight> opt);

/// Executes one run of `algorithm` on g. Deterministic in (g, rng seed, config).
auto run(Algorithm algorithm, WeightedGraph const& g, Rng& rng, RunConfig const& config) -> RunTrace;

struct RunResult {
    RunTrace trace;
    Archive archive;
};

/// Called with (iteration, archive) after initialisation and after every
/// iteration.
using ArchiveObserver = std::function<void(std::uint64_t, Archive const&)>;

/// Same loop, also returning the final archive and optionally reporting the
/// archive after every iteration.
auto run_with_archive(Algorithm algorithm, WeightedGraph const& g, Rng& rng, RunConfig const& config,
                      ArchiveObserver const& observer = {}) -> RunResult;

} // namespace wvc

#endif
