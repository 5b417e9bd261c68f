#include "wvc/run.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "wvc/lp.hpp"
#include "wvc/mutation.hpp"

namespace wvc {

auto parse_algorithm(std::string_view name) -> Algorithm
{
    if (name == "gsemo") { return Algorithm::gsemo; }
    if (name == "gsemo-alt") { return Algorithm::gsemo_alt; }
    if (name == "demo") { return Algorithm::demo; }
    if (name == "dpbea") { return Algorithm::dpbea; }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

auto to_string(Algorithm a) -> std::string_view
{
    switch (a) {
    case Algorithm::gsemo: return "gsemo";
    case Algorithm::gsemo_alt: return "gsemo-alt";
    case Algorithm::demo: return "demo";
    case Algorithm::dpbea: return "dpbea";
    }
    return "?";
}

auto discipline_of(Algorithm a) -> Discipline
{
    switch (a) {
    case Algorithm::gsemo:
    case Algorithm::gsemo_alt: return Discipline::semo;
    case Algorithm::demo: return Discipline::demo;
    case Algorithm::dpbea: return Discipline::dpbea;
    }
    return Discipline::semo;
}

auto archive_limits(WeightedGraph const& g, std::optional<Weight> opt) -> ArchiveLimits
{
    ArchiveLimits limits;
    if (opt) { limits.semo = 2 * static_cast<std::uint64_t>(*opt) + 1; }
    limits.demo = demo_archive_bound(g.n(), g.max_weight());
    limits.dpbea_total = 2 * (static_cast<std::uint64_t>(g.n()) + 1);
    return limits;
}

auto count_bound_violations(Archive const& archive, ArchiveLimits const& limits) -> std::uint64_t
{
    std::uint64_t violations = 0;
    auto const members = archive.members();
    switch (archive.discipline()) {
    case Discipline::semo: {
        if (limits.semo && archive.size() > *limits.semo) { ++violations; }
        std::vector<Weight> lp2;
        for (auto const& m : members) { lp2.push_back(m.fitness.lp2); }
        std::ranges::sort(lp2);
        if (std::ranges::adjacent_find(lp2) != lp2.end()) { ++violations; }
        break;
    }
    case Discipline::demo: {
        if (archive.size() > limits.demo) { ++violations; }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (*members[i].box == *members[j].box) { ++violations; }
            }
        }
        break;
    }
    case Discipline::dpbea: {
        if (archive.size() > limits.dpbea_total) { ++violations; }
        std::map<std::size_t, std::size_t> per_count;
        for (auto const& m : members) { ++per_count[m.ones]; }
        for (auto [ones, c] : per_count) {
            if (c > 2) { ++violations; }
        }
        break;
    }
    }
    return violations;
}

auto meets_target(Termination const& t, std::optional<Weight> opt, Weight cost) -> bool
{
    switch (t.target) {
    case TargetKind::none: return false;
    case TargetKind::any_cover: return true;
    case TargetKind::ratio:
        // Relative slack absorbs rounding in ratio * opt (e.g. 1.1 * 10).
        return static_cast<double>(cost) <= t.ratio * static_cast<double>(*opt) * (1.0 + 1e-12);
    }
    return false;
}

void validate(Termination const& t, std::optional<Weight> opt)
{
    if (!t.budget && t.target == TargetKind::none) {
        throw std::invalid_argument("termination needs an iteration budget or a target");
    }
    if (t.target == TargetKind::ratio) {
        if (!(t.ratio >= 1.0)) { throw std::invalid_argument("target ratio must be at least 1"); }
        if (!opt) { throw std::invalid_argument("a ratio target needs the optimum"); }
    }
    if (opt && *opt < 0) { throw std::invalid_argument("optimum must be non-negative"); }
}

namespace {

class Evaluator {
public:
    Evaluator(WeightedGraph const& g, bool with_box) : g_(g), with_box_(with_box) {}

    auto operator()(Genotype x) -> Individual
    {
        Individual ind{std::move(x), {}, std::nullopt, 0};
        ind.ones = ind.genotype.count();
        ind.fitness.cost = cost(g_, ind.genotype);
        auto it = cache_.find(ind.genotype);
        if (it == cache_.end()) {
            Cached c{lp_value2(g_, ind.genotype), std::nullopt};
            if (with_box_) { c.box = box_index({ind.fitness.cost, c.lp2}, g_.n()); }
            it = cache_.emplace(ind.genotype, c).first;
            ++evaluations_;
        }
        ind.fitness.lp2 = it->second.lp2;
        ind.box = it->second.box;
        return ind;
    }

    [[nodiscard]] auto evaluations() const { return evaluations_; }

private:
    struct Cached {
        Weight lp2;
        std::optional<BoxIndex> box;
    };
    WeightedGraph const& g_;
    bool with_box_;
    std::unordered_map<Genotype, Cached, GenotypeHash> cache_;
    std::uint64_t evaluations_{0};
};

} // namespace

auto run_with_archive(Algorithm algorithm, WeightedGraph const& g, Rng& rng, RunConfig const& config,
                      ArchiveObserver const& observer) -> RunResult
{
    auto const& term = config.termination;
    validate(term, config.opt);

    auto const discipline = discipline_of(algorithm);
    Evaluator eval(g, discipline == Discipline::demo);
    Archive archive(discipline);
    RunTrace trace;
    trace.algorithm = algorithm;
    trace.seed = rng.seed();
    auto const limits = archive_limits(g, config.opt);

    auto const note_entry = [&](Individual const& ind, std::uint64_t iteration) {
        if (ind.ones == 0 && !trace.hit_zero_string) { trace.hit_zero_string = iteration; }
        if (ind.fitness.lp2 != 0) { return; }
        if (!trace.hit_cover) { trace.hit_cover = iteration; }
        if (!trace.best_cover_cost || ind.fitness.cost < *trace.best_cover_cost) {
            trace.best_cover_cost = ind.fitness.cost;
            trace.best_cover = ind.genotype;
        }
        if (!trace.hit_target && meets_target(term, config.opt, ind.fitness.cost)) { trace.hit_target = iteration; }
    };
    auto const after_step = [&](std::uint64_t iteration) {
        trace.max_archive_size = std::max(trace.max_archive_size, archive.size());
        if (config.check_bounds) { trace.bound_violations += count_bound_violations(archive, limits); }
        if (config.record_history) {
            trace.history.push_back({iteration, archive.size(), trace.best_cover_cost.value_or(no_cover)});
        }
        if (observer) { observer(iteration, archive); }
    };
    auto const finished = [&] {
        return trace.hit_target && (!term.require_zero_string || trace.hit_zero_string);
    };

    {
        auto first = eval(random_genotype(g.n(), rng));
        auto const entry = first;
        archive.insert(std::move(first));
        note_entry(entry, 0);
        after_step(0);
    }

    std::uint64_t iteration = 0;
    while (!finished() && (!term.budget || iteration < *term.budget)) {
        if (config.cancel && (iteration & 0xFFF) == 0 && config.cancel->load(std::memory_order_relaxed)) {
            trace.cancelled = true;
            break;
        }
        ++iteration;
        auto const& parent = archive[rng.below(archive.size())].genotype;
        auto child = algorithm == Algorithm::gsemo_alt || algorithm == Algorithm::dpbea
                         ? alternative_mutation(g, parent, rng)
                         : standard_mutation(parent, rng);
        auto candidate = eval(std::move(child));
        auto const entry = candidate;
        if (archive.insert(std::move(candidate))) { note_entry(entry, iteration); }
        after_step(iteration);
    }
    trace.iterations = iteration;
    trace.final_archive_size = archive.size();
    trace.lp_evaluations = eval.evaluations();
    return {std::move(trace), std::move(archive)};
}

auto run(Algorithm algorithm, WeightedGraph const& g, Rng& rng, RunConfig const& config) -> RunTrace
{
    return run_with_archive(algorithm, g, rng, config).trace;
}

} // namespace wvc
