#include "wvc/exact.hpp"

#include <algorithm>

namespace wvc {

auto opt_exhaustive(WeightedGraph const& g) -> ExactResult
{
    auto const n = g.n();
    if (n > exhaustive_limit) {
        throw TooLarge("opt_exhaustive supports at most 16 vertices, got " + std::to_string(n));
    }
    // Bit (n-1-i) of the mask holds x_i, so increasing masks enumerate
    // genotypes in lexicographic order.
    auto const bit = [n](Vertex v) { return std::uint32_t{1} << (n - 1 - v); };
    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(g.m());
    for (auto [u, v] : g.edges()) { edge_masks.push_back(bit(u) | bit(v)); }

    Weight best = g.total_weight() + 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (!std::ranges::all_of(edge_masks, [mask](auto e) { return (mask & e) != 0; })) { continue; }
        Weight c = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (mask & bit(v)) { c += g.weight(v); }
        }
        if (c < best) {
            best = c;
            best_mask = mask;
        }
    }
    ExactResult r{best, Genotype(n)};
    for (Vertex v = 0; v < n; ++v) { r.witness.set(v, (best_mask & bit(v)) != 0); }
    return r;
}

namespace {

enum class Status : std::uint8_t { free, in, out };

class BranchBound {
public:
    BranchBound(WeightedGraph const& g, std::uint64_t node_limit) : g_(g), node_limit_(node_limit) {}

    /// Puts v out of the cover and its neighbours in. False on conflict.
    auto exclude(std::vector<Status>& st, Vertex v, Weight& cost_in) const -> bool
    {
        st[v] = Status::out;
        for (auto u : g_.neighbors(v)) {
            if (st[u] == Status::out) { return false; }
            if (st[u] == Status::free) {
                st[u] = Status::in;
                cost_in += g_.weight(u);
            }
        }
        return true;
    }

    /// Minimise over completions of st; best_ tracks strict improvements on
    /// bound_.
    void optimise(std::vector<Status> const& st, Weight cost_in)
    {
        decision_ = false;
        search(st, cost_in);
    }

    /// Is there a completion of st with cost <= target?
    auto feasible(std::vector<Status> const& st, Weight cost_in, Weight target) -> bool
    {
        decision_ = true;
        bound_ = target;
        found_ = false;
        search(st, cost_in);
        return found_;
    }

    void set_bound(Weight b) { bound_ = b; }
    [[nodiscard]] auto bound() const { return bound_; }
    [[nodiscard]] auto found() const { return found_; }
    [[nodiscard]] auto best() const -> Genotype const& { return best_; }

private:
    auto selection(std::vector<Status> const& st) const -> Genotype
    {
        Genotype x(g_.n());
        for (Vertex v = 0; v < g_.n(); ++v) { x.set(v, st[v] == Status::in); }
        return x;
    }

    // Returns true when a decision search may stop.
    auto search(std::vector<Status> const& st, Weight cost_in) -> bool
    {
        if (++nodes_ > node_limit_) {
            throw BudgetExceeded("branch-and-bound node limit of " + std::to_string(node_limit_) + " exceeded");
        }
        auto const in = selection(st);
        auto const rg = residual(g_, in);
        if (rg.edges.empty()) {
            if (decision_ ? cost_in <= bound_ : cost_in < bound_) {
                bound_ = cost_in;
                best_ = in;
                found_ = true;
            }
            return decision_ && found_;
        }
        auto const lower = cost_in + (double_cover_flow(rg, g_.weights()) + 1) / 2;
        if (decision_ ? lower > bound_ : lower >= bound_) { return false; }

        std::vector<std::size_t> degree(rg.size(), 0);
        for (auto [u, v] : rg.edges) {
            ++degree[u];
            ++degree[v];
        }
        std::size_t pick = 0;
        Weight pick_score = -1;
        for (std::size_t i = 0; i < rg.size(); ++i) {
            auto const score = g_.weight(rg.kept[i]) * static_cast<Weight>(degree[i]);
            if (score > pick_score) {
                pick_score = score;
                pick = i;
            }
        }
        auto const v = rg.kept[pick];

        auto with = st;
        with[v] = Status::in;
        if (search(with, cost_in + g_.weight(v))) { return true; }

        auto without = st;
        Weight cost_without = cost_in;
        if (exclude(without, v, cost_without)) { return search(without, cost_without); }
        return false;
    }

    WeightedGraph const& g_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_{0};
    bool decision_{false};
    bool found_{false};
    Weight bound_{0};
    Genotype best_;
};

} // namespace

auto opt_branch_bound(WeightedGraph const& g, BranchBoundOptions const& options) -> ExactResult
{
    auto const n = g.n();
    BranchBound bb(g, options.node_limit);
    std::vector<Status> st(n, Status::free);
    bb.set_bound(g.total_weight() + 1);
    bb.optimise(st, 0);
    auto const opt = bb.bound();

    // Lexicographic witness: the invariant is that some optimal cover agrees
    // with every fixed position.
    Weight cost_in = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (st[v] != Status::free) { continue; }
        auto trial = st;
        Weight trial_cost = cost_in;
        if (bb.exclude(trial, v, trial_cost) && bb.feasible(trial, trial_cost, opt)) {
            st = std::move(trial);
            cost_in = trial_cost;
        } else {
            st[v] = Status::in;
            cost_in += g.weight(v);
        }
    }
    ExactResult r{opt, Genotype(n)};
    for (Vertex v = 0; v < n; ++v) { r.witness.set(v, st[v] == Status::in); }
    if (cost_in != opt || !is_cover(g, r.witness)) {
        throw std::logic_error("branch-and-bound witness is inconsistent with the optimum");
    }
    return r;
}

auto opt(WeightedGraph const& g, BranchBoundOptions const& options) -> ExactResult
{
    if (g.n() <= 12) { return opt_exhaustive(g); }
    return opt_branch_bound(g, options);
}

} // namespace wvc
