#include "wvc/lp.hpp"

#include <algorithm>
#include <limits>

namespace wvc {

namespace {

// Dinic's algorithm on integer capacities. Arcs are stored in pairs so that
// arc i ^ 1 is the reverse of arc i.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, Weight capacity)
    {
        arcs_.push_back({to, capacity, head_[from]});
        head_[from] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size() - 1);
    }

    auto max_flow(std::size_t s, std::size_t t) -> Weight
    {
        Weight flow = 0;
        while (build_levels(s, t)) {
            std::ranges::copy(head_, cursor_.begin());
            while (auto pushed = augment(s, t, std::numeric_limits<Weight>::max())) { flow += pushed; }
        }
        return flow;
    }

    /// Nodes reachable from s through arcs with positive residual capacity.
    [[nodiscard]] auto reachable(std::size_t s) const -> std::vector<bool>
    {
        std::vector<bool> seen(head_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto const u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        Weight residual;
        int next;
    };

    auto build_levels(std::size_t s, std::size_t t) -> bool
    {
        std::ranges::fill(level_, -1);
        std::vector<std::size_t> queue{s};
        level_[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto const u = queue[qi];
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    queue.push_back(arcs_[a].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    auto augment(std::size_t u, std::size_t t, Weight limit) -> Weight
    {
        if (u == t) { return limit; }
        for (int& a = cursor_[u]; a != -1; a = arcs_[a].next) {
            auto& arc = arcs_[a];
            if (arc.residual > 0 && level_[arc.to] == level_[u] + 1) {
                if (auto pushed = augment(arc.to, t, std::min(limit, arc.residual))) {
                    arc.residual -= pushed;
                    arcs_[a ^ 1].residual += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

// Node layout: s = 0, t = 1, v_L = 2 + 2v, v_R = 3 + 2v.
auto double_cover(ResidualGraph const& rg, std::span<Weight const> weights) -> FlowNetwork
{
    auto const k = rg.size();
    FlowNetwork net(2 * k + 2);
    Weight unbounded = 1;
    for (auto v : rg.kept) { unbounded += weights[v]; }
    for (std::size_t v = 0; v < k; ++v) {
        net.add_arc(0, 2 + 2 * v, weights[rg.kept[v]]);
        net.add_arc(3 + 2 * v, 1, weights[rg.kept[v]]);
    }
    for (auto [u, v] : rg.edges) {
        net.add_arc(2 + 2 * std::size_t{u}, 3 + 2 * std::size_t{v}, unbounded);
        net.add_arc(2 + 2 * std::size_t{v}, 3 + 2 * std::size_t{u}, unbounded);
    }
    return net;
}

} // namespace

auto solve_lp(ResidualGraph const& rg, std::span<Weight const> weights) -> HalfIntegralLP
{
    HalfIntegralLP lp;
    lp.assign2.assign(rg.size(), 0);
    if (rg.edges.empty()) { return lp; }
    auto net = double_cover(rg, weights);
    auto const flow = net.max_flow(0, 1);
    auto const source_side = net.reachable(0);
    for (std::size_t v = 0; v < rg.size(); ++v) {
        lp.assign2[v] = static_cast<std::uint8_t>(!source_side[2 + 2 * v]) +
                        static_cast<std::uint8_t>(source_side[3 + 2 * v]);
        lp.value2 += lp.assign2[v] * weights[rg.kept[v]];
    }
    // min-cut = max-flow
    if (lp.value2 != flow) { throw std::logic_error("double-cover cut does not match flow value"); }
    return lp;
}

auto double_cover_flow(ResidualGraph const& rg, std::span<Weight const> weights) -> Weight
{
    if (rg.edges.empty()) { return 0; }
    auto net = double_cover(rg, weights);
    return net.max_flow(0, 1);
}

auto lp_value2(WeightedGraph const& g, Genotype const& x) -> Weight
{
    return double_cover_flow(residual(g, x), g.weights());
}

auto brute_force_lp(ResidualGraph const& rg, std::span<Weight const> weights) -> HalfIntegralLP
{
    auto const k = rg.size();
    if (k > brute_force_lp_limit) {
        throw TooLarge("brute_force_lp supports at most 14 residual vertices, got " + std::to_string(k));
    }
    std::vector<std::uint8_t> cur(k, 0);
    HalfIntegralLP best;
    bool found = false;
    // Base-3 odometer with digit 0 most significant gives lexicographic order,
    // so the first minimum seen is the lexicographically smallest.
    while (true) {
        bool feasible = std::ranges::all_of(rg.edges, [&](Edge e) { return cur[e.first] + cur[e.second] >= 2; });
        if (feasible) {
            Weight value2 = 0;
            for (std::size_t i = 0; i < k; ++i) { value2 += cur[i] * weights[rg.kept[i]]; }
            if (!found || value2 < best.value2) {
                best.assign2 = cur;
                best.value2 = value2;
                found = true;
            }
        }
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == 2) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) { break; }
        ++cur[i - 1];
    }
    return best;
}

auto is_feasible(ResidualGraph const& rg, HalfIntegralLP const& lp) -> bool
{
    if (lp.assign2.size() != rg.size()) { return false; }
    if (std::ranges::any_of(lp.assign2, [](auto a) { return a > 2; })) { return false; }
    return std::ranges::all_of(rg.edges, [&](Edge e) { return lp.assign2[e.first] + lp.assign2[e.second] >= 2; });
}

} // namespace wvc
