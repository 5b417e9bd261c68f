// Test-only helpers: instance generators and oracles that share no code path
// with the library implementations they check.
#ifndef WVC_TESTS_SUPPORT_HPP
#define WVC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>
#include <vector>

#include "wvc/graph.hpp"

namespace wvc::testing {

inline auto make(std::vector<Weight> w, std::vector<Edge> e) -> WeightedGraph
{
    auto const n = w.size();
    return build_graph(n, std::move(w), std::move(e));
}

inline auto unit_triangle() -> WeightedGraph { return make({1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}); }
inline auto single_edge(Weight a, Weight b) -> WeightedGraph { return make({a, b}, {{0, 1}}); }
inline auto weighted_star() -> WeightedGraph { return make({2, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}); }
inline auto cycle(std::size_t n, Weight w = 1) -> WeightedGraph
{
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) { e.emplace_back(i, static_cast<Vertex>((i + 1) % n)); }
    return make(std::vector<Weight>(n, w), std::move(e));
}

/// G(n, p) with weights uniform on [1, w_max], drawn from std::mt19937_64 so
/// that test instances do not depend on the library generator.
inline auto random_graph(std::mt19937_64& gen, std::size_t n, double p, Weight w_max) -> WeightedGraph
{
    std::uniform_int_distribution<Weight> wd(1, w_max);
    std::bernoulli_distribution coin(p);
    std::vector<Weight> w(n);
    for (auto& x : w) { x = wd(gen); }
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(gen)) { e.emplace_back(u, v); }
        }
    }
    return build_graph(n, std::move(w), std::move(e));
}

inline auto random_selection(std::mt19937_64& gen, std::size_t n, double p = 0.5) -> Genotype
{
    std::bernoulli_distribution coin(p);
    Genotype x(n);
    for (std::size_t i = 0; i < n; ++i) { x.set(i, coin(gen)); }
    return x;
}

/// Every simple graph on n vertices with unit weights (edge subsets of K_n).
inline auto all_graphs(std::size_t n) -> std::vector<WeightedGraph>
{
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) { slots.emplace_back(u, v); }
    }
    std::vector<WeightedGraph> out;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask & (1U << i)) { e.push_back(slots[i]); }
        }
        out.push_back(build_graph(n, std::vector<Weight>(n, 1), std::move(e)));
    }
    return out;
}

/// Minimum-weight cover by recursion on the first uncovered edge.
inline auto opt_by_edge_branching(WeightedGraph const& g) -> Weight
{
    std::vector<bool> in(g.n(), false);
    auto rec = [&](auto&& self, Weight acc) -> Weight {
        for (auto [u, v] : g.edges()) {
            if (!in[u] && !in[v]) {
                in[u] = true;
                auto const a = self(self, acc + g.weight(u));
                in[u] = false;
                in[v] = true;
                auto const b = self(self, acc + g.weight(v));
                in[v] = false;
                return std::min(a, b);
            }
        }
        return acc;
    };
    return rec(rec, 0);
}

/// Edmonds-Karp on an adjacency matrix, for the double-cover network of G(x).
inline auto double_cover_flow_oracle(WeightedGraph const& g, Genotype const& x) -> Weight
{
    auto const n = g.n();
    auto const nodes = 2 * n + 2;
    auto const s = 2 * n;
    auto const t = 2 * n + 1;
    constexpr auto inf = std::numeric_limits<Weight>::max() / 4;
    std::vector<std::vector<Weight>> cap(nodes, std::vector<Weight>(nodes, 0));
    for (Vertex v = 0; v < n; ++v) {
        if (x[v]) { continue; }
        cap[s][v] = g.weight(v);
        cap[n + v][t] = g.weight(v);
    }
    for (auto [u, v] : g.edges()) {
        if (x[u] || x[v]) { continue; }
        cap[u][n + v] = inf;
        cap[v][n + u] = inf;
    }
    Weight flow = 0;
    while (true) {
        std::vector<std::size_t> parent(nodes, nodes);
        parent[s] = s;
        std::deque<std::size_t> q{s};
        while (!q.empty() && parent[t] == nodes) {
            auto const a = q.front();
            q.pop_front();
            for (std::size_t b = 0; b < nodes; ++b) {
                if (cap[a][b] > 0 && parent[b] == nodes) {
                    parent[b] = a;
                    q.push_back(b);
                }
            }
        }
        if (parent[t] == nodes) { return flow; }
        Weight push = inf;
        for (auto b = t; b != s; b = parent[b]) { push = std::min(push, cap[parent[b]][b]); }
        for (auto b = t; b != s; b = parent[b]) {
            cap[parent[b]][b] -= push;
            cap[b][parent[b]] += push;
        }
        flow += push;
    }
}

} // namespace wvc::testing

#endif
