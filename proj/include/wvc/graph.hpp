#ifndef WVC_GRAPH_HPP
#define WVC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wvc/genotype.hpp"

namespace wvc {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an instance violates the graph invariants.
class InstanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by the text parser; carries the offending line number.
class ParseError : public InstanceError {
public:
    ParseError(std::size_t line, std::string const& what)
        : InstanceError("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

/// Immutable vertex-weighted undirected simple graph. Edges are stored
/// normalized (u < v) and sorted.
class WeightedGraph {
public:
    WeightedGraph(std::vector<Weight> weights, std::vector<Edge> edges);

    [[nodiscard]] auto n() const noexcept -> std::size_t { return weights_.size(); }
    [[nodiscard]] auto m() const noexcept -> std::size_t { return edges_.size(); }
    [[nodiscard]] auto weight(Vertex v) const noexcept -> Weight { return weights_[v]; }
    [[nodiscard]] auto weights() const noexcept -> std::span<Weight const> { return weights_; }
    [[nodiscard]] auto edges() const noexcept -> std::span<Edge const> { return edges_; }
    [[nodiscard]] auto neighbors(Vertex v) const noexcept -> std::span<Vertex const> { return adjacency_[v]; }
    [[nodiscard]] auto max_weight() const noexcept -> Weight { return max_weight_; }
    [[nodiscard]] auto total_weight() const noexcept -> Weight { return total_weight_; }

    friend auto operator==(WeightedGraph const& a, WeightedGraph const& b) -> bool
    {
        return a.weights_ == b.weights_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Weight> weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    Weight max_weight_{0};
    Weight total_weight_{0};
};

/// Validating constructor. Rejects n = 0, weights < 1, self-loops and
/// out-of-range endpoints; duplicate edges collapse.
auto build_graph(std::size_t n, std::vector<Weight> weights, std::vector<Edge> edges) -> WeightedGraph;

/// G(x): the graph left after removing the vertices selected by x together
/// with every edge they cover. Residual vertices are renumbered 0..k-1 in
/// ascending original order; `kept[i]` maps back.
struct ResidualGraph {
    std::vector<Vertex> kept;
    std::vector<Edge> edges; // local indices, normalized and sorted

    [[nodiscard]] auto size() const noexcept -> std::size_t { return kept.size(); }
};

auto residual(WeightedGraph const& g, Genotype const& x) -> ResidualGraph;

/// Cost(x): total weight of the selected vertices.
auto cost(WeightedGraph const& g, Genotype const& x) -> Weight;

auto is_cover(WeightedGraph const& g, Genotype const& x) -> bool;

/// Bits i with at least one uncovered incident edge, i.e. the non-isolated
/// vertices of G(x).
auto uncovered_incident(WeightedGraph const& g, Genotype const& x) -> std::vector<bool>;

enum class GraphKind { gnp, path, star, complete_bipartite };

auto parse_graph_kind(std::string_view name) -> GraphKind;
auto to_string(GraphKind kind) -> std::string_view;

/// Generator parameters. Which fields are read depends on the kind:
/// gnp(n, p), path(n), star(k leaves), complete_bipartite(a, b).
struct GeneratorSpec {
    GraphKind kind{GraphKind::gnp};
    std::size_t n{0};
    double p{0.5};
    std::size_t k{0};
    std::size_t a{0};
    std::size_t b{0};
    Weight w_max{1};
};

/// Deterministic for a fixed (spec, seed). Weights are uniform on [1, w_max].
auto gen_instance(GeneratorSpec const& spec, std::uint64_t seed) -> WeightedGraph;

/// Text format:
///   p wvc <n> <m>
///   v <index> <weight>     (n lines, ascending index from 0)
///   e <u> <v>              (m lines)
/// Blank lines and lines starting with '#' are ignored.
auto parse_graph(std::string_view text) -> WeightedGraph;
auto serialize_graph(WeightedGraph const& g) -> std::string;

auto read_graph_file(std::string const& path) -> WeightedGraph;
void write_graph_file(WeightedGraph const& g, std::string const& path);

} // namespace wvc

#endif
