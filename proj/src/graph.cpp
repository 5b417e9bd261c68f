#include "wvc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wvc/rng.hpp"

namespace wvc {

WeightedGraph::WeightedGraph(std::vector<Weight> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)), adjacency_(weights_.size())
{
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) { std::ranges::sort(adj); }
    for (auto w : weights_) {
        max_weight_ = std::max(max_weight_, w);
        total_weight_ += w;
    }
}

auto build_graph(std::size_t n, std::vector<Weight> weights, std::vector<Edge> edges) -> WeightedGraph
{
    if (n == 0) { throw InstanceError("graph must have at least one vertex"); }
    if (weights.size() != n) {
        throw InstanceError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i] < 1) {
            throw InstanceError("weight of vertex " + std::to_string(i) + " must be a positive integer");
        }
    }
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InstanceError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
        }
        if (u == v) { throw InstanceError("self-loop at vertex " + std::to_string(u)); }
        if (u > v) { std::swap(u, v); }
    }
    std::ranges::sort(edges);
    auto dup = std::ranges::unique(edges);
    edges.erase(dup.begin(), dup.end());
    return WeightedGraph(std::move(weights), std::move(edges));
}

namespace {
void require_size(WeightedGraph const& g, Genotype const& x)
{
    if (x.size() != g.n()) {
        throw std::invalid_argument("genotype length " + std::to_string(x.size()) + " does not match n = " +
                                    std::to_string(g.n()));
    }
}
} // namespace

auto residual(WeightedGraph const& g, Genotype const& x) -> ResidualGraph
{
    require_size(g, x);
    ResidualGraph rg;
    constexpr auto absent = ~Vertex{0};
    std::vector<Vertex> local(g.n(), absent);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!x[v]) {
            local[v] = static_cast<Vertex>(rg.kept.size());
            rg.kept.push_back(v);
        }
    }
    // Original edges are sorted and the renumbering is monotone, so the
    // residual edge list comes out sorted as well.
    for (auto [u, v] : g.edges()) {
        if (local[u] != absent && local[v] != absent) { rg.edges.emplace_back(local[u], local[v]); }
    }
    return rg;
}

auto cost(WeightedGraph const& g, Genotype const& x) -> Weight
{
    require_size(g, x);
    Weight c = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (x[v]) { c += g.weight(v); }
    }
    return c;
}

auto is_cover(WeightedGraph const& g, Genotype const& x) -> bool
{
    require_size(g, x);
    return std::ranges::all_of(g.edges(), [&](Edge e) { return x[e.first] || x[e.second]; });
}

auto uncovered_incident(WeightedGraph const& g, Genotype const& x) -> std::vector<bool>
{
    require_size(g, x);
    std::vector<bool> hit(g.n(), false);
    for (auto [u, v] : g.edges()) {
        if (!x[u] && !x[v]) {
            hit[u] = true;
            hit[v] = true;
        }
    }
    return hit;
}

auto parse_graph_kind(std::string_view name) -> GraphKind
{
    if (name == "gnp") { return GraphKind::gnp; }
    if (name == "path") { return GraphKind::path; }
    if (name == "star") { return GraphKind::star; }
    if (name == "complete-bipartite") { return GraphKind::complete_bipartite; }
    throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

auto to_string(GraphKind kind) -> std::string_view
{
    switch (kind) {
    case GraphKind::gnp: return "gnp";
    case GraphKind::path: return "path";
    case GraphKind::star: return "star";
    case GraphKind::complete_bipartite: return "complete-bipartite";
    }
    return "?";
}

auto gen_instance(GeneratorSpec const& spec, std::uint64_t seed) -> WeightedGraph
{
    if (spec.w_max < 1) { throw std::invalid_argument("w_max must be at least 1"); }
    Rng rng(seed);
    std::size_t n = 0;
    std::vector<Edge> edges;
    switch (spec.kind) {
    case GraphKind::gnp:
        if (spec.n < 1) { throw std::invalid_argument("gnp needs n >= 1"); }
        if (!(spec.p >= 0.0 && spec.p <= 1.0)) { throw std::invalid_argument("gnp needs 0 <= p <= 1"); }
        n = spec.n;
        break;
    case GraphKind::path:
        if (spec.n < 1) { throw std::invalid_argument("path needs n >= 1"); }
        n = spec.n;
        for (Vertex v = 0; v + 1 < n; ++v) { edges.emplace_back(v, v + 1); }
        break;
    case GraphKind::star:
        if (spec.k < 1) { throw std::invalid_argument("star needs k >= 1 leaves"); }
        n = spec.k + 1;
        for (Vertex v = 1; v < n; ++v) { edges.emplace_back(0, v); }
        break;
    case GraphKind::complete_bipartite:
        if (spec.a < 1 || spec.b < 1) { throw std::invalid_argument("complete-bipartite needs a, b >= 1"); }
        n = spec.a + spec.b;
        for (Vertex u = 0; u < spec.a; ++u) {
            for (Vertex v = 0; v < spec.b; ++v) { edges.emplace_back(u, static_cast<Vertex>(spec.a + v)); }
        }
        break;
    }
    std::vector<Weight> weights(n);
    for (auto& w : weights) { w = 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(spec.w_max))); }
    if (spec.kind == GraphKind::gnp) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.unit() < spec.p) { edges.emplace_back(u, v); }
            }
        }
    }
    return build_graph(n, std::move(weights), std::move(edges));
}

namespace {

auto split_ws(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) { ++i; }
        auto const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') { ++i; }
        if (i > start) { out.push_back(line.substr(start, i - start)); }
    }
    return out;
}

template <typename T>
auto parse_int(std::string_view tok, std::size_t line, char const* what) -> T
{
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

auto parse_graph(std::string_view text) -> WeightedGraph
{
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Weight> weights;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto const eol = std::min(text.find('\n', pos), text.size());
        auto const line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].starts_with('#')) { continue; }
        if (tok[0] == "p") {
            if (have_header) { throw ParseError(lineno, "duplicate header"); }
            if (tok.size() != 4 || tok[1] != "wvc") { throw ParseError(lineno, "header must be 'p wvc <n> <m>'"); }
            n = parse_int<std::size_t>(tok[2], lineno, "vertex count");
            m = parse_int<std::size_t>(tok[3], lineno, "edge count");
            have_header = true;
        } else if (!have_header) {
            throw ParseError(lineno, "missing 'p wvc' header");
        } else if (tok[0] == "v") {
            if (tok.size() != 3) { throw ParseError(lineno, "vertex line must be 'v <index> <weight>'"); }
            if (!edges.empty()) { throw ParseError(lineno, "vertex line after edge lines"); }
            auto const idx = parse_int<std::size_t>(tok[1], lineno, "vertex index");
            if (idx != weights.size()) {
                throw ParseError(lineno, "expected vertex index " + std::to_string(weights.size()));
            }
            if (idx >= n) { throw ParseError(lineno, "more vertex lines than declared"); }
            auto const w = parse_int<Weight>(tok[2], lineno, "weight");
            if (w < 1) { throw ParseError(lineno, "weight must be a positive integer"); }
            weights.push_back(w);
        } else if (tok[0] == "e") {
            if (tok.size() != 3) { throw ParseError(lineno, "edge line must be 'e <u> <v>'"); }
            if (weights.size() != n) {
                throw ParseError(lineno, "expected " + std::to_string(n) + " vertex lines before edges, got " +
                                             std::to_string(weights.size()));
            }
            auto const u = parse_int<Vertex>(tok[1], lineno, "endpoint");
            auto const v = parse_int<Vertex>(tok[2], lineno, "endpoint");
            if (u >= n || v >= n) { throw ParseError(lineno, "endpoint out of range"); }
            if (u == v) { throw ParseError(lineno, "self-loop"); }
            edges.emplace_back(u, v);
            if (edges.size() > m) { throw ParseError(lineno, "more edge lines than declared"); }
        } else {
            throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) { throw ParseError(lineno, "missing 'p wvc' header"); }
    if (weights.size() != n) {
        throw ParseError(lineno, "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(weights.size()));
    }
    if (edges.size() != m) {
        throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));
    }
    return build_graph(n, std::move(weights), std::move(edges));
}

auto serialize_graph(WeightedGraph const& g) -> std::string
{
    std::ostringstream out;
    out << "p wvc " << g.n() << ' ' << g.m() << '\n';
    for (Vertex v = 0; v < g.n(); ++v) { out << "v " << v << ' ' << g.weight(v) << '\n'; }
    for (auto [u, v] : g.edges()) { out << "e " << u << ' ' << v << '\n'; }
    return out.str();
}

auto read_graph_file(std::string const& path) -> WeightedGraph
{
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw InstanceError("cannot open instance file '" + path + "'"); }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(WeightedGraph const& g, std::string const& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw std::runtime_error("cannot write '" + path + "'"); }
    out << serialize_graph(g);
}

} // namespace wvc
