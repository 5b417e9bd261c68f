#ifndef WVC_LP_HPP
#define WVC_LP_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wvc/graph.hpp"

namespace wvc {

/// Optimal fractional vertex cover of a residual graph in half-units:
/// assign2[i] = 2*y_i in {0,1,2} for residual vertex i, value2 = 2*LP.
struct HalfIntegralLP {
    std::vector<std::uint8_t> assign2;
    Weight value2{0};
};

/// Exact LP optimum via the bipartite double cover: s -> v_L (cap w(v)),
/// v_R -> t (cap w(v)), u_L -> v_R and v_L -> u_R (unbounded) per edge.
/// The minimum cut read off as the set reachable from s after max-flow gives
/// assign2[v] = [v_L not reachable] + [v_R reachable].
///
/// `weights` is indexed by original vertex id (rg.kept maps local -> original).
auto solve_lp(ResidualGraph const& rg, std::span<Weight const> weights) -> HalfIntegralLP;

/// 2 * LP(x) for G(x).
auto lp_value2(WeightedGraph const& g, Genotype const& x) -> Weight;

/// Max-flow value of the double-cover network of rg, without cut extraction.
auto double_cover_flow(ResidualGraph const& rg, std::span<Weight const> weights) -> Weight;

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t brute_force_lp_limit = 14;

/// Exhaustive minimum over the half-integral grid {0, 1/2, 1}^k. Ties go to
/// the lexicographically smallest assign2. Throws TooLarge above 14 vertices.
auto brute_force_lp(ResidualGraph const& rg, std::span<Weight const> weights) -> HalfIntegralLP;

/// True iff every residual edge has assign2[u] + assign2[v] >= 2 and every
/// entry is in {0,1,2}.
auto is_feasible(ResidualGraph const& rg, HalfIntegralLP const& lp) -> bool;

} // namespace wvc

#endif
