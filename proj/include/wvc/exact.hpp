#ifndef WVC_EXACT_HPP
#define WVC_EXACT_HPP

#include <cstdint>
#include <stdexcept>

#include "wvc/graph.hpp"
#include "wvc/lp.hpp"

namespace wvc {

/// Minimum-weight vertex cover and a witness. Among optimal covers the
/// witness is the lexicographically smallest bitstring.
struct ExactResult {
    Weight opt_cost{0};
    Genotype witness;
};

/// Raised when branch-and-bound exhausts its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t exhaustive_limit = 16;

/// 2^n scan; throws TooLarge for n > 16.
auto opt_exhaustive(WeightedGraph const& g) -> ExactResult;

struct BranchBoundOptions {
    std::uint64_t node_limit{20'000'000};
};

/// Include/exclude branching on the free vertex with the largest
/// weight * residual-degree; excluding a vertex forces its neighbours in.
/// Nodes are pruned with cost(in) + ceil(LP(residual) / 2).
///
/// After the optimum is known a second pass fixes bits 0..n-1 in order,
/// preferring 0 whenever an optimal cover survives, which yields the same
/// witness as opt_exhaustive.
auto opt_branch_bound(WeightedGraph const& g, BranchBoundOptions const& options = {}) -> ExactResult;

/// Exhaustive for small n, branch-and-bound otherwise.
auto opt(WeightedGraph const& g, BranchBoundOptions const& options = {}) -> ExactResult;

} // namespace wvc

#endif
