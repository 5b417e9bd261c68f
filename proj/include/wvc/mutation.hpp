#ifndef WVC_MUTATION_HPP
#define WVC_MUTATION_HPP

#include "wvc/genotype.hpp"
#include "wvc/graph.hpp"
#include "wvc/rng.hpp"

namespace wvc {

/// Flips each bit independently with probability 1/n.
auto standard_mutation(Genotype const& x, Rng& rng) -> Genotype;

/// With probability 1/2 behaves as standard_mutation. Otherwise every vertex
/// touching an uncovered edge of G(x) flips with probability 1/2 and every
/// other bit with probability 1/n.
auto alternative_mutation(WeightedGraph const& g, Genotype const& x, Rng& rng) -> Genotype;

/// The b = 1 branch of alternative_mutation on its own.
auto focused_mutation(WeightedGraph const& g, Genotype const& x, Rng& rng) -> Genotype;

/// Uniform sample from {0,1}^n.
auto random_genotype(std::size_t n, Rng& rng) -> Genotype;

} // namespace wvc

#endif
