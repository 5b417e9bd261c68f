#include "wvc/mutation.hpp"

namespace wvc {

auto standard_mutation(Genotype const& x, Rng& rng) -> Genotype
{
    auto y = x;
    auto const n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.below(n) == 0) { y.flip(i); }
    }
    return y;
}

auto alternative_mutation(WeightedGraph const& g, Genotype const& x, Rng& rng) -> Genotype
{
    return rng.coin() ? focused_mutation(g, x, rng) : standard_mutation(x, rng);
}

auto focused_mutation(WeightedGraph const& g, Genotype const& x, Rng& rng) -> Genotype
{
    auto const incident = uncovered_incident(g, x);
    auto y = x;
    auto const n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (incident[i] ? rng.coin() : rng.below(n) == 0) { y.flip(i); }
    }
    return y;
}

auto random_genotype(std::size_t n, Rng& rng) -> Genotype
{
    Genotype x(n);
    for (std::size_t i = 0; i < n; ++i) { x.set(i, rng.coin()); }
    return x;
}

} // namespace wvc
