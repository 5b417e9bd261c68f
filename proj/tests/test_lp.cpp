#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"
#include "wvc/exact.hpp"
#include "wvc/lp.hpp"

using namespace wvc;
using wvc::testing::make;

namespace {
auto full_residual(WeightedGraph const& g) { return residual(g, Genotype(g.n())); }
} // namespace

TEST_CASE("solve_lp on small instances")
{
    auto edge = wvc::testing::single_edge(1, 5);
    auto lp = solve_lp(full_residual(edge), edge.weights());
    CHECK(lp.value2 == 2);
    CHECK(lp.assign2 == std::vector<std::uint8_t>{2, 0});

    auto tri = wvc::testing::unit_triangle();
    lp = solve_lp(full_residual(tri), tri.weights());
    CHECK(lp.value2 == 3);
    CHECK(lp.assign2 == std::vector<std::uint8_t>{1, 1, 1});

    auto edgeless = make({4, 4, 4}, {});
    lp = solve_lp(full_residual(edgeless), edgeless.weights());
    CHECK(lp.value2 == 0);
    CHECK(lp.assign2 == std::vector<std::uint8_t>{0, 0, 0});

    auto star = wvc::testing::weighted_star();
    lp = solve_lp(full_residual(star), star.weights());
    CHECK(lp.value2 == 4);
    CHECK(lp.assign2[0] == 2);
}

TEST_CASE("isolated vertices get zero")
{
    auto g = make({3, 1, 1, 7}, {{1, 2}});
    auto lp = solve_lp(full_residual(g), g.weights());
    CHECK(lp.assign2[0] == 0);
    CHECK(lp.assign2[3] == 0);
    CHECK(lp.value2 == 2);
}

TEST_CASE("lp_value2")
{
    auto tri = wvc::testing::unit_triangle();
    CHECK(lp_value2(tri, Genotype(3)) == 3);
    CHECK(lp_value2(tri, Genotype(3, true)) == 0);
    CHECK(lp_value2(wvc::testing::single_edge(1, 1), Genotype::from_string("10")) == 0);
    // residual vertex weights are looked up by original index
    auto g = make({9, 1, 4}, {{0, 1}, {1, 2}});
    CHECK(lp_value2(g, Genotype::from_string("100")) == 2);
    CHECK(lp_value2(g, Genotype::from_string("010")) == 0);
}

TEST_CASE("brute_force_lp")
{
    auto edge = wvc::testing::single_edge(1, 1);
    CHECK(brute_force_lp(full_residual(edge), edge.weights()).value2 == 2);

    auto c4 = wvc::testing::cycle(4);
    auto bf = brute_force_lp(full_residual(c4), c4.weights());
    CHECK(bf.value2 == 4);
    // lexicographically smallest optimum of the 4-cycle
    CHECK(bf.assign2 == std::vector<std::uint8_t>{0, 2, 0, 2});

    auto edgeless = make({1, 2}, {});
    CHECK(brute_force_lp(full_residual(edgeless), edgeless.weights()).value2 == 0);

    auto big = wvc::testing::cycle(15);
    CHECK_THROWS_AS(brute_force_lp(full_residual(big), big.weights()), TooLarge);
}

TEST_CASE("max-flow matches brute force and an independent flow oracle")
{
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto const n = 1 + gen() % 9;
        auto g = wvc::testing::random_graph(gen, n, trial % 2 ? 0.3 : 0.6, trial % 3 ? 8 : 1);
        auto x = wvc::testing::random_selection(gen, n, 0.25);
        auto rg = residual(g, x);
        auto lp = solve_lp(rg, g.weights());
        CHECK(is_feasible(rg, lp));
        CHECK(lp.value2 == brute_force_lp(rg, g.weights()).value2);
        CHECK(lp.value2 == double_cover_flow(rg, g.weights()));
        CHECK(lp.value2 == wvc::testing::double_cover_flow_oracle(g, x));
        Weight sum = 0;
        for (std::size_t i = 0; i < rg.size(); ++i) { sum += lp.assign2[i] * g.weight(rg.kept[i]); }
        CHECK(sum == lp.value2);
    }
}

TEST_CASE("solve_lp is deterministic")
{
    std::mt19937_64 gen(5);
    auto g = wvc::testing::random_graph(gen, 12, 0.4, 10);
    auto rg = full_residual(g);
    auto a = solve_lp(rg, g.weights());
    auto b = solve_lp(rg, g.weights());
    CHECK(a.assign2 == b.assign2);
    CHECK(a.value2 == b.value2);
}

TEST_CASE("LP(x) <= LP(0^n) <= OPT")
{
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto const n = 2 + gen() % 9;
        auto g = wvc::testing::random_graph(gen, n, 0.5, 6);
        auto const opt = wvc::testing::opt_by_edge_branching(g);
        auto const root = lp_value2(g, Genotype(n));
        CHECK(root <= 2 * opt);
        for (int s = 0; s < 20; ++s) { CHECK(lp_value2(g, wvc::testing::random_selection(gen, n)) <= root); }
    }
}

TEST_CASE("adding a vertex with y >= 1/2 lowers LP by at least y * w")
{
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto const n = 2 + gen() % 10;
        auto g = wvc::testing::random_graph(gen, n, 0.5, 9);
        auto x = wvc::testing::random_selection(gen, n, 0.3);
        auto rg = residual(g, x);
        auto lp = solve_lp(rg, g.weights());
        for (std::size_t i = 0; i < rg.size(); ++i) {
            if (lp.assign2[i] == 0) { continue; }
            auto const v = rg.kept[i];
            auto y = x;
            y.set(v, true);
            CHECK(lp_value2(g, y) <= lp.value2 - lp.assign2[i] * g.weight(v));
            CHECK(lp_value2(g, y) <= lp.value2 - g.weight(v));
        }
    }
}

TEST_CASE("odd cycles have the all-halves optimum")
{
    for (std::size_t n : {3U, 5U, 7U, 9U}) {
        auto c = wvc::testing::cycle(n, 3);
        auto lp = solve_lp(full_residual(c), c.weights());
        CHECK(lp.value2 == static_cast<Weight>(3 * n));
        CHECK(std::ranges::all_of(lp.assign2, [](auto a) { return a == 1; }));
    }
}
