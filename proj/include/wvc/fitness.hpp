#ifndef WVC_FITNESS_HPP
#define WVC_FITNESS_HPP

#include <cstddef>
#include <cstdint>

#include "wvc/graph.hpp"

namespace wvc {

/// f(x) = (Cost(x), LP(x)) with the LP part held as lp2 = 2*LP(x), so every
/// comparison stays in integers.
struct Fitness {
    Weight cost{0};
    Weight lp2{0};

    friend auto operator==(Fitness const&, Fitness const&) -> bool = default;

    /// Cost + 2*LP
    [[nodiscard]] constexpr auto cost_plus_2lp() const noexcept -> Weight { return cost + lp2; }
    /// 2 * (Cost + LP)
    [[nodiscard]] constexpr auto twice_cost_plus_lp() const noexcept -> Weight { return 2 * cost + lp2; }
};

constexpr auto dominates_weak(Fitness const& a, Fitness const& b) noexcept -> bool
{
    return a.cost <= b.cost && a.lp2 <= b.lp2;
}

constexpr auto dominates_strong(Fitness const& a, Fitness const& b) noexcept -> bool
{
    return dominates_weak(a, b) && a != b;
}

auto evaluate(WeightedGraph const& g, Genotype const& x) -> Fitness;

struct BoxIndex {
    std::uint64_t b1{0};
    std::uint64_t b2{0};
    friend auto operator==(BoxIndex const&, BoxIndex const&) -> bool = default;
};

/// Smallest k >= 0 with ((2n+1)/(2n))^k >= num/den, i.e. ceil(log_{1+delta}(num/den))
/// for delta = 1/(2n). A floating-point estimate seeds the search and the
/// answer is settled by exact integer comparison of
/// (2n+1)^k * den against (2n)^k * num.
auto box_coordinate(std::uint64_t num, std::uint64_t den, std::size_t n) -> std::uint64_t;

/// b1 = ceil(log_{1+delta}(1 + Cost)), b2 = ceil(log_{1+delta}(1 + lp2/2)).
auto box_index(Fitness const& fit, std::size_t n) -> BoxIndex;

/// 2k - 1 with k = 1 + ceil(log_{1+delta}(1 + n * w_max)): the most members
/// a DEMO archive can hold.
auto demo_archive_bound(std::size_t n, Weight w_max) -> std::uint64_t;

} // namespace wvc

#endif
