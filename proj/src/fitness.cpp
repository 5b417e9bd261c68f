#include "wvc/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "wvc/lp.hpp"

namespace wvc {

auto evaluate(WeightedGraph const& g, Genotype const& x) -> Fitness
{
    return {cost(g, x), lp_value2(g, x)};
}

namespace {

using boost::multiprecision::cpp_int;

// (2n+1)^k * den >= (2n)^k * num
auto reaches(std::uint64_t k, std::uint64_t num, std::uint64_t den, std::size_t n) -> bool
{
    auto const twice_n = static_cast<std::uint64_t>(2 * n);
    cpp_int lhs = boost::multiprecision::pow(cpp_int(twice_n + 1), static_cast<unsigned>(k)) * den;
    cpp_int rhs = boost::multiprecision::pow(cpp_int(twice_n), static_cast<unsigned>(k)) * num;
    return lhs >= rhs;
}

} // namespace

auto box_coordinate(std::uint64_t num, std::uint64_t den, std::size_t n) -> std::uint64_t
{
    if (n == 0) { throw std::invalid_argument("box_coordinate needs n >= 1"); }
    if (den == 0) { throw std::invalid_argument("box_coordinate needs den >= 1"); }
    if (num <= den) { return 0; }
    auto const guess = std::ceil((std::log(static_cast<double>(num)) - std::log(static_cast<double>(den))) /
                                 std::log1p(1.0 / (2.0 * static_cast<double>(n))));
    auto k = static_cast<std::uint64_t>(std::max(0.0, guess - 2.0));
    // Normally the window [guess-2, guess+2] contains the answer; the loops
    // below still terminate at the exact value if it does not.
    if (reaches(k, num, den, n)) {
        while (k > 0 && reaches(k - 1, num, den, n)) { --k; }
        return k;
    }
    while (!reaches(k, num, den, n)) { ++k; }
    return k;
}

auto box_index(Fitness const& fit, std::size_t n) -> BoxIndex
{
    if (fit.cost < 0 || fit.lp2 < 0) { throw std::invalid_argument("fitness components must be non-negative"); }
    return {box_coordinate(1 + static_cast<std::uint64_t>(fit.cost), 1, n),
            box_coordinate(2 + static_cast<std::uint64_t>(fit.lp2), 2, n)};
}

auto demo_archive_bound(std::size_t n, Weight w_max) -> std::uint64_t
{
    auto const k = 1 + box_coordinate(1 + static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(w_max), 1, n);
    return 2 * k - 1;
}

} // namespace wvc
