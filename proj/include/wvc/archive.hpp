#ifndef WVC_ARCHIVE_HPP
#define WVC_ARCHIVE_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wvc/fitness.hpp"
#include "wvc/genotype.hpp"

namespace wvc {

struct Individual {
    Genotype genotype;
    Fitness fitness;
    std::optional<BoxIndex> box; // set under DEMO only
    std::size_t ones{0};
};

auto make_individual(WeightedGraph const& g, Genotype x, bool with_box) -> Individual;

enum class Discipline { semo, demo, dpbea };

auto to_string(Discipline d) -> std::string_view;

/// Population of one of the three selection schemes.
///
/// semo:  candidate rejected iff a member weakly dominates it; on acceptance
///        every member it weakly dominates is removed.
/// demo:  candidate rejected iff a member strongly dominates it, or a member
///        in the same box has Cost+2LP <= the candidate's; on acceptance every
///        member it weakly dominates or that shares its box is removed.
/// dpbea: candidate joins the members with the same number of one-bits; that
///        group is cut down to the minimiser of Cost+LP and the minimiser of
///        Cost+2LP (incumbents win ties).
class Archive {
public:
    explicit Archive(Discipline discipline) : discipline_(discipline) {}

    /// Returns true if the candidate is a member afterwards.
    auto insert(Individual candidate) -> bool;

    [[nodiscard]] auto discipline() const noexcept -> Discipline { return discipline_; }
    [[nodiscard]] auto members() const noexcept -> std::span<Individual const> { return members_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return members_.empty(); }
    [[nodiscard]] auto operator[](std::size_t i) const noexcept -> Individual const& { return members_[i]; }

private:
    auto insert_semo(Individual&& candidate) -> bool;
    auto insert_demo(Individual&& candidate) -> bool;
    auto insert_dpbea(Individual&& candidate) -> bool;

    Discipline discipline_;
    std::vector<Individual> members_;
};

} // namespace wvc

#endif
