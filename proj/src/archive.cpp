#include "wvc/archive.hpp"

#include <algorithm>
#include <stdexcept>

#include "wvc/lp.hpp"

namespace wvc {

auto make_individual(WeightedGraph const& g, Genotype x, bool with_box) -> Individual
{
    Individual ind{std::move(x), {}, std::nullopt, 0};
    ind.fitness = evaluate(g, ind.genotype);
    ind.ones = ind.genotype.count();
    if (with_box) { ind.box = box_index(ind.fitness, g.n()); }
    return ind;
}

auto to_string(Discipline d) -> std::string_view
{
    switch (d) {
    case Discipline::semo: return "semo";
    case Discipline::demo: return "demo";
    case Discipline::dpbea: return "dpbea";
    }
    return "?";
}

auto Archive::insert(Individual candidate) -> bool
{
    switch (discipline_) {
    case Discipline::semo: return insert_semo(std::move(candidate));
    case Discipline::demo: return insert_demo(std::move(candidate));
    case Discipline::dpbea: return insert_dpbea(std::move(candidate));
    }
    return false;
}

auto Archive::insert_semo(Individual&& candidate) -> bool
{
    auto const& f = candidate.fitness;
    if (std::ranges::any_of(members_, [&](auto const& y) { return dominates_weak(y.fitness, f); })) { return false; }
    std::erase_if(members_, [&](auto const& z) { return dominates_weak(f, z.fitness); });
    members_.push_back(std::move(candidate));
    return true;
}

auto Archive::insert_demo(Individual&& candidate) -> bool
{
    if (!candidate.box) { throw std::invalid_argument("DEMO archive needs individuals with a box index"); }
    auto const& f = candidate.fitness;
    auto const& b = *candidate.box;
    auto const rejects = [&](Individual const& y) {
        return dominates_strong(y.fitness, f) || (*y.box == b && y.fitness.cost_plus_2lp() <= f.cost_plus_2lp());
    };
    if (std::ranges::any_of(members_, rejects)) { return false; }
    std::erase_if(members_, [&](auto const& z) { return dominates_weak(f, z.fitness) || *z.box == b; });
    members_.push_back(std::move(candidate));
    return true;
}

auto Archive::insert_dpbea(Individual&& candidate) -> bool
{
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].ones == candidate.ones) { group.push_back(i); }
    }
    auto const cand_slot = members_.size(); // stands for the candidate
    auto const fit = [&](std::size_t i) -> Fitness const& {
        return i == cand_slot ? candidate.fitness : members_[i].fitness;
    };
    group.push_back(cand_slot);

    // First strict minimum in group order: incumbents precede the candidate.
    auto argmin = [&](auto key) {
        auto best = group.front();
        for (auto i : group) {
            if (key(fit(i)) < key(fit(best))) { best = i; }
        }
        return best;
    };
    auto const min_cost_lp = argmin([](Fitness const& x) { return x.twice_cost_plus_lp(); });
    auto const min_cost_2lp = argmin([](Fitness const& x) { return x.cost_plus_2lp(); });
    auto const kept = [&](std::size_t i) { return i == min_cost_lp || i == min_cost_2lp; };

    std::vector<Individual> next;
    next.reserve(members_.size() + 1);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].ones != candidate.ones || kept(i)) { next.push_back(std::move(members_[i])); }
    }
    bool const accepted = kept(cand_slot);
    if (accepted) { next.push_back(std::move(candidate)); }
    members_ = std::move(next);
    return accepted;
}

} // namespace wvc
