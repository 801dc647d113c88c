#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "snmat/core.hpp"
#include "snmat/leavitt.hpp"

namespace snmat {

// Element of a finitely generated abelian group, as integer coordinates;
// torsion coordinates are kept reduced by the owning group.
struct GroupElement {
    std::vector<long long> coords;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z^r × Z/o_1 × ⋯ × Z/o_k with additive notation.
class AbelianGroup {
public:
    explicit AbelianGroup(std::size_t free_rank, std::vector<std::uint64_t> torsion = {});

    static AbelianGroup integers() { return AbelianGroup(1); }
    static AbelianGroup parse(const std::string& text);  // "Z", "Z^2", "Z/3", "Z^2xZ/3"
    std::string to_string() const;

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<std::uint64_t>& torsion() const { return torsion_; }
    std::size_t dims() const { return free_rank_ + torsion_.size(); }

    GroupElement zero() const { return GroupElement{std::vector<long long>(dims(), 0)}; }
    GroupElement element(std::vector<long long> coords) const;  // canonicalizes torsion
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    std::string to_string(const GroupElement& a) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::size_t free_rank_;
    std::vector<std::uint64_t> torsion_;  // orders >= 2
};

// Elementary grading data: h[t][j] in G for level t < depth and digit
// j < m_{t+1}. A matrix unit e_{u,u'} gets degree
// sum_t h[t][u_t] - sum_t h[t][u'_t].
class ElementaryGrading {
public:
    ElementaryGrading(Chain chain, AbelianGroup group, std::vector<std::vector<GroupElement>> h);

    const Chain& chain() const { return chain_; }
    const AbelianGroup& group() const { return group_; }
    std::size_t depth() const { return h_.size(); }
    const GroupElement& h(std::size_t t, std::uint64_t j) const { return h_[t][j]; }

private:
    Chain chain_;
    AbelianGroup group_;
    std::vector<std::vector<GroupElement>> h_;
};

GroupElement unit_degree(const Word& u, const Word& u_prime, const ElementaryGrading& grading);

// The degree when every entry has the same one; nullopt otherwise.
std::optional<GroupElement> homogeneous_degree(const CoreElement& x, const ElementaryGrading& grading);
CoreElement component(const CoreElement& x, const ElementaryGrading& grading, const GroupElement& g);
std::map<GroupElement, CoreElement> decompose(const CoreElement& x, const ElementaryGrading& grading);

// Letter gradings of the Leavitt algebra: deg x_i = g_i, deg y_i = -g_i.
GroupElement leavitt_degree(const Word& u, const Word& v, const AbelianGroup& group,
                            const std::vector<GroupElement>& assignment);
std::optional<GroupElement> leavitt_homogeneous_degree(const LeavittElement& x, const AbelianGroup& group,
                                                       const std::vector<GroupElement>& assignment);
LeavittElement leavitt_component(const LeavittElement& x, const AbelianGroup& group,
                                 const std::vector<GroupElement>& assignment, const GroupElement& g);

}  // namespace snmat
