#include "snmat/gradings.hpp"

#include <sstream>

namespace snmat {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<std::uint64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
    for (std::uint64_t o : torsion_)
        if (o < 2)
            fail(errc::domain, "torsion order must be >= 2");
}

AbelianGroup AbelianGroup::parse(const std::string& text)
{
    std::size_t free_rank = 0;
    std::vector<std::uint64_t> torsion;
    std::istringstream in(text);
    std::string part;
    bool any = false;
    while (std::getline(in, part, 'x')) {
        any = true;
        auto bad = [&]() -> std::uint64_t { fail(errc::parse, "bad group literal: \"" + text + "\""); };
        auto number = [&](const std::string& s) -> std::uint64_t {
            try {
                std::size_t used = 0;
                std::uint64_t v = std::stoull(s, &used);
                if (used == s.size() && !s.empty())
                    return v;
            } catch (const std::exception&) {
            }
            return bad();
        };
        if (part == "Z")
            free_rank += 1;
        else if (part.rfind("Z^", 0) == 0)
            free_rank += number(part.substr(2));
        else if (part.rfind("Z/", 0) == 0)
            torsion.push_back(number(part.substr(2)));
        else
            bad();
    }
    if (!any)
        fail(errc::parse, "bad group literal: \"" + text + "\"");
    try {
        return AbelianGroup(free_rank, std::move(torsion));
    } catch (const error& e) {
        fail(errc::parse, std::string(e.what()) + " in \"" + text + "\"");
    }
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (free_rank_ > 0) {
        out << (free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_));
        first = false;
    }
    for (std::uint64_t o : torsion_) {
        if (!first)
            out << 'x';
        out << "Z/" << o;
        first = false;
    }
    return first ? "Z^0" : out.str();
}

GroupElement AbelianGroup::element(std::vector<long long> coords) const
{
    if (coords.size() != dims())
        fail(errc::domain, "group element needs " + std::to_string(dims()) + " coordinates");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        long long o = static_cast<long long>(torsion_[i]);
        long long& c = coords[free_rank_ + i];
        c %= o;
        if (c < 0)
            c += o;
    }
    return GroupElement{std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const
{
    std::vector<long long> coords(dims());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = a.coords[i] + b.coords[i];
    return element(std::move(coords));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const
{
    std::vector<long long> coords(dims());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = -a.coords[i];
    return element(std::move(coords));
}

std::string AbelianGroup::to_string(const GroupElement& a) const
{
    if (dims() == 1)
        return std::to_string(a.coords[0]);
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (i)
            out << ',';
        out << a.coords[i];
    }
    out << ')';
    return out.str();
}

ElementaryGrading::ElementaryGrading(Chain chain, AbelianGroup group,
                                     std::vector<std::vector<GroupElement>> h)
    : chain_(std::move(chain)), group_(std::move(group)), h_(std::move(h))
{
    if (!chain_.has_level(h_.size()))
        fail(errc::depth_exceeded, "grading deeper than the chain");
    for (std::size_t t = 0; t < h_.size(); ++t) {
        if (h_[t].size() != chain_.radix(t + 1))
            fail(errc::domain, "level " + std::to_string(t) + " needs " +
                                   std::to_string(chain_.radix(t + 1)) + " group elements");
        for (const GroupElement& g : h_[t])
            if (g.coords.size() != group_.dims())
                fail(errc::domain, "group element dimension mismatch in grading data");
    }
}

GroupElement unit_degree(const Word& u, const Word& u_prime, const ElementaryGrading& grading)
{
    if (u.length() != u_prime.length())
        fail(errc::unbalanced, "unit degree needs words of equal length");
    if (u.length() > grading.depth())
        fail(errc::depth_exceeded, "word longer than the grading data");
    const AbelianGroup& group = grading.group();
    GroupElement d = group.zero();
    for (std::size_t t = 0; t < u.length(); ++t) {
        d = group.add(d, grading.h(t, u.digit(t)));
        d = group.add(d, group.negate(grading.h(t, u_prime.digit(t))));
    }
    return d;
}

std::optional<GroupElement> homogeneous_degree(const CoreElement& x, const ElementaryGrading& grading)
{
    if (x.level() > grading.depth())
        fail(errc::depth_exceeded, "element deeper than the grading data");
    std::optional<GroupElement> degree;
    for (const auto& [rc, s] : x.entries()) {
        Word u = encode(rc.first, x.level(), x.chain());
        Word v = encode(rc.second, x.level(), x.chain());
        GroupElement d = unit_degree(u, v, grading);
        if (!degree)
            degree = d;
        else if (!(*degree == d))
            return std::nullopt;
    }
    if (!degree)
        return grading.group().zero();  // zero element is homogeneous of any degree
    return degree;
}

CoreElement component(const CoreElement& x, const ElementaryGrading& grading, const GroupElement& g)
{
    if (x.level() > grading.depth())
        fail(errc::depth_exceeded, "element deeper than the grading data");
    Block b;
    b.level = x.level();
    for (const auto& [rc, s] : x.entries()) {
        Word u = encode(rc.first, x.level(), x.chain());
        Word v = encode(rc.second, x.level(), x.chain());
        if (unit_degree(u, v, grading) == g)
            b.entries[rc] = s;
    }
    return CoreElement::from_block(x.chain(), x.field(), std::move(b));
}

std::map<GroupElement, CoreElement> decompose(const CoreElement& x, const ElementaryGrading& grading)
{
    if (x.level() > grading.depth())
        fail(errc::depth_exceeded, "element deeper than the grading data");
    std::map<GroupElement, Block> blocks;
    for (const auto& [rc, s] : x.entries()) {
        Word u = encode(rc.first, x.level(), x.chain());
        Word v = encode(rc.second, x.level(), x.chain());
        Block& b = blocks[unit_degree(u, v, grading)];
        b.level = x.level();
        b.entries[rc] = s;
    }
    std::map<GroupElement, CoreElement> out;
    for (auto& [g, b] : blocks)
        out.emplace(g, CoreElement::from_block(x.chain(), x.field(), std::move(b)));
    return out;
}

GroupElement leavitt_degree(const Word& u, const Word& v, const AbelianGroup& group,
                            const std::vector<GroupElement>& assignment)
{
    GroupElement d = group.zero();
    for (std::size_t i = 0; i < u.length(); ++i)
        d = group.add(d, assignment.at(u.digit(i)));
    for (std::size_t i = 0; i < v.length(); ++i)
        d = group.add(d, group.negate(assignment.at(v.digit(i))));
    return d;
}

std::optional<GroupElement> leavitt_homogeneous_degree(const LeavittElement& x, const AbelianGroup& group,
                                                       const std::vector<GroupElement>& assignment)
{
    std::optional<GroupElement> degree;
    for (const auto& [d0, block] : x.components())
        for (const auto& [rc, s] : block.entries()) {
            Word u = encode(rc.first, block.row_level(), x.chain());
            Word v = encode(rc.second, block.col_level(), x.chain());
            GroupElement d = leavitt_degree(u, v, group, assignment);
            if (!degree)
                degree = d;
            else if (!(*degree == d))
                return std::nullopt;
        }
    if (!degree)
        return group.zero();
    return degree;
}

LeavittElement leavitt_component(const LeavittElement& x, const AbelianGroup& group,
                                 const std::vector<GroupElement>& assignment, const GroupElement& g)
{
    LeavittElement out(x.chain(), x.field());
    for (const auto& [d0, block] : x.components()) {
        EntryMap kept;
        for (const auto& [rc, s] : block.entries()) {
            Word u = encode(rc.first, block.row_level(), x.chain());
            Word v = encode(rc.second, block.col_level(), x.chain());
            if (leavitt_degree(u, v, group, assignment) == g)
                kept[rc] = s;
        }
        if (!kept.empty())
            out = out + LeavittElement::from_component(RectBlock::from_block(
                            x.chain(), x.field(), block.row_level(), block.col_level(), std::move(kept)));
    }
    return out;
}

}  // namespace snmat
