#include "snmat/leavitt.hpp"

#include <algorithm>

namespace snmat {

namespace {

void check_compatible(const LeavittElement& x, const LeavittElement& y)
{
    if (!(x.chain() == y.chain()))
        fail(errc::chain_mismatch, "elements live on different chains");
    if (!(x.field() == y.field()))
        fail(errc::field_mismatch, "elements over different fields");
}

void prune_zeros(EntryMap& m)
{
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

// One lifting step must repeat the block the same number of times along rows
// and columns.
std::uint64_t step_copies(const Chain& chain, std::size_t row_level, std::size_t col_level)
{
    std::uint64_t mr = chain.radix(row_level + 1);
    std::uint64_t mc = chain.radix(col_level + 1);
    if (mr != mc)
        fail(errc::radix_mismatch, "rectangular lift needs matching radices, got " +
                                       std::to_string(mr) + " and " + std::to_string(mc));
    return mr;
}

EntryMap mul_entries(const EntryMap& a, const EntryMap& b)
{
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Scalar>>> rows_of_b;
    for (const auto& [rc, s] : b)
        rows_of_b[rc.first].emplace_back(rc.second, s);
    EntryMap out;
    for (const auto& [rc, s] : a) {
        auto it = rows_of_b.find(rc.second);
        if (it == rows_of_b.end())
            continue;
        for (const auto& [col, t] : it->second) {
            auto [entry, inserted] = out.try_emplace({rc.first, col}, s * t);
            if (!inserted)
                entry->second += s * t;
        }
    }
    prune_zeros(out);
    return out;
}

}  // namespace

RectBlock::RectBlock(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

RectBlock RectBlock::from_block(const Chain& chain, const Field& field, std::size_t row_level,
                                std::size_t col_level, EntryMap entries)
{
    if (!chain.has_level(row_level) || !chain.has_level(col_level))
        fail(errc::depth_exceeded, "block levels beyond chain depth");
    prune_zeros(entries);
    std::uint64_t rows = chain.level_size(row_level);
    std::uint64_t cols = chain.level_size(col_level);
    for (const auto& [rc, s] : entries)
        if (rc.first >= rows || rc.second >= cols)
            fail(errc::domain, "entry outside the block");

    while (row_level > 0 && col_level > 0) {
        if (entries.empty()) {
            // A zero block compresses as far as the shape allows.
            std::size_t steps = std::min(row_level, col_level);
            row_level -= steps;
            col_level -= steps;
            break;
        }
        std::uint64_t mr = chain.radix(row_level);
        if (mr != chain.radix(col_level))
            break;
        std::uint64_t rows_prev = chain.level_size(row_level - 1);
        std::uint64_t cols_prev = chain.level_size(col_level - 1);
        EntryMap first_block;
        bool repeats = true;
        for (const auto& [rc, s] : entries) {
            if (rc.first / rows_prev != rc.second / cols_prev) {
                repeats = false;
                break;
            }
            if (rc.first / rows_prev == 0)
                first_block[rc] = s;
        }
        if (!repeats || entries.size() != first_block.size() * mr)
            break;
        for (const auto& [rc, s] : entries) {
            auto it = first_block.find({rc.first % rows_prev, rc.second % cols_prev});
            if (it == first_block.end() || !(it->second == s)) {
                repeats = false;
                break;
            }
        }
        if (!repeats)
            break;
        entries = std::move(first_block);
        --row_level;
        --col_level;
    }

    RectBlock b(chain, field);
    b.row_level_ = row_level;
    b.col_level_ = col_level;
    b.entries_ = std::move(entries);
    return b;
}

EntryMap RectBlock::lift(std::size_t steps) const
{
    EntryMap out = entries_;
    std::size_t t = row_level_, s = col_level_;
    for (std::size_t step = 0; step < steps; ++step) {
        std::uint64_t copies = step_copies(chain_, t, s);
        std::uint64_t rows = chain_.level_size(t);
        std::uint64_t cols = chain_.level_size(s);
        EntryMap next;
        for (std::uint64_t j = 0; j < copies; ++j)
            for (const auto& [rc, v] : out)
                next[{rc.first + j * rows, rc.second + j * cols}] = v;
        out = std::move(next);
        ++t;
        ++s;
    }
    return out;
}

LeavittElement::LeavittElement(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

LeavittElement LeavittElement::zero(const Chain& chain, const Field& field)
{
    return LeavittElement(chain, field);
}

LeavittElement LeavittElement::identity(const Chain& chain, const Field& field)
{
    EntryMap e;
    e[{0, 0}] = Scalar::one(field);
    LeavittElement x(chain, field);
    x.insert(RectBlock::from_block(chain, field, 0, 0, std::move(e)));
    return x;
}

LeavittElement LeavittElement::gen_x(const Chain& chain, const Field& field, std::uint64_t i)
{
    if (i >= chain.radix(1))
        fail(errc::domain, "generator index " + std::to_string(i) + " out of range");
    EntryMap e;
    e[{i, 0}] = Scalar::one(field);
    LeavittElement x(chain, field);
    x.insert(RectBlock::from_block(chain, field, 1, 0, std::move(e)));
    return x;
}

LeavittElement LeavittElement::gen_y(const Chain& chain, const Field& field, std::uint64_t i)
{
    if (i >= chain.radix(1))
        fail(errc::domain, "generator index " + std::to_string(i) + " out of range");
    EntryMap e;
    e[{0, i}] = Scalar::one(field);
    LeavittElement x(chain, field);
    x.insert(RectBlock::from_block(chain, field, 0, 1, std::move(e)));
    return x;
}

LeavittElement LeavittElement::term(const Chain& chain, const Field& field, const Word& u,
                                    const Word& v, const Scalar& coef)
{
    EntryMap e;
    e[{decode(u, chain), decode(v, chain)}] = coef;
    LeavittElement x(chain, field);
    x.insert(RectBlock::from_block(chain, field, u.length(), v.length(), std::move(e)));
    return x;
}

LeavittElement LeavittElement::from_component(RectBlock block)
{
    LeavittElement x(block.chain(), block.field());
    x.insert(std::move(block));
    return x;
}

void LeavittElement::insert(RectBlock block)
{
    if (block.is_zero())
        return;
    long long d = block.degree();
    auto it = components_.find(d);
    if (it == components_.end()) {
        components_.emplace(d, std::move(block));
        return;
    }
    // Align the two canonical blocks of equal degree and add.
    const RectBlock& a = it->second;
    std::size_t row_level = std::max(a.row_level(), block.row_level());
    std::size_t steps_a = row_level - a.row_level();
    std::size_t steps_b = row_level - block.row_level();
    EntryMap sum = a.lift(steps_a);
    for (const auto& [rc, s] : block.lift(steps_b)) {
        auto [entry, inserted] = sum.try_emplace(rc, s);
        if (!inserted)
            entry->second += s;
    }
    RectBlock merged = RectBlock::from_block(chain_, field_, row_level, a.col_level() + steps_a,
                                             std::move(sum));
    components_.erase(it);
    if (!merged.is_zero())
        components_.emplace(d, std::move(merged));
}

std::set<long long> LeavittElement::degree_support() const
{
    std::set<long long> out;
    for (const auto& [d, block] : components_)
        out.insert(d);
    return out;
}

RectBlock LeavittElement::component(long long degree) const
{
    auto it = components_.find(degree);
    return it == components_.end() ? RectBlock(chain_, field_) : it->second;
}

LeavittElement LeavittElement::scaled(const Scalar& c) const
{
    LeavittElement out(chain_, field_);
    if (c.is_zero())
        return out;
    for (const auto& [d, block] : components_) {
        EntryMap scaled_entries;
        for (const auto& [rc, s] : block.entries())
            scaled_entries[rc] = s * c;
        out.insert(RectBlock::from_block(chain_, field_, block.row_level(), block.col_level(),
                                         std::move(scaled_entries)));
    }
    return out;
}

LeavittElement LeavittElement::operator-() const
{
    return scaled(-Scalar::one(field_));
}

LeavittElement operator+(const LeavittElement& x, const LeavittElement& y)
{
    check_compatible(x, y);
    LeavittElement out = x;
    for (const auto& [d, block] : y.components_)
        out.insert(block);
    return out;
}

LeavittElement operator-(const LeavittElement& x, const LeavittElement& y)
{
    return x + (-y);
}

LeavittElement operator*(const LeavittElement& x, const LeavittElement& y)
{
    check_compatible(x, y);
    LeavittElement out(x.chain_, x.field_);
    for (const auto& [d1, a] : x.components_)
        for (const auto& [d2, b] : y.components_) {
            // Lift so the inner levels meet: columns of a at the same level
            // as rows of b.
            std::size_t inner = std::max(a.col_level(), b.row_level());
            std::size_t steps_a = inner - a.col_level();
            std::size_t steps_b = inner - b.row_level();
            EntryMap product = mul_entries(a.lift(steps_a), b.lift(steps_b));
            out.insert(RectBlock::from_block(x.chain_, x.field_, a.row_level() + steps_a,
                                             b.col_level() + steps_b, std::move(product)));
        }
    return out;
}

LeavittElement pow(const LeavittElement& x, std::uint64_t e)
{
    LeavittElement acc = LeavittElement::identity(x.chain(), x.field());
    LeavittElement base = x;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CoreElement to_core(const LeavittElement& x)
{
    for (const auto& [d, block] : x.components())
        if (d != 0)
            fail(errc::domain, "element has a nonzero component in degree " + std::to_string(d));
    RectBlock block = x.component(0);
    Block b;
    b.level = block.row_level();
    b.entries = block.entries();
    return CoreElement::from_block(x.chain(), x.field(), std::move(b));
}

LeavittElement from_core(const CoreElement& y)
{
    return LeavittElement::from_component(
        RectBlock::from_block(y.chain(), y.field(), y.level(), y.level(), y.entries()));
}

std::optional<std::pair<Word, Word>> term_mul(const Chain& chain, const Word& u, const Word& u_prime,
                                              const Word& w, const Word& w_prime)
{
    if (auto v = split_tail(u_prime, w))
        return std::make_pair(concat_above(*v, u, chain), w_prime);
    if (auto v = split_tail(w, u_prime))
        return std::make_pair(u, concat_above(*v, w_prime, chain));
    return std::nullopt;
}

}  // namespace snmat
