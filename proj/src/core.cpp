#include "snmat/core.hpp"

#include <algorithm>
#include <vector>

namespace snmat {

namespace {

void check_compatible(const Chain& a, const Chain& b)
{
    if (!(a == b))
        fail(errc::chain_mismatch, "elements live on different chains: " + a.to_string() + " vs " + b.to_string());
}

void check_compatible(const Field& a, const Field& b)
{
    if (!(a == b))
        fail(errc::field_mismatch, "elements over different fields: " + a.to_string() + " vs " + b.to_string());
}

void prune_zeros(EntryMap& m)
{
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

// Sparse product of coordinate maps (no shape bookkeeping; callers know the
// level geometry).
EntryMap sparse_mul(const EntryMap& a, const EntryMap& b)
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

EntryMap sparse_add(EntryMap a, const EntryMap& b)
{
    for (const auto& [rc, s] : b) {
        auto [entry, inserted] = a.try_emplace(rc, s);
        if (!inserted)
            entry->second += s;
    }
    prune_zeros(a);
    return a;
}

}  // namespace

CoreElement::CoreElement(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

CoreElement CoreElement::zero(const Chain& chain, const Field& field)
{
    return CoreElement(chain, field);
}

CoreElement CoreElement::identity(const Chain& chain, const Field& field)
{
    Block b;
    b.entries[{0, 0}] = Scalar::one(field);
    return from_block(chain, field, std::move(b));
}

CoreElement CoreElement::unit(const Chain& chain, const Field& field, const Word& u, const Word& v)
{
    if (u.length() != v.length())
        fail(errc::unbalanced, "matrix unit needs words of equal length, got |u|=" +
                                   std::to_string(u.length()) + ", |v|=" + std::to_string(v.length()));
    Block b;
    b.level = u.length();
    b.entries[{decode(u, chain), decode(v, chain)}] = Scalar::one(field);
    return from_block(chain, field, std::move(b));
}

CoreElement CoreElement::from_block(const Chain& chain, const Field& field, Block block)
{
    if (!chain.has_level(block.level))
        fail(errc::depth_exceeded, "level " + std::to_string(block.level) + " beyond chain depth");
    prune_zeros(block.entries);
    std::uint64_t size = chain.level_size(block.level);
    for (const auto& [rc, s] : block.entries)
        if (rc.first >= size || rc.second >= size)
            fail(errc::domain, "entry outside the level-" + std::to_string(block.level) + " block");

    // Greedy compression: strip diagonal repetitions while every entry lies
    // in a diagonal sub-block and all sub-blocks agree with the first.
    while (block.level > 0) {
        if (block.entries.empty()) {
            block.level = 0;
            break;
        }
        std::uint64_t m = chain.radix(block.level);
        std::uint64_t n_prev = chain.level_size(block.level - 1);
        EntryMap first_block;
        bool repeats = true;
        for (const auto& [rc, s] : block.entries) {
            if (rc.first / n_prev != rc.second / n_prev) {
                repeats = false;
                break;
            }
            if (rc.first / n_prev == 0)
                first_block[rc] = s;
        }
        if (!repeats || block.entries.size() != first_block.size() * m)
            break;
        for (const auto& [rc, s] : block.entries) {
            auto it = first_block.find({rc.first % n_prev, rc.second % n_prev});
            if (it == first_block.end() || !(it->second == s)) {
                repeats = false;
                break;
            }
        }
        if (!repeats)
            break;
        block.entries = std::move(first_block);
        --block.level;
    }

    CoreElement x(chain, field);
    x.level_ = block.level;
    x.entries_ = std::move(block.entries);
    return x;
}

Scalar CoreElement::entry(std::uint64_t row, std::uint64_t col) const
{
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

Block CoreElement::lift(std::size_t level) const
{
    if (level < level_)
        fail(errc::domain, "cannot lift to a lower level");
    std::uint64_t n_here = chain_.level_size(level_);
    std::uint64_t copies = chain_.level_size(level) / n_here;
    Block b;
    b.level = level;
    for (std::uint64_t j = 0; j < copies; ++j)
        for (const auto& [rc, s] : entries_)
            b.entries[{rc.first + j * n_here, rc.second + j * n_here}] = s;
    return b;
}

CoreElement CoreElement::scaled(const Scalar& c) const
{
    Block b;
    b.level = level_;
    for (const auto& [rc, s] : entries_)
        b.entries[rc] = s * c;
    return from_block(chain_, field_, std::move(b));
}

CoreElement operator+(const CoreElement& x, const CoreElement& y)
{
    check_compatible(x.chain_, y.chain_);
    check_compatible(x.field_, y.field_);
    std::size_t level = std::max(x.level_, y.level_);
    Block b;
    b.level = level;
    b.entries = sparse_add(x.lift(level).entries, y.lift(level).entries);
    return CoreElement::from_block(x.chain_, x.field_, std::move(b));
}

CoreElement CoreElement::operator-() const
{
    return scaled(-Scalar::one(field_));
}

CoreElement operator-(const CoreElement& x, const CoreElement& y)
{
    return x + (-y);
}

CoreElement operator*(const CoreElement& x, const CoreElement& y)
{
    check_compatible(x.chain_, y.chain_);
    check_compatible(x.field_, y.field_);
    std::size_t level = std::max(x.level_, y.level_);
    Block b;
    b.level = level;
    b.entries = sparse_mul(x.lift(level).entries, y.lift(level).entries);
    return CoreElement::from_block(x.chain_, x.field_, std::move(b));
}

CoreElement pow(const CoreElement& x, std::uint64_t e)
{
    CoreElement acc = CoreElement::identity(x.chain(), x.field());
    CoreElement base = x;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<std::pair<Word, Word>> unit_mul(const Chain& chain, const Word& u, const Word& u_prime,
                                              const Word& w, const Word& w_prime)
{
    if (u.length() != u_prime.length() || w.length() != w_prime.length())
        fail(errc::unbalanced, "unit_mul needs balanced word pairs");
    if (auto v = split_tail(u_prime, w))
        return std::make_pair(concat_above(*v, u, chain), w_prime);
    if (auto v = split_tail(w, u_prime))
        return std::make_pair(u, concat_above(*v, w_prime, chain));
    return std::nullopt;
}

Scalar normalized_trace(const CoreElement& x)
{
    Scalar tr = Scalar::zero(x.field());
    for (const auto& [rc, s] : x.entries())
        if (rc.first == rc.second)
            tr += s;
    std::uint64_t n = x.chain().level_size(x.level());
    return tr / Scalar::of(x.field(), static_cast<long long>(n));
}

DenseMatrix realize(const CoreElement& x, std::size_t blocks)
{
    if (blocks < 1)
        fail(errc::domain, "realize needs at least one block");
    std::uint64_t n = x.chain().level_size(x.level());
    DenseMatrix m(x.field(), blocks * n, blocks * n);
    for (std::size_t j = 0; j < blocks; ++j)
        for (const auto& [rc, s] : x.entries())
            m.at(rc.first + j * n, rc.second + j * n) = s;
    return m;
}

ModuleVector::ModuleVector(Chain chain, Field field) : chain_(std::move(chain)), field_(field) {}

ModuleVector ModuleVector::basis(const Chain& chain, const Field& field, const Word& w)
{
    std::map<std::uint64_t, Scalar> entries;
    entries[decode(w, chain)] = Scalar::one(field);
    return from_entries(chain, field, w.length(), std::move(entries));
}

ModuleVector ModuleVector::from_entries(const Chain& chain, const Field& field, std::size_t level,
                                        std::map<std::uint64_t, Scalar> entries)
{
    if (!chain.has_level(level))
        fail(errc::depth_exceeded, "level " + std::to_string(level) + " beyond chain depth");
    std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
    std::uint64_t size = chain.level_size(level);
    for (const auto& [i, s] : entries)
        if (i >= size)
            fail(errc::domain, "coordinate outside the level-" + std::to_string(level) + " vector");

    while (level > 0) {
        if (entries.empty()) {
            level = 0;
            break;
        }
        std::uint64_t m = chain.radix(level);
        std::uint64_t n_prev = chain.level_size(level - 1);
        std::map<std::uint64_t, Scalar> first;
        for (const auto& [i, s] : entries)
            if (i < n_prev)
                first[i] = s;
        bool repeats = entries.size() == first.size() * m;
        if (repeats) {
            for (const auto& [i, s] : entries) {
                auto it = first.find(i % n_prev);
                if (it == first.end() || !(it->second == s)) {
                    repeats = false;
                    break;
                }
            }
        }
        if (!repeats)
            break;
        entries = std::move(first);
        --level;
    }

    ModuleVector v(chain, field);
    v.level_ = level;
    v.entries_ = std::move(entries);
    return v;
}

std::map<std::uint64_t, Scalar> ModuleVector::lift(std::size_t level) const
{
    if (level < level_)
        fail(errc::domain, "cannot lift to a lower level");
    std::uint64_t n_here = chain_.level_size(level_);
    std::uint64_t copies = chain_.level_size(level) / n_here;
    std::map<std::uint64_t, Scalar> out;
    for (std::uint64_t j = 0; j < copies; ++j)
        for (const auto& [i, s] : entries_)
            out[i + j * n_here] = s;
    return out;
}

ModuleVector operator+(const ModuleVector& v, const ModuleVector& w)
{
    check_compatible(v.chain_, w.chain_);
    check_compatible(v.field_, w.field_);
    std::size_t level = std::max(v.level_, w.level_);
    auto a = v.lift(level);
    for (const auto& [i, s] : w.lift(level)) {
        auto [entry, inserted] = a.try_emplace(i, s);
        if (!inserted)
            entry->second += s;
    }
    return ModuleVector::from_entries(v.chain_, v.field_, level, std::move(a));
}

ModuleVector act_at(const CoreElement& x, const ModuleVector& v, std::size_t level)
{
    check_compatible(x.chain(), v.chain());
    check_compatible(x.field(), v.field());
    if (level < x.level() || level < v.level())
        fail(errc::domain, "action level below operand level");
    auto matrix = x.lift(level).entries;
    auto vec = v.lift(level);
    std::map<std::uint64_t, Scalar> out;
    for (const auto& [rc, s] : matrix) {
        auto it = vec.find(rc.second);
        if (it == vec.end())
            continue;
        auto [entry, inserted] = out.try_emplace(rc.first, s * it->second);
        if (!inserted)
            entry->second += s * it->second;
    }
    return ModuleVector::from_entries(x.chain(), x.field(), level, std::move(out));
}

ModuleVector act(const CoreElement& x, const ModuleVector& v)
{
    return act_at(x, v, std::max(x.level(), v.level()));
}

CoreElement transitive_witness(const ModuleVector& v, const ModuleVector& w)
{
    check_compatible(v.chain(), w.chain());
    check_compatible(v.field(), w.field());
    if (v.is_zero())
        fail(errc::domain, "no witness maps the zero vector anywhere but zero");
    std::size_t level = std::max(v.level(), w.level());
    auto source = v.lift(level);
    auto target = w.lift(level);
    // source has a nonzero coordinate j; target ⊗ e_j / source_j does the job.
    auto [j, pivot] = *source.begin();
    Scalar inv = pivot.inverse();
    Block b;
    b.level = level;
    for (const auto& [i, s] : target)
        b.entries[{i, j}] = s * inv;
    return CoreElement::from_block(v.chain(), v.field(), std::move(b));
}

MixedElement::MixedElement(Chain chain, Field field) : recurrent_(std::move(chain), field) {}

MixedElement::MixedElement(EntryMap finite, CoreElement recurrent) : recurrent_(std::move(recurrent))
{
    prune_zeros(finite);
    finite_ = std::move(finite);
}

MixedElement MixedElement::identity(const Chain& chain, const Field& field)
{
    return MixedElement({}, CoreElement::identity(chain, field));
}

Scalar MixedElement::entry(std::uint64_t row, std::uint64_t col) const
{
    Scalar s = Scalar::zero(field());
    if (auto it = finite_.find({row, col}); it != finite_.end())
        s += it->second;
    std::uint64_t n = chain().level_size(recurrent_.level());
    if (row / n == col / n)
        s += recurrent_.entry(row % n, col % n);
    return s;
}

MixedElement operator+(const MixedElement& x, const MixedElement& y)
{
    check_compatible(x.chain(), y.chain());
    check_compatible(x.field(), y.field());
    return MixedElement(sparse_add(x.finite_, y.finite_), x.recurrent_ + y.recurrent_);
}

namespace {

// Realize the recurrent element as a plain coordinate map with enough
// diagonal copies to cover indices < bound.
EntryMap realize_window(const CoreElement& r, std::uint64_t bound)
{
    EntryMap out;
    if (r.is_zero())
        return out;
    std::uint64_t n = r.chain().level_size(r.level());
    std::uint64_t copies = bound / n + 1;
    for (std::uint64_t j = 0; j < copies; ++j)
        for (const auto& [rc, s] : r.entries())
            out[{rc.first + j * n, rc.second + j * n}] = s;
    return out;
}

}  // namespace

MixedElement operator*(const MixedElement& x, const MixedElement& y)
{
    check_compatible(x.chain(), y.chain());
    check_compatible(x.field(), y.field());

    std::uint64_t x_max = 0, y_max = 0;
    for (const auto& [rc, s] : x.finite_)
        x_max = std::max({x_max, rc.first, rc.second});
    for (const auto& [rc, s] : y.finite_)
        y_max = std::max({y_max, rc.first, rc.second});

    EntryMap finite = sparse_mul(x.finite_, y.finite_);
    // finite × recurrent has columns inside the blocks met by the finite
    // support, so a window realization is exact.
    finite = sparse_add(std::move(finite), sparse_mul(x.finite_, realize_window(y.recurrent_, x_max)));
    finite = sparse_add(std::move(finite), sparse_mul(realize_window(x.recurrent_, y_max), y.finite_));
    return MixedElement(std::move(finite), x.recurrent_ * y.recurrent_);
}

}  // namespace snmat
