#pragma once

#include <map>
#include <set>

#include "snmat/core.hpp"

namespace snmat {

// Rectangular recurrent block: the n_t × n_s block a of a ⊕ a ⊕ ⋯ at the
// minimal (t, s). Lifting repeats the block diagonally, moving both levels
// up by one; this needs the two radices involved to agree, which is
// automatic on homogeneous chains.
class RectBlock {
public:
    RectBlock(Chain chain, Field field);  // zero at (0, 0)

    static RectBlock from_block(const Chain& chain, const Field& field, std::size_t row_level,
                                std::size_t col_level, EntryMap entries);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    std::size_t row_level() const { return row_level_; }
    std::size_t col_level() const { return col_level_; }
    long long degree() const { return static_cast<long long>(row_level_) - static_cast<long long>(col_level_); }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    // Raw block with both levels raised by `steps`.
    EntryMap lift(std::size_t steps) const;

    friend bool operator==(const RectBlock&, const RectBlock&) = default;

private:
    Chain chain_;
    Field field_;
    std::size_t row_level_ = 0, col_level_ = 0;
    EntryMap entries_;
};

// Element of the Leavitt algebra realized as rectangular recurrent
// matrices, stored by standard degree (row level minus column level).
class LeavittElement {
public:
    LeavittElement(Chain chain, Field field);  // zero

    static LeavittElement zero(const Chain& chain, const Field& field);
    static LeavittElement identity(const Chain& chain, const Field& field);
    static LeavittElement gen_x(const Chain& chain, const Field& field, std::uint64_t i);
    static LeavittElement gen_y(const Chain& chain, const Field& field, std::uint64_t i);
    // x_u y_v scaled: a single unit in the (|u|, |v|) block.
    static LeavittElement term(const Chain& chain, const Field& field, const Word& u, const Word& v,
                               const Scalar& coef);
    static LeavittElement from_component(RectBlock block);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    const std::map<long long, RectBlock>& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }
    std::set<long long> degree_support() const;
    RectBlock component(long long degree) const;  // zero block if absent

    LeavittElement scaled(const Scalar& c) const;
    LeavittElement operator-() const;
    friend LeavittElement operator+(const LeavittElement& x, const LeavittElement& y);
    friend LeavittElement operator-(const LeavittElement& x, const LeavittElement& y);
    friend LeavittElement operator*(const LeavittElement& x, const LeavittElement& y);
    friend bool operator==(const LeavittElement&, const LeavittElement&) = default;

private:
    Chain chain_;
    Field field_;
    std::map<long long, RectBlock> components_;  // no zero components

    void insert(RectBlock block);
};

LeavittElement pow(const LeavittElement& x, std::uint64_t e);

// Degree-zero part of the Leavitt algebra is the supernatural matrix
// algebra; these translate between the two representations.
CoreElement to_core(const LeavittElement& x);
LeavittElement from_core(const CoreElement& y);

// Symbolic product rule x_u y_{u'} · x_w y_{w'}, without the balanced-length
// restriction of unit_mul.
std::optional<std::pair<Word, Word>> term_mul(const Chain& chain, const Word& u, const Word& u_prime,
                                              const Word& w, const Word& w_prime);

}  // namespace snmat
