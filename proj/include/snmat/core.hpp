#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "snmat/chain.hpp"
#include "snmat/field.hpp"
#include "snmat/linalg.hpp"

namespace snmat {

using Coord = std::pair<std::uint64_t, std::uint64_t>;
using EntryMap = std::map<Coord, Scalar>;

// A square block at an explicit level, not necessarily canonical. Used for
// lifting and as the raw input of compression.
struct Block {
    std::size_t level = 0;
    EntryMap entries;
};

// Element of the supernatural matrix algebra over a divisor chain, stored as
// the block a of the recurrent matrix a ⊕ a ⊕ ⋯ at the minimal level where
// that block is not itself a diagonal repetition. The minimal level makes
// equality a structural comparison.
class CoreElement {
public:
    CoreElement(Chain chain, Field field);  // zero

    static CoreElement zero(const Chain& chain, const Field& field);
    static CoreElement identity(const Chain& chain, const Field& field);
    static CoreElement unit(const Chain& chain, const Field& field, const Word& u, const Word& v);
    static CoreElement from_block(const Chain& chain, const Field& field, Block block);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    std::size_t level() const { return level_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Scalar entry(std::uint64_t row, std::uint64_t col) const;

    Block lift(std::size_t level) const;
    CoreElement scaled(const Scalar& c) const;

    friend CoreElement operator+(const CoreElement& x, const CoreElement& y);
    friend CoreElement operator-(const CoreElement& x, const CoreElement& y);
    friend CoreElement operator*(const CoreElement& x, const CoreElement& y);
    CoreElement operator-() const;
    friend bool operator==(const CoreElement&, const CoreElement&) = default;

private:
    Chain chain_;
    Field field_;
    std::size_t level_ = 0;
    EntryMap entries_;  // canonical block, no stored zeros
};

CoreElement pow(const CoreElement& x, std::uint64_t e);

// Symbolic product rule for matrix units of balanced words:
// e_{u,u'} e_{w,w'} is e_{vu,w'} when w = vu', e_{u,vw'} when u' = vw,
// and zero otherwise.
std::optional<std::pair<Word, Word>> unit_mul(const Chain& chain, const Word& u, const Word& u_prime,
                                              const Word& w, const Word& w_prime);

Scalar normalized_trace(const CoreElement& x);
DenseMatrix realize(const CoreElement& x, std::size_t blocks);

// Vector in the direct limit of the F^{n_t} under the stacking embedding
// v ↦ (v; v; …; v); canonical form is the minimal level.
class ModuleVector {
public:
    ModuleVector(Chain chain, Field field);  // zero

    static ModuleVector basis(const Chain& chain, const Field& field, const Word& w);
    static ModuleVector from_entries(const Chain& chain, const Field& field, std::size_t level,
                                     std::map<std::uint64_t, Scalar> entries);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    std::size_t level() const { return level_; }
    const std::map<std::uint64_t, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    std::map<std::uint64_t, Scalar> lift(std::size_t level) const;

    friend ModuleVector operator+(const ModuleVector& v, const ModuleVector& w);
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    Chain chain_;
    Field field_;
    std::size_t level_ = 0;
    std::map<std::uint64_t, Scalar> entries_;
};

ModuleVector act(const CoreElement& x, const ModuleVector& v);
// Same action evaluated at an explicit level >= both operands' levels; the
// result does not depend on the choice (direct-limit well-definedness).
ModuleVector act_at(const CoreElement& x, const ModuleVector& v, std::size_t level);
// Some a with act(a, v) = w; v must be nonzero.
CoreElement transitive_witness(const ModuleVector& v, const ModuleVector& w);

// Element of T(F): a finitely supported matrix plus a recurrent one. The
// decomposition is unique since a nonzero recurrent matrix has infinite
// support.
class MixedElement {
public:
    MixedElement(Chain chain, Field field);  // zero
    MixedElement(EntryMap finite, CoreElement recurrent);

    static MixedElement identity(const Chain& chain, const Field& field);

    const EntryMap& finite_part() const { return finite_; }
    const CoreElement& recurrent_part() const { return recurrent_; }
    const Chain& chain() const { return recurrent_.chain(); }
    const Field& field() const { return recurrent_.field(); }
    bool is_zero() const { return finite_.empty() && recurrent_.is_zero(); }

    // Exact matrix entry of the sum (finite + recurrent) at any position.
    Scalar entry(std::uint64_t row, std::uint64_t col) const;

    friend MixedElement operator+(const MixedElement& x, const MixedElement& y);
    friend MixedElement operator*(const MixedElement& x, const MixedElement& y);
    friend bool operator==(const MixedElement&, const MixedElement&) = default;

private:
    EntryMap finite_;
    CoreElement recurrent_;
};

}  // namespace snmat
