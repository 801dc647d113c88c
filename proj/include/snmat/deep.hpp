#pragma once

#include <map>
#include <utility>

#include "snmat/core.hpp"
#include "snmat/leavitt.hpp"

namespace snmat {

// Formal span of generator pairs d_{u,v} with the tail-splicing rule as the
// whole multiplication table. Unbalanced generators are admitted only on
// homogeneous chains: a spliced prefix would otherwise land on positions
// with the wrong radices.
class DeepElement {
public:
    DeepElement(Chain chain, Field field);  // zero

    static DeepElement zero(const Chain& chain, const Field& field);
    static DeepElement identity(const Chain& chain, const Field& field);  // d_{∅,∅}
    static DeepElement unit(const Chain& chain, const Field& field, const Word& u, const Word& v);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool balanced() const;

    DeepElement scaled(const Scalar& c) const;
    DeepElement operator-() const;
    friend DeepElement operator+(const DeepElement& x, const DeepElement& y);
    friend DeepElement operator-(const DeepElement& x, const DeepElement& y);
    friend DeepElement operator*(const DeepElement& x, const DeepElement& y);
    friend bool operator==(const DeepElement&, const DeepElement&) = default;

private:
    Chain chain_;
    Field field_;
    std::map<std::pair<Word, Word>, Scalar> terms_;  // no zero coefficients

    void add_term(const Word& u, const Word& v, const Scalar& c);
};

DeepElement pow(const DeepElement& x, std::uint64_t e);

// Finitely supported vector over left-infinite digit sequences ⋯000w, keyed
// by the canonical finite part (high zeros stripped).
class TailVector {
public:
    TailVector(Chain chain, Field field);  // zero

    static TailVector basis(const Chain& chain, const Field& field, const Word& w);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend TailVector operator+(const TailVector& v, const TailVector& w);
    friend bool operator==(const TailVector&, const TailVector&) = default;

private:
    Chain chain_;
    Field field_;
    std::map<Word, Scalar> terms_;  // canonical words only

    void add_term(Word w, const Scalar& c);
    friend TailVector frankenstein_act(const DeepElement& x, const TailVector& pi);
    friend TailVector act_tail(const CoreElement& x, const TailVector& pi);
};

// The chopping-and-sewing action: on a basis sequence π, ε_{u,v} π is π'u
// when π = π'v (matching v against the zero-padded left-infinite sequence)
// and zero otherwise.
TailVector frankenstein_act(const DeepElement& x, const TailVector& pi);

// The same operators attached to the matrix units of a core element; the
// entries of the canonical block act as ε_{u,v} over its level's words.
TailVector act_tail(const CoreElement& x, const TailVector& pi);

// d_{u,v} ↦ x_u y_v, extended linearly; degree-preserving and multiplicative.
LeavittElement to_leavitt(const DeepElement& x);

// d_{u,v} ↦ e_{u,v} on balanced elements; multiplicative but not injective.
CoreElement balanced_to_core(const DeepElement& x);

}  // namespace snmat
