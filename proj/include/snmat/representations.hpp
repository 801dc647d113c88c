#pragma once

#include <cstdint>
#include <vector>

#include "snmat/core.hpp"
#include "snmat/linalg.hpp"

namespace snmat {

// Chain of chosen vectors α_i ∈ F^{m_i} describing a locally simple module:
// level i embeds into level i+1 by x ↦ x ⊗ α_{i+1}, the new tensor factor
// occupying the top digit position.
class LocallySimpleSpec {
public:
    LocallySimpleSpec(Chain chain, Field field, std::vector<std::vector<Scalar>> alphas);

    const Chain& chain() const { return chain_; }
    const Field& field() const { return field_; }
    std::size_t depth() const { return alphas_.size(); }
    const std::vector<Scalar>& alpha(std::size_t i) const;  // 1-based level

private:
    Chain chain_;
    Field field_;
    std::vector<std::vector<Scalar>> alphas_;  // alphas_[i-1] has size m_i, nonzero
};

// Vector at an explicit level of a locally simple chain (no canonical
// compression: the embeddings depend on the spec).
struct LsVector {
    std::size_t level = 0;
    std::vector<Scalar> coords;  // dense, length n_level
};

LsVector ls_lift(const LsVector& v, const LocallySimpleSpec& spec, std::size_t level);
LsVector ls_act(const CoreElement& x, const LsVector& v, const LocallySimpleSpec& spec);

// Isomorphism criterion: the α_i must be pairwise linearly dependent from
// some index on; this checks dependence for every i in [from_index, depth].
bool ls_isomorphic(const LocallySimpleSpec& a, const LocallySimpleSpec& b, std::size_t from_index);

// Element of W ⊗ F^ℓ as a (dim W) × ℓ coefficient array. When the vector
// arises from the band construction, dim W = p^level.
class TensorVector {
public:
    TensorVector(Field field, std::size_t p, std::size_t ell, std::size_t level);  // zero, dim W = p^level
    TensorVector(Field field, std::size_t p, std::size_t ell, std::size_t level, DenseMatrix array);

    static TensorVector from_array(Field field, std::size_t p, std::size_t ell, DenseMatrix array);

    const Field& field() const { return field_; }
    std::size_t p() const { return p_; }
    std::size_t ell() const { return ell_; }
    std::size_t level() const { return level_; }
    std::size_t wdim() const { return array_.rows(); }
    const DenseMatrix& array() const { return array_; }
    DenseMatrix& array() { return array_; }
    bool is_zero() const { return array_.is_zero(); }

private:
    Field field_;
    std::size_t p_, ell_, level_;
    DenseMatrix array_;
};

// The band map F^ℓ → F^p ⊗ F^ℓ (requires 2ℓ-1 <= p): column j carries α
// shifted down by j, so every nonzero α maps to a rank-ℓ array.
DenseMatrix phi_band(const std::vector<Scalar>& alpha, std::size_t p);

// id ⊗ φ: replaces each row of the array by the p rows of its band image,
// the new tensor factor appended below the existing W indices.
TensorVector lift_step(const TensorVector& x);

// dim span of the columns (the ℓ W-components).
std::size_t tensor_rank(const TensorVector& x);

// (raw, normalized) codimension of the annihilator of x in End(W):
// raw = dim W · rank, normalized = rank.
std::pair<std::uint64_t, std::uint64_t> ann_codim(const TensorVector& x);

// Some a ∈ End(W) with a · x = target; x must have rank ℓ.
DenseMatrix transitive_solve(const TensorVector& x, const TensorVector& target);

// rank((T ⊗ 1)(x)) <= rank(x); exposed as an oracle.
bool rank_monotone_check(const DenseMatrix& t, const TensorVector& x);

}  // namespace snmat
