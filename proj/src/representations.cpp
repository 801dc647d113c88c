#include "snmat/representations.hpp"

#include <algorithm>

namespace snmat {

LocallySimpleSpec::LocallySimpleSpec(Chain chain, Field field, std::vector<std::vector<Scalar>> alphas)
    : chain_(std::move(chain)), field_(field), alphas_(std::move(alphas))
{
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (alphas_[i].size() != chain_.radix(i + 1))
            fail(errc::domain, "alpha at level " + std::to_string(i + 1) + " needs " +
                                   std::to_string(chain_.radix(i + 1)) + " coordinates");
        if (std::ranges::all_of(alphas_[i], [](const Scalar& s) { return s.is_zero(); }))
            fail(errc::domain, "alpha at level " + std::to_string(i + 1) + " is zero");
    }
}

const std::vector<Scalar>& LocallySimpleSpec::alpha(std::size_t i) const
{
    if (i < 1 || i > alphas_.size())
        fail(errc::depth_exceeded, "no alpha at level " + std::to_string(i));
    return alphas_[i - 1];
}

LsVector ls_lift(const LsVector& v, const LocallySimpleSpec& spec, std::size_t level)
{
    if (level < v.level)
        fail(errc::domain, "cannot lift to a lower level");
    LsVector out = v;
    for (std::size_t i = v.level + 1; i <= level; ++i) {
        const std::vector<Scalar>& alpha = spec.alpha(i);
        std::vector<Scalar> next;
        next.reserve(out.coords.size() * alpha.size());
        for (const Scalar& a : alpha)
            for (const Scalar& c : out.coords)
                next.push_back(a * c);
        out.coords = std::move(next);
        out.level = i;
    }
    return out;
}

LsVector ls_act(const CoreElement& x, const LsVector& v, const LocallySimpleSpec& spec)
{
    if (!(x.chain() == spec.chain()))
        fail(errc::chain_mismatch, "element and spec live on different chains");
    std::size_t level = std::max(x.level(), v.level);
    LsVector lifted = ls_lift(v, spec, level);
    EntryMap matrix = x.lift(level).entries;
    LsVector out{level, std::vector<Scalar>(lifted.coords.size(), Scalar::zero(x.field()))};
    for (const auto& [rc, s] : matrix)
        out.coords[rc.first] += s * lifted.coords[rc.second];
    return out;
}

bool ls_isomorphic(const LocallySimpleSpec& a, const LocallySimpleSpec& b, std::size_t from_index)
{
    if (!(a.chain() == b.chain()))
        fail(errc::chain_mismatch, "specs live on different chains");
    if (a.depth() != b.depth())
        fail(errc::domain, "specs have different depths");
    for (std::size_t i = std::max<std::size_t>(from_index, 1); i <= a.depth(); ++i) {
        const auto& alpha = a.alpha(i);
        const auto& beta = b.alpha(i);
        for (std::size_t r = 0; r < alpha.size(); ++r)
            for (std::size_t s = r + 1; s < alpha.size(); ++s)
                if (!(alpha[r] * beta[s] == alpha[s] * beta[r]))
                    return false;
    }
    return true;
}

TensorVector::TensorVector(Field field, std::size_t p, std::size_t ell, std::size_t level)
    : field_(field), p_(p), ell_(ell), level_(level), array_(field, 1, ell)
{
    std::size_t rows = 1;
    for (std::size_t i = 0; i < level; ++i)
        rows *= p;
    array_ = DenseMatrix(field, rows, ell);
}

TensorVector::TensorVector(Field field, std::size_t p, std::size_t ell, std::size_t level,
                           DenseMatrix array)
    : field_(field), p_(p), ell_(ell), level_(level), array_(std::move(array))
{
    if (array_.cols() != ell_)
        fail(errc::domain, "array has " + std::to_string(array_.cols()) + " columns, want " +
                               std::to_string(ell_));
}

TensorVector TensorVector::from_array(Field field, std::size_t p, std::size_t ell, DenseMatrix array)
{
    return TensorVector(field, p, ell, 0, std::move(array));
}

DenseMatrix phi_band(const std::vector<Scalar>& alpha, std::size_t p)
{
    std::size_t ell = alpha.size();
    if (ell < 1 || 2 * ell - 1 > p)
        fail(errc::domain, "band map needs 2l-1 <= p, got l=" + std::to_string(ell) +
                               ", p=" + std::to_string(p));
    DenseMatrix out(alpha[0].field(), p, ell);
    for (std::size_t j = 0; j < ell; ++j)
        for (std::size_t i = 0; i < ell; ++i)
            out.at(i + j, j) = alpha[i];
    return out;
}

TensorVector lift_step(const TensorVector& x)
{
    std::size_t p = x.p(), ell = x.ell();
    if (ell < 1 || 2 * ell - 1 > p)
        fail(errc::domain, "band map needs 2l-1 <= p");
    DenseMatrix out(x.field(), x.wdim() * p, ell);
    for (std::size_t w = 0; w < x.wdim(); ++w) {
        std::vector<Scalar> row(ell, Scalar::zero(x.field()));
        for (std::size_t j = 0; j < ell; ++j)
            row[j] = x.array().at(w, j);
        DenseMatrix band = phi_band(row, p);
        for (std::size_t q = 0; q < p; ++q)
            for (std::size_t j = 0; j < ell; ++j)
                out.at(w * p + q, j) = band.at(q, j);
    }
    return TensorVector(x.field(), p, ell, x.level() + 1, std::move(out));
}

std::size_t tensor_rank(const TensorVector& x)
{
    return rank(x.array());
}

std::pair<std::uint64_t, std::uint64_t> ann_codim(const TensorVector& x)
{
    std::uint64_t r = tensor_rank(x);
    return {static_cast<std::uint64_t>(x.wdim()) * r, r};
}

DenseMatrix transitive_solve(const TensorVector& x, const TensorVector& target)
{
    if (x.wdim() != target.wdim() || x.ell() != target.ell())
        fail(errc::domain, "source and target shapes differ");
    if (tensor_rank(x) != x.ell())
        fail(errc::domain, "source must have full rank " + std::to_string(x.ell()));
    // y x = identity on the column span; a = target y maps the columns of x
    // to the columns of the target.
    DenseMatrix y = left_inverse(x.array());
    return target.array() * y;
}

bool rank_monotone_check(const DenseMatrix& t, const TensorVector& x)
{
    if (t.cols() != x.wdim())
        fail(errc::domain, "map domain does not match dim W");
    return rank(t * x.array()) <= tensor_rank(x);
}

}  // namespace snmat
