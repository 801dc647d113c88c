#include "snmat/linalg.hpp"

#include <algorithm>

namespace snmat {

DenseMatrix DenseMatrix::identity(Field field, std::size_t n)
{
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(field);
    return m;
}

bool DenseMatrix::is_zero() const
{
    return std::ranges::all_of(data_, [](const Scalar& s) { return s.is_zero(); });
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail(errc::domain, "matrix shape mismatch in addition");
    DenseMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] += b.data_[i];
    return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols_ != b.rows_)
        fail(errc::domain, "matrix shape mismatch in multiplication");
    DenseMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t rank(DenseMatrix m)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero())
                continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

DenseMatrix left_inverse(const DenseMatrix& m)
{
    // Row-reduce [m | I]; the rows that reduce m to identity give the inverse
    // on the column span.
    const Field field = m.field();
    std::size_t n = m.rows(), k = m.cols();
    DenseMatrix aug(field, n, k + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, k + i) = Scalar::one(field);
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && aug.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            continue;
        for (std::size_t j = 0; j < k + n; ++j)
            std::swap(aug.at(r, j), aug.at(pivot, j));
        Scalar inv = aug.at(r, col).inverse();
        for (std::size_t j = 0; j < k + n; ++j)
            aug.at(r, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug.at(i, col).is_zero())
                continue;
            Scalar factor = aug.at(i, col);
            for (std::size_t j = 0; j < k + n; ++j)
                aug.at(i, j) -= factor * aug.at(r, j);
        }
        ++r;
    }
    if (r != k)
        fail(errc::domain, "matrix does not have full column rank");
    DenseMatrix y(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            y.at(i, j) = aug.at(i, k + j);
    return y;
}

}  // namespace snmat
