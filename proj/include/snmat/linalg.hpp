#pragma once

#include <cstddef>
#include <vector>

#include "snmat/field.hpp"

namespace snmat {

// Dense row-major matrix of exact scalars, for realizations, oracles and
// the rank computations in the representations module.
class DenseMatrix {
public:
    DenseMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
    {
    }

    static DenseMatrix identity(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Rank by fraction-free-enough Gaussian elimination (exact scalars, so plain
// elimination is exact).
std::size_t rank(DenseMatrix m);

// A left inverse of a (rows x cols) matrix of full column rank: returns the
// (cols x rows) matrix y with y * m = identity. Throws on rank deficiency.
DenseMatrix left_inverse(const DenseMatrix& m);

}  // namespace snmat
