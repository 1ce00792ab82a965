#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mfadams/cyclotomic.hpp"

namespace mfadams {

// Dense matrix over Q(zeta_p). Small sizes only (group actions, idempotents,
// basis changes); the homology engine uses the sparse representation below.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(int p, size_t rows, size_t cols)
        : prime_(p), rows_(rows), cols_(cols), data_(rows * cols, CycScalar::zero(p)) {}

    static DenseMatrix identity(int p, size_t n);

    int prime() const { return prime_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const CycScalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    CycScalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix scaled(const CycScalar& c) const;
    bool operator==(const DenseMatrix& rhs) const;
    bool is_zero() const;

    CycScalar trace() const;
    size_t rank() const;

  private:
    int prime_ = 2;
    size_t rows_ = 0, cols_ = 0;
    std::vector<CycScalar> data_;
};

// One column of a sparse matrix: sorted (row, value) pairs, values nonzero.
using SparseColumn = std::vector<std::pair<int, CycScalar>>;

// Exact rank of a sparse matrix given by columns. Splits the bipartite
// support graph into connected components first, so matrices with block
// structure (e.g. multigraded strands) cost only the sum of their blocks.
size_t sparse_rank(int prime, size_t rows, std::vector<SparseColumn> columns);

}  // namespace mfadams
