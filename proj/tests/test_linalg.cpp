#include <doctest.h>

#include <random>

#include "mfadams/scalar_matrix.hpp"
#include "support/naive_linalg.hpp"

using namespace mfadams;
using testsupport::naive_rank;

namespace {

DenseMatrix random_dense(int p, size_t rows, size_t cols, double density, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long> val(-5, 5);
    std::uniform_int_distribution<int> zpow(0, p - 1);
    DenseMatrix m(p, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            if (coin(rng) > density) continue;
            CycScalar v = CycScalar::from_integer(p, val(rng));
            if (p > 2) v *= CycScalar::zeta_power(p, zpow(rng));
            m.at(i, j) = v;
        }
    }
    return m;
}

std::vector<SparseColumn> to_columns(const DenseMatrix& m) {
    std::vector<SparseColumn> cols(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
        for (size_t i = 0; i < m.rows(); ++i) {
            if (!m.at(i, j).is_zero()) cols[j].emplace_back(static_cast<int>(i), m.at(i, j));
        }
    }
    return cols;
}

}  // namespace

TEST_CASE("dense rank agrees with the naive oracle") {
    std::mt19937 rng(4242);
    for (int p : {2, 3}) {
        for (size_t n : {5u, 12u, 30u, 50u}) {
            DenseMatrix m = random_dense(p, n, n, 0.3, rng);
            CHECK(m.rank() == naive_rank(testsupport::from_dense(m)));
        }
    }
}

TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937 rng(1717);
    for (int p : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            DenseMatrix m = random_dense(p, 40, 55, 0.08, rng);
            CHECK(sparse_rank(p, m.rows(), to_columns(m)) == m.rank());
        }
        // Dense enough to defeat the block decomposition entirely.
        DenseMatrix big = random_dense(p, 70, 70, 0.15, rng);
        CHECK(sparse_rank(p, big.rows(), to_columns(big)) == naive_rank(testsupport::from_dense(big)));
    }
}

TEST_CASE("rank-deficient constructions") {
    std::mt19937 rng(9);
    // m = a * b with inner dimension 4 has rank at most 4
    DenseMatrix a = random_dense(2, 30, 4, 0.7, rng);
    DenseMatrix b = random_dense(2, 4, 30, 0.7, rng);
    DenseMatrix m = a * b;
    size_t r = m.rank();
    CHECK(r <= 4);
    CHECK(r == naive_rank(testsupport::from_dense(m)));
    CHECK(sparse_rank(2, m.rows(), to_columns(m)) == r);
}

TEST_CASE("dense matrix utilities") {
    DenseMatrix id = DenseMatrix::identity(3, 6);
    CHECK(id.rank() == 6);
    CHECK(id.trace() == CycScalar::from_integer(3, 6));
    CHECK((id * id) == id);
    DenseMatrix z(3, 4, 4);
    CHECK(z.is_zero());
    CHECK(z.rank() == 0);
}
