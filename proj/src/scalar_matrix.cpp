#include "mfadams/scalar_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace mfadams {

DenseMatrix DenseMatrix::identity(int p, size_t n) {
    DenseMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(p);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("dense matrix product shape mismatch");
    DenseMatrix out(prime_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const CycScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                const CycScalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DomainError("dense matrix sum shape mismatch");
    DenseMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

DenseMatrix DenseMatrix::scaled(const CycScalar& c) const {
    DenseMatrix out = *this;
    for (auto& v : out.data_) v *= c;
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool DenseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const CycScalar& c) { return c.is_zero(); });
}

CycScalar DenseMatrix::trace() const {
    CycScalar t = CycScalar::zero(prime_);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

size_t DenseMatrix::rank() const {
    DenseMatrix m = *this;
    size_t rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pivot = row;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row) {
            for (size_t j = col; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        CycScalar inv = m.at(row, col).inverse();
        for (size_t r = row + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            CycScalar factor = m.at(r, col) * inv;
            for (size_t j = col; j < cols_; ++j) m.at(r, j) -= factor * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

// Rank of one connected component, small enough for dense elimination.
size_t dense_component_rank(int prime, const std::vector<SparseColumn>& cols,
                            const std::vector<int>& col_ids,
                            const std::unordered_map<int, int>& row_index) {
    DenseMatrix m(prime, row_index.size(), col_ids.size());
    for (size_t j = 0; j < col_ids.size(); ++j) {
        for (const auto& [row, val] : cols[static_cast<size_t>(col_ids[j])]) {
            m.at(static_cast<size_t>(row_index.at(row)), j) = val;
        }
    }
    return m.rank();
}

// Sparse elimination with min-fill-ish pivoting for larger components.
size_t sparse_component_rank(const std::vector<SparseColumn>& all_cols,
                             const std::vector<int>& col_ids) {
    std::unordered_map<int, std::map<int, CycScalar>> cols;
    std::unordered_map<int, std::unordered_set<int>> row_cols;
    for (int cid : col_ids) {
        auto& col = cols[cid];
        for (const auto& [row, val] : all_cols[static_cast<size_t>(cid)]) {
            col.emplace(row, val);
            row_cols[row].insert(cid);
        }
    }
    size_t rank = 0;
    while (!cols.empty()) {
        // Pivot column: fewest entries; pivot row within it: fewest columns.
        int best_col = -1;
        size_t best_nnz = SIZE_MAX;
        for (const auto& [cid, col] : cols) {
            if (col.empty()) continue;
            if (col.size() < best_nnz) {
                best_nnz = col.size();
                best_col = cid;
            }
        }
        if (best_col < 0) break;
        auto& pivot_col = cols[best_col];
        int pivot_row = -1;
        size_t best_row_use = SIZE_MAX;
        for (const auto& [row, val] : pivot_col) {
            size_t use = row_cols[row].size();
            if (use < best_row_use) {
                best_row_use = use;
                pivot_row = row;
            }
        }
        CycScalar pivot_val = pivot_col.at(pivot_row);
        CycScalar pivot_inv = pivot_val.inverse();
        ++rank;

        std::vector<int> touched(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
        for (int cid : touched) {
            if (cid == best_col) continue;
            auto& col = cols[cid];
            auto it = col.find(pivot_row);
            if (it == col.end()) continue;
            CycScalar factor = it->second * pivot_inv;
            for (const auto& [row, val] : pivot_col) {
                auto jt = col.find(row);
                if (jt == col.end()) {
                    CycScalar nv = -(factor * val);
                    if (!nv.is_zero()) {
                        col.emplace(row, std::move(nv));
                        row_cols[row].insert(cid);
                    }
                } else {
                    jt->second -= factor * val;
                    if (jt->second.is_zero()) {
                        col.erase(jt);
                        row_cols[row].erase(cid);
                    }
                }
            }
        }
        for (const auto& [row, val] : pivot_col) row_cols[row].erase(best_col);
        cols.erase(best_col);
        for (int cid : std::vector<int>(row_cols[pivot_row].begin(), row_cols[pivot_row].end())) {
            cols[cid].erase(pivot_row);
            row_cols[pivot_row].erase(cid);
        }
    }
    return rank;
}

constexpr size_t kDenseComponentLimit = 48;

}  // namespace

size_t sparse_rank(int prime, size_t rows, std::vector<SparseColumn> columns) {
    (void)rows;
    const size_t ncols = columns.size();
    // Union columns with the rows they touch: node c for column c, node
    // ncols + r for row r (rows indexed via a dictionary to stay compact).
    std::unordered_map<int, int> row_node;
    UnionFind uf(ncols);
    auto row_id = [&](int row) {
        auto it = row_node.find(row);
        if (it != row_node.end()) return it->second;
        int id = static_cast<int>(uf.parent.size());
        uf.parent.push_back(id);
        row_node.emplace(row, id);
        return id;
    };
    for (size_t c = 0; c < ncols; ++c) {
        for (const auto& [row, val] : columns[c]) uf.unite(static_cast<int>(c), row_id(row));
    }
    std::unordered_map<int, std::vector<int>> comp_cols;
    for (size_t c = 0; c < ncols; ++c) {
        if (columns[c].empty()) continue;
        comp_cols[uf.find(static_cast<int>(c))].push_back(static_cast<int>(c));
    }
    size_t rank = 0;
    for (auto& [root, ids] : comp_cols) {
        std::unordered_map<int, int> row_index;
        for (int cid : ids) {
            for (const auto& [row, val] : columns[static_cast<size_t>(cid)]) {
                row_index.emplace(row, static_cast<int>(row_index.size()));
            }
        }
        if (ids.size() <= kDenseComponentLimit && row_index.size() <= kDenseComponentLimit) {
            rank += dense_component_rank(prime, columns, ids, row_index);
        } else {
            rank += sparse_component_rank(columns, ids);
        }
    }
    return rank;
}

}  // namespace mfadams
