#include "mfadams/tensor_power.hpp"

#include <algorithm>
#include <map>

namespace mfadams {

namespace {

struct TupleIndex {
    std::map<std::vector<int>, int> even;
    std::map<std::vector<int>, int> odd;
};

bool gen_is_odd(const LinearFactorization& base, int id) {
    return id >= static_cast<int>(base.even_rank());
}

// Signed permutation matrix of the adjacent transposition (pos, pos+1) acting
// on tensor tuples; sign (-1)^{|a||b|} when both swapped slots are odd.
void apply_transposition(const LinearFactorization& base, size_t pos,
                         const std::vector<std::vector<int>>& tuples,
                         const std::map<std::vector<int>, int>& index, DenseMatrix& out) {
    const int p = base.ring->prime;
    for (size_t s = 0; s < tuples.size(); ++s) {
        std::vector<int> t = tuples[s];
        bool a_odd = gen_is_odd(base, t[pos]);
        bool b_odd = gen_is_odd(base, t[pos + 1]);
        std::swap(t[pos], t[pos + 1]);
        auto it = index.find(t);
        if (it == index.end()) throw DomainError("internal: transposed tuple missing");
        CycScalar sign = (a_odd && b_odd) ? -CycScalar::one(p) : CycScalar::one(p);
        out.at(static_cast<size_t>(it->second), s) = sign;
    }
}

DenseMatrix cycle_action(const LinearFactorization& base, int p,
                         const std::vector<std::vector<int>>& tuples) {
    std::map<std::vector<int>, int> index;
    for (size_t s = 0; s < tuples.size(); ++s) index.emplace(tuples[s], static_cast<int>(s));
    const int prime = base.ring->prime;
    // (1 2 ... p) = (1 2)∘(2 3)∘...∘(p-1 p), rightmost applied first.
    DenseMatrix acc = DenseMatrix::identity(prime, tuples.size());
    for (int pos = p - 2; pos >= 0; --pos) {
        DenseMatrix t(prime, tuples.size(), tuples.size());
        apply_transposition(base, static_cast<size_t>(pos), tuples, index, t);
        acc = acc * t;
    }
    return acc;
}

}  // namespace

EquivariantFactorization tensor_power(const LinearFactorization& x, int p) {
    if (!is_prime(p)) throw DomainError("tensor power exponent must be prime");
    if (p != x.ring->prime)
        throw DomainError("tensor power prime " + std::to_string(p) +
                          " does not match coefficient field prime " +
                          std::to_string(x.ring->prime));

    // Iterated left-associated tensor, tracking which tuple of base
    // generators each generator of the power represents.
    LinearFactorization power = x;
    std::vector<std::vector<int>> even_tuples, odd_tuples;
    for (size_t i = 0; i < x.even_rank(); ++i) even_tuples.push_back({static_cast<int>(i)});
    for (size_t i = 0; i < x.odd_rank(); ++i)
        odd_tuples.push_back({static_cast<int>(x.even_rank() + i)});
    for (int step = 1; step < p; ++step) {
        std::vector<std::vector<int>> new_even, new_odd;
        auto extend = [&](const std::vector<std::vector<int>>& left, size_t right_count,
                          size_t right_base, std::vector<std::vector<int>>& out) {
            for (const auto& t : left) {
                for (size_t j = 0; j < right_count; ++j) {
                    std::vector<int> nt = t;
                    nt.push_back(static_cast<int>(right_base + j));
                    out.push_back(std::move(nt));
                }
            }
        };
        // Tensor basis order: even = L0⊗X0 then L1⊗X1; odd = L1⊗X0 then L0⊗X1.
        extend(even_tuples, x.even_rank(), 0, new_even);
        extend(odd_tuples, x.odd_rank(), x.even_rank(), new_even);
        extend(odd_tuples, x.even_rank(), 0, new_odd);
        extend(even_tuples, x.odd_rank(), x.even_rank(), new_odd);
        power = tensor_product(power, x);
        even_tuples = std::move(new_even);
        odd_tuples = std::move(new_odd);
    }
    if (even_tuples.size() != power.even_rank() || odd_tuples.size() != power.odd_rank())
        throw DomainError("internal: tensor power bookkeeping out of sync");

    EquivariantFactorization out;
    out.sigma_even = cycle_action(x, p, even_tuples);
    out.sigma_odd = cycle_action(x, p, odd_tuples);
    out.underlying = std::move(power);
    out.prime = p;
    out.even_tuples = std::move(even_tuples);
    out.odd_tuples = std::move(odd_tuples);
    return out;
}

namespace {

DenseMatrix cyclic_idempotent(const DenseMatrix& sigma, int p, int k) {
    const size_t n = sigma.rows();
    DenseMatrix acc(p, n, n);
    DenseMatrix power = DenseMatrix::identity(p, n);
    CycScalar inv_p = CycScalar::from_integer(p, p).inverse();
    for (int j = 0; j < p; ++j) {
        CycScalar coeff = CycScalar::zeta_power(p, -static_cast<long>(k) * j) * inv_p;
        acc = acc + power.scaled(coeff);
        if (j + 1 < p) power = power * sigma;
    }
    return acc;
}

// Pivot columns of an idempotent, computed within each generator-degree class
// (the idempotent is block diagonal by degree), together with the left
// inverse of the selected column matrix. Column order follows the original
// basis order.
struct EigenBasis {
    std::vector<int> pivots;       // old generator indices, ascending
    DenseMatrix columns;           // old_rank x new_rank, restriction of e
    DenseMatrix left_inverse;      // new_rank x old_rank, L * columns = I
};

EigenBasis eigen_basis(const DenseMatrix& e, const FreeGradedModule& mod, int p) {
    const size_t n = e.rows();
    std::map<long, std::vector<size_t>> degree_classes;
    for (size_t i = 0; i < n; ++i) degree_classes[mod.degree_of(i)].push_back(i);
    // The projector must preserve generator degrees; anything else signals a
    // broken group action.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!e.at(i, j).is_zero() && mod.degree_of(i) != mod.degree_of(j))
                throw DomainError("internal: cyclic projector mixes generator degrees");

    EigenBasis out;
    std::vector<std::vector<CycScalar>> lrows;  // rows of L in old coordinates
    for (const auto& [deg, ids] : degree_classes) {
        // Row-reduce the degree block of e to find its pivot columns.
        const size_t m = ids.size();
        DenseMatrix block(p, m, m);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) block.at(r, c) = e.at(ids[r], ids[c]);
        // Track the transform: reduce [block | I].
        DenseMatrix work = block;
        DenseMatrix trans = DenseMatrix::identity(p, m);
        size_t row = 0;
        std::vector<size_t> pivot_cols;
        std::vector<size_t> pivot_rows;
        for (size_t col = 0; col < m && row < m; ++col) {
            size_t pr = row;
            while (pr < m && work.at(pr, col).is_zero()) ++pr;
            if (pr == m) continue;
            if (pr != row) {
                for (size_t j = 0; j < m; ++j) {
                    std::swap(work.at(pr, j), work.at(row, j));
                    std::swap(trans.at(pr, j), trans.at(row, j));
                }
            }
            CycScalar inv = work.at(row, col).inverse();
            for (size_t j = 0; j < m; ++j) {
                work.at(row, j) *= inv;
                trans.at(row, j) *= inv;
            }
            for (size_t r = 0; r < m; ++r) {
                if (r == row) continue;
                CycScalar factor = work.at(r, col);
                if (factor.is_zero()) continue;
                for (size_t j = 0; j < m; ++j) {
                    work.at(r, j) -= factor * work.at(row, j);
                    trans.at(r, j) -= factor * trans.at(row, j);
                }
            }
            pivot_cols.push_back(col);
            pivot_rows.push_back(row);
            ++row;
        }
        // After full reduction, work = rref(block); row `pivot_rows[t]` of
        // trans expresses the t-th new coordinate: trans * block = rref, and
        // rref restricted to pivot columns is the identity.
        for (size_t t = 0; t < pivot_cols.size(); ++t) {
            out.pivots.push_back(static_cast<int>(ids[pivot_cols[t]]));
            std::vector<CycScalar> lrow(n, CycScalar::zero(p));
            for (size_t j = 0; j < m; ++j) lrow[ids[j]] = trans.at(pivot_rows[t], j);
            lrows.push_back(std::move(lrow));
        }
    }
    // Re-sort the new basis by original column index for a deterministic,
    // basis-order-respecting layout.
    std::vector<size_t> order(out.pivots.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.pivots[a] < out.pivots[b]; });
    std::vector<int> pivots_sorted;
    DenseMatrix columns(p, n, out.pivots.size());
    DenseMatrix left(p, out.pivots.size(), n);
    for (size_t t = 0; t < order.size(); ++t) {
        int piv = out.pivots[order[t]];
        pivots_sorted.push_back(piv);
        for (size_t r = 0; r < n; ++r) {
            columns.at(r, t) = e.at(r, static_cast<size_t>(piv));
            left.at(t, r) = lrows[order[t]][r];
        }
    }
    out.pivots = std::move(pivots_sorted);
    out.columns = std::move(columns);
    out.left_inverse = std::move(left);
    return out;
}

// Polynomial-matrix product with scalar matrices on either side: L * M * C.
GradedMap conjugate(const GradedMap& m, const EigenBasis& tgt, const EigenBasis& src,
                    const FreeGradedModule& new_src, const FreeGradedModule& new_tgt) {
    const RingPtr& ring = m.ring();
    // First M * C (columns of C are scalar combinations of old source gens).
    const size_t old_rows = m.rows();
    const size_t new_cols = src.columns.cols();
    std::vector<GradedPoly> mc(old_rows * new_cols, GradedPoly(ring));
    for (size_t i = 0; i < old_rows; ++i) {
        for (size_t k = 0; k < m.cols(); ++k) {
            const GradedPoly& entry = m.at(i, k);
            if (entry.is_zero()) continue;
            for (size_t j = 0; j < new_cols; ++j) {
                const CycScalar& c = src.columns.at(k, j);
                if (c.is_zero()) continue;
                mc[i * new_cols + j] += entry.scaled(c);
            }
        }
    }
    GradedMap out(ring, new_src, new_tgt, m.shift());
    for (size_t t = 0; t < tgt.left_inverse.rows(); ++t) {
        for (size_t j = 0; j < new_cols; ++j) {
            GradedPoly acc(ring);
            for (size_t r = 0; r < old_rows; ++r) {
                const CycScalar& c = tgt.left_inverse.at(t, r);
                if (c.is_zero()) continue;
                const GradedPoly& v = mc[r * new_cols + j];
                if (v.is_zero()) continue;
                acc += v.scaled(c);
            }
            out.set(t, j, std::move(acc));
        }
    }
    return out;
}

}  // namespace

LinearFactorization eigenspace(const EquivariantFactorization& e, int k) {
    const int p = e.prime;
    if (k < 0 || k >= p) throw DomainError("eigenvalue index out of range");
    const LinearFactorization& u = e.underlying;

    DenseMatrix proj_even = cyclic_idempotent(e.sigma_even, p, k);
    DenseMatrix proj_odd = cyclic_idempotent(e.sigma_odd, p, k);
    if (!(proj_even * proj_even == proj_even) || !(proj_odd * proj_odd == proj_odd))
        throw DomainError("internal: cyclic projector is not idempotent (action bug)");

    EigenBasis even_basis = eigen_basis(proj_even, u.even, p);
    EigenBasis odd_basis = eigen_basis(proj_odd, u.odd, p);

    FreeGradedModule even, odd;
    for (int piv : even_basis.pivots)
        even.generator_degrees.push_back(u.even.degree_of(static_cast<size_t>(piv)));
    for (int piv : odd_basis.pivots)
        odd.generator_degrees.push_back(u.odd.degree_of(static_cast<size_t>(piv)));

    GradedMap alpha = conjugate(u.alpha, even_basis, odd_basis, odd, even);
    GradedMap beta = conjugate(u.beta, odd_basis, even_basis, even, odd);
    return make_factorization(u.ring, u.potential, std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

LinearFactorization tensor_power_sector(const LinearFactorization& x, int p, int k) {
    EquivariantFactorization e = tensor_power(x, p);
    LinearFactorization eig = eigenspace(e, k);
    CycScalar inv_p = CycScalar::from_integer(p, p).inverse();
    return twist(eig, inv_p);
}

}  // namespace mfadams
