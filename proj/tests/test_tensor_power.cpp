#include <doctest.h>

#include <bit>

#include "mfadams/catalog.hpp"
#include "mfadams/homology.hpp"
#include "mfadams/tensor_power.hpp"

using namespace mfadams;

namespace {

bool commutes_with_differential(const EquivariantFactorization& e) {
    const LinearFactorization& u = e.underlying;
    // sigma_even * alpha == alpha * sigma_odd entrywise (and the beta version)
    auto check = [&](const GradedMap& m, const DenseMatrix& s_tgt, const DenseMatrix& s_src) {
        for (size_t i = 0; i < m.rows(); ++i) {
            for (size_t j = 0; j < m.cols(); ++j) {
                GradedPoly lhs(u.ring), rhs(u.ring);
                for (size_t k = 0; k < m.rows(); ++k) {
                    if (!s_tgt.at(i, k).is_zero()) lhs += m.at(k, j).scaled(s_tgt.at(i, k));
                }
                for (size_t k = 0; k < m.cols(); ++k) {
                    if (!s_src.at(k, j).is_zero()) rhs += m.at(i, k).scaled(s_src.at(k, j));
                }
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    return check(u.alpha, e.sigma_even, e.sigma_odd) && check(u.beta, e.sigma_odd, e.sigma_even);
}

long trace_formula_rank(const EquivariantFactorization& e, int k) {
    // (1/p) sum_j zeta^{-kj} tr(sigma^j) over both parities
    const int p = e.prime;
    CycScalar total = CycScalar::zero(p);
    DenseMatrix pow_even = DenseMatrix::identity(p, e.sigma_even.rows());
    DenseMatrix pow_odd = DenseMatrix::identity(p, e.sigma_odd.rows());
    for (int j = 0; j < p; ++j) {
        CycScalar coeff = CycScalar::zeta_power(p, -static_cast<long>(k) * j);
        total += coeff * (pow_even.trace() + pow_odd.trace());
        pow_even = pow_even * e.sigma_even;
        pow_odd = pow_odd * e.sigma_odd;
    }
    total = total * CycScalar::from_integer(p, p).inverse();
    return total.to_integer();
}

}  // namespace

TEST_CASE("square of the node: ranks and fixed signs") {
    LinearFactorization node = catalog_object("node", 2);
    EquivariantFactorization t2 = tensor_power(node, 2);
    CHECK(t2.underlying.even_rank() == 2);
    CHECK(t2.underlying.odd_rank() == 2);
    CHECK(t2.underlying.potential == GradedPoly::parse(node.ring, "2*x*y"));

    // Signs from the transposition rule (-1)^{|a||b|}: the even basis is
    // (e0 (x) e0, e1 (x) e1), fixed with signs +1 and -1, so the trace is 0.
    CHECK(t2.sigma_even.at(0, 0) == CycScalar::one(2));
    CHECK(t2.sigma_even.at(1, 1) == -CycScalar::one(2));
    CHECK(t2.sigma_even.trace().is_zero());
    // The odd basis swaps without signs.
    CHECK(t2.sigma_odd.at(0, 0).is_zero());
    CHECK(t2.sigma_odd.at(0, 1) == CycScalar::one(2));
    CHECK(t2.sigma_odd.at(1, 0) == CycScalar::one(2));
}

TEST_CASE("sigma is a p-th root of the identity and a chain map") {
    for (int p : {2, 3}) {
        for (const char* name : {"node", "K1"}) {
            LinearFactorization x = catalog_object(name, p);
            EquivariantFactorization e = tensor_power(x, p);
            DenseMatrix acc_even = DenseMatrix::identity(p, e.sigma_even.rows());
            DenseMatrix acc_odd = DenseMatrix::identity(p, e.sigma_odd.rows());
            for (int j = 0; j < p; ++j) {
                acc_even = acc_even * e.sigma_even;
                acc_odd = acc_odd * e.sigma_odd;
            }
            CHECK(acc_even == DenseMatrix::identity(p, e.sigma_even.rows()));
            CHECK(acc_odd == DenseMatrix::identity(p, e.sigma_odd.rows()));
            CHECK(commutes_with_differential(e));
        }
    }
    // a rank-2 object as well
    EquivariantFactorization e2 = tensor_power(catalog_object("K2", 2), 2);
    CHECK(commutes_with_differential(e2));
}

TEST_CASE("sigma preserves generator degrees") {
    EquivariantFactorization e = tensor_power(catalog_object("node", 2), 2);
    auto check_degrees = [](const DenseMatrix& s, const FreeGradedModule& mod) {
        for (size_t i = 0; i < s.rows(); ++i)
            for (size_t j = 0; j < s.cols(); ++j)
                if (!s.at(i, j).is_zero())
                    CHECK(mod.degree_of(i) == mod.degree_of(j));
    };
    check_degrees(e.sigma_even, e.underlying.even);
    check_degrees(e.sigma_odd, e.underlying.odd);
}

TEST_CASE("the cyclic idempotents are orthogonal and complete") {
    for (int p : {2, 3}) {
        LinearFactorization x = catalog_object("node", p);
        EquivariantFactorization e = tensor_power(x, p);
        const size_t n = e.sigma_even.rows();
        CycScalar inv_p = CycScalar::from_integer(p, p).inverse();
        std::vector<DenseMatrix> projectors;
        for (int k = 0; k < p; ++k) {
            DenseMatrix acc(p, n, n);
            DenseMatrix power = DenseMatrix::identity(p, n);
            for (int j = 0; j < p; ++j) {
                acc = acc + power.scaled(CycScalar::zeta_power(p, -static_cast<long>(k) * j) *
                                         inv_p);
                power = power * e.sigma_even;
            }
            projectors.push_back(std::move(acc));
        }
        DenseMatrix sum(p, n, n);
        for (int k = 0; k < p; ++k) {
            sum = sum + projectors[k];
            CHECK(projectors[k] * projectors[k] == projectors[k]);
            for (int l = 0; l < k; ++l)
                CHECK((projectors[k] * projectors[l]).is_zero());
        }
        CHECK(sum == DenseMatrix::identity(p, n));
    }
}

TEST_CASE("eigenspace ranks equal the trace formula and sum to the total") {
    for (int p : {2, 3}) {
        for (const char* name : {"node", "K1"}) {
            LinearFactorization x = catalog_object(name, p);
            EquivariantFactorization e = tensor_power(x, p);
            size_t total = 0;
            for (int k = 0; k < p; ++k) {
                LinearFactorization eig = eigenspace(e, k);
                CHECK(validate(eig).pass);
                CHECK(eig.potential == e.underlying.potential);
                long rank = static_cast<long>(eig.even_rank() + eig.odd_rank());
                CHECK(rank == trace_formula_rank(e, k));
                total += eig.even_rank() + eig.odd_rank();
            }
            CHECK(total == e.underlying.even_rank() + e.underlying.odd_rank());
        }
    }

    // The documented special case: both eigenspaces of the squared node have
    // total rank (4 +/- tr sigma)/2 = 2.
    EquivariantFactorization t2 = tensor_power(catalog_object("node", 2), 2);
    for (int k = 0; k < 2; ++k) {
        LinearFactorization eig = eigenspace(t2, k);
        CHECK(eig.even_rank() + eig.odd_rank() == 2);
    }
}

TEST_CASE("eigenspace ranks of a squared rank-one pair match subset enumeration") {
    // T^p((g,h)) is equivariantly the exterior algebra on e_0..e_{p-1} with
    // sigma acting on e_S by zeta^(sum S); so the sector-k multiplicity in
    // parity eps is #{S : |S| = eps mod 2, sum S = k mod p}.
    for (int p : {2, 3}) {
        LinearFactorization node = catalog_object("node", p);
        EquivariantFactorization e = tensor_power(node, p);
        for (int k = 0; k < p; ++k) {
            size_t even_count = 0, odd_count = 0;
            for (size_t mask = 0; mask < (size_t{1} << p); ++mask) {
                int total = 0;
                for (int i = 0; i < p; ++i)
                    if (mask & (size_t{1} << i)) total += i;
                if (total % p != k) continue;
                if (std::popcount(mask) % 2 == 0)
                    ++even_count;
                else
                    ++odd_count;
            }
            LinearFactorization eig = eigenspace(e, k);
            CHECK(eig.even_rank() == even_count);
            CHECK(eig.odd_rank() == odd_count);
        }
    }
}

TEST_CASE("tensor powers commute with base change entrywise") {
    LinearFactorization node = catalog_object("node", 2);
    RingPtr r = node.ring;
    std::vector<GradedPoly> rho = {GradedPoly::parse(r, "x + y"), GradedPoly::parse(r, "y")};
    LinearFactorization lhs = tensor_power(base_change(node, rho), 2).underlying;
    LinearFactorization rhs = base_change(tensor_power(node, 2).underlying, rho);
    CHECK(lhs == rhs);
}

TEST_CASE("sector operation") {
    LinearFactorization node = catalog_object("node", 2);
    // potential returns to f
    LinearFactorization s0 = tensor_power_sector(node, 2, 0);
    CHECK(s0.potential == node.potential);
    CHECK(validate(s0).pass);

    // zero object stays zero
    RingPtr r = catalog_ring_2(2);
    FreeGradedModule empty{};
    LinearFactorization zero = make_factorization(r, GradedPoly::zero(r), empty, empty,
                                                  GradedMap(r, empty, empty, 0),
                                                  GradedMap(r, empty, empty, 0));
    LinearFactorization zs = tensor_power_sector(zero, 2, 0);
    CHECK(zs.even_rank() == 0);
    CHECK(zs.odd_rank() == 0);

    // chi(sector 0) - chi(sector 1) = 2 for K(x) at p = 2
    LinearFactorization k1 = catalog_object("K1", 2);
    long c0 = euler_characteristic(tensor_power_sector(k1, 2, 0));
    long c1 = euler_characteristic(tensor_power_sector(k1, 2, 1));
    CHECK(c0 - c1 == 2);

    CHECK_THROWS_AS(tensor_power(node, 3), DomainError);  // prime mismatch
    EquivariantFactorization e = tensor_power(node, 2);
    CHECK_THROWS_AS(eigenspace(e, 2), DomainError);
}
