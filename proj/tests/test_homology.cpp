#include <doctest.h>

#include "mfadams/catalog.hpp"
#include "mfadams/homology.hpp"
#include "support/naive_linalg.hpp"

using namespace mfadams;

namespace {

GradedPoly P(const RingPtr& r, const std::string& s) { return GradedPoly::parse(r, s); }

// H dims recomputed from dense graded components with the naive rank.
std::pair<size_t, size_t> naive_h_dims(const LinearFactorization& x, long d) {
    auto dim_at = [&](const FreeGradedModule& mod, long deg) {
        size_t total = 0;
        for (long g : mod.generator_degrees)
            total += monomial_basis(*x.ring, deg - g).size();
        return total;
    };
    size_t rank_beta_d = testsupport::naive_rank(
        testsupport::from_dense(graded_component(x.beta, d)));
    size_t rank_alpha_d = testsupport::naive_rank(
        testsupport::from_dense(graded_component(x.alpha, d)));
    size_t rank_alpha_in = testsupport::naive_rank(
        testsupport::from_dense(graded_component(x.alpha, d - x.alpha.shift())));
    size_t rank_beta_in = testsupport::naive_rank(
        testsupport::from_dense(graded_component(x.beta, d - x.beta.shift())));
    size_t h0 = dim_at(x.even, d) - rank_beta_d - rank_alpha_in;
    size_t h1 = dim_at(x.odd, d) - rank_alpha_d - rank_beta_in;
    return {h0, h1};
}

size_t report_h0(const HomologyReport& r, long d) {
    for (const auto& row : r.per_degree)
        if (row.degree == d) return row.h0;
    return 0;
}

size_t report_h1(const HomologyReport& r, long d) {
    for (const auto& row : r.per_degree)
        if (row.degree == d) return row.h1;
    return 0;
}

}  // namespace

TEST_CASE("graded components") {
    RingPtr r1 = catalog_ring_1(2);
    // multiplication by x on k[x], degree 0 -> 1x1 matrix [1]
    FreeGradedModule rank1{{0}};
    GradedMap mx(r1, rank1, rank1, 1);
    mx.set(0, 0, P(r1, "x"));
    DenseMatrix m = graded_component(mx, 0);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0).is_one());

    // zero map still has the right shape
    GradedMap zero(r1, rank1, rank1, 1);
    DenseMatrix z = graded_component(zero, 3);
    CHECK(z.rows() == 1);
    CHECK(z.cols() == 1);
    CHECK(z.is_zero());

    // multiplication by x^2 - y^3 over weights (3,2): degree 0 -> degree 6
    RingPtr rc = catalog_ring_cusp(2);
    GradedMap mf(rc, FreeGradedModule{{0}}, FreeGradedModule{{0}}, 6);
    mf.set(0, 0, P(rc, "x^2 - y^3"));
    DenseMatrix c = graded_component(mf, 0);
    REQUIRE(c.rows() == 2);  // basis {x^2, y^3} of degree 6
    REQUIRE(c.cols() == 1);
    CHECK(c.at(0, 0) == CycScalar::one(2));
    CHECK(c.at(1, 0) == -CycScalar::one(2));
}

TEST_CASE("homology of the folded Koszul complex") {
    HomologyReport r = homology_report(catalog_object("K2", 2));
    CHECK(r.len_h0 == 1);
    CHECK(r.len_h1 == 0);
    CHECK(r.chi == 1);
    CHECK(r.tail_window_clear);
    CHECK(report_h0(r, 0) == 1);
}

TEST_CASE("homology reads kernels and images directly") {
    // X = (alpha = 0, beta = x) over k[x]: H^0 = 0, H^1 = k
    RingPtr r = catalog_ring_1(2);
    FreeGradedModule even{{0}}, odd{{1}};
    GradedMap alpha(r, odd, even, 0);
    GradedMap beta(r, even, odd, 2);
    beta.set(0, 0, P(r, "x"));
    LinearFactorization x =
        make_factorization(r, GradedPoly::zero(r), even, odd, std::move(alpha), std::move(beta));
    HomologyReport rep = homology_report(x);
    CHECK(rep.len_h0 == 0);
    CHECK(rep.len_h1 == 1);
    CHECK(rep.chi == -1);
}

TEST_CASE("composite example has residue-field homology at the kernel spot") {
    HomologyReport r = homology_report(catalog_object("composite_example", 2));
    CHECK(r.len_h0 == 1);
    CHECK(r.len_h1 == 0);
    CHECK(r.chi == 1);
    CHECK(report_h0(r, 3) == 1);  // the class of i(1) in internal degree 3
}

TEST_CASE("chi") {
    HomologyOptions opts;
    CHECK(euler_characteristic(catalog_object("K1", 2), opts) == 1);

    LinearFactorization k2 = catalog_object("K2", 2);
    CHECK(euler_characteristic(direct_sum(k2, suspend(k2)), opts) == 0);

    LinearFactorization node = catalog_object("node", 2);
    CHECK(euler_characteristic(tensor_product(node, negate_potential(node)), opts) == -1);

    CHECK_THROWS_AS(euler_characteristic(node, opts), DomainError);  // potential nonzero
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(catalog_object("contractible", 2)));
    CHECK_FALSE(is_acyclic(catalog_object("K2", 2)));
    CHECK(is_acyclic(tensor_product(catalog_object("K2", 2),
                                    catalog_object("contractible", 2))));
}

TEST_CASE("per-degree dimensions match the naive oracle") {
    std::vector<LinearFactorization> objects;
    objects.push_back(catalog_object("K2", 2));
    LinearFactorization node = catalog_object("node", 2);
    objects.push_back(tensor_product(node, negate_potential(node)));
    objects.push_back(catalog_object("composite_example", 2));
    objects.push_back(catalog_object("K2_weighted", 2));
    for (const auto& x : objects) {
        HomologyReport rep = homology_report(x);
        for (long d = -2; d <= 8; ++d) {
            auto [h0, h1] = naive_h_dims(x, d);
            CHECK(report_h0(rep, d) == h0);
            CHECK(report_h1(rep, d) == h1);
        }
    }
}

TEST_CASE("reports stabilize once the cutoff passes the top of homology") {
    for (const char* name : {"K2", "K3", "composite_example", "K2_weighted"}) {
        LinearFactorization x = catalog_object(name, 2);
        HomologyOptions base;
        HomologyReport r1 = homology_report(x, base);
        HomologyOptions longer;
        longer.cutoff = r1.cutoff_used + 5;
        HomologyReport r2 = homology_report(x, longer);
        CHECK(r1.len_h0 == r2.len_h0);
        CHECK(r1.len_h1 == r2.len_h1);
        CHECK(r1.chi == r2.chi);
    }
}

TEST_CASE("unverified tails warn, and strict mode escalates") {
    // (x, 0) over k[x,y] has H^0 = k[y], which never dies.
    LinearFactorization x = catalog_object("gh_x0", 2);
    HomologyReport r = homology_report(x);
    CHECK_FALSE(r.tail_window_clear);
    CHECK(!r.warnings.empty());

    HomologyOptions strict;
    strict.strict = true;
    CHECK_THROWS_AS(euler_characteristic(x, strict), TailUnverifiedError);
}

TEST_CASE("suspension of one tensor factor negates chi") {
    RingPtr r = catalog_ring_2(2);
    LinearFactorization x = catalog_object("gh_x0", 2);  // (x, 0)
    LinearFactorization y = koszul_factorization(r, {GradedPoly::parse(r, "y^2")},
                                                 {GradedPoly::zero(r)});
    long base = euler_characteristic(tensor_product(x, y));
    CHECK(base == 2);  // length of Q/(x, y^2)
    CHECK(euler_characteristic(tensor_product(suspend(x), y)) == -base);
    CHECK(euler_characteristic(suspend(tensor_product(x, y))) == -base);
}

TEST_CASE("twisting by a unit does not move homology") {
    LinearFactorization k2 = catalog_object("K2", 2);
    CycScalar u = CycScalar::from_rational(2, make_rational(3, 2));
    HomologyReport plain = homology_report(k2);
    HomologyReport twisted = homology_report(twist(k2, u));
    CHECK(plain.len_h0 == twisted.len_h0);
    CHECK(plain.len_h1 == twisted.len_h1);
    CHECK(plain.chi == twisted.chi);
}

TEST_CASE("nonzero potential is rejected") {
    CHECK_THROWS_AS(homology_report(catalog_object("node", 2)), DomainError);
}
