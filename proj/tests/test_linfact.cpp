#include <doctest.h>

#include <algorithm>
#include <random>

#include "mfadams/catalog.hpp"
#include "mfadams/homology.hpp"
#include "mfadams/linfact.hpp"

using namespace mfadams;

namespace {

GradedPoly P(const RingPtr& r, const std::string& s) { return GradedPoly::parse(r, s); }

LinearFactorization node(int p = 2) { return catalog_object("node", p); }

}  // namespace

TEST_CASE("validate accepts the node and rejects a broken pair") {
    LinearFactorization n = node();
    CHECK(validate(n).pass);

    // alpha = x, beta = x against potential xy: composite is x^2, not xy
    RingPtr r = catalog_ring_2(2);
    FreeGradedModule even{{0}}, odd{{1}};
    GradedMap alpha(r, odd, even, 0);
    alpha.set(0, 0, P(r, "x"));
    GradedMap beta(r, even, odd, 1);
    beta.set(0, 0, P(r, "x"));
    LinearFactorization bad =
        make_factorization(r, P(r, "x*y"), even, odd, std::move(alpha), std::move(beta));
    ValidationReport report = validate(bad);
    CHECK_FALSE(report.pass);
    CHECK(!report.failures.empty());
}

TEST_CASE("validate accepts the cusp module") {
    // products checked by hand: both composites are (x^2 - y^3) * id
    CHECK(validate(catalog_object("cusp_I", 2)).pass);
}

TEST_CASE("direct sum") {
    LinearFactorization n = node();
    RingPtr r = n.ring;
    // zero summand: ranks (0,0)
    FreeGradedModule empty{};
    LinearFactorization zero = make_factorization(
        r, P(r, "x*y"), empty, empty, GradedMap(r, empty, empty, n.alpha.shift()),
        GradedMap(r, empty, empty, n.beta.shift()));
    LinearFactorization sum = direct_sum(n, zero);
    CHECK(sum == n);

    LinearFactorization nn = direct_sum(n, n);
    CHECK(nn.even_rank() == 2);
    CHECK(nn.odd_rank() == 2);
    CHECK(validate(nn).pass);

    LinearFactorization k2 = catalog_object("K2", 2);
    LinearFactorization kk = direct_sum(k2, k2);
    CHECK(kk.even_rank() == 4);
    CHECK(validate(kk).pass);

    // potential mismatch
    CHECK_THROWS_AS(direct_sum(n, negate_potential(n)), DomainError);
}

TEST_CASE("direct sum aligns compatible shifts by twisting") {
    LinearFactorization n = node();
    LinearFactorization s2 = suspend(suspend(n));
    CHECK(s2 == n);
    // suspend swaps shifts (0,2) -> (2,0); the sum re-twists internally
    LinearFactorization mixed = direct_sum(catalog_object("K2", 2),
                                           suspend(catalog_object("K2", 2)));
    CHECK(validate(mixed).pass);
    CHECK(mixed.even_rank() == 4);
}

TEST_CASE("suspension is an involution and validates") {
    for (const char* name : {"node", "K2", "cusp_I", "composite_example"}) {
        LinearFactorization x = catalog_object(name, 2);
        LinearFactorization s = suspend(x);
        CHECK(validate(s).pass);
        CHECK(s.potential == x.potential);
        CHECK(suspend(s) == x);
    }
}

TEST_CASE("twist") {
    LinearFactorization n = node();
    RingPtr r = n.ring;
    CycScalar minus1 = -CycScalar::one(2);

    LinearFactorization t = twist(n, minus1);
    CHECK(t.potential == P(r, "-x*y"));
    CHECK(t.alpha.at(0, 0) == P(r, "x"));
    CHECK(t.beta.at(0, 0) == P(r, "-y"));

    CHECK(twist(n, CycScalar::one(2)) == n);
    CycScalar half = CycScalar::from_rational(2, make_rational(1, 2));
    CHECK(twist(twist(n, half), half.inverse()) == n);
    CHECK_THROWS_AS(twist(n, CycScalar::zero(2)), DomainError);
}

TEST_CASE("negating the potential is an involution") {
    LinearFactorization n = node();
    LinearFactorization c = negate_potential(n);
    CHECK(c.potential == P(n.ring, "-x*y"));
    CHECK(negate_potential(c) == n);
    CHECK(validate(c).pass);
}

TEST_CASE("tensor product basics") {
    RingPtr r = catalog_ring_2(2);
    // (x,0) ⊗ (y,0) is exactly the folded Koszul complex K(x,y)
    LinearFactorization kx = koszul_factorization(r, {P(r, "x")}, {P(r, "0")});
    LinearFactorization ky = koszul_factorization(r, {P(r, "y")}, {P(r, "0")});
    LinearFactorization k2 = catalog_object("K2", 2);
    CHECK(tensor_product(kx, ky) == k2);

    // unit object
    LinearFactorization unit = catalog_object("unit", 2);
    LinearFactorization n = node();
    CHECK(tensor_product(n, unit) == n);

    // canceling potentials validate with potential 0
    LinearFactorization z = tensor_product(n, negate_potential(n));
    CHECK(z.potential.is_zero());
    CHECK(validate(z).pass);

    CHECK_THROWS_AS(tensor_product(n, catalog_object("K1", 2)), DomainError);  // ring mismatch
}

namespace {

// Tuple labels for a two-factor tensor basis, mirroring the construction:
// even = A0xB0 then A1xB1, odd = A1xB0 then A0xB1, X index major.
struct TupleBasis {
    std::vector<std::vector<int>> even, odd;

    static TupleBasis leaf(const LinearFactorization& x) {
        TupleBasis t;
        for (size_t i = 0; i < x.even_rank(); ++i) t.even.push_back({static_cast<int>(i)});
        for (size_t i = 0; i < x.odd_rank(); ++i)
            t.odd.push_back({static_cast<int>(x.even_rank() + i)});
        return t;
    }

    static TupleBasis pair(const TupleBasis& a, const TupleBasis& b) {
        TupleBasis t;
        auto cat = [](const std::vector<std::vector<int>>& l,
                      const std::vector<std::vector<int>>& r,
                      std::vector<std::vector<int>>& out) {
            for (const auto& x : l)
                for (const auto& y : r) {
                    auto merged = x;
                    merged.insert(merged.end(), y.begin(), y.end());
                    out.push_back(std::move(merged));
                }
        };
        cat(a.even, b.even, t.even);
        cat(a.odd, b.odd, t.even);
        cat(a.odd, b.even, t.odd);
        cat(a.even, b.odd, t.odd);
        return t;
    }
};

std::vector<size_t> match_tuples(const std::vector<std::vector<int>>& from,
                                 const std::vector<std::vector<int>>& to) {
    std::vector<size_t> perm(from.size());
    for (size_t i = 0; i < from.size(); ++i) {
        auto it = std::find(to.begin(), to.end(), from[i]);
        REQUIRE(it != to.end());
        perm[i] = static_cast<size_t>(it - to.begin());
    }
    return perm;
}

void check_associative(const LinearFactorization& a, const LinearFactorization& b,
                       const LinearFactorization& c) {
    LinearFactorization left = tensor_product(tensor_product(a, b), c);
    LinearFactorization right = tensor_product(a, tensor_product(b, c));
    CHECK(left.potential == right.potential);
    CHECK(left.alpha.shift() == right.alpha.shift());
    CHECK(left.beta.shift() == right.beta.shift());

    TupleBasis ta = TupleBasis::leaf(a), tb = TupleBasis::leaf(b), tc = TupleBasis::leaf(c);
    TupleBasis lbasis = TupleBasis::pair(TupleBasis::pair(ta, tb), tc);
    TupleBasis rbasis = TupleBasis::pair(ta, TupleBasis::pair(tb, tc));
    std::vector<size_t> even_perm = match_tuples(lbasis.even, rbasis.even);
    std::vector<size_t> odd_perm = match_tuples(lbasis.odd, rbasis.odd);

    for (size_t i = 0; i < left.even_rank(); ++i)
        CHECK(left.even.degree_of(i) == right.even.degree_of(even_perm[i]));
    for (size_t i = 0; i < left.odd_rank(); ++i)
        CHECK(left.odd.degree_of(i) == right.odd.degree_of(odd_perm[i]));
    for (size_t i = 0; i < left.even_rank(); ++i)
        for (size_t j = 0; j < left.odd_rank(); ++j)
            CHECK(left.alpha.at(i, j) == right.alpha.at(even_perm[i], odd_perm[j]));
    for (size_t i = 0; i < left.odd_rank(); ++i)
        for (size_t j = 0; j < left.even_rank(); ++j)
            CHECK(left.beta.at(i, j) == right.beta.at(odd_perm[i], even_perm[j]));
}

}  // namespace

TEST_CASE("tensor is associative up to the basis relabeling permutation") {
    LinearFactorization a = node();
    LinearFactorization b = catalog_object("node_y", 2);
    LinearFactorization c = negate_potential(node());
    check_associative(a, b, c);

    // A rank-2 factor with the same shift sum: the residue-field class.
    check_associative(catalog_object("k_node", 2), a, c);

    // Potential-zero factors.
    LinearFactorization kx = catalog_object("gh_x0", 2);
    check_associative(kx, kx, catalog_object("K2", 2));
}

TEST_CASE("tensor rejects factors whose graded shift sums disagree") {
    // A factorization of xy forces shift sum 2; the plain folded Koszul
    // complex carries shift sum 0. No integral degree twist reconciles them.
    CHECK_THROWS_AS(tensor_product(catalog_object("node", 2), catalog_object("K2", 2)),
                    DomainError);
}

TEST_CASE("koszul factorizations") {
    RingPtr r = catalog_ring_2(2);
    LinearFactorization n = koszul_factorization(r, {P(r, "x")}, {P(r, "y")});
    CHECK(n.potential == P(r, "x*y"));
    CHECK(n.even_rank() == 1);
    CHECK(n.odd_rank() == 1);
    CHECK(n.alpha.at(0, 0) == P(r, "x"));
    CHECK(n.beta.at(0, 0) == P(r, "y"));

    LinearFactorization k2 = koszul_factorization(r, {P(r, "x"), P(r, "y")},
                                                  {P(r, "0"), P(r, "0")});
    CHECK(k2.potential.is_zero());
    CHECK(validate(k2).pass);

    RingPtr rc = catalog_ring_cusp(2);
    LinearFactorization kcusp = koszul_factorization(rc, {P(rc, "x"), P(rc, "y")},
                                                     {P(rc, "x"), P(rc, "-y^2")});
    CHECK(kcusp.potential == P(rc, "x^2 - y^3"));
    CHECK(validate(kcusp).pass);

    for (size_t c = 1; c <= 4; ++c) {
        auto vars = std::vector<std::string>{"x", "y", "w", "v"};
        vars.resize(c);
        RingPtr ring = make_ring(vars, std::vector<long>(c, 1), 2);
        std::vector<GradedPoly> g, a;
        for (size_t i = 0; i < c; ++i) {
            g.push_back(GradedPoly::variable(ring, i));
            a.push_back(GradedPoly::zero(ring));
        }
        LinearFactorization k = koszul_factorization(ring, g, a);
        CHECK(k.even_rank() == (size_t{1} << (c - 1)));
        CHECK(k.odd_rank() == (size_t{1} << (c - 1)));
        CHECK(validate(k).pass);
    }

    CHECK_THROWS_AS(koszul_factorization(r, {P(r, "x")}, {}), DomainError);
    CHECK_THROWS_AS(koszul_factorization(r, {P(r, "x + x^2")}, {P(r, "0")}), DomainError);
    // deg a_i + deg g_i must be constant
    CHECK_THROWS_AS(koszul_factorization(r, {P(r, "x"), P(r, "y")}, {P(r, "y"), P(r, "x^2")}),
                    DomainError);
}

TEST_CASE("base change") {
    LinearFactorization n = node();
    RingPtr r = n.ring;
    std::vector<GradedPoly> identity = {P(r, "x"), P(r, "y")};
    CHECK(base_change(n, identity) == n);

    std::vector<GradedPoly> swap = {P(r, "y"), P(r, "x")};
    LinearFactorization swapped = base_change(n, swap);
    CHECK(swapped.alpha.at(0, 0) == P(r, "y"));
    CHECK(swapped.potential == P(r, "x*y"));
    CHECK(validate(swapped).pass);

    // base change commutes with tensor entrywise
    std::vector<GradedPoly> rho = {P(r, "x + y"), P(r, "y")};
    LinearFactorization k_node = catalog_object("k_node", 2);
    CHECK(base_change(tensor_product(n, k_node), rho) ==
          tensor_product(base_change(n, rho), base_change(k_node, rho)));
}

TEST_CASE("every constructor output validates") {
    for (const auto& entry : catalog_entries()) {
        for (int p : {2, 3}) {
            LinearFactorization x = entry.build(p);
            CAPTURE(entry.name);
            CHECK(validate(x).pass);
        }
    }
}

TEST_CASE("random construction chains stay valid") {
    std::mt19937 rng(31337);
    std::vector<LinearFactorization> seeds = {
        node(), catalog_object("node_y", 2), catalog_object("k_node", 2),
        negate_potential(node())};
    std::uniform_int_distribution<size_t> pick_seed(0, seeds.size() - 1);
    std::uniform_int_distribution<int> pick_op(0, 4);
    std::uniform_int_distribution<long> pick_shift(-3, 3);
    CycScalar half = CycScalar::from_rational(2, make_rational(1, 2));

    for (int trial = 0; trial < 25; ++trial) {
        LinearFactorization x = seeds[pick_seed(rng)];
        for (int step = 0; step < 4; ++step) {
            int op = pick_op(rng);
            try {
                switch (op) {
                    case 0: x = suspend(x); break;
                    case 1: x = shift_internal(x, pick_shift(rng)); break;
                    case 2: x = twist(x, half); break;
                    case 3: {
                        LinearFactorization y = seeds[pick_seed(rng)];
                        if (x.even_rank() + x.odd_rank() > 8) break;
                        x = tensor_product(x, y);
                        break;
                    }
                    case 4: {
                        LinearFactorization y = x;
                        x = direct_sum(x, suspend(y));
                        break;
                    }
                }
            } catch (const DomainError&) {
                // incompatible potential/shift combinations are legal rejects
                continue;
            }
            CAPTURE(trial);
            CAPTURE(step);
            REQUIRE(validate(x).pass);
        }
        if (x.potential.is_zero()) {
            HomologyReport r = homology_report(x);
            CHECK(r.chi == static_cast<long>(r.len_h0) - static_cast<long>(r.len_h1));
        }
    }
}
