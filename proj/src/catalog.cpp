#include "mfadams/catalog.hpp"

namespace mfadams {

RingPtr catalog_ring_1(int prime) { return make_ring({"x"}, {1}, prime); }
RingPtr catalog_ring_2(int prime) { return make_ring({"x", "y"}, {1, 1}, prime); }
RingPtr catalog_ring_3(int prime) { return make_ring({"x", "y", "w"}, {1, 1, 1}, prime); }
RingPtr catalog_ring_cusp(int prime) { return make_ring({"x", "y"}, {3, 2}, prime); }

namespace {

GradedPoly P(const RingPtr& ring, const std::string& text) {
    return GradedPoly::parse(ring, text);
}

LinearFactorization build_koszul(const RingPtr& ring, const std::vector<std::string>& g,
                                 const std::vector<std::string>& a) {
    std::vector<GradedPoly> gs, as;
    for (const auto& s : g) gs.push_back(P(ring, s));
    for (const auto& s : a) as.push_back(P(ring, s));
    return koszul_factorization(ring, gs, as);
}

LinearFactorization build_cusp_module(int prime) {
    RingPtr ring = catalog_ring_cusp(prime);
    FreeGradedModule even{{0, 1}};
    FreeGradedModule odd{{3, 4}};
    GradedMap alpha(ring, odd, even, 0);
    alpha.set(0, 0, P(ring, "x"));
    alpha.set(0, 1, P(ring, "y^2"));
    alpha.set(1, 0, P(ring, "y"));
    alpha.set(1, 1, P(ring, "x"));
    GradedMap beta(ring, even, odd, 6);
    beta.set(0, 0, P(ring, "x"));
    beta.set(0, 1, P(ring, "-y^2"));
    beta.set(1, 0, P(ring, "-y"));
    beta.set(1, 1, P(ring, "x"));
    return make_factorization(ring, P(ring, "x^2 - y^3"), even, odd, std::move(alpha),
                              std::move(beta));
}

// Z/2-graded complex Q^3 -> Q^3 -> Q^3 whose even-position homology is the
// residue field: beta is the middle Koszul differential A on (x, y, w) and
// alpha is the rank-one composite of the outer Koszul maps.
LinearFactorization build_composite_example(int prime) {
    RingPtr ring = catalog_ring_3(prime);
    FreeGradedModule even{{2, 2, 2}};  // e_xy, e_xw, e_yw
    FreeGradedModule odd{{1, 1, 1}};   // e_x, e_y, e_w
    GradedMap beta(ring, even, odd, 0);
    beta.set(0, 0, P(ring, "-y"));
    beta.set(0, 1, P(ring, "-w"));
    beta.set(1, 0, P(ring, "x"));
    beta.set(1, 2, P(ring, "-w"));
    beta.set(2, 1, P(ring, "x"));
    beta.set(2, 2, P(ring, "y"));
    GradedMap alpha(ring, odd, even, 3);
    // column-times-row: (w, -y, x)^T * (x, y, w)
    const char* entries[3][3] = {{"w*x", "w*y", "w^2"},
                                 {"-y*x", "-y^2", "-y*w"},
                                 {"x^2", "x*y", "x*w"}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) alpha.set(i, j, P(ring, entries[i][j]));
    return make_factorization(ring, GradedPoly::zero(ring), even, odd, std::move(alpha),
                              std::move(beta));
}

LinearFactorization build_unit(int prime) {
    RingPtr ring = catalog_ring_2(prime);
    FreeGradedModule even{{0}};
    FreeGradedModule odd{{}};
    GradedMap alpha(ring, odd, even, 0);
    GradedMap beta(ring, even, odd, 0);
    return make_factorization(ring, GradedPoly::zero(ring), even, odd, std::move(alpha),
                              std::move(beta));
}

LinearFactorization build_contractible(int prime) {
    RingPtr ring = catalog_ring_2(prime);
    FreeGradedModule even{{0}};
    FreeGradedModule odd{{0}};
    GradedMap alpha(ring, odd, even, 0);
    alpha.set(0, 0, GradedPoly::constant(ring, CycScalar::one(prime)));
    GradedMap beta(ring, even, odd, 0);
    return make_factorization(ring, GradedPoly::zero(ring), even, odd, std::move(alpha),
                              std::move(beta));
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> entries;
    entries.push_back({"K1", "folded Koszul complex K(x) over one variable", "koszul g=(x), a=(0)",
                       1, [](int p) { return build_koszul(catalog_ring_1(p), {"x"}, {"0"}); }});
    entries.push_back({"K1_sq", "folded Koszul complex K(x^2)", "koszul g=(x^2), a=(0)", 2,
                       [](int p) { return build_koszul(catalog_ring_1(p), {"x^2"}, {"0"}); }});
    entries.push_back({"K2", "folded Koszul complex K(x,y)", "koszul g=(x,y), a=(0,0)", 1,
                       [](int p) { return build_koszul(catalog_ring_2(p), {"x", "y"}, {"0", "0"}); }});
    entries.push_back({"K2_mixed", "folded Koszul complex K(x^2,y)", "koszul g=(x^2,y), a=(0,0)", 2,
                       [](int p) {
                           return build_koszul(catalog_ring_2(p), {"x^2", "y"}, {"0", "0"});
                       }});
    entries.push_back({"K2_weighted", "folded Koszul complex K(x,y), weights (3,2)",
                       "koszul g=(x,y), a=(0,0) over weights (3,2)", 1, [](int p) {
                           return build_koszul(catalog_ring_cusp(p), {"x", "y"}, {"0", "0"});
                       }});
    entries.push_back({"K3", "folded Koszul complex K(x,y,w) over three variables",
                       "koszul g=(x,y,w), a=(0,0,0)", 1, [](int p) {
                           return build_koszul(catalog_ring_3(p), {"x", "y", "w"},
                                               {"0", "0", "0"});
                       }});
    entries.push_back({"node", "factorization (x, y) of f = xy; the module R/x on the node",
                       "koszul g=(x), a=(y)", std::nullopt,
                       [](int p) { return build_koszul(catalog_ring_2(p), {"x"}, {"y"}); }});
    entries.push_back({"node_y", "factorization (y, x) of f = xy; the module R/y on the node",
                       "koszul g=(y), a=(x)", std::nullopt,
                       [](int p) { return build_koszul(catalog_ring_2(p), {"y"}, {"x"}); }});
    entries.push_back({"k_node", "Koszul stabilization of the residue field over f = xy",
                       "koszul g=(x,y), a=(y,0)", std::nullopt, [](int p) {
                           return build_koszul(catalog_ring_2(p), {"x", "y"}, {"y", "0"});
                       }});
    entries.push_back({"gh_x0", "rank-one pair (x, 0) with zero potential over two variables",
                       "koszul g=(x), a=(0) over Q(zeta_p)[x,y]", std::nullopt,
                       [](int p) { return build_koszul(catalog_ring_2(p), {"x"}, {"0"}); }});
    entries.push_back({"cusp_I",
                       "rank-two factorization of x^2 - y^3 (weights (3,2)) presenting the ideal "
                       "module (x, y)",
                       "alpha=[[x,y^2],[y,x]], beta=[[x,-y^2],[-y,x]]", std::nullopt,
                       [](int p) { return build_cusp_module(p); }});
    entries.push_back({"cusp_k", "Koszul stabilization of the residue field over x^2 - y^3",
                       "koszul g=(x,y), a=(x,-y^2) over weights (3,2)", std::nullopt,
                       [](int p) {
                           return build_koszul(catalog_ring_cusp(p), {"x", "y"}, {"x", "-y^2"});
                       }});
    entries.push_back({"composite_example",
                       "Z/2-graded complex Q^3 -> Q^3 -> Q^3 with residue-field homology in one "
                       "spot, built from the outer and middle Koszul maps on three variables",
                       "beta = middle Koszul differential, alpha = (column) * (row) composite", 1,
                       [](int p) { return build_composite_example(p); }});
    entries.push_back({"unit", "tensor unit: rank (1,0), zero maps, zero potential", "explicit",
                       std::nullopt, [](int p) { return build_unit(p); }});
    entries.push_back({"contractible", "rank (1,1) complex with an identity map", "explicit", 0,
                       [](int p) { return build_contractible(p); }});
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

LinearFactorization catalog_object(const std::string& name, int prime) {
    for (const auto& e : catalog_entries()) {
        if (e.name == name) return e.build(prime);
    }
    throw DomainError("unknown catalog object '" + name + "'");
}

}  // namespace mfadams
