#include "mfadams/linfact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <sstream>

namespace mfadams {

bool LinearFactorization::operator==(const LinearFactorization& rhs) const {
    return same_ring(ring, rhs.ring) && potential == rhs.potential && even == rhs.even &&
           odd == rhs.odd && alpha == rhs.alpha && beta == rhs.beta;
}

LinearFactorization make_factorization(RingPtr ring, GradedPoly potential, FreeGradedModule even,
                                       FreeGradedModule odd, GradedMap alpha, GradedMap beta) {
    if (!ring) throw DomainError("factorization requires a ring");
    if (!same_ring(potential.ring(), ring)) throw DomainError("potential ring mismatch");
    if (!potential.is_homogeneous())
        throw DomainError("potential must be homogeneous or zero: " + potential.to_string());
    if (alpha.source() != odd || alpha.target() != even)
        throw DomainError("alpha must map odd -> even");
    if (beta.source() != even || beta.target() != odd)
        throw DomainError("beta must map even -> odd");
    if (!same_ring(alpha.ring(), ring) || !same_ring(beta.ring(), ring))
        throw DomainError("map ring mismatch");
    return LinearFactorization{std::move(ring), std::move(potential), std::move(even),
                               std::move(odd),  std::move(alpha),     std::move(beta)};
}

ValidationReport validate(const LinearFactorization& x) {
    ValidationReport report;
    for (auto& msg : x.alpha.homogeneity_failures("alpha")) report.fail(std::move(msg));
    for (auto& msg : x.beta.homogeneity_failures("beta")) report.fail(std::move(msg));
    if (!x.potential.is_zero()) {
        long fdeg = *x.potential.weighted_degree();
        if (x.alpha.shift() + x.beta.shift() != fdeg) {
            std::ostringstream os;
            os << "shift(alpha) + shift(beta) = " << x.alpha.shift() + x.beta.shift()
               << " but deg f = " << fdeg;
            report.fail(os.str());
        }
    }
    auto check_composite = [&](const GradedMap& outer, const GradedMap& inner,
                               const std::string& label) {
        GradedMap comp = outer.composed_with(inner);
        for (size_t i = 0; i < comp.rows(); ++i) {
            for (size_t j = 0; j < comp.cols(); ++j) {
                GradedPoly want =
                    (i == j) ? x.potential : GradedPoly::zero(x.ring);
                if (comp.at(i, j) != want) {
                    std::ostringstream os;
                    os << label << "[" << i << "," << j << "] = " << comp.at(i, j).to_string()
                       << ", expected " << want.to_string();
                    report.fail(os.str());
                }
            }
        }
    };
    check_composite(x.alpha, x.beta, "alpha*beta");
    check_composite(x.beta, x.alpha, "beta*alpha");
    return report;
}

namespace {

void require_same_ring(const LinearFactorization& x, const LinearFactorization& y) {
    if (!same_ring(x.ring, y.ring)) throw DomainError("factorization ring mismatch");
}

FreeGradedModule concat(const FreeGradedModule& a, const FreeGradedModule& b, long twist_b) {
    FreeGradedModule out = a;
    for (long d : b.generator_degrees) out.generator_degrees.push_back(d + twist_b);
    return out;
}

GradedMap block_diag(const RingPtr& ring, const GradedMap& a, const GradedMap& b,
                     const FreeGradedModule& source, const FreeGradedModule& target) {
    GradedMap out(ring, source, target, a.shift());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return out;
}

}  // namespace

LinearFactorization direct_sum(const LinearFactorization& x, const LinearFactorization& y) {
    require_same_ring(x, y);
    if (x.potential != y.potential) throw DomainError("direct sum requires equal potentials");
    long sum_x = x.alpha.shift() + x.beta.shift();
    long sum_y = y.alpha.shift() + y.beta.shift();
    LinearFactorization yy = y;
    if (x.alpha.shift() != y.alpha.shift() || x.beta.shift() != y.beta.shift()) {
        if (sum_x != sum_y)
            throw DomainError("direct sum of factorizations with incompatible graded shifts");
        // Re-twist the second summand's odd part so the shifts line up.
        long c = y.alpha.shift() - x.alpha.shift();
        FreeGradedModule odd = y.odd;
        for (auto& d : odd.generator_degrees) d += c;
        GradedMap alpha(yy.ring, odd, yy.even, x.alpha.shift());
        for (size_t i = 0; i < alpha.rows(); ++i)
            for (size_t j = 0; j < alpha.cols(); ++j) alpha.set(i, j, y.alpha.at(i, j));
        GradedMap beta(yy.ring, yy.even, odd, x.beta.shift());
        for (size_t i = 0; i < beta.rows(); ++i)
            for (size_t j = 0; j < beta.cols(); ++j) beta.set(i, j, y.beta.at(i, j));
        yy.odd = odd;
        yy.alpha = std::move(alpha);
        yy.beta = std::move(beta);
    }
    FreeGradedModule even = concat(x.even, yy.even, 0);
    FreeGradedModule odd = concat(x.odd, yy.odd, 0);
    GradedMap alpha = block_diag(x.ring, x.alpha, yy.alpha, odd, even);
    GradedMap beta = block_diag(x.ring, x.beta, yy.beta, even, odd);
    return make_factorization(x.ring, x.potential, std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

LinearFactorization suspend(const LinearFactorization& x) {
    GradedMap alpha = x.beta.negated();  // even -> odd becomes odd' -> even'
    GradedMap beta = x.alpha.negated();
    return make_factorization(x.ring, x.potential, x.odd, x.even, std::move(alpha),
                              std::move(beta));
}

LinearFactorization twist(const LinearFactorization& x, const CycScalar& u) {
    if (u.is_zero()) throw DomainError("twist by zero is not invertible");
    if (u.prime() != x.ring->prime) throw DomainError("twist scalar prime mismatch");
    return make_factorization(x.ring, x.potential.scaled(u), x.even, x.odd, x.alpha,
                              x.beta.scaled(u));
}

LinearFactorization negate_potential(const LinearFactorization& x) {
    return twist(x, -CycScalar::one(x.ring->prime));
}

LinearFactorization shift_internal(const LinearFactorization& x, long c) {
    FreeGradedModule even = x.even;
    FreeGradedModule odd = x.odd;
    for (auto& d : even.generator_degrees) d += c;
    for (auto& d : odd.generator_degrees) d += c;
    GradedMap alpha(x.ring, odd, even, x.alpha.shift());
    for (size_t i = 0; i < alpha.rows(); ++i)
        for (size_t j = 0; j < alpha.cols(); ++j) alpha.set(i, j, x.alpha.at(i, j));
    GradedMap beta(x.ring, even, odd, x.beta.shift());
    for (size_t i = 0; i < beta.rows(); ++i)
        for (size_t j = 0; j < beta.cols(); ++j) beta.set(i, j, x.beta.at(i, j));
    return make_factorization(x.ring, x.potential, std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

// ---------------------------------------------------------------------------
// Tensor product

namespace {

// The four parity blocks of a tensor product need one uniform degree twist
// each (u00 is normalized to 0) so that the combined maps carry single
// shifts A (odd -> even) and B (even -> odd). Each structurally nonzero
// Kronecker block contributes one linear equation; the system is solved
// exactly, preferring A = shift(alpha_x) + shift(alpha_y) on the free
// direction.
struct TensorShifts {
    long A, B, u01, u10, u11;
};

TensorShifts solve_tensor_shifts(const LinearFactorization& x, const LinearFactorization& y) {
    const long ax = x.alpha.shift(), bx = x.beta.shift();
    const long ay = y.alpha.shift(), by = y.beta.shift();
    const bool alpha_x = !x.alpha.is_zero();
    const bool beta_x = !x.beta.is_zero();
    const bool alpha_y = !y.alpha.is_zero();
    const bool beta_y = !y.beta.is_zero();
    const bool x0 = x.even_rank() > 0, x1 = x.odd_rank() > 0;
    const bool y0 = y.even_rank() > 0, y1 = y.odd_rank() > 0;

    // Unknown order: (u10, u01, u11, B, A) — A is pinned last so the generic
    // solution leaves it free with the preferred default.
    struct Eq {
        std::array<long, 5> lhs;
        long rhs;
    };
    std::vector<Eq> eqs;
    auto add = [&](bool active, std::array<long, 5> lhs, long rhs) {
        if (active) eqs.push_back({lhs, rhs});
    };
    //  B - u10 = bx               (beta_x ⊗ id on Y0)
    add(beta_x && y0, {-1, 0, 0, 1, 0}, bx);
    //  B - u01 = by                (id on X0 ⊗ beta_y)
    add(beta_y && x0, {0, -1, 0, 1, 0}, by);
    //  B - u01 + u11 = ax          (alpha_x ⊗ id on Y1)
    add(alpha_x && y1, {0, -1, 1, 1, 0}, ax);
    //  B - u10 + u11 = ay          (id on X1 ⊗ alpha_y)
    add(alpha_y && x1, {-1, 0, 1, 1, 0}, ay);
    //  A + u10 = ax                (alpha_x ⊗ id on Y0)
    add(alpha_x && y0, {1, 0, 0, 0, 1}, ax);
    //  A + u10 - u11 = by          (id on X1 ⊗ beta_y)
    add(beta_y && x1, {1, 0, -1, 0, 1}, by);
    //  A + u01 = ay                (id on X0 ⊗ alpha_y)
    add(alpha_y && x0, {0, 1, 0, 0, 1}, ay);
    //  A + u01 - u11 = bx          (beta_x ⊗ id on Y1)
    add(beta_x && y1, {0, 1, -1, 0, 1}, bx);

    // Exact Gaussian elimination over Q with the fixed column order.
    size_t nrows = eqs.size();
    std::vector<std::array<mpq_class, 6>> m(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t c = 0; c < 5; ++c) m[r][c] = eqs[r].lhs[c];
        m[r][5] = eqs[r].rhs;
    }
    std::array<int, 5> pivot_row{-1, -1, -1, -1, -1};
    size_t next = 0;
    for (size_t col = 0; col < 5 && next < nrows; ++col) {
        size_t sel = next;
        while (sel < nrows && m[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[next]);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == next || m[r][col] == 0) continue;
            mpq_class factor = m[r][col] / m[next][col];
            for (size_t c = col; c < 6; ++c) m[r][c] -= factor * m[next][c];
        }
        pivot_row[col] = static_cast<int>(next);
        ++next;
    }
    for (size_t r = next; r < nrows; ++r) {
        if (m[r][5] != 0)
            throw DomainError("tensor factors have incompatible graded shifts");
    }

    // Back-substitute; free unknowns take their preferred defaults.
    std::array<mpq_class, 5> value;
    std::array<long, 5> preferred = {0, 0, 0, bx + by, ax + ay};
    for (int col = 4; col >= 0; --col) {
        if (pivot_row[col] < 0) {
            value[col] = preferred[col];
            continue;
        }
        const auto& row = m[static_cast<size_t>(pivot_row[col])];
        mpq_class acc = row[5];
        for (size_t c = col + 1; c < 5; ++c) acc -= row[c] * value[c];
        value[col] = acc / row[col];
    }
    TensorShifts out{};
    long* fields[5] = {&out.u10, &out.u01, &out.u11, &out.B, &out.A};
    for (size_t c = 0; c < 5; ++c) {
        if (!rational_is_integer(value[c]))
            throw DomainError("tensor factors admit no integral graded twist");
        *fields[c] = static_cast<long>(value[c].get_num().get_si());
    }
    return out;
}

}  // namespace

LinearFactorization tensor_product(const LinearFactorization& x, const LinearFactorization& y) {
    require_same_ring(x, y);
    const RingPtr& ring = x.ring;
    GradedPoly potential = x.potential + y.potential;
    if (!potential.is_homogeneous())
        throw DomainError("tensor potential " + potential.to_string() + " is inhomogeneous");

    TensorShifts s = solve_tensor_shifts(x, y);

    const size_t x0 = x.even_rank(), x1 = x.odd_rank();
    const size_t y0 = y.even_rank(), y1 = y.odd_rank();

    // Even basis: X0⊗Y0 then X1⊗Y1; odd basis: X1⊗Y0 then X0⊗Y1.
    // Pair (i, j) with the X index major.
    FreeGradedModule even, odd;
    for (size_t i = 0; i < x0; ++i)
        for (size_t j = 0; j < y0; ++j)
            even.generator_degrees.push_back(x.even.degree_of(i) + y.even.degree_of(j));
    for (size_t i = 0; i < x1; ++i)
        for (size_t j = 0; j < y1; ++j)
            even.generator_degrees.push_back(x.odd.degree_of(i) + y.odd.degree_of(j) + s.u11);
    for (size_t i = 0; i < x1; ++i)
        for (size_t j = 0; j < y0; ++j)
            odd.generator_degrees.push_back(x.odd.degree_of(i) + y.even.degree_of(j) + s.u10);
    for (size_t i = 0; i < x0; ++i)
        for (size_t j = 0; j < y1; ++j)
            odd.generator_degrees.push_back(x.even.degree_of(i) + y.odd.degree_of(j) + s.u01);

    GradedMap alpha(ring, odd, even, s.A);
    GradedMap beta(ring, even, odd, s.B);

    // alpha = [[alpha_x ⊗ I_{Y0}, I_{X0} ⊗ alpha_y],
    //          [-I_{X1} ⊗ beta_y, beta_x ⊗ I_{Y1}]]
    for (size_t i = 0; i < x0; ++i)
        for (size_t k = 0; k < x1; ++k) {
            const GradedPoly& e = x.alpha.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < y0; ++j) alpha.set(i * y0 + j, k * y0 + j, e);
        }
    for (size_t i = 0; i < y0; ++i)
        for (size_t k = 0; k < y1; ++k) {
            const GradedPoly& e = y.alpha.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < x0; ++j)
                alpha.set(j * y0 + i, x1 * y0 + j * y1 + k, e);
        }
    for (size_t i = 0; i < y1; ++i)
        for (size_t k = 0; k < y0; ++k) {
            const GradedPoly& e = y.beta.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < x1; ++j)
                alpha.set(x0 * y0 + j * y1 + i, j * y0 + k, -e);
        }
    for (size_t i = 0; i < x1; ++i)
        for (size_t k = 0; k < x0; ++k) {
            const GradedPoly& e = x.beta.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < y1; ++j)
                alpha.set(x0 * y0 + i * y1 + j, x1 * y0 + k * y1 + j, e);
        }

    // beta = [[beta_x ⊗ I_{Y0}, -I_{X1} ⊗ alpha_y],
    //         [I_{X0} ⊗ beta_y,  alpha_x ⊗ I_{Y1}]]
    for (size_t i = 0; i < x1; ++i)
        for (size_t k = 0; k < x0; ++k) {
            const GradedPoly& e = x.beta.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < y0; ++j) beta.set(i * y0 + j, k * y0 + j, e);
        }
    for (size_t i = 0; i < y0; ++i)
        for (size_t k = 0; k < y1; ++k) {
            const GradedPoly& e = y.alpha.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < x1; ++j)
                beta.set(j * y0 + i, x0 * y0 + j * y1 + k, -e);
        }
    for (size_t i = 0; i < y1; ++i)
        for (size_t k = 0; k < y0; ++k) {
            const GradedPoly& e = y.beta.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < x0; ++j)
                beta.set(x1 * y0 + j * y1 + i, j * y0 + k, e);
        }
    for (size_t i = 0; i < x0; ++i)
        for (size_t k = 0; k < x1; ++k) {
            const GradedPoly& e = x.alpha.at(i, k);
            if (e.is_zero()) continue;
            for (size_t j = 0; j < y1; ++j)
                beta.set(x1 * y0 + i * y1 + j, x0 * y0 + k * y1 + j, e);
        }

    return make_factorization(ring, std::move(potential), std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

// ---------------------------------------------------------------------------
// Koszul factorization

LinearFactorization koszul_factorization(const RingPtr& ring, const std::vector<GradedPoly>& g,
                                         const std::vector<GradedPoly>& a) {
    if (!ring) throw DomainError("koszul factorization requires a ring");
    const size_t c = g.size();
    if (c < 1) throw DomainError("koszul factorization needs at least one generator");
    if (a.size() != c)
        throw DomainError("koszul factorization: g has " + std::to_string(c) + " entries but a has " +
                          std::to_string(a.size()));
    std::vector<long> gdeg(c);
    std::optional<long> fdeg;
    for (size_t i = 0; i < c; ++i) {
        if (!same_ring(g[i].ring(), ring) || !same_ring(a[i].ring(), ring))
            throw DomainError("koszul data ring mismatch");
        if (g[i].is_zero()) throw DomainError("koszul generator g[" + std::to_string(i) + "] is zero");
        auto dg = g[i].weighted_degree();
        if (!dg) throw DomainError("koszul generator g[" + std::to_string(i) + "] is inhomogeneous");
        gdeg[i] = *dg;
        if (a[i].is_zero()) continue;
        auto da = a[i].weighted_degree();
        if (!da) throw DomainError("koszul coefficient a[" + std::to_string(i) + "] is inhomogeneous");
        long total = *da + gdeg[i];
        if (fdeg && *fdeg != total)
            throw DomainError("koszul data: deg a_i + deg g_i must be constant");
        fdeg = total;
    }
    const long D = fdeg.value_or(0);

    GradedPoly f(ring);
    for (size_t i = 0; i < c; ++i) f += a[i] * g[i];

    // Subsets as bitmasks, grouped by parity, ascending within each group.
    const size_t nmask = size_t{1} << c;
    std::vector<int> slot(nmask, -1);
    FreeGradedModule even, odd;
    std::vector<size_t> even_masks, odd_masks;
    for (size_t mask = 0; mask < nmask; ++mask) {
        int pc = std::popcount(mask);
        long deg = -(pc / 2) * D;
        for (size_t i = 0; i < c; ++i)
            if (mask & (size_t{1} << i)) deg += gdeg[i];
        if (pc % 2 == 0) {
            slot[mask] = static_cast<int>(even_masks.size());
            even_masks.push_back(mask);
            even.generator_degrees.push_back(deg);
        } else {
            slot[mask] = static_cast<int>(odd_masks.size());
            odd_masks.push_back(mask);
            odd.generator_degrees.push_back(deg);
        }
    }

    GradedMap alpha(ring, odd, even, 0);
    GradedMap beta(ring, even, odd, D);
    auto emit = [&](size_t src_mask, size_t tgt_mask, const GradedPoly& value, bool src_even) {
        if (value.is_zero()) return;
        size_t row = static_cast<size_t>(slot[tgt_mask]);
        size_t col = static_cast<size_t>(slot[src_mask]);
        GradedMap& m = src_even ? beta : alpha;
        GradedPoly cur = m.at(row, col);
        cur += value;
        m.set(row, col, std::move(cur));
    };
    for (size_t mask = 0; mask < nmask; ++mask) {
        bool src_even = std::popcount(mask) % 2 == 0;
        for (size_t i = 0; i < c; ++i) {
            size_t bit = size_t{1} << i;
            int sign = std::popcount(mask & (bit - 1)) % 2 == 0 ? 1 : -1;
            if (mask & bit) {
                // contraction: e_S -> g_i e_{S \ i}
                GradedPoly v = sign > 0 ? g[i] : -g[i];
                emit(mask, mask ^ bit, v, src_even);
            } else if (!a[i].is_zero()) {
                // exterior multiplication: e_S -> a_i e_{S ∪ i}
                GradedPoly v = sign > 0 ? a[i] : -a[i];
                emit(mask, mask | bit, v, src_even);
            }
        }
    }
    return make_factorization(ring, std::move(f), std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

LinearFactorization base_change(const LinearFactorization& x,
                                const std::vector<GradedPoly>& images) {
    GradedPoly potential = x.potential.substituted(images);
    GradedMap alpha(x.ring, x.odd, x.even, x.alpha.shift());
    for (size_t i = 0; i < alpha.rows(); ++i)
        for (size_t j = 0; j < alpha.cols(); ++j)
            alpha.set(i, j, x.alpha.at(i, j).substituted(images));
    GradedMap beta(x.ring, x.even, x.odd, x.beta.shift());
    for (size_t i = 0; i < beta.rows(); ++i)
        for (size_t j = 0; j < beta.cols(); ++j)
            beta.set(i, j, x.beta.at(i, j).substituted(images));
    return make_factorization(x.ring, std::move(potential), x.even, x.odd, std::move(alpha),
                              std::move(beta));
}

}  // namespace mfadams
