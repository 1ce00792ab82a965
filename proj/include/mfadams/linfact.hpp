#pragma once

#include <string>
#include <vector>

#include "mfadams/module.hpp"

namespace mfadams {

// A Z/2-graded pair of free graded modules with maps
//   alpha : odd -> even,  beta : even -> odd
// satisfying alpha∘beta = f·id and beta∘alpha = f·id for the potential f.
// When f = 0 this is a Z/2-graded complex of free modules.
struct LinearFactorization {
    RingPtr ring;
    GradedPoly potential;
    FreeGradedModule even;
    FreeGradedModule odd;
    GradedMap alpha;  // odd -> even
    GradedMap beta;   // even -> odd

    size_t even_rank() const { return even.rank(); }
    size_t odd_rank() const { return odd.rank(); }

    bool operator==(const LinearFactorization& rhs) const;
};

LinearFactorization make_factorization(RingPtr ring, GradedPoly potential,
                                       FreeGradedModule even, FreeGradedModule odd,
                                       GradedMap alpha, GradedMap beta);

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string message) {
        pass = false;
        failures.push_back(std::move(message));
    }
};

// Checks structural consistency, homogeneity of all entries, the composite
// identities alpha∘beta = f·id and beta∘alpha = f·id, and (for f != 0) that
// shift(alpha) + shift(beta) equals deg f. Failures are reported, not thrown.
ValidationReport validate(const LinearFactorization& x);

// Block-diagonal sum. Requires equal ring and potential; the second summand's
// odd generators are re-twisted when the declared shifts disagree but their
// sums match, and the sum is rejected otherwise.
LinearFactorization direct_sum(const LinearFactorization& x, const LinearFactorization& y);

// Swaps parities and negates both maps; involutive on the nose.
LinearFactorization suspend(const LinearFactorization& x);

// (alpha, beta) -> (alpha, u·beta), a factorization of u·f. u must be nonzero.
LinearFactorization twist(const LinearFactorization& x, const CycScalar& u);

// twist by -1: a factorization of -f.
LinearFactorization negate_potential(const LinearFactorization& x);

// Adds c to every generator degree (internal degree shift). Homology moves
// degreewise; lengths and Euler characteristics are unchanged.
LinearFactorization shift_internal(const LinearFactorization& x, long c);

// Tensor product with the Koszul sign on the second factor's differential.
// The potential is f_x + f_y. Generator degrees add, up to one uniform twist
// per parity block chosen so that both output maps carry a single shift;
// throws DomainError when no integral choice exists.
LinearFactorization tensor_product(const LinearFactorization& x, const LinearFactorization& y);

// Folded Koszul factorization on c generators: differential = contraction by
// (g_1..g_c) plus exterior multiplication by sum a_i e_i, potential sum a_i g_i.
// With a = 0 this is the Z/2-folded Koszul complex K(g). Ranks (2^(c-1), 2^(c-1)).
LinearFactorization koszul_factorization(const RingPtr& ring, const std::vector<GradedPoly>& g,
                                         const std::vector<GradedPoly>& a);

// Entrywise substitution by a grade-preserving ring endomorphism.
LinearFactorization base_change(const LinearFactorization& x,
                                const std::vector<GradedPoly>& images);

}  // namespace mfadams
