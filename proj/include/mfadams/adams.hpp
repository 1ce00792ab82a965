#pragma once

#include <vector>

#include "mfadams/homology.hpp"
#include "mfadams/tensor_power.hpp"

namespace mfadams {

// Formal integer combination of factorizations sharing one ring and one
// potential. Euler characteristics and tensor products extend (bi)linearly,
// which is what makes the term-by-term Adams operation meaningful: its output
// is a well-defined class, not a preferred object-level representative.
class VirtualClass {
  public:
    VirtualClass(RingPtr ring, GradedPoly potential);
    static VirtualClass of(const LinearFactorization& x, long coefficient = 1);

    const RingPtr& ring() const { return ring_; }
    const GradedPoly& potential() const { return potential_; }
    const std::vector<std::pair<long, LinearFactorization>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long coefficient, const LinearFactorization& x);

    VirtualClass operator-() const;
    VirtualClass& operator+=(const VirtualClass& rhs);
    friend VirtualClass operator+(VirtualClass a, const VirtualClass& b) { return a += b; }
    VirtualClass scaled(long c) const;

  private:
    RingPtr ring_;
    GradedPoly potential_;
    std::vector<std::pair<long, LinearFactorization>> terms_;
};

// Bilinear extension of the tensor product.
VirtualClass tensor_product(const VirtualClass& v, const VirtualClass& w);

// Term-by-term twist by -1 (potential negates).
VirtualClass negate_potential(const VirtualClass& v);

// The cyclic Adams operation: each term X contributes
// +[sector(X, 0)] - [sector(X, 1)], where sector k is the zeta^k eigenspace
// of the p-th tensor power rescaled by 1/p. Potential is preserved.
VirtualClass adams_operation(const VirtualClass& v, int p);

// Sum of coeff * chi(term); every term needs potential zero and verified
// finite length (per the homology options).
long euler_characteristic(const VirtualClass& v, const HomologyOptions& opts = {});

// sum_{i,j} c_i d_j chi(X_i ⊗ (Y_j twisted by -1)); both classes must share
// ring and potential.
long chi_pairing(const VirtualClass& v, const VirtualClass& w, const HomologyOptions& opts = {});

// Class of the Koszul stabilization of Q/(g) over f = sum a_i g_i.
VirtualClass stable_class(const RingPtr& ring, const std::vector<GradedPoly>& g,
                          const std::vector<GradedPoly>& a);

// The theta pairing computed as chi_pairing(m, n). Meaningful over isolated
// singularities; non-finite-length tensors surface through tail warnings.
long theta_pairing(const VirtualClass& m, const VirtualClass& n,
                   const HomologyOptions& opts = {});

}  // namespace mfadams
