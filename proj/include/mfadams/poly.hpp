#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfadams/cyclotomic.hpp"
#include "mfadams/ring.hpp"

namespace mfadams {

using Exponents = std::vector<int>;

long weighted_degree_of(const RingSpec& ring, const Exponents& exps);

// All exponent vectors of weighted degree d, in descending lexicographic
// order (the graded-lex order restricted to one degree). Empty when none.
std::vector<Exponents> monomial_basis(const RingSpec& ring, long degree);

// Sparse multivariate polynomial over Q(zeta_p) attached to a ring. Terms are
// kept sorted by (weighted degree, descending lex) with no zero coefficients,
// so equality is coefficient-wise.
class GradedPoly {
  public:
    using Term = std::pair<Exponents, CycScalar>;

    GradedPoly() = default;
    explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static GradedPoly zero(RingPtr ring) { return GradedPoly(std::move(ring)); }
    static GradedPoly constant(RingPtr ring, const CycScalar& c);
    static GradedPoly monomial(RingPtr ring, const Exponents& exps, const CycScalar& c);
    static GradedPoly variable(RingPtr ring, size_t index);

    // Grammar: + - * ^ ( ), rational literals ("3/2"), 'z' for zeta (with
    // optional integer exponent), and the ring's variable names.
    static GradedPoly parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    CycScalar coefficient(const Exponents& exps) const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    GradedPoly& operator*=(const GradedPoly& rhs);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const GradedPoly& b) { return a *= b; }

    GradedPoly scaled(const CycScalar& c) const;
    GradedPoly pow(unsigned long e) const;

    bool operator==(const GradedPoly& rhs) const;
    bool operator!=(const GradedPoly& rhs) const { return !(*this == rhs); }

    // Degree of a nonzero homogeneous polynomial; nullopt when inhomogeneous.
    // Throws DomainError on the zero polynomial (homogeneous of every degree).
    std::optional<long> weighted_degree() const;
    bool is_homogeneous() const;  // zero counts as homogeneous
    // True for zero or a single term.
    bool is_monomial() const { return terms_.size() <= 1; }

    // Ring endomorphism sending variable i to images[i]. Every image must be
    // homogeneous of the variable's weight.
    GradedPoly substituted(const std::vector<GradedPoly>& images) const;

    std::string to_string() const;

  private:
    void add_term(const Exponents& exps, const CycScalar& c);
    void check_same_ring(const GradedPoly& rhs) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace mfadams
