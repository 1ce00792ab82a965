#pragma once

#include <string>
#include <vector>

#include "mfadams/poly.hpp"

namespace mfadams {

// Free graded module, described by the internal weighted degrees of its
// generators.
struct FreeGradedModule {
    std::vector<long> generator_degrees;

    size_t rank() const { return generator_degrees.size(); }
    long degree_of(size_t i) const { return generator_degrees.at(i); }

    bool operator==(const FreeGradedModule& rhs) const = default;
};

// Map of free graded modules with polynomial entries (target-rank rows by
// source-rank columns) and a declared internal degree shift: a nonzero entry
// (i,j) must be homogeneous of degree source_deg(j) + shift - target_deg(i).
class GradedMap {
  public:
    GradedMap() = default;
    GradedMap(RingPtr ring, FreeGradedModule source, FreeGradedModule target, long shift);

    static GradedMap zero(RingPtr ring, FreeGradedModule source, FreeGradedModule target,
                          long shift);

    const RingPtr& ring() const { return ring_; }
    const FreeGradedModule& source() const { return source_; }
    const FreeGradedModule& target() const { return target_; }
    long shift() const { return shift_; }
    size_t rows() const { return target_.rank(); }
    size_t cols() const { return source_.rank(); }

    const GradedPoly& at(size_t row, size_t col) const;
    void set(size_t row, size_t col, GradedPoly value);

    bool is_zero() const;

    GradedMap composed_with(const GradedMap& inner) const;  // this ∘ inner
    GradedMap scaled(const CycScalar& c) const;
    GradedMap negated() const;

    // Entrywise homogeneity against the declared shift; reports offenders.
    std::vector<std::string> homogeneity_failures(const std::string& label) const;

    bool operator==(const GradedMap& rhs) const;

  private:
    size_t index(size_t row, size_t col) const { return row * cols() + col; }

    RingPtr ring_;
    FreeGradedModule source_;
    FreeGradedModule target_;
    long shift_ = 0;
    std::vector<GradedPoly> entries_;  // row-major
};

}  // namespace mfadams
