#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mfadams/common.hpp"

namespace mfadams {

// A weighted-graded polynomial ring over Q(zeta_p): named variables, one
// positive integer weight per variable, and the prime p of the coefficient
// field. Rings compare by value.
struct RingSpec {
    std::vector<std::string> variables;
    std::vector<long> weights;
    int prime = 2;

    size_t var_count() const { return variables.size(); }
    long weight_of(size_t i) const { return weights.at(i); }
    int var_index(const std::string& name) const;

    // Throws DomainError on malformed data (duplicate names, bad weights...).
    void check() const;

    bool operator==(const RingSpec& rhs) const = default;

    std::string describe() const;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> variables, std::vector<long> weights, int prime);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace mfadams
