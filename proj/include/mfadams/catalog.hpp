#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mfadams/linfact.hpp"

namespace mfadams {

// Named example objects, parametrized by the coefficient-field prime. Every
// entry passes validate; entries with finite-length homology record their
// Euler characteristic.
struct CatalogEntry {
    std::string name;
    std::string description;
    std::string construction;  // human-readable recipe
    std::optional<long> expected_chi;
    std::function<LinearFactorization(int prime)> build;
};

const std::vector<CatalogEntry>& catalog_entries();

// Throws DomainError for unknown names.
LinearFactorization catalog_object(const std::string& name, int prime);

// Shared rings used by the catalog and the verification suites.
RingPtr catalog_ring_1(int prime);      // Q(zeta_p)[x], weight 1
RingPtr catalog_ring_2(int prime);      // Q(zeta_p)[x,y], weights (1,1)
RingPtr catalog_ring_3(int prime);      // Q(zeta_p)[x,y,z], weights (1,1,1)
RingPtr catalog_ring_cusp(int prime);   // Q(zeta_p)[x,y], weights (3,2)

}  // namespace mfadams
