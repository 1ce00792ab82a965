#pragma once

#include "mfadams/linfact.hpp"
#include "mfadams/scalar_matrix.hpp"

namespace mfadams {

// The p-th tensor power of a factorization, carrying the signed action of the
// p-cycle on tensor factors. sigma is a degree-zero chain map with sigma^p = 1.
struct EquivariantFactorization {
    LinearFactorization underlying;  // potential p·f
    DenseMatrix sigma_even;
    DenseMatrix sigma_odd;
    int prime = 2;
    // Basis bookkeeping: each generator of the power corresponds to a tuple of
    // generators of the base object (0..even_rank-1 even, then odd).
    std::vector<std::vector<int>> even_tuples;
    std::vector<std::vector<int>> odd_tuples;
};

// Left-associated p-fold tensor power with the cyclic action built by
// composing adjacent transpositions, each acting with the Koszul sign
// (-1)^{|a||b|}. Requires p prime and equal to the coefficient field's prime.
EquivariantFactorization tensor_power(const LinearFactorization& x, int p);

// ker(sigma - zeta^k) extracted via the idempotent
// (1/p) * sum_j zeta^{-kj} sigma^j, column-reduced degree by degree; the
// differential is conjugated into the pivot-column basis. Potential stays p·f.
LinearFactorization eigenspace(const EquivariantFactorization& e, int k);

// twist(eigenspace(tensor_power(x, p), k), 1/p): potential back to f.
LinearFactorization tensor_power_sector(const LinearFactorization& x, int p, int k);

}  // namespace mfadams
