#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfadams/linfact.hpp"
#include "mfadams/scalar_matrix.hpp"

namespace mfadams {

struct HomologyOptions {
    std::optional<long> cutoff;  // top internal degree scanned
    std::optional<long> window;  // length of the trailing window that must vanish
    bool strict = false;         // escalate an unverified tail to an error
    int threads = 0;             // 0: MFADAMS_THREADS env var, else hardware
};

struct DegreeDims {
    long degree;
    size_t h0;
    size_t h1;
};

// Degreewise homology of a potential-zero factorization, with
// H^0 = ker(beta)/im(alpha) and H^1 = ker(alpha)/im(beta). Finite length is
// certified heuristically: the report is trustworthy when the final `window`
// degrees below `cutoff` carry no homology.
struct HomologyReport {
    std::vector<DegreeDims> per_degree;  // degrees with nonzero homology only
    size_t len_h0 = 0;
    size_t len_h1 = 0;
    long chi = 0;
    long cutoff_used = 0;
    long window_used = 0;
    bool tail_window_clear = false;
    std::vector<std::string> warnings;
};

HomologyReport homology_report(const LinearFactorization& x, const HomologyOptions& opts = {});

// len H^0 - len H^1. With opts.strict, throws DomainError when the tail
// window is not clear (finite length unverified).
long euler_characteristic(const LinearFactorization& x, const HomologyOptions& opts = {});

bool is_acyclic(const LinearFactorization& x, const HomologyOptions& opts = {});

// Exact matrix of a graded map restricted to the degree-d piece of its
// source (mapping into degree d + shift of the target). Rows and columns run
// over generators in order, monomials in graded-lex order within a generator.
DenseMatrix graded_component(const GradedMap& m, long degree);

// The default cutoff/window rule, exposed for reporting:
// window = degree spread + max entry degree + 2, cutoff = min degree + 4*window.
std::pair<long, long> default_homology_bounds(const LinearFactorization& x);

}  // namespace mfadams
