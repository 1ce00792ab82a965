#pragma once

#include <string>
#include <vector>

#include "mfadams/adams.hpp"

namespace mfadams {

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;  // computed values, or the counterexample data
    double milliseconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    int prime = 2;
    std::vector<VerifyCase> cases;

    bool all_pass() const;
    size_t passed() const;
    size_t failed() const;
};

// Suites: "axioms" (multiplicativity and the rank-one factor-of-p identity at
// the chi level), "keylemma" (chi of the Adams image equals p^d chi on a grid
// of finite-length objects), "theta" (node values and vanishing cases),
// "kunneth" (per-eigenvalue chi equality against homology replacements).
const std::vector<std::string>& verify_suite_names();

SuiteReport run_verify_suite(const std::string& suite, int prime,
                             const HomologyOptions& options);

}  // namespace mfadams
