#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gravity {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(CheckResult{name, ok, detail});
    }
};

struct VerifyOptions {
    int max_arity = 5;
    std::uint64_t seed = 12345;
};

// Dimension formulas for the Arnold algebra, Arnold-relation straightening,
// graded commutativity.
SuiteResult run_arnold_suite(const VerifyOptions& opt);

// Delta*^2 = 0, the derivation identity, ker = im degreewise, the Poincare
// identity for the moduli dimensions, weight bookkeeping.
SuiteResult run_delta_suite(const VerifyOptions& opt);

// Suboperad stability of ker Delta and the operad axiom suite for the
// kernel model.
SuiteResult run_westerland_suite(const VerifyOptions& opt);

// Residue well-definedness (annihilates Arnold relations, lands in
// Delta*-closed tensors) and the operad axiom suite for the residue model.
SuiteResult run_gk_suite(const VerifyOptions& opt);

// Structure constants of the two models compared cell by cell.
SuiteResult run_compare_suite(const VerifyOptions& opt);

// Generalized-Jacobi presentation relations in both models and the grading
// automorphism checks.
SuiteResult run_relations_suite(const VerifyOptions& opt);

// which: one of arnold|delta|westerland|gk|compare|relations|all.
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& opt);

}  // namespace gravity
