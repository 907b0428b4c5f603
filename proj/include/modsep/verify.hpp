#pragma once

#include <string>
#include <vector>

namespace modsep {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions

    bool passed() const { return failed == 0; }
};

/// Cheeger sandwich lambda2/2 <= h <= sqrt(2*lambda2) on every connected
/// corpus graph with at most 16 vertices, h by exhaustive enumeration.
SuiteResult verify_cheeger_suite();

/// Normalized lambda2 <= combinatorial lambda2 on every corpus graph
/// without isolated vertices, both eigenvalues from the dense solver.
SuiteResult verify_lambda_order_suite();

/// Pipeline lower bound never exceeds the exhaustive optimum on every
/// connected graph with <= 6 vertices and every fixture with <= 8.
SuiteResult verify_oracle_suite();

/// Full partition audit (validity, stopping rule, charges, certificates,
/// weights) over the fixture set at several epsilons.
SuiteResult verify_audit_suite();

/// Dispatch by suite name: cheeger, lambda-order, oracle, audit.
SuiteResult run_verify_suite(const std::string& name);

std::vector<std::string> verify_suite_names();

}  // namespace modsep
