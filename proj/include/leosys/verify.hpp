#pragma once

#include <string>
#include <vector>

#include "leosys/oracle.hpp"

namespace leosys {

struct CheckResult {
    std::string name;
    std::string labels;
    bool pass;
};

struct VerifyOptions {
    bool deep = false;    // run the brute-force oracle cross-checks
    long max_d = 5;       // oracle scale cap
    int random_walk_pairs = 50;
    unsigned seed = 20240915;
};

/// Runs the invariant suite for one parameter array: closed-form checks
/// always, oracle cross-checks with `deep`. One CheckResult per line of
/// the `CHECK <name> <label(s)> PASS|FAIL` report.
std::vector<CheckResult> run_verification(const ParameterArray& pa, const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// Epsilon scalar of the defining vector that seeds basis [g]: bases
/// starting with d* are built from η*_0, with 0 from η_d, with d from η_0
/// and with 0* from η*_d.
FieldElement seed_epsilon(const EpsilonConfig& eps, const BasisLabel& g);

}  // namespace leosys
