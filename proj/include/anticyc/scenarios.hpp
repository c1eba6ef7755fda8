#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anticyc/pair.hpp"

namespace anticyc {

/// A named construction: the pair plus its distinguished classes and, where
/// the construction justifies one, a nef certificate for effectiveness calls.
struct Scenario {
    std::string name;
    std::vector<long> params;
    CyclePair pair;
    std::map<std::string, LatticeClass> named;
    std::optional<LatticeClass> nef_certificate;
};

/// Known names: nodal_cubic_N (N >= 10), duval_10, family_kN (k >= 2, N >= 1),
/// ex42, ex43, remark45_n (n >= 0). Throws on unknown name or out-of-range
/// parameters.
Scenario build_scenario(const std::string& name, const std::vector<long>& params = {});

std::vector<std::string> scenario_names();

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string scenario;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the full golden-value battery for the scenario.
VerifyReport verify_scenario(const std::string& name, const std::vector<long>& params = {});

}  // namespace anticyc
