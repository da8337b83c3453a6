#pragma once

#include <optional>

#include "coboundary.hpp"
#include "codes.hpp"
#include "layers.hpp"

namespace qch {

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    int passed() const;
    int failed() const;
    int skipped() const;
    bool ok() const { return failed() == 0; }
};

// Runs the whole cross-module invariant suite on one arrangement at desk
// scale: counting agreements, quasi-polynomial evaluation, poset-side
// constituents, lemma-level layer facts, the Tutte bridge, duality checks.
VerifyReport run_verification(const Arrangement& a, long long qmax = 12, const Limits& limits = {});

}  // namespace qch
