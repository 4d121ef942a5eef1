#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace trilie {

// One failed identity: which identity, on which basis tuple, and the exact
// defect (LHS - RHS) in coordinates. Verdicts always carry full defect data.
struct Violation {
    std::string identity;
    std::vector<int> tuple;
    Vec defect;
};

struct Verdict {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    explicit operator bool() const { return pass(); }

    void report(std::string identity, std::vector<int> tuple, Vec defect) {
        if (!is_zero(defect))
            violations.push_back({std::move(identity), std::move(tuple), std::move(defect)});
    }

    void merge(const Verdict& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

} // namespace trilie
