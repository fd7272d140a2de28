#pragma once

#include <string>
#include <vector>

namespace relghz {

struct CaseResult {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Named published-value checks: lab-frame GHZ products, boosted correlations, Mermin special
/// values, the hidden-variable bound and the compensated restoration. Failures are entries,
/// never exceptions.
std::vector<CaseResult> run_reference_cases();

/// One line per case, "PASS|FAIL  name  measured=... expected=... tol=...".
std::string format_report(const std::vector<CaseResult>& cases);

}  // namespace relghz
