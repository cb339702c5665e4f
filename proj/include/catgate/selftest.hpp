#pragma once

#include <functional>
#include <string>
#include <vector>

namespace catgate {

struct CheckResult {
    std::string name;
    double value;      // measured residual or deviation
    double tolerance;  // pass when value < tolerance
    bool pass;
};

struct PropertyCheck {
    std::string name;
    std::function<CheckResult()> run;
};

/// Internal-consistency properties of synthesis, propagation and the circuit
/// map; none of them relies on published numbers.
std::vector<PropertyCheck> property_checks();

std::vector<CheckResult> run_property_suite();

}  // namespace catgate
