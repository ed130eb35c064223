#pragma once

// Regression bundle for the odd-integer weights w_n = 2n + 1, used by the
// `paper-check` subcommand.

#include <cstddef>
#include <string>
#include <vector>

#include "hyponorm/kernels.hpp"
#include "hyponorm/report.hpp"

namespace hyponorm {

struct RegressionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RegressionConfig {
    std::size_t oracle_N = 50;
    std::size_t closed_form_N = 50;
    std::size_t bounds_N = 500;
    std::size_t determinant_N = 15;
    Execution execution = Execution::parallel;
};

/// Runs every check; results are in a fixed order.
std::vector<RegressionCheck> run_regression_bundle(const RegressionConfig& config = {});

Json to_json(const std::vector<RegressionCheck>& checks);

}  // namespace hyponorm
