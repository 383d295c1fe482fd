// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pbwff {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct VerifyOptions {
  int lattice_max_rank = 4;    // criterion 2
  int lattice_max_height = 3;  // criteria 2 and 3
  int minkowski_max_rank = 3;  // criterion 3
};

/// Runs the eleven desk-scale checks in order. A check also fails when it
/// overruns its time limit.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace pbwff
