#pragma once

#include "weylnorm/weyl_closed.hpp"
#include "weylnorm/weyl_enum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace weylnorm {

struct CheckOptions {
  unsigned max_degree = 6;
  unsigned sweep_cap = kDefaultSweepCap;
  unsigned forced_cap = kDefaultForcedCap;
  unsigned eta_cap = kDefaultEtaCap;
  bool parallel = false;
  /// Test hook: mutates every closed-form h table before it is used.
  std::function<void(HCoeffTable&)> tamper_h;
};

struct CheckCount {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct CheckReport {
  std::vector<CheckCount> counts;
  /// First counterexample found, in sweep order.
  std::optional<std::string> first_failure;

  bool ok() const { return !first_failure.has_value(); }
  std::string summary() const;
};

/// Cross-route and symmetry sweep over every (j,k) with j+k <= max_degree,
/// each family limited by its cap.
CheckReport run_checks(const CheckOptions& options);

}  // namespace weylnorm
