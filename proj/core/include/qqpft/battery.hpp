#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qqpft/analysis.hpp"
#include "qqpft/generators.hpp"

namespace qqpft {

/// Configuration of one verification run. Signals and parameter pairs are
/// generated deterministically from the seed unless explicit inputs are
/// supplied.
struct BatteryOptions {
  std::string battery = "all";  // parseval, hy, renyi, shannon, lieb, concentration,
                                // entropy-tf, lemma41, thm45, thm46, all
  std::uint64_t seed = 7;
  int n = 32;
  double extent = 16.0;
  int signal_count = 4;
  int param_count = 3;
  std::vector<QSignal2D> signals;            // overrides generated signals when nonempty
  std::optional<ParamPair> params;           // overrides generated parameter pairs
  double alpha = 0.0;                        // renyi order override (0 = battery defaults)
  double q = 0.0;                            // lieb / concentration exponent override
  double epsilon = -1.0;                     // concentration epsilon override (< 0 = defaults)
};

struct BatteryResult {
  int total = 0;
  int failed = 0;
  bool all_passed() const { return failed == 0; }
};

const std::vector<std::string>& battery_ids();

/// Runs the named battery, streaming one tab-separated record per check to
/// `report` and a short human summary to `summary` when given.
BatteryResult run_battery(const BatteryOptions& opts, std::ostream& report,
                          std::ostream* summary = nullptr);

}  // namespace qqpft
