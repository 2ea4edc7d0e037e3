#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liewave/io.hpp"

namespace liewave {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of one verification suite: named pass/fail checks plus the raw
/// measurements behind them.
struct BatteryResult {
  std::string title;
  std::vector<Check> checks;
  Json data = Json::object();
  double seconds = 0.0;
  bool pass() const;
};

struct BatteryOptions {
  int workers = 1;
  std::uint64_t seed = 0;
};

BatteryResult symbol_suite(const BatteryOptions& opt = {});
BatteryResult plancherel_suite(const BatteryOptions& opt = {});
BatteryResult hormander_suite(const BatteryOptions& opt = {});
BatteryResult embedding_suite(const BatteryOptions& opt = {});
BatteryResult torus_suite(const BatteryOptions& opt = {});

/// Canonical experiments for Cases 1-4: energy and Sobolev loss (1), W
/// monotonicity and Gevrey propagation (2), quasi-symmetriser growth (3),
/// shifted roots (4).
BatteryResult case_battery(int case_tag, const BatteryOptions& opt = {});

/// Oracle agreement of the symbol of `op` on spins 2*ell <= two_lmax plus the
/// Hormander bounds of order r (r <= 0 takes the operator's own order).
BatteryResult verify_symbol_report(const std::string& op, int two_lmax, int r, std::uint64_t seed = 0);

Json battery_to_json(const BatteryResult& r);

}  // namespace liewave
