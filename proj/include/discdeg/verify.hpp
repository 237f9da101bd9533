#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "discdeg/degree_engine.hpp"

namespace discdeg {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// reference: published values; oracle: cross-method agreement sweeps.
enum class Suite { reference, oracle, all };

/// Accepts "reference" (alias "paper"), "oracle" and "all".
Suite parse_suite(std::string_view name);

std::vector<CheckResult> run_verification(Suite suite, std::uint64_t seed,
                                          const EngineOptions& opts = {});

}  // namespace discdeg
