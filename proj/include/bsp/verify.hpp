#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsp/params.hpp"

namespace bsp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample, when failing
};

struct VerifyOptions {
  std::vector<Params> grid;
  std::uint64_t seed = 1;
};

// Mixed positive/negative parameter points exercising all three regimes.
std::vector<Params> defaultGrid();

// "3,2;2,2n;1,2": comma-separated c,d per point, trailing 'n' for the
// negative relation, points separated by semicolons.
std::vector<Params> parseGrid(const std::string& text);

// Randomized and exhaustive cross-checks of every component against its
// independent counterpart.  Deterministic for a fixed seed.
std::vector<CheckResult> runVerifySuite(const VerifyOptions& opt);

}  // namespace bsp
