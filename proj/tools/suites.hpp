#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmon/random.hpp"

namespace moncli {

enum class RingMode { Ints, Any, Fixed };

struct SuiteParams {
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::size_t max_size = 3;
  int max_t = 3;
  RingMode mode = RingMode::Ints;
  hmon::BaseRing fixed;  // used with RingMode::Fixed
};

struct SuiteResult {
  std::string name;  // upper case, as printed
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // "trial <i>: <reason>", first few only
  [[nodiscard]] bool pass() const { return passed == total; }
  [[nodiscard]] std::string summary() const;
};

const std::vector<std::string>& suite_names();
/// Throws hmon::Error(ParseError) for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

}  // namespace moncli
