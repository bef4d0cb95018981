#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "iwahori/frobenius.hpp"

namespace iwahori {

struct NamedTwist {
  std::string name;
  std::shared_ptr<const FrobeniusTwist> twist;
};

// split gl2, gl3, sp4; Res_2 gl2 (factor swap); unitary gl3; inner-twisted gl2.
std::vector<NamedTwist> standard_fixtures();

struct SelftestOptions {
  std::uint64_t seed = 20240611;
  int box = 3;
  int jobs = 1;
};

struct SelftestCheck {
  std::string module;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool all_pass() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace iwahori
