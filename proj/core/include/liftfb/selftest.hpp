#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liftfb {

struct PropertyResult {
  std::string family;
  long cases = 0;
  long failures = 0;
  std::string witness;  // first failing instance, when any
};

// Runs every property family on seeded random instances. Deterministic for
// a fixed seed. A family with failures > 0 indicates a library bug.
std::vector<PropertyResult> run_selftest(std::uint64_t seed);

}  // namespace liftfb
