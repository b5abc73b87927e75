#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bdris {

struct PropertyCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_property_suite. "props" runs all of them.
std::vector<std::string> property_suite_names();

/// Randomized property checks over the library, seeded for reproducibility.
/// Throws InvalidArgument for an unknown suite name.
std::vector<PropertyCheck> run_property_suite(std::string_view suite, std::uint64_t seed = 1);

}  // namespace bdris
