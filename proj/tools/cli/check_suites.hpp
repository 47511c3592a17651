#pragma once

// Seeded property suites over random small instances. Every failure carries a
// counterexample dump (collection text, S, i, trial number) that reproduces it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noisygen::check {

struct PropertyTally {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::vector<std::string> counterexamples;

  std::size_t total() const noexcept { return pass + fail; }
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyTally> properties;
  /// Refuted ladder prefixes summed over the refutation suite.
  std::size_t refuted_prefixes = 0;

  PropertyTally& property(std::string_view name);
  const PropertyTally* find(std::string_view name) const;
  bool ok() const;
  std::string format() const;
};

const std::vector<std::string>& suite_names();

/// suite is one of suite_names() or "all". Throws Error on an unknown name.
SuiteReport run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed);

SuiteReport run_closure_suite(std::size_t trials, std::uint64_t seed);
SuiteReport run_dimension_suite(std::size_t trials, std::uint64_t seed);
SuiteReport run_generators_suite(std::size_t trials, std::uint64_t seed);
SuiteReport run_refutation_suite(std::size_t trials, std::uint64_t seed);

}  // namespace noisygen::check
