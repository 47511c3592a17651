#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "noisygen/closure.hpp"

namespace testing {

inline noisygen::Element el(std::uint64_t c, std::uint64_t k) { return noisygen::Element::at(c, k); }

inline noisygen::ElementSet set_of(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  noisygen::ElementSet out;
  for (const auto& [c, k] : pairs) out.insert(el(c, k));
  return out;
}

inline std::string data_file(const std::string& name) {
  return std::string(NOISYGEN_DATA_DIR) + "/collections/" + name;
}

inline std::string golden_file(const std::string& name) { return std::string(NOISYGEN_GOLDEN_DIR) + "/" + name; }

}  // namespace testing
