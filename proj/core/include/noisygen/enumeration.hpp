#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "noisygen/symbolic_set.hpp"

namespace noisygen {

/// Where the noise strings go.
///
///   prefix            all noise first, then the target in id order
///   interleave:p,q    noise[j] is emitted at position p_j (0-based)
///   random            seeded noise positions in [0, 8(|noise|+1)), and the
///                     target's id order shuffled within chunks of 8
struct Schedule {
  enum class Kind { Prefix, Interleave, Random };

  Kind kind = Kind::Prefix;
  std::vector<std::size_t> positions;

  static Schedule prefix() { return {}; }
  static Schedule interleave(std::vector<std::size_t> positions) {
    return {Kind::Interleave, std::move(positions)};
  }
  static Schedule random() { return {Kind::Random, {}}; }

  /// Throws Error on unknown syntax.
  static Schedule parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const Schedule&) const = default;
};

inline constexpr std::size_t kShuffleChunk = 8;

/// A repetition-free enumeration of a target language with a finite list of
/// noise strings inserted.
class Enumeration {
 public:
  /// Throws Error when a noise string lies in the target ("noise must lie
  /// outside the target"), repeats, or interleave positions are malformed.
  Enumeration(SymbolicLanguage target, std::vector<Element> noise, Schedule schedule,
              std::uint64_t seed);

  Element next();

  const SymbolicLanguage& target() const noexcept { return target_; }
  const std::vector<Element>& noise() const noexcept { return noise_; }
  const Schedule& schedule() const noexcept { return schedule_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t emitted() const noexcept { return emitted_; }

  /// Emission positions chosen for each noise string, in noise order.
  const std::vector<std::size_t>& noise_positions() const noexcept { return resolved_positions_; }

 private:
  Element next_target_element();

  SymbolicLanguage target_;
  std::vector<Element> noise_;
  Schedule schedule_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  MemberCursor cursor_;
  std::deque<Element> chunk_;
  std::vector<std::size_t> resolved_positions_;
  std::map<std::size_t, Element> noise_at_;
  std::size_t emitted_ = 0;
};

Enumeration build_enumeration(const SymbolicLanguage& target, std::vector<Element> noise,
                              Schedule schedule, std::uint64_t seed);

/// Uniform draw in [0, bound) from a 64-bit engine; identical on every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace noisygen
