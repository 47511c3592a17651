#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noisygen/enumeration.hpp"
#include "noisygen/generators.hpp"

namespace noisygen {

struct ClosureStatus {
  enum class Kind { Empty, Finite, Infinite };

  Kind kind = Kind::Empty;
  std::size_t size = 0;

  static ClosureStatus of(const ClosureResult& closure);

  /// "empty", "finite:<n>" or "infinite".
  std::string to_string() const;

  bool operator==(const ClosureStatus&) const = default;
};

struct TraceStep {
  std::size_t t = 0;
  Element x;
  Element z;
  bool correct = false;
  ClosureStatus closure;
  std::optional<std::size_t> chain_index;
  bool truncated = false;

  bool operator==(const TraceStep&) const = default;
};

struct TraceHeader {
  std::string collection;
  NoiseLevel noise = 0;
  std::string schedule;
  std::uint64_t seed = 0;
  std::optional<std::size_t> promised_tstar;
  /// The enumeration carries more noise strings than the generator's level.
  bool noise_mismatch = false;

  bool operator==(const TraceHeader&) const = default;
};

struct GameTrace {
  TraceHeader header;
  std::vector<TraceStep> steps;

  bool operator==(const GameTrace&) const = default;
};

/// Plays `steps` rounds: pull x_t, hand the history to the generator, and
/// judge z_t against the enumeration's target (correct iff z_t is in K \ S_t).
/// The closure status is computed for `collection` at `level`.
/// Throws Error when steps == 0.
GameTrace play(const Collection& collection, Generator& generator, Enumeration& enumeration,
               std::size_t steps, NoiseLevel level,
               std::optional<std::size_t> promised_tstar = std::nullopt);

/// Smallest t with every step t..T-1 correct; nullopt ("never within the
/// horizon") when the last step is wrong. Throws Error on an empty trace.
std::optional<std::size_t> settle_time(const GameTrace& trace);

/// The on-disk form:
///
///   #! collection=<name>
///   #! noise=<i>
///   #! schedule=<schedule>
///   #! seed=<seed>
///   #! promised_tstar=<n|none>
///   t=<t> x=(<c>,<k>) z=(<c>,<k>) correct=<0|1> closure=<empty|finite:<n>|infinite>
///
/// A `#! noise_mismatch=1` line follows the header when flagged.
std::string format_trace(const GameTrace& trace);

void write_trace(const GameTrace& trace, const std::string& path);

}  // namespace noisygen
