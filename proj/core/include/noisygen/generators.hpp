#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noisygen/closure.hpp"
#include "noisygen/dimension.hpp"

namespace noisygen {

/// The strings received so far, x_0..x_t, and their set S_t.
class GeneratorState {
 public:
  GeneratorState() = default;
  explicit GeneratorState(std::span<const Element> history);

  void receive(Element x);

  std::span<const Element> history() const noexcept { return history_; }
  const SampleSet& sample() const noexcept { return sample_; }
  bool empty() const noexcept { return history_.empty(); }

  /// Index of the latest string; requires a nonempty history.
  std::size_t time() const noexcept { return history_.size() - 1; }

 private:
  std::vector<Element> history_;
  SampleSet sample_;
};

struct GeneratorOutput {
  Element z;
  /// Set by chain generators: the collection index j_t used at this step.
  std::optional<std::size_t> chain_index;
  /// Set when j_t was clamped to the end of a finite chain prefix.
  bool truncated = false;
};

/// A generator maps a finite history to an output string.
class Generator {
 public:
  virtual ~Generator() = default;

  virtual GeneratorOutput next(const GeneratorState& state) = 0;

  /// Drops any state carried between calls. Built-in generators are pure
  /// functions of the history and need nothing here.
  virtual void reset() {}

  virtual std::string name() const = 0;
};

/// Wraps a pure function of the history.
class FunctionGenerator final : public Generator {
 public:
  using Function = std::function<Element(std::span<const Element>)>;

  FunctionGenerator(std::string name, Function function)
      : name_(std::move(name)), function_(std::move(function)) {}

  GeneratorOutput next(const GeneratorState& state) override {
    return {function_(state.history()), std::nullopt, false};
  }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Function function_;
};

/// The closure generator: the smallest element of closure(S_t) \ S_t, or the
/// smallest unseen universe element when that set is empty.
Element closure_generator_step(const Collection& collection, NoiseLevel level,
                               const GeneratorState& state);

class ClosureGenerator final : public Generator {
 public:
  ClosureGenerator(std::shared_ptr<const Collection> collection, NoiseLevel level);

  GeneratorOutput next(const GeneratorState& state) override;
  std::string name() const override;

  const Collection& collection() const noexcept { return *collection_; }
  NoiseLevel level() const noexcept { return level_; }

 private:
  std::shared_ptr<const Collection> collection_;
  NoiseLevel level_;
};

/// A finite prefix C_0 <= C_1 <= ... of nested explicit collections with
/// their settle times t*(C_j), taken from certified dimension values.
class Chain {
 public:
  /// Throws Error when the levels are not nested, the list is empty, or a
  /// settle time cannot be certified within `max_size`.
  static Chain build(std::vector<Collection> levels, NoiseLevel level,
                     std::size_t max_size = kDefaultDimensionBudget);

  /// Builds a chain from given settle times without running the dimension
  /// search. Nesting is still checked.
  static Chain with_settle_times(std::vector<Collection> levels, std::vector<std::size_t> settle_times);

  std::size_t size() const noexcept { return levels_.size(); }
  const Collection& at(std::size_t j) const { return levels_.at(j); }
  std::span<const std::size_t> settle_times() const noexcept { return settle_times_; }

 private:
  Chain(std::vector<Collection> levels, std::vector<std::size_t> settle_times);

  std::vector<Collection> levels_;
  std::vector<std::size_t> settle_times_;
};

struct ChainIndex {
  std::size_t index = 0;
  bool truncated = false;
};

/// j_t = max({0} u {j <= t : t*(C_j) <= t}) over the stored prefix;
/// `truncated` when t reaches past the prefix.
ChainIndex chain_index(std::span<const std::size_t> settle_times, std::size_t t);

GeneratorOutput chain_generator_step(const Chain& chain, NoiseLevel level, const GeneratorState& state);

class ChainGenerator final : public Generator {
 public:
  ChainGenerator(std::shared_ptr<const Chain> chain, NoiseLevel level);

  GeneratorOutput next(const GeneratorState& state) override;
  std::string name() const override;

 private:
  std::shared_ptr<const Chain> chain_;
  NoiseLevel level_;
};

struct CertifiedGenerator {
  std::unique_ptr<Generator> generator;
  /// Every output at a time t > promised_tstar is correct.
  std::size_t promised_tstar = 0;
};

/// Closure generator at level n_star with t* = NC_{n_star}(C). Throws Error
/// ("settle time not certifiable at this budget") on an AtLeast verdict.
CertifiedGenerator uniform_noise_dependent(std::shared_ptr<const Collection> collection,
                                           NoiseLevel n_star,
                                           std::size_t max_size = kDefaultDimensionBudget);

/// Chain generator with t* = max(j, t*(C_j)) for a target in C_j.
CertifiedGenerator nonuniform_noise_dependent(std::shared_ptr<const Chain> chain, NoiseLevel n_star,
                                              const SymbolicLanguage& target, std::size_t target_index);

}  // namespace noisygen
