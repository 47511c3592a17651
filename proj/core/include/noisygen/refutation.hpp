#pragma once

// The adversary that defeats any claimed noise-level-1 non-uniform generator
// for the column family. Ladder sets s_1 = {0}, s_2 = {1,2}, s_3 = {3,4,5},
// ... partition the columns; the prefix s'_i lists (c,0) for c in s_i. The
// generator is queried on each prefix with fresh state, and its answers are
// sorted into one of three cases, each with its own language on which the
// generator errs infinitely often. At a finite horizon the cases are decided
// by count thresholds.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "noisygen/generators.hpp"

namespace noisygen {

class RefutationPlan {
 public:
  /// Ladder indices are 1-based: set(1) = {0}.
  const ColumnSet& set(std::size_t i) const { return sets_.at(i - 1); }
  const std::vector<Element>& prefix(std::size_t i) const { return prefixes_.at(i - 1); }
  std::size_t size() const noexcept { return sets_.size(); }

 private:
  friend RefutationPlan make_refutation_plan(std::size_t n);

  std::vector<ColumnSet> sets_;
  std::vector<std::vector<Element>> prefixes_;
};

/// s_i = {i(i-1)/2, ..., i(i+1)/2 - 1}. Throws Error for n == 0.
RefutationPlan make_refutation_plan(std::size_t n);

enum class RefutationCase { Inside, Concentrated, Scattered, Inconclusive };

std::string to_string(RefutationCase c);

struct Thresholds {
  std::size_t inside = 2;
  std::size_t concentration = 2;
  std::size_t scattered = 2;

  /// inside max(2, ceil(n/2)); concentration max(2, ceil(n/3));
  /// scattered max(2, ceil(n/2)).
  static Thresholds defaults(std::size_t horizon);
};

struct CaseReport {
  RefutationCase kind = RefutationCase::Inconclusive;
  /// f_i = column of G(s'_i), stored at position i-1.
  std::vector<ColumnIndex> f_values;
  /// X: ladder indices with f_i in s_i.
  std::vector<std::size_t> inside;
  /// Ladder indices with f_i outside s_i, ascending: the sequence a_0, a_1, ...
  std::vector<std::size_t> outside;
  /// Concentrated case: the ladder index whose set attracts the most f-values,
  /// and Y, the outside indices whose f-value lands in it.
  std::size_t attractor = 0;
  std::vector<std::size_t> attracted;
};

/// Queries `generator` on every prefix of the plan (reset before each query)
/// and classifies the answers.
CaseReport classify_generator(Generator& generator, const RefutationPlan& plan,
                              const Thresholds& thresholds);

/// The column set of the case language. Inside: the union over X of
/// s_i minus f_i. Concentrated: the union of s_j over Y. Throws Error
/// ("use algorithm1") for the scattered case and on an empty result.
ColumnSet build_case_language(const CaseReport& report, const RefutationPlan& plan);

struct Algorithm1State {
  /// Columns of the language built so far.
  ColumnSet language;
  /// Accepted positions into the scattered sequence (0-based).
  std::vector<std::size_t> accepted;
  /// Columns of the generator's answers on accepted prefixes.
  ColumnSet forbidden;
};

using Algorithm1Observer = std::function<void(std::size_t step, const Algorithm1State&)>;

/// Walks a_0, a_1, ... (the ladder sets at `scattered` indices) for
/// `iterations` steps. Step j accepts a_j when a_j avoids the forbidden
/// columns and G(a'_j) falls outside the language; acceptance adds a_j's
/// columns to the language and the column of G(a'_j) to the forbidden set.
/// `observer`, when set, sees the state after every step.
Algorithm1State algorithm1(Generator& generator, const RefutationPlan& plan,
                           std::span<const std::size_t> scattered, std::size_t iterations,
                           const Algorithm1Observer& observer = {});

struct RefutationCheck {
  /// Accepted ladder indices where G(s'_i) lies outside the language.
  std::vector<std::size_t> errors;
  /// Accepted ladder indices whose prefix holds more than the allowed number
  /// of strings outside the language.
  std::vector<std::size_t> invalid_prefixes;
};

/// Replays the generator on each accepted ladder prefix against the column
/// language. `allowed_noise` is 1 for the inside case and 0 otherwise.
/// Throws Error when the language is empty.
RefutationCheck verify_refutation(Generator& generator, const RefutationPlan& plan,
                                  const ColumnSet& language, std::span<const std::size_t> accepted,
                                  std::size_t allowed_noise);

/// Fresh-state query: reset, then answer the prefix.
Element query_fresh(Generator& generator, std::span<const Element> prefix);

}  // namespace noisygen
