#include "noisygen/generators.hpp"

#include <algorithm>

#include "noisygen/error.hpp"

namespace noisygen {

GeneratorState::GeneratorState(std::span<const Element> history) {
  for (const Element x : history) receive(x);
}

void GeneratorState::receive(Element x) {
  history_.push_back(x);
  sample_.insert(x);
}

Element closure_generator_step(const Collection& collection, NoiseLevel level,
                               const GeneratorState& state) {
  const auto closure = noisy_closure(collection, state.sample(), level);
  if (const auto z = smallest_member_excluding(closure.set(), state.sample())) return *z;
  return smallest_element_excluding(state.sample());
}

ClosureGenerator::ClosureGenerator(std::shared_ptr<const Collection> collection, NoiseLevel level)
    : collection_(std::move(collection)), level_(level) {
  if (!collection_) throw Error("ClosureGenerator requires a collection");
}

GeneratorOutput ClosureGenerator::next(const GeneratorState& state) {
  return {closure_generator_step(*collection_, level_, state), std::nullopt, false};
}

std::string ClosureGenerator::name() const {
  return "closure(" + collection_->name() + ",i=" + std::to_string(level_) + ")";
}

namespace {

void check_nested(const std::vector<Collection>& levels) {
  if (levels.empty()) throw Error("chain must contain at least one collection");
  for (const auto& c : levels) {
    if (c.is_columns()) throw Error("chain levels must be explicit collections");
  }
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    for (const auto& named : levels[j].languages()) {
      if (!levels[j + 1].contains(named.language)) {
        throw Error("chain is not nested: language '" + named.name + "' of level " +
                    std::to_string(j) + " is missing from level " + std::to_string(j + 1));
      }
    }
  }
}

}  // namespace

Chain::Chain(std::vector<Collection> levels, std::vector<std::size_t> settle_times)
    : levels_(std::move(levels)), settle_times_(std::move(settle_times)) {}

Chain Chain::build(std::vector<Collection> levels, NoiseLevel level, std::size_t max_size) {
  check_nested(levels);
  std::vector<std::size_t> settle;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const auto report = noisy_closure_dimension(levels[j], level, max_size);
    const auto value = report.certified_value();
    if (!value) {
      throw Error("chain level " + std::to_string(j) + ": settle time not certifiable at this budget");
    }
    settle.push_back(*value);
  }
  return Chain(std::move(levels), std::move(settle));
}

Chain Chain::with_settle_times(std::vector<Collection> levels, std::vector<std::size_t> settle_times) {
  check_nested(levels);
  if (settle_times.size() != levels.size()) throw Error("one settle time per chain level required");
  return Chain(std::move(levels), std::move(settle_times));
}

ChainIndex chain_index(std::span<const std::size_t> settle_times, std::size_t t) {
  ChainIndex out;
  const std::size_t last = std::min(t, settle_times.size() - 1);
  for (std::size_t j = 0; j <= last; ++j) {
    if (settle_times[j] <= t) out.index = j;
  }
  out.truncated = t >= settle_times.size();
  return out;
}

GeneratorOutput chain_generator_step(const Chain& chain, NoiseLevel level, const GeneratorState& state) {
  const auto j = chain_index(chain.settle_times(), state.time());
  return {closure_generator_step(chain.at(j.index), level, state), j.index, j.truncated};
}

ChainGenerator::ChainGenerator(std::shared_ptr<const Chain> chain, NoiseLevel level)
    : chain_(std::move(chain)), level_(level) {
  if (!chain_) throw Error("ChainGenerator requires a chain");
}

GeneratorOutput ChainGenerator::next(const GeneratorState& state) {
  return chain_generator_step(*chain_, level_, state);
}

std::string ChainGenerator::name() const {
  return "chain(" + std::to_string(chain_->size()) + " levels,i=" + std::to_string(level_) + ")";
}

CertifiedGenerator uniform_noise_dependent(std::shared_ptr<const Collection> collection,
                                           NoiseLevel n_star, std::size_t max_size) {
  const auto report = noisy_closure_dimension(*collection, n_star, max_size);
  const auto value = report.certified_value();
  if (!value) throw Error("settle time not certifiable at this budget");
  return {std::make_unique<ClosureGenerator>(std::move(collection), n_star), *value};
}

CertifiedGenerator nonuniform_noise_dependent(std::shared_ptr<const Chain> chain, NoiseLevel n_star,
                                              const SymbolicLanguage& target, std::size_t target_index) {
  if (target_index >= chain->size()) {
    throw Error("target index " + std::to_string(target_index) + " is beyond the chain");
  }
  if (!chain->at(target_index).contains(target)) {
    throw Error("target is not in chain level " + std::to_string(target_index));
  }
  const std::size_t promised = std::max(target_index, chain->settle_times()[target_index]);
  return {std::make_unique<ChainGenerator>(std::move(chain), n_star), promised};
}

}  // namespace noisygen
