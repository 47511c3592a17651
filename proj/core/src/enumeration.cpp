#include "noisygen/enumeration.hpp"

#include <charconv>
#include <limits>
#include <set>

#include "noisygen/error.hpp"

namespace noisygen {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("draw_below: empty range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

Schedule Schedule::parse(std::string_view text) {
  if (text == "prefix") return prefix();
  if (text == "random") return random();
  constexpr std::string_view tag = "interleave:";
  if (text.substr(0, tag.size()) == tag) {
    std::vector<std::size_t> positions;
    auto rest = text.substr(tag.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error("malformed interleave position '" + std::string(token) + "'");
      }
      positions.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return interleave(std::move(positions));
  }
  throw Error("unknown schedule '" + std::string(text) + "' (expected prefix, interleave:P,.. or random)");
}

std::string Schedule::to_string() const {
  switch (kind) {
    case Kind::Prefix:
      return "prefix";
    case Kind::Random:
      return "random";
    case Kind::Interleave: {
      std::string out = "interleave:";
      for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(positions[j]);
      }
      return out;
    }
  }
  return "?";
}

Enumeration::Enumeration(SymbolicLanguage target, std::vector<Element> noise, Schedule schedule,
                         std::uint64_t seed)
    : target_(std::move(target)),
      noise_(std::move(noise)),
      schedule_(std::move(schedule)),
      seed_(seed),
      rng_(seed),
      cursor_(target_.as_set()) {
  std::set<Element> seen;
  for (const Element e : noise_) {
    if (target_.contains(e)) throw Error("noise must lie outside the target: " + noisygen::to_string(e));
    if (!seen.insert(e).second) throw Error("duplicate noise string " + noisygen::to_string(e));
  }

  switch (schedule_.kind) {
    case Schedule::Kind::Prefix:
      for (std::size_t j = 0; j < noise_.size(); ++j) resolved_positions_.push_back(j);
      break;
    case Schedule::Kind::Interleave:
      if (schedule_.positions.size() != noise_.size()) {
        throw Error("interleave needs one position per noise string");
      }
      resolved_positions_ = schedule_.positions;
      break;
    case Schedule::Kind::Random: {
      const std::uint64_t span = kShuffleChunk * (noise_.size() + 1);
      std::set<std::size_t> taken;
      for (std::size_t j = 0; j < noise_.size(); ++j) {
        std::size_t p = 0;
        do {
          p = draw_below(rng_, span);
        } while (taken.contains(p));
        taken.insert(p);
        resolved_positions_.push_back(p);
      }
      break;
    }
  }
  for (std::size_t j = 0; j < noise_.size(); ++j) {
    if (!noise_at_.emplace(resolved_positions_[j], noise_[j]).second) {
      throw Error("interleave positions must be distinct");
    }
  }
}

Element Enumeration::next_target_element() {
  if (schedule_.kind != Schedule::Kind::Random) return *cursor_.next();
  if (chunk_.empty()) {
    std::vector<Element> chunk;
    for (std::size_t k = 0; k < kShuffleChunk; ++k) chunk.push_back(*cursor_.next());
    for (std::size_t k = chunk.size(); k > 1; --k) {
      std::swap(chunk[k - 1], chunk[draw_below(rng_, k)]);
    }
    chunk_.assign(chunk.begin(), chunk.end());
  }
  const Element e = chunk_.front();
  chunk_.pop_front();
  return e;
}

Element Enumeration::next() {
  const std::size_t position = emitted_++;
  if (const auto it = noise_at_.find(position); it != noise_at_.end()) return it->second;
  return next_target_element();
}

Enumeration build_enumeration(const SymbolicLanguage& target, std::vector<Element> noise,
                              Schedule schedule, std::uint64_t seed) {
  return Enumeration(target, std::move(noise), std::move(schedule), seed);
}

}  // namespace noisygen
