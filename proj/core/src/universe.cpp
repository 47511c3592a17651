#include "noisygen/universe.hpp"

#include <charconv>
#include <cmath>

namespace noisygen {

Element Element::from_id(std::uint64_t id) {
  // Largest s with s(s+1)/2 <= id; the floating estimate is corrected below.
  auto s = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(id) + 1.0L) - 1.0L) / 2.0L);
  while (s * (s + 1) / 2 > id) --s;
  while ((s + 1) * (s + 2) / 2 <= id) ++s;
  const std::uint64_t index = id - s * (s + 1) / 2;
  return Element(s - index, index, id);
}

std::string to_string(Element e) {
  return "(" + std::to_string(e.column()) + "," + std::to_string(e.index()) + ")";
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Element> parse_element(std::string_view token) {
  if (token.size() < 5 || token.front() != '(' || token.back() != ')') return std::nullopt;
  const auto body = token.substr(1, token.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const auto column = parse_u64(body.substr(0, comma));
  const auto index = parse_u64(body.substr(comma + 1));
  if (!column || !index) return std::nullopt;
  return Element::at(*column, *index);
}

std::string to_string(const ElementSet& elements) {
  std::string out = "{";
  bool first = true;
  for (const Element e : elements) {
    if (!first) out += ',';
    out += to_string(e);
    first = false;
  }
  return out + "}";
}

std::string to_string(const ColumnSet& columns) {
  std::string out = "{";
  bool first = true;
  for (const ColumnIndex c : columns) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace noisygen
