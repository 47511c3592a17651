#include "fixtures.hpp"

#include <algorithm>

namespace noisygen::fixtures {
namespace {

ElementSet column_prefix(ColumnIndex c, std::uint64_t n) {
  ElementSet out;
  for (std::uint64_t k = 0; k < n; ++k) out.insert(Element::at(c, k));
  return out;
}

}  // namespace

Collection c_ex() {
  return Collection::explicit_family(
      "C_ex", {{"L1", SymbolicLanguage::canonicalize({0}, column_prefix(1, 2))},
               {"L2", SymbolicLanguage::canonicalize({1}, column_prefix(0, 2))}});
}

Collection c_sh() {
  const ElementSet f = column_prefix(2, 4);
  return Collection::explicit_family("C_sh", {{"M1", SymbolicLanguage::canonicalize({0}, f)},
                                              {"M2", SymbolicLanguage::canonicalize({1}, f)}});
}

Collection singleton_l1() {
  return Collection::explicit_family("L1_only",
                                     {{"L1", SymbolicLanguage::canonicalize({0}, column_prefix(1, 2))}});
}

Collection columns() { return Collection::column_family("columns"); }

std::vector<Collection> chain_gadgets() {
  std::vector<Collection> levels;
  std::vector<NamedLanguage> languages;
  for (std::size_t j = 0; j < 3; ++j) {
    const ElementSet shared = column_prefix(6 + j, 2 * j + 2);
    for (const ColumnIndex block : {2 * j, 2 * j + 1}) {
      languages.push_back({"A" + std::to_string(block), SymbolicLanguage::canonicalize({block}, shared)});
    }
    levels.push_back(Collection::explicit_family("D_" + std::to_string(j), languages));
  }
  return levels;
}

std::unique_ptr<Generator> fresh_column_generator() {
  return std::make_unique<FunctionGenerator>("fresh-column", [](std::span<const Element> history) {
    return Element::at(100 + (history.empty() ? 0 : history.size() - 1), 0);
  });
}

std::unique_ptr<Generator> inside_generator() {
  return std::make_unique<FunctionGenerator>("ladder-inside", [](std::span<const Element> history) {
    ColumnIndex smallest = 0;
    if (!history.empty()) {
      smallest = std::min_element(history.begin(), history.end(), [](Element a, Element b) {
                   return a.column() < b.column();
                 })->column();
    }
    return Element::at(smallest, 1);
  });
}

}  // namespace noisygen::fixtures
