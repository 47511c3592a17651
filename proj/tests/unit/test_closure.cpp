#include <bit>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "instances.hpp"
#include "noisygen/error.hpp"
#include "window_oracle.hpp"

using namespace noisygen;
using testing::el;
using testing::set_of;

TEST_SUITE("closure") {
  TEST_CASE("closure of a single column element at level 1") {
    const auto c = fixtures::c_ex();
    const auto r = noisy_closure(c, set_of({{0, 2}}), 1);
    REQUIRE(r.is_finite());
    CHECK_FALSE(r.is_empty_consistent());
    CHECK(r.set() == SetDescriptor::finite(set_of({{0, 0}, {0, 1}, {1, 0}, {1, 1}})));
    CHECK(consistent_indices(c, set_of({{0, 2}}), 1) == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("at level 0 only L1 survives") {
    const auto r = noisy_closure(fixtures::c_ex(), set_of({{0, 2}}), 0);
    CHECK_FALSE(r.is_finite());
    CHECK(r.set() == fixtures::c_ex().languages()[0].language.as_set());
  }

  TEST_CASE("no consistent language gives the empty set") {
    const auto r = noisy_closure(fixtures::c_ex(), set_of({{5, 0}, {6, 0}}), 1);
    CHECK(r.is_empty_consistent());
    CHECK(r.set().empty());
  }

  TEST_CASE("empty sample intersects the whole collection") {
    const auto r = noisy_closure(fixtures::c_ex(), {}, 0);
    CHECK(r.set() == SetDescriptor::finite(set_of({{0, 0}, {0, 1}, {1, 0}, {1, 1}})));
  }

  TEST_CASE("column closed form examples") {
    CHECK(column_closure(set_of({{0, 0}, {0, 1}, {2, 5}}), 1).set() ==
          SymbolicLanguage::canonicalize({0}).as_set());
    CHECK(column_closure(set_of({{3, 1}}), 0).set() == SymbolicLanguage::canonicalize({3}).as_set());
    CHECK(column_closure({}, 2).set().empty());
    CHECK(noisy_closure(fixtures::columns(), set_of({{3, 1}}), 0) == column_closure(set_of({{3, 1}}), 0));
  }

  TEST_CASE("column closed form equals the explicit-union oracle") {
    // Every S with at most 4 elements from columns 0..m-1, rows 0..1.
    for (std::size_t m = 2; m <= 6; ++m) {
      const auto unions = oracle::column_unions(m);
      std::vector<Element> cells;
      for (ColumnIndex c = 0; c < m; ++c) for (std::uint64_t k = 0; k < 2; ++k) cells.push_back(el(c, k));
      const std::size_t n = cells.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > 4) continue;
        SampleSet s;
        for (std::size_t b = 0; b < n; ++b) if (mask & (1u << b)) s.insert(cells[b]);
        for (NoiseLevel i = 0; i <= 2; ++i) {
          const auto formula = column_closure(s, i);
          const auto window = oracle::window_closure(unions, s, i, 80);
          CHECK(window.members == oracle::window_members(formula.set(), 80));
          CHECK(window.infinite == !formula.is_finite());
        }
      }
    }
  }

  TEST_CASE("saturation") {
    const auto c = fixtures::c_ex();
    CHECK(saturate(c, set_of({{0, 2}}), 1) == set_of({{0, 2}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    const auto full = set_of({{0, 2}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(saturate(c, full, 1) == full);
    CHECK_THROWS_WITH_AS(saturate(c, set_of({{0, 2}}), 0), "saturation requires finite closure", Error);
  }

  TEST_CASE("containment and window agreement on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
      const auto c = instances::random_collection(rng, {}, "R");
      const auto s = instances::random_sample(rng, 6, 6, 5);
      const NoiseLevel i = instances::uniform(rng, 0, 2);
      const auto r = noisy_closure(c, s, i);
      const auto window = oracle::window_closure(oracle::languages_of(c), s, i, 150);
      CHECK(window.empty_consistent == r.is_empty_consistent());
      CHECK(window.infinite == !r.is_finite());
      CHECK(window.members == oracle::window_members(r.set(), 150));
      for (const auto index : consistent_indices(c, s, i)) {
        for (const Element e : oracle::window_members(r.set(), 300)) CHECK(c.languages()[index].language.contains(e));
      }
    }
  }

  TEST_CASE("consistent_subset for the column family") {
    const auto columns = fixtures::columns();
    // C(S,2) inside C(A,1) is the shrink guarantee on the column example.
    CHECK(consistent_subset(columns, set_of({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2, set_of({{0, 0}, {1, 0}}), 1));
    CHECK_FALSE(consistent_subset(columns, set_of({{0, 0}}), 1, set_of({{0, 0}, {1, 0}}), 0));
    CHECK(consistent_subset(fixtures::c_ex(), set_of({{0, 2}}), 0, set_of({{0, 2}}), 1));
  }
}
