#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "instances.hpp"
#include "noisygen/enumeration.hpp"
#include "noisygen/error.hpp"

using namespace noisygen;
using testing::el;

namespace {

SymbolicLanguage l1() { return SymbolicLanguage::canonicalize({0}, testing::set_of({{1, 0}, {1, 1}})); }

std::vector<Element> take(Enumeration& e, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(e.next());
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("no noise gives the canonical order") {
    Enumeration e(l1(), {}, Schedule::prefix(), 0);
    CHECK(take(e, 6) == enumerate_canonical(l1(), 6));
  }

  TEST_CASE("prefix schedule puts noise first") {
    Enumeration e(l1(), {el(2, 0)}, Schedule::prefix(), 0);
    const auto xs = take(e, 3);
    CHECK(xs[0] == el(2, 0));
    CHECK(xs[1] == el(0, 0));
  }

  TEST_CASE("interleave schedule") {
    Enumeration e(l1(), {el(2, 0), el(3, 0)}, Schedule::parse("interleave:1,3"), 0);
    const auto xs = take(e, 5);
    CHECK(xs[1] == el(2, 0));
    CHECK(xs[3] == el(3, 0));
    CHECK(e.noise_positions() == std::vector<std::size_t>{1, 3});
  }

  TEST_CASE("noise inside the target is rejected") {
    CHECK_THROWS_WITH_AS(Enumeration(l1(), {el(0, 0)}, Schedule::prefix(), 0),
                         doctest::Contains("noise must lie outside the target"), Error);
    CHECK_THROWS_AS(Enumeration(l1(), {el(2, 0), el(2, 0)}, Schedule::prefix(), 0), Error);
    CHECK_THROWS_AS(Enumeration(l1(), {el(2, 0)}, Schedule::parse("interleave:1,2"), 0), Error);
  }

  TEST_CASE("schedule text") {
    CHECK(Schedule::parse("prefix") == Schedule::prefix());
    CHECK(Schedule::parse("random") == Schedule::random());
    CHECK(Schedule::parse("interleave:0,4").to_string() == "interleave:0,4");
    CHECK_THROWS_AS(Schedule::parse("sometimes"), Error);
    CHECK_THROWS_AS(Schedule::parse("interleave:a"), Error);
    CHECK_THROWS_AS(Schedule::parse("interleave:1,,2"), Error);
    CHECK(Schedule::parse("interleave:").positions.empty());
  }

  TEST_CASE("random schedules are valid and reproducible") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const auto target = instances::random_language(rng, {});
      std::vector<Element> noise;
      for (std::uint64_t c = 20; noise.size() < trial % 4; ++c) noise.push_back(el(c, 0));
      const std::uint64_t seed = rng();
      Enumeration a(target, noise, Schedule::random(), seed);
      Enumeration b(target, noise, Schedule::random(), seed);
      const auto xs = take(a, 500);
      CHECK(xs == take(b, 500));
      const ElementSet distinct(xs.begin(), xs.end());
      CHECK(distinct.size() == xs.size());
      std::size_t outside = 0;
      for (const Element x : xs) outside += target.contains(x) ? 0 : 1;
      CHECK(outside == noise.size());
      // Every one of the first 100 canonical members shows up within 500 steps.
      for (const Element m : enumerate_canonical(target, 100)) CHECK(distinct.contains(m));
    }
  }

  TEST_CASE("draw_below stays in range") {
    std::mt19937_64 rng(1);
    for (std::uint64_t bound : {1ull, 2ull, 7ull, 1000ull}) {
      for (int i = 0; i < 200; ++i) CHECK(draw_below(rng, bound) < bound);
    }
  }
}
