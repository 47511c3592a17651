// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "noisygen/error.hpp"
#include "noisygen/game.hpp"
#include "noisygen/refutation.hpp"
#include "noisygen/shrink.hpp"
#include "window_oracle.hpp"

using namespace noisygen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string data_file(const std::string& name) { return std::string(NOISYGEN_DATA_DIR) + "/collections/" + name; }

std::string run(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = cli::run_cli(args, out, err);
  if (code) *code = rc;
  return out.str() + err.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "verified: a/b" -> a
std::size_t verified_errors(const std::string& output) {
  const auto at = output.find("verified: ");
  if (at == std::string::npos) return 0;
  return std::stoul(output.substr(at + 10));
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

ElementSet exceptions_of(const Collection& c) {
  ElementSet out;
  for (const auto& named : c.languages()) {
    out.insert(named.language.adds().begin(), named.language.adds().end());
    out.insert(named.language.removes().begin(), named.language.removes().end());
  }
  return out;
}

std::vector<Element> noise_outside(std::mt19937_64& rng, const SymbolicLanguage& target, std::size_t count) {
  std::vector<Element> noise;
  while (noise.size() < count) {
    const Element e = Element::at(draw_below(rng, 8), draw_below(rng, 6));
    if (!target.contains(e) && std::find(noise.begin(), noise.end(), e) == noise.end()) noise.push_back(e);
  }
  return noise;
}

Schedule any_schedule(std::mt19937_64& rng, std::size_t noise_count) {
  switch (draw_below(rng, 3)) {
    case 0:
      return Schedule::prefix();
    case 1:
      return Schedule::random();
    default: {
      std::vector<std::size_t> positions;
      std::size_t next = 0;
      for (std::size_t j = 0; j < noise_count; ++j) positions.push_back(next += draw_below(rng, 6) + (j ? 1 : 0));
      return Schedule::interleave(positions);
    }
  }
}

// ---------------------------------------------------------------------------

Outcome closure_containment() {
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < 200; ++trial) {
    auto rng = seeded(1, trial);
    const Collection c = instances::random_collection(rng, {}, "A");
    const SampleSet s = instances::random_sample(rng, 6, 6, 5);
    const NoiseLevel i = instances::uniform(rng, 0, 2);
    const ClosureResult closure = noisy_closure(c, s, i);
    ElementSet probe = exceptions_of(c);
    for (std::uint64_t id = 0; id <= 500; ++id) probe.insert(Element::from_id(id));
    bool ok = true;
    for (const auto l : consistent_indices(c, s, i)) {
      for (const Element e : probe) {
        if (closure.set().contains(e) && !c.languages()[l].language.contains(e)) ok = false;
      }
    }
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "200 instances, " + std::to_string(failures) + " failures"};
}

Outcome saturation() {
  std::size_t found = 0;
  std::size_t failures = 0;
  for (std::size_t trial = 0; found < 200 && trial < 20000; ++trial) {
    auto rng = seeded(2, trial);
    const Collection c = instances::random_collection(rng, {}, "S");
    const SampleSet s = instances::random_sample(rng, 6, 6, 5);
    const NoiseLevel i = instances::uniform(rng, 0, 2);
    const ClosureResult closure = noisy_closure(c, s, i);
    if (closure.is_empty_consistent() || !closure.is_finite()) continue;
    ++found;
    SampleSet saturated = s;
    saturated.insert(closure.set().adds().begin(), closure.set().adds().end());
    if (consistent_indices(c, saturated, i) != consistent_indices(c, s, i)) ++failures;
  }
  return {found == 200 && failures == 0,
          std::to_string(found) + " finite-closure instances, " + std::to_string(failures) + " failures"};
}

struct DimensionSample {
  Collection collection;
  std::vector<DimensionReport> reports;  // levels 0..3
};

const std::vector<DimensionSample>& dimension_samples() {
  static const std::vector<DimensionSample> samples = [] {
    std::vector<DimensionSample> out;
    for (std::size_t trial = 0; trial < 50; ++trial) {
      auto rng = seeded(3, trial);
      DimensionSample sample{instances::random_collection(rng, {}, "D"), {}};
      for (NoiseLevel i = 0; i <= 3; ++i) {
        sample.reports.push_back(nc_dimension(sample.collection, i, kDefaultDimensionBudget, default_pool_depth(i)));
      }
      out.push_back(std::move(sample));
    }
    return out;
  }();
  return samples;
}

Outcome floor_sqrt() {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  for (const auto& sample : dimension_samples()) {
    for (NoiseLevel i = 2; i <= 3; ++i) {
      const auto& lower = sample.reports[i - 1];
      const auto& upper = sample.reports[i];
      if (lower.verdict != DimensionVerdict::Exact || upper.verdict != DimensionVerdict::Exact) continue;
      ++pairs;
      const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(upper.value)));
      if (lower.value < root) ++failures;
    }
  }
  return {pairs > 0 && failures == 0,
          "50 collections, " + std::to_string(pairs) + " Exact pairs, " + std::to_string(failures) + " failures"};
}

Outcome shrink_construction() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& sample : dimension_samples()) {
    for (NoiseLevel i = 2; i <= 3; ++i) {
      const auto& report = sample.reports[i];
      if (report.verdict == DimensionVerdict::NoWitness) continue;
      for (std::size_t k = 1; k <= 3 && k * k <= report.witness.size(); ++k) {
        SampleSet s;
        for (const Element e : report.witness) {
          if (s.size() < k * k) s.insert(e);
        }
        ++checked;
        try {
          const auto r = shrink_witness(sample.collection, i, s);
          const bool ok = r.set.size() <= k && qualifies(sample.collection, r.set, i - 1) &&
                          (r.branch == ShrinkBranch::Direct || consistent_subset(sample.collection, s, i, r.set, 1));
          failures += ok ? 0 : 1;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
  }
  // The column family supplies the constructed branch.
  const SampleSet grid{Element::at(0, 0), Element::at(0, 1), Element::at(1, 1), Element::at(1, 2)};
  const auto r = shrink_witness(fixtures::columns(), 2, grid);
  ++checked;
  if (!(r.branch == ShrinkBranch::Constructed && r.set.size() <= 2 && qualifies(fixtures::columns(), r.set, 1) &&
        consistent_subset(fixtures::columns(), grid, 2, r.set, 1))) {
    ++failures;
  }
  return {checked > 1 && failures == 0,
          std::to_string(checked) + " witnesses, " + std::to_string(failures) + " failures"};
}

Outcome fixed_dimensions() {
  // Oracle first: exhaustive search over ids 0..60, membership queries only.
  const auto ex0 = oracle::window_dimension(oracle::languages_of(fixtures::c_ex()), 0, 60);
  const auto ex1 = oracle::window_dimension(oracle::languages_of(fixtures::c_ex()), 1, 60);
  const auto sh2 = oracle::window_dimension(oracle::languages_of(fixtures::c_sh()), 2, 60);
  const bool oracle_ok = ex0 == 4u && ex1 == 6u && sh2 == 8u;

  const auto r0 = noisy_closure_dimension(fixtures::c_ex(), 0);
  const auto r1 = noisy_closure_dimension(fixtures::c_ex(), 1);
  const auto r2 = noisy_closure_dimension(fixtures::c_sh(), 2);
  const bool ok = oracle_ok && verdict_line(r0) == "Exact 4" && verdict_line(r1) == "Exact 6" &&
                  verdict_line(r2) == "Exact 8";
  return {ok, "NC_0(C_ex)=" + verdict_line(r0) + " NC_1(C_ex)=" + verdict_line(r1) + " NC_2(C_sh)=" +
                  verdict_line(r2) + " (window oracle " + std::to_string(ex0.value_or(0)) + "," +
                  std::to_string(ex1.value_or(0)) + "," + std::to_string(sh2.value_or(0)) + ")"};
}

Outcome uniform_settle() {
  auto c = std::make_shared<const Collection>(fixtures::c_ex());
  std::size_t violations = 0;
  std::size_t runs = 0;
  for (const auto& named : c->languages()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto rng = seeded(6, runs);
      const auto noise = noise_outside(rng, named.language, draw_below(rng, 2));
      Enumeration e(named.language, noise, any_schedule(rng, noise.size()), seed);
      ClosureGenerator g(c, 1);
      const auto trace = play(*c, g, e, 20, 1, 6);
      for (const auto& s : trace.steps) {
        if (s.t > 6 && !s.correct) ++violations;
      }
      ++runs;
    }
  }
  return {violations == 0, std::to_string(runs) + " runs, " + std::to_string(violations) + " violations"};
}

Outcome chain_settle() {
  auto levels = fixtures::chain_gadgets();
  std::vector<std::size_t> oracle_values;
  for (const auto& level : levels) {
    oracle_values.push_back(oracle::window_dimension(oracle::languages_of(level), 1, 100).value_or(0));
  }
  const bool increasing = oracle_values.size() == 3 && oracle_values[0] < oracle_values[1] &&
                          oracle_values[1] < oracle_values[2];

  const auto chain = std::make_shared<const Chain>(Chain::build(levels, 1));
  bool settle_match = true;
  for (std::size_t j = 0; j < chain->size(); ++j) settle_match = settle_match && chain->settle_times()[j] == oracle_values[j];

  std::size_t runs = 0;
  std::size_t violations = 0;
  for (std::size_t j = 0; j < chain->size(); ++j) {
    for (const auto& named : chain->at(j).languages()) {
      const auto certified = nonuniform_noise_dependent(chain, 1, named.language, j);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto rng = seeded(7, runs);
        const auto noise = noise_outside(rng, named.language, draw_below(rng, 2));
        Enumeration e(named.language, noise, any_schedule(rng, noise.size()), seed);
        ChainGenerator g(chain, 1);
        const auto trace = play(chain->at(chain->size() - 1), g, e, certified.promised_tstar + 15, 1,
                                certified.promised_tstar);
        for (const auto& s : trace.steps) {
          if (s.t >= certified.promised_tstar && !s.correct) ++violations;
        }
        ++runs;
      }
    }
  }
  std::string values;
  for (const auto v : oracle_values) values += (values.empty() ? "" : ",") + std::to_string(v);
  return {increasing && settle_match && violations == 0,
          "NC_1 per level " + values + ", " + std::to_string(runs) + " runs, " + std::to_string(violations) +
              " violations"};
}

Outcome separation() {
  std::size_t settled_at_zero = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto rng = seeded(8, seed);
    std::string target;
    for (ColumnIndex c = 0; c < 4; ++c) {
      if (draw_below(rng, 2) == 1 || (c == 3 && target.empty())) target += (target.empty() ? "" : ",") + std::to_string(c);
    }
    int code = 0;
    const std::string out = run({"play", "--collection", data_file("columns.col"), "--target", target, "--noise", "0",
                                 "--steps", "30", "--schedule", "random", "--seed", std::to_string(seed)},
                                &code);
    if (code == 0 && out.find("settle=0 ") != std::string::npos) ++settled_at_zero;
  }
  int code6 = 0;
  int code12 = 0;
  const std::string h6 = run({"refute", "--horizon", "6"}, &code6);
  const std::string h12 = run({"refute", "--horizon", "12"}, &code12);
  const std::size_t e6 = verified_errors(h6);
  const std::size_t e12 = verified_errors(h12);
  const bool ok = settled_at_zero == 20 && code6 == 0 && code12 == 0 && e6 >= 5 && e12 >= 8 &&
                  h6.find("case: ") != std::string::npos && run({"refute", "--horizon", "6"}) == h6;
  return {ok, std::to_string(settled_at_zero) + "/20 noiseless plays settle at 0; refuted prefixes " +
                  std::to_string(e6) + " at horizon 6, " + std::to_string(e12) + " at horizon 12"};
}

Outcome algorithm1_check() {
  const auto g = fixtures::fresh_column_generator();
  const auto plan = make_refutation_plan(5);
  std::vector<std::size_t> scattered{1, 2, 3, 4, 5};
  const auto state = algorithm1(*g, plan, scattered, 5);
  std::vector<std::size_t> ladder;
  for (const auto j : state.accepted) ladder.push_back(scattered[j]);
  const auto check = verify_refutation(*g, plan, state.language, ladder, 0);
  const bool ok = state.accepted.size() == 5 && check.errors.size() == 5 && check.errors == ladder &&
                  check.invalid_prefixes.empty();
  return {ok, "|C|=" + std::to_string(state.accepted.size()) + ", errors on " + std::to_string(check.errors.size()) +
                  " accepted prefixes"};
}

Outcome column_closed_form() {
  // Languages of the family are unions of columns, so only the number of
  // elements per column matters; each count vector is placed at rows 0..n-1
  // and again at scattered rows to check that placement is irrelevant.
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::mt19937_64 rng(10);
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto unions = oracle::column_unions(m);
    std::vector<std::size_t> counts(m, 0);
    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t column, std::size_t budget) {
      if (column == m) {
        for (int placement = 0; placement < 2; ++placement) {
          SampleSet s;
          for (ColumnIndex c = 0; c < m; ++c) {
            std::set<std::uint64_t> rows;
            while (rows.size() < counts[c]) rows.insert(placement == 0 ? rows.size() : draw_below(rng, 6));
            for (const auto k : rows) s.insert(Element::at(c, k));
          }
          for (NoiseLevel i = 0; i <= 2; ++i) {
            const auto formula = column_closure(s, i);
            const auto window = oracle::window_closure(unions, s, i, 120);
            ++compared;
            if (window.members != oracle::window_members(formula.set(), 120) ||
                window.infinite != !formula.is_finite()) {
              ++mismatches;
            }
          }
        }
        return;
      }
      for (std::size_t n = 0; n <= budget; ++n) {
        counts[column] = n;
        visit(column + 1, budget - n);
      }
      counts[column] = 0;
    };
    visit(0, 4);
  }
  return {mismatches == 0, std::to_string(compared) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "noisygen-acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands{
      {"play", "--collection", data_file("c_ex.col"), "--target", "L2", "--noise", "1", "--steps", "25",
       "--noise-strings", "(4,1)", "--schedule", "random", "--seed", "42"},
      {"play", "--collection", data_file("columns.col"), "--target", "1,3", "--noise", "0", "--steps", "25",
       "--schedule", "random", "--seed", "9"},
      {"dim", "--collection", data_file("c_sh.col"), "--noise", "2"},
      {"refute", "--horizon", "9", "--seed", "4"},
      {"check", "--suite", "all", "--trials", "4", "--seed", "5"},
  };
  std::size_t identical = 0;
  for (std::size_t n = 0; n < commands.size(); ++n) {
    std::string outputs[2];
    for (int round = 0; round < 2; ++round) {
      auto args = commands[n];
      const auto file = dir / ("run" + std::to_string(n) + "_" + std::to_string(round) + ".out");
      std::filesystem::remove(file);
      if (args[0] == "play") {
        args.push_back("--trace");
        args.push_back(file.string());
      }
      const std::string printed = run(args);
      std::ofstream(file, std::ios::app | std::ios::binary) << printed;
      outputs[round] = slurp(file);
    }
    if (outputs[0] == outputs[1] && !outputs[0].empty()) ++identical;
  }
  return {identical == commands.size(),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*check)();
    double limit_seconds;  // 0: no limit
  };
  const Criterion criteria[] = {
      {1, "closure containment", closure_containment, 10.0},
      {2, "saturation stability", saturation, 0.0},
      {3, "floor-sqrt bound", floor_sqrt, 60.0},
      {4, "shrink construction", shrink_construction, 0.0},
      {5, "fixed-collection dimensions", fixed_dimensions, 0.0},
      {6, "uniform settle guarantee", uniform_settle, 0.0},
      {7, "chain settle guarantee", chain_settle, 0.0},
      {8, "separation demo", separation, 5.0},
      {9, "construction loop on scattered answers", algorithm1_check, 0.0},
      {10, "column closed form", column_closed_form, 0.0},
      {11, "determinism", determinism, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << outcome.detail
              << "; " << timing;
    if (c.limit_seconds > 0.0) std::cout << " of " << c.limit_seconds << "s allowed";
    std::cout << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
