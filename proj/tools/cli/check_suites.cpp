#include "check_suites.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "instances.hpp"
#include "noisygen/error.hpp"
#include "noisygen/game.hpp"
#include "noisygen/refutation.hpp"
#include "noisygen/shrink.hpp"
#include "window_oracle.hpp"

namespace noisygen::check {
namespace {

constexpr std::uint64_t kContainmentWindow = 500;
constexpr std::uint64_t kClosureWindow = 200;
constexpr std::uint64_t kPoolWindow = 60;
constexpr std::size_t kBudget = kDefaultDimensionBudget;

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), tag};
  return std::mt19937_64(seq);
}

std::string dump(std::size_t trial, const Collection& collection, const SampleSet& sample,
                 NoiseLevel level, const std::string& detail) {
  std::ostringstream out;
  out << "trial: " << trial << "\nnoise: " << level << "\nset: " << to_string(sample)
      << "\ndetail: " << detail << "\ncollection:\n";
  if (collection.is_columns()) {
    out << "collection " << collection.name() << "\nfamily columns\n";
  } else {
    out << serialize_collection(collection);
  }
  return out.str();
}

void record(PropertyTally& tally, bool ok, const std::string& counterexample) {
  if (ok) {
    ++tally.pass;
  } else {
    ++tally.fail;
    tally.counterexamples.push_back(counterexample);
  }
}

ElementSet exception_elements(const Collection& collection) {
  ElementSet out;
  for (const auto& named : collection.languages()) {
    out.insert(named.language.adds().begin(), named.language.adds().end());
    out.insert(named.language.removes().begin(), named.language.removes().end());
  }
  return out;
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// closure

void closure_trial(SuiteReport& report, std::size_t trial, std::uint64_t seed) {
  auto rng = trial_rng(seed, trial, 1);
  const Collection collection = instances::random_collection(rng, {}, "T" + std::to_string(trial));
  const SampleSet sample = instances::random_sample(rng, 6, 6, 5);
  const NoiseLevel level = instances::uniform(rng, 0, 2);
  const auto fail = [&](const std::string& detail) { return dump(trial, collection, sample, level, detail); };

  const ClosureResult closure = noisy_closure(collection, sample, level);
  const auto consistent = consistent_indices(collection, sample, level);

  {
    ElementSet probe = exception_elements(collection);
    for (std::uint64_t id = 0; id <= kContainmentWindow; ++id) probe.insert(Element::from_id(id));
    std::string detail;
    for (const std::size_t l : consistent) {
      const auto& language = collection.languages()[l];
      for (const Element e : probe) {
        if (closure.set().contains(e) && !language.language.contains(e)) {
          detail = to_string(e) + " in closure but not in " + language.name;
          break;
        }
      }
      if (!detail.empty()) break;
    }
    record(report.property("containment"), detail.empty(), fail(detail));
  }

  {
    const auto wider = consistent_indices(collection, sample, level + 1);
    bool ok = is_subset(consistent, wider);
    if (ok && !consistent.empty()) {
      const auto outer = noisy_closure(collection, sample, level + 1);
      const auto inner_members = oracle::window_members(closure.set(), kClosureWindow);
      for (const Element e : oracle::window_members(outer.set(), kClosureWindow)) {
        ok = ok && inner_members.contains(e);
      }
    }
    record(report.property("monotone_in_level"), ok, fail("level " + std::to_string(level + 1)));
  }

  {
    SampleSet larger = sample;
    const SampleSet extra = instances::random_sample(rng, 3, 6, 5);
    larger.insert(extra.begin(), extra.end());
    const bool ok = is_subset(consistent_indices(collection, larger, level), consistent);
    record(report.property("antimonotone_in_sample"), ok, fail("superset " + to_string(larger)));
  }

  if (!closure.is_empty_consistent() && closure.is_finite()) {
    const SampleSet saturated = saturate(collection, sample, level);
    bool ok = consistent_indices(collection, saturated, level) == consistent;
    // A random part of the closure must leave the family unchanged as well.
    SampleSet partial = sample;
    for (const Element e : closure.set().adds()) {
      if (draw_below(rng, 2) == 1) partial.insert(e);
    }
    ok = ok && consistent_indices(collection, partial, level) == consistent;
    record(report.property("saturation"), ok, fail("closure " + describe(closure.set())));
  }

  {
    const auto window = oracle::window_closure(oracle::languages_of(collection), sample, level, kClosureWindow);
    const bool ok = window.empty_consistent == closure.is_empty_consistent() &&
                    window.infinite == !closure.is_finite() &&
                    window.members == oracle::window_members(closure.set(), kClosureWindow);
    record(report.property("matches_window_oracle"), ok, fail("symbolic " + describe(closure.set())));
  }

  {
    const std::size_t m = instances::uniform(rng, 2, 6);
    const SampleSet columns_sample = instances::random_sample(rng, 4, m, 4);
    const NoiseLevel column_level = instances::uniform(rng, 0, 2);
    const ClosureResult formula = column_closure(columns_sample, column_level);
    const auto window =
        oracle::window_closure(oracle::column_unions(m), columns_sample, column_level, kClosureWindow);
    const bool ok = !window.empty_consistent && window.infinite == !formula.is_finite() &&
                    window.members == oracle::window_members(formula.set(), kClosureWindow);
    record(report.property("column_closed_form"), ok,
           dump(trial, fixtures::columns(), columns_sample, column_level,
                "m=" + std::to_string(m) + " formula " + describe(formula.set())));
  }
}

// ---------------------------------------------------------------------------
// dimension

void dimension_trial(SuiteReport& report, std::size_t trial, std::uint64_t seed) {
  auto rng = trial_rng(seed, trial, 2);
  const Collection collection = instances::random_collection(rng, {}, "T" + std::to_string(trial));

  std::vector<DimensionReport> reports;
  for (NoiseLevel i = 0; i <= 3; ++i) reports.push_back(nc_dimension(collection, i, kBudget, default_pool_depth(i)));

  for (NoiseLevel i = 2; i <= 3; ++i) {
    const auto& lower = reports[i - 1];
    const auto& upper = reports[i];
    if (lower.verdict != DimensionVerdict::Exact || upper.verdict != DimensionVerdict::Exact) continue;
    const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(upper.value)));
    record(report.property("floor_sqrt_bound"), lower.value >= root,
           dump(trial, collection, upper.witness, i,
                "NC_" + std::to_string(i - 1) + "=" + std::to_string(lower.value) + " NC_" +
                    std::to_string(i) + "=" + std::to_string(upper.value)));
  }

  for (NoiseLevel i = 2; i <= 3; ++i) {
    const auto& witness = reports[i].witness;
    if (reports[i].verdict == DimensionVerdict::NoWitness) continue;
    for (std::size_t k = 1; k <= 3 && k * k <= witness.size(); ++k) {
      SampleSet sample;
      for (const Element e : witness) {
        if (sample.size() == k * k) break;
        sample.insert(e);
      }
      std::string detail;
      try {
        const ShrinkResult shrunk = shrink_witness(collection, i, sample);
        if (shrunk.set.size() > k) detail = "result larger than k";
        else if (!qualifies(collection, shrunk.set, i - 1)) detail = "result does not qualify at i-1";
        else if (shrunk.branch == ShrinkBranch::Constructed &&
                 !consistent_subset(collection, sample, i, shrunk.set, 1)) {
          detail = "C(S,i) not inside C(A,1)";
        }
        if (!detail.empty()) detail += " (" + to_string(shrunk.branch) + " " + to_string(shrunk.set) + ")";
      } catch (const Error& e) {
        detail = e.what();
      }
      record(report.property("shrink_construction"), detail.empty(), dump(trial, collection, sample, i, detail));
    }
  }

  {
    const Collection tiny = instances::random_collection(rng, instances::tiny_limits(), "P" + std::to_string(trial));
    const NoiseLevel level = instances::uniform(rng, 0, 2);
    const auto pooled = nc_dimension(tiny, level, kBudget, default_pool_depth(level));
    const auto exhaustive = oracle::window_dimension(oracle::languages_of(tiny), level, kPoolWindow, kBudget + 1);
    bool ok = false;
    switch (pooled.verdict) {
      case DimensionVerdict::NoWitness:
        ok = !exhaustive.has_value();
        break;
      case DimensionVerdict::Exact:
        ok = exhaustive == pooled.value;
        break;
      case DimensionVerdict::AtLeast:
        ok = exhaustive && *exhaustive >= pooled.value;
        break;
    }
    record(report.property("pool_sufficiency"), ok,
           dump(trial, tiny, pooled.witness, level,
                "pool " + verdict_line(pooled) + " window " +
                    (exhaustive ? std::to_string(*exhaustive) : std::string("none"))));
  }
}

// ---------------------------------------------------------------------------
// generators

std::vector<Element> random_noise(std::mt19937_64& rng, const SymbolicLanguage& target, std::size_t count) {
  std::vector<Element> noise;
  for (std::size_t attempt = 0; noise.size() < count && attempt < 200; ++attempt) {
    const Element e = Element::at(draw_below(rng, 8), draw_below(rng, 6));
    if (!target.contains(e) && std::find(noise.begin(), noise.end(), e) == noise.end()) noise.push_back(e);
  }
  return noise;
}

Schedule random_schedule(std::mt19937_64& rng, std::size_t noise_count) {
  switch (draw_below(rng, 3)) {
    case 0:
      return Schedule::prefix();
    case 1:
      return Schedule::random();
    default: {
      std::set<std::size_t> positions;
      while (positions.size() < noise_count) positions.insert(draw_below(rng, 12));
      return Schedule::interleave({positions.begin(), positions.end()});
    }
  }
}

void generators_trial(SuiteReport& report, std::size_t trial, std::uint64_t seed) {
  auto rng = trial_rng(seed, trial, 3);
  {
    auto collection = std::make_shared<const Collection>(
        instances::random_collection(rng, {}, "T" + std::to_string(trial)));
    const NoiseLevel level = instances::uniform(rng, 0, 2);
    const auto& target = collection->languages()[draw_below(rng, collection->size())].language;
    const auto noise = random_noise(rng, target, instances::uniform(rng, 0, level));
    const Schedule schedule = random_schedule(rng, noise.size());
    const std::uint64_t enum_seed = rng();
    try {
      auto certified = uniform_noise_dependent(collection, level);
      const std::size_t steps = certified.promised_tstar + 12;
      Enumeration e1(target, noise, schedule, enum_seed);
      const GameTrace trace = play(*collection, *certified.generator, e1, steps, level, certified.promised_tstar);
      const auto where = [&](std::size_t t) {
        return dump(trial, *collection, {}, level,
                    "target " + describe(target) + " noise " + std::to_string(noise.size()) + " schedule " +
                        schedule.to_string() + " seed " + std::to_string(enum_seed) + " step " + std::to_string(t));
      };

      std::optional<std::size_t> late_error;
      for (const auto& step : trace.steps) {
        if (step.t > certified.promised_tstar && !step.correct) late_error = step.t;
      }
      record(report.property("uniform_settle"), !late_error, where(late_error.value_or(0)));

      GeneratorState state;
      std::optional<std::size_t> bad_output;
      for (const auto& step : trace.steps) {
        state.receive(step.x);
        const auto closure = noisy_closure(*collection, state.sample(), level);
        const auto first = smallest_member_excluding(closure.set(), state.sample());
        if (first && *first != step.z) bad_output = step.t;
      }
      record(report.property("closure_output"), !bad_output, where(bad_output.value_or(0)));

      Enumeration e2(target, noise, schedule, enum_seed);
      const GameTrace again = play(*collection, *certified.generator, e2, steps, level, certified.promised_tstar);
      record(report.property("deterministic_replay"), format_trace(again) == format_trace(trace), where(0));
    } catch (const Error&) {
      // AtLeast verdicts carry no settle time to check.
    }
  }

  {
    std::vector<Collection> levels;
    std::vector<NamedLanguage> languages;
    const std::size_t depth = 3;
    for (std::size_t j = 0; j < depth; ++j) {
      const std::size_t wanted = languages.size() + (j == 0 ? instances::uniform(rng, 1, 2) : 1);
      for (std::size_t attempt = 0; languages.size() < wanted && attempt < 16; ++attempt) {
        SymbolicLanguage candidate = instances::random_language(rng, {});
        const bool seen = std::any_of(languages.begin(), languages.end(),
                                      [&](const NamedLanguage& l) { return l.language == candidate; });
        if (!seen) languages.push_back({"L" + std::to_string(languages.size() + 1), std::move(candidate)});
      }
      levels.push_back(Collection::explicit_family("D" + std::to_string(trial) + "_" + std::to_string(j), languages));
    }
    const NoiseLevel level = instances::uniform(rng, 0, 1);
    try {
      auto chain = std::make_shared<const Chain>(Chain::build(levels, level));
      const std::size_t j = draw_below(rng, chain->size());
      const auto& pool = chain->at(j).languages();
      const auto& target = pool[draw_below(rng, pool.size())].language;
      const auto noise = random_noise(rng, target, instances::uniform(rng, 0, level));
      const Schedule schedule = random_schedule(rng, noise.size());
      const std::uint64_t enum_seed = rng();
      auto certified = nonuniform_noise_dependent(chain, level, target, j);
      Enumeration enumeration(target, noise, schedule, enum_seed);
      const GameTrace trace = play(chain->at(chain->size() - 1), *certified.generator, enumeration,
                                   certified.promised_tstar + 12, level, certified.promised_tstar);
      std::optional<std::size_t> late_error;
      for (const auto& step : trace.steps) {
        if (step.t >= certified.promised_tstar && !step.correct) late_error = step.t;
      }
      record(report.property("chain_settle"), !late_error,
             dump(trial, chain->at(j), {}, level,
                  "chain level " + std::to_string(j) + " target " + describe(target) + " seed " +
                      std::to_string(enum_seed) + " step " + std::to_string(late_error.value_or(0))));
    } catch (const Error&) {
      // Some level had no certified settle time at this budget.
    }
  }

  {
    std::vector<std::size_t> settle;
    for (std::size_t j = 0, n = instances::uniform(rng, 1, 6); j < n; ++j) settle.push_back(draw_below(rng, 12));
    bool ok = true;
    std::size_t previous = 0;
    for (std::size_t t = 0; t < 20; ++t) {
      const auto index = chain_index(settle, t);
      ok = ok && index.index >= previous && index.index <= t && settle[index.index] <= std::max(t, settle[0]);
      previous = index.index;
    }
    std::string text;
    for (const auto s : settle) text += std::to_string(s) + " ";
    record(report.property("chain_index_monotone"), ok,
           dump(trial, fixtures::columns(), {}, 0, "settle times " + text));
  }
}

// ---------------------------------------------------------------------------
// refutation

struct Pipeline {
  CaseReport cases;
  ColumnSet language;
  std::vector<std::size_t> accepted;  // ladder indices
  RefutationCheck check;
};

// classify, build the case language (or run the construction loop), verify.
Pipeline run_pipeline(Generator& generator, std::size_t horizon,
                      const Algorithm1Observer& observer = {}) {
  const RefutationPlan plan = make_refutation_plan(horizon);
  Pipeline p;
  p.cases = classify_generator(generator, plan, Thresholds::defaults(horizon));
  std::size_t allowed_noise = 0;
  switch (p.cases.kind) {
    case RefutationCase::Inside:
      p.language = build_case_language(p.cases, plan);
      p.accepted = p.cases.inside;
      allowed_noise = 1;
      break;
    case RefutationCase::Concentrated:
      p.language = build_case_language(p.cases, plan);
      p.accepted = p.cases.attracted;
      break;
    case RefutationCase::Scattered: {
      const auto state = algorithm1(generator, plan, p.cases.outside, p.cases.outside.size(), observer);
      p.language = state.language;
      for (const auto j : state.accepted) p.accepted.push_back(p.cases.outside[j]);
      break;
    }
    case RefutationCase::Inconclusive:
      return p;
  }
  p.check = verify_refutation(generator, plan, p.language, p.accepted, allowed_noise);
  return p;
}

std::string pipeline_detail(const std::string& generator, std::size_t horizon, const Pipeline& p) {
  std::ostringstream out;
  out << generator << " horizon " << horizon << " case " << to_string(p.cases.kind) << " accepted "
      << p.accepted.size() << " errors " << p.check.errors.size() << " invalid " << p.check.invalid_prefixes.size();
  return out.str();
}

bool sound(const Pipeline& p) {
  return p.check.errors == p.accepted && p.check.invalid_prefixes.empty();
}

void refutation_trial(SuiteReport& report, std::size_t trial, std::uint64_t seed) {
  auto rng = trial_rng(seed, trial, 4);
  const std::size_t horizon = 6 + trial % 7;
  const auto columns = fixtures::columns();
  const auto dump_for = [&](const std::string& detail) { return dump(trial, columns, {}, 1, detail); };

  {
    ClosureGenerator generator(std::make_shared<const Collection>(columns), 1);
    const Pipeline p = run_pipeline(generator, horizon);
    record(report.property("closure_generator_refuted"),
           p.cases.kind == RefutationCase::Concentrated && sound(p) && p.accepted.size() + 1 >= horizon,
           dump_for(pipeline_detail(generator.name(), horizon, p)));
    report.refuted_prefixes += p.check.errors.size();
  }

  {
    const auto generator = fixtures::inside_generator();
    const Pipeline p = run_pipeline(*generator, horizon);
    const RefutationPlan plan = make_refutation_plan(horizon);
    bool one_outside = true;
    for (const auto i : p.accepted) {
      const auto& prefix = plan.prefix(i);
      one_outside = one_outside && std::count_if(prefix.begin(), prefix.end(), [&](Element e) {
                                     return !p.language.contains(e.column());
                                   }) == 1;
    }
    record(report.property("inside_case"), p.cases.kind == RefutationCase::Inside && sound(p) && one_outside,
           dump_for(pipeline_detail(generator->name(), horizon, p)));
  }

  {
    const auto generator = fixtures::fresh_column_generator();
    const RefutationPlan plan = make_refutation_plan(horizon);
    bool invariants = true;
    std::vector<std::size_t> outside;
    const auto observer = [&](std::size_t, const Algorithm1State& state) {
      ColumnSet rebuilt;
      for (const auto j : state.accepted) {
        const auto& a = plan.set(outside.at(j));
        rebuilt.insert(a.begin(), a.end());
      }
      invariants = invariants && rebuilt == state.language &&
                   std::is_sorted(state.accepted.begin(), state.accepted.end()) &&
                   std::none_of(state.forbidden.begin(), state.forbidden.end(),
                                [&](ColumnIndex c) { return state.language.contains(c); });
    };
    outside = classify_generator(*generator, plan, Thresholds::defaults(horizon)).outside;
    const Pipeline p = run_pipeline(*generator, horizon, observer);
    record(report.property("algorithm1_scattered"),
           p.cases.kind == RefutationCase::Scattered && sound(p) && invariants && p.accepted.size() == horizon,
           dump_for(pipeline_detail(generator->name(), horizon, p)));
  }

  {
    // A deterministic but otherwise arbitrary generator: the answer is a hash
    // of the history. The pipeline must stay sound whatever case it lands in.
    const std::uint64_t salt = rng();
    FunctionGenerator generator("hashed", [salt](std::span<const Element> history) {
      std::vector<std::uint32_t> words{static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
      for (const Element e : history) words.push_back(static_cast<std::uint32_t>(e.id()));
      std::seed_seq seq(words.begin(), words.end());
      std::mt19937_64 local(seq);
      return Element::at(draw_below(local, 40), draw_below(local, 3));
    });
    const Pipeline p = run_pipeline(generator, horizon);
    record(report.property("pipeline_soundness"), p.cases.kind == RefutationCase::Inconclusive || sound(p),
           dump_for(pipeline_detail("hashed salt " + std::to_string(salt), horizon, p)));
  }

  {
    const SymbolicLanguage target = instances::random_language(rng, {});
    const std::size_t n_star = instances::uniform(rng, 0, 3);
    const auto noise = random_noise(rng, target, n_star);
    const Schedule schedule = random_schedule(rng, noise.size());
    const std::uint64_t enum_seed = rng();
    Enumeration enumeration(target, noise, schedule, enum_seed);
    ElementSet seen;
    std::size_t outside = 0;
    bool repeat = false;
    for (std::size_t t = 0; t < 500; ++t) {
      const Element x = enumeration.next();
      repeat = repeat || !seen.insert(x).second;
      if (!target.contains(x)) ++outside;
    }
    record(report.property("enumeration_validity"), !repeat && outside == noise.size() && outside <= n_star,
           dump(trial, columns, {}, n_star,
                "target " + describe(target) + " schedule " + schedule.to_string() + " seed " +
                    std::to_string(enum_seed)));
  }
}

using TrialFn = void (*)(SuiteReport&, std::size_t, std::uint64_t);

SuiteReport run_trials(const char* name, TrialFn fn, std::size_t trials, std::uint64_t seed) {
  SuiteReport report;
  report.suite = name;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) fn(report, t, seed);
  return report;
}

}  // namespace

PropertyTally& SuiteReport::property(std::string_view name) {
  for (auto& p : properties) {
    if (p.name == name) return p;
  }
  PropertyTally tally;
  tally.name = std::string(name);
  properties.push_back(std::move(tally));
  return properties.back();
}

const PropertyTally* SuiteReport::find(std::string_view name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& p) { return p.fail == 0; });
}

std::string SuiteReport::format() const {
  std::ostringstream out;
  out << "suite: " << suite << "\ntrials: " << trials << "\nseed: " << seed << '\n';
  for (const auto& p : properties) {
    out << "property " << p.name << ": pass=" << p.pass << " fail=" << p.fail << '\n';
  }
  if (suite == "refutation" || suite == "all") out << "refuted_prefixes: " << refuted_prefixes << '\n';
  out << "result: " << (ok() ? "pass" : "FAIL") << '\n';
  for (const auto& p : properties) {
    for (const auto& c : p.counterexamples) out << "\ncounterexample " << p.name << ":\n" << c;
  }
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closure", "dimension", "generators", "refutation"};
  return names;
}

SuiteReport run_closure_suite(std::size_t trials, std::uint64_t seed) {
  return run_trials("closure", closure_trial, trials, seed);
}
SuiteReport run_dimension_suite(std::size_t trials, std::uint64_t seed) {
  return run_trials("dimension", dimension_trial, trials, seed);
}
SuiteReport run_generators_suite(std::size_t trials, std::uint64_t seed) {
  return run_trials("generators", generators_trial, trials, seed);
}
SuiteReport run_refutation_suite(std::size_t trials, std::uint64_t seed) {
  return run_trials("refutation", refutation_trial, trials, seed);
}

SuiteReport run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed) {
  if (suite == "closure") return run_closure_suite(trials, seed);
  if (suite == "dimension") return run_dimension_suite(trials, seed);
  if (suite == "generators") return run_generators_suite(trials, seed);
  if (suite == "refutation") return run_refutation_suite(trials, seed);
  if (suite != "all") throw Error("unknown suite '" + std::string(suite) + "'");

  SuiteReport all;
  all.suite = "all";
  all.trials = trials;
  all.seed = seed;
  for (const auto& name : suite_names()) {
    SuiteReport part = run_suite(name, trials, seed);
    for (auto& p : part.properties) {
      p.name = name + "." + p.name;
      all.properties.push_back(std::move(p));
    }
    all.refuted_prefixes += part.refuted_prefixes;
  }
  return all;
}

}  // namespace noisygen::check
