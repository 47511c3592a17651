#include "noisygen/refutation.hpp"

#include <algorithm>

#include "noisygen/error.hpp"

namespace noisygen {

RefutationPlan make_refutation_plan(std::size_t n) {
  if (n == 0) throw Error("refutation plan needs at least one ladder set");
  RefutationPlan plan;
  for (std::size_t i = 1; i <= n; ++i) {
    ColumnSet set;
    std::vector<Element> prefix;
    for (ColumnIndex c = i * (i - 1) / 2; c < i * (i + 1) / 2; ++c) {
      set.insert(c);
      prefix.push_back(Element::at(c, 0));
    }
    plan.sets_.push_back(std::move(set));
    plan.prefixes_.push_back(std::move(prefix));
  }
  return plan;
}

std::string to_string(RefutationCase c) {
  switch (c) {
    case RefutationCase::Inside:
      return "inside";
    case RefutationCase::Concentrated:
      return "concentrated";
    case RefutationCase::Scattered:
      return "scattered";
    case RefutationCase::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Thresholds Thresholds::defaults(std::size_t horizon) {
  const auto ceil_div = [](std::size_t a, std::size_t b) { return (a + b - 1) / b; };
  return Thresholds{std::max<std::size_t>(2, ceil_div(horizon, 2)),
                    std::max<std::size_t>(2, ceil_div(horizon, 3)),
                    std::max<std::size_t>(2, ceil_div(horizon, 2))};
}

Element query_fresh(Generator& generator, std::span<const Element> prefix) {
  generator.reset();
  return generator.next(GeneratorState(prefix)).z;
}

CaseReport classify_generator(Generator& generator, const RefutationPlan& plan,
                              const Thresholds& thresholds) {
  CaseReport report;
  for (std::size_t i = 1; i <= plan.size(); ++i) {
    const ColumnIndex f = column_of(query_fresh(generator, plan.prefix(i)));
    report.f_values.push_back(f);
    (plan.set(i).contains(f) ? report.inside : report.outside).push_back(i);
  }

  if (report.inside.size() >= thresholds.inside) {
    report.kind = RefutationCase::Inside;
    return report;
  }

  for (const std::size_t m : report.outside) {
    std::vector<std::size_t> hits;
    for (const std::size_t j : report.outside) {
      if (plan.set(m).contains(report.f_values[j - 1])) hits.push_back(j);
    }
    if (hits.size() > report.attracted.size()) {
      report.attractor = m;
      report.attracted = std::move(hits);
    }
  }
  if (report.attracted.size() >= thresholds.concentration) {
    report.kind = RefutationCase::Concentrated;
    return report;
  }
  report.attractor = 0;
  report.attracted.clear();

  report.kind = report.outside.size() >= thresholds.scattered ? RefutationCase::Scattered
                                                              : RefutationCase::Inconclusive;
  return report;
}

ColumnSet build_case_language(const CaseReport& report, const RefutationPlan& plan) {
  ColumnSet language;
  switch (report.kind) {
    case RefutationCase::Inside:
      for (const std::size_t i : report.inside) {
        for (const ColumnIndex c : plan.set(i)) {
          if (c != report.f_values[i - 1]) language.insert(c);
        }
      }
      break;
    case RefutationCase::Concentrated:
      for (const std::size_t j : report.attracted) {
        language.insert(plan.set(j).begin(), plan.set(j).end());
      }
      break;
    case RefutationCase::Scattered:
      throw Error("scattered case: use algorithm1");
    case RefutationCase::Inconclusive:
      throw Error("inconclusive classification: increase the horizon");
  }
  if (language.empty()) throw Error("case language is empty");
  return language;
}

Algorithm1State algorithm1(Generator& generator, const RefutationPlan& plan,
                           std::span<const std::size_t> scattered, std::size_t iterations,
                           const Algorithm1Observer& observer) {
  Algorithm1State state;
  const std::size_t steps = std::min(iterations, scattered.size());
  for (std::size_t j = 0; j < steps; ++j) {
    const ColumnSet& a = plan.set(scattered[j]);
    const bool avoids_forbidden = std::none_of(
        a.begin(), a.end(), [&](ColumnIndex c) { return state.forbidden.contains(c); });
    if (avoids_forbidden) {
      const ColumnIndex f = column_of(query_fresh(generator, plan.prefix(scattered[j])));
      if (!state.language.contains(f)) {
        state.language.insert(a.begin(), a.end());
        state.accepted.push_back(j);
        state.forbidden.insert(f);
      }
    }
    if (observer) observer(j, state);
  }
  return state;
}

RefutationCheck verify_refutation(Generator& generator, const RefutationPlan& plan,
                                  const ColumnSet& language, std::span<const std::size_t> accepted,
                                  std::size_t allowed_noise) {
  if (language.empty()) throw Error("verify_refutation: empty language");
  RefutationCheck check;
  for (const std::size_t i : accepted) {
    const auto& prefix = plan.prefix(i);
    const auto outside = static_cast<std::size_t>(std::count_if(
        prefix.begin(), prefix.end(), [&](Element e) { return !language.contains(e.column()); }));
    if (outside > allowed_noise) check.invalid_prefixes.push_back(i);
    if (!language.contains(column_of(query_fresh(generator, prefix)))) check.errors.push_back(i);
  }
  return check;
}

}  // namespace noisygen
