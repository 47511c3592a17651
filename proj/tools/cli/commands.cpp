#include "commands.hpp"

#include <cstdio>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "check_suites.hpp"
#include "external_generator.hpp"
#include "fixtures.hpp"
#include "noisygen/error.hpp"
#include "noisygen/game.hpp"
#include "noisygen/refutation.hpp"

namespace noisygen::cli {
namespace {

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::istringstream tokens(text);
  std::string token;
  while (tokens >> token) {
    const auto e = parse_element(token);
    if (!e) throw Error("bad element '" + token + "'");
    out.push_back(*e);
  }
  return out;
}

SampleSet to_sample(const std::vector<Element>& elements) { return {elements.begin(), elements.end()}; }

// A language of the collection by name, or for the column family a list of
// columns such as "0,2".
SymbolicLanguage resolve_target(const Collection& collection, const std::string& name) {
  if (!collection.is_columns()) {
    const auto index = collection.find(name);
    if (!index) throw Error("unknown target '" + name + "' in collection " + collection.name());
    return collection.languages()[*index].language;
  }
  ColumnSet columns;
  std::string text = name;
  for (char& ch : text) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream tokens(text);
  std::string token;
  while (tokens >> token) {
    try {
      std::size_t used = 0;
      const unsigned long long c = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      columns.insert(c);
    } catch (const std::logic_error&) {
      throw Error("bad column '" + token + "' in target '" + name + "'");
    }
  }
  if (columns.empty()) throw Error("target for the column family must list columns, e.g. 0,2");
  return SymbolicLanguage::canonicalize(std::move(columns));
}

std::unique_ptr<Generator> make_generator(const std::string& choice, std::shared_ptr<const Collection> collection,
                                          NoiseLevel level) {
  if (choice == "closure") return std::make_unique<ClosureGenerator>(std::move(collection), level);
  if (choice == "fresh-column") return fixtures::fresh_column_generator();
  if (choice == "ladder-inside") return fixtures::inside_generator();
  const std::string prefix = "external:";
  if (choice.rfind(prefix, 0) == 0) return std::make_unique<ExternalGenerator>(choice.substr(prefix.size()));
  throw Error("unknown generator '" + choice + "' (closure, fresh-column, ladder-inside, external:CMD)");
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (const auto v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out.empty() ? "none" : out;
}

// ---------------------------------------------------------------------------

struct ClosureArgs {
  std::string collection;
  NoiseLevel noise = 0;
  std::string set;
  std::size_t window = 0;
};

int cmd_closure(const ClosureArgs& a, std::ostream& out) {
  const Collection collection = load_collection(a.collection);
  const SampleSet sample = to_sample(parse_elements(a.set));
  out << "collection: " << collection.name() << "\nnoise: " << a.noise << "\nset: " << to_string(sample) << '\n';

  if (collection.is_columns()) {
    const ColumnConsistency consistency(sample, a.noise);
    out << "consistent: column unions leaving at most " << a.noise << " of S outside; hits";
    for (const auto& [column, hits] : consistency.hits()) out << ' ' << column << ':' << hits;
    out << '\n';
  } else {
    out << "consistent:";
    for (const auto index : consistent_indices(collection, sample, a.noise)) {
      out << ' ' << collection.languages()[index].name;
    }
    out << '\n';
  }

  const ClosureResult closure = noisy_closure(collection, sample, a.noise);
  if (closure.is_empty_consistent()) {
    out << "closure: empty-consistent\n";
  } else if (closure.is_finite()) {
    out << "closure: finite:" << *closure.set().finite_size() << ' ' << describe(closure.set()) << '\n';
  } else {
    out << "closure: infinite " << describe(closure.set()) << '\n';
    if (a.window > 0) {
      out << "members:";
      for (const Element e : enumerate_canonical(closure.set(), a.window)) out << ' ' << to_string(e);
      out << '\n';
    }
  }
  return kSuccess;
}

struct DimArgs {
  std::string collection;
  NoiseLevel noise = 0;
  std::size_t max_size = kDefaultDimensionBudget;
  std::optional<std::size_t> pool_depth;
};

int cmd_dim(const DimArgs& a, std::ostream& out) {
  const Collection collection = load_collection(a.collection);
  if (a.pool_depth && *a.pool_depth == 0) throw Error("--pool-depth must be at least 1");
  const DimensionReport report = noisy_closure_dimension(collection, a.noise, a.max_size, a.pool_depth);
  out << "collection: " << collection.name() << "\nnoise: " << a.noise << "\nverdict: " << verdict_line(report)
      << "\nwitness: " << to_string(report.witness) << "\npool: " << report.searched_pool.size()
      << "\nmax_size: " << report.max_size_searched << '\n';
  if (!collection.is_columns()) {
    out << "pool_depth: " << a.pool_depth.value_or(default_pool_depth(a.noise)) << '\n';
  }
  return kSuccess;
}

struct PlayArgs {
  std::string collection;
  std::string target;
  NoiseLevel noise = 0;
  std::size_t steps = 20;
  std::string schedule = "prefix";
  std::string noise_strings;
  std::uint64_t seed = 0;
  std::string trace;
  std::string generator = "closure";
};

int cmd_play(const PlayArgs& a, std::ostream& out) {
  auto collection = std::make_shared<const Collection>(load_collection(a.collection));
  const SymbolicLanguage target = resolve_target(*collection, a.target);
  Enumeration enumeration(target, parse_elements(a.noise_strings), Schedule::parse(a.schedule), a.seed);

  std::optional<std::size_t> promised;
  if (a.generator == "closure") {
    promised = noisy_closure_dimension(*collection, a.noise).certified_value();
  }
  auto generator = make_generator(a.generator, collection, a.noise);
  const GameTrace trace = play(*collection, *generator, enumeration, a.steps, a.noise, promised);
  if (a.trace.empty()) {
    out << format_trace(trace);
  } else {
    write_trace(trace, a.trace);
  }

  const auto settled = settle_time(trace);
  std::size_t correct = 0;
  for (const auto& step : trace.steps) correct += step.correct ? 1 : 0;
  out << "settle=" << (settled ? std::to_string(*settled) : "never") << " promised_tstar="
      << (promised ? std::to_string(*promised) : "none") << " steps=" << a.steps << " correct=" << correct << '\n';

  // A certified run must be correct from step t*+1 on whenever the noise fits.
  const bool judged = promised && !trace.header.noise_mismatch && a.steps > *promised + 1;
  if (judged && (!settled || *settled > *promised + 1)) return kPropertyFailure;
  return kSuccess;
}

struct RefuteArgs {
  std::size_t horizon = 6;
  std::optional<std::size_t> iterations;
  std::uint64_t seed = 0;
  std::string generator = "closure";
  NoiseLevel level = 1;
};

int cmd_refute(const RefuteArgs& a, std::ostream& out) {
  if (a.horizon == 0) throw Error("--horizon must be at least 1");
  auto generator = make_generator(a.generator, std::make_shared<const Collection>(fixtures::columns()), a.level);
  const RefutationPlan plan = make_refutation_plan(a.horizon);
  const CaseReport report = classify_generator(*generator, plan, Thresholds::defaults(a.horizon));

  std::vector<std::size_t> f_values(report.f_values.begin(), report.f_values.end());
  out << "generator: " << generator->name() << "\nhorizon: " << a.horizon << "\nseed: " << a.seed
      << "\nf_values: " << join(f_values) << "\ncase: " << to_string(report.kind) << '\n';
  if (report.kind == RefutationCase::Inconclusive) {
    out << "inconclusive: increase the horizon\n";
    return kInconclusive;
  }

  ColumnSet language;
  std::vector<std::size_t> accepted;
  std::size_t allowed_noise = 0;
  switch (report.kind) {
    case RefutationCase::Inside:
      out << "X: " << join(report.inside) << '\n';
      language = build_case_language(report, plan);
      accepted = report.inside;
      allowed_noise = 1;
      break;
    case RefutationCase::Concentrated:
      out << "attractor: " << report.attractor << "\nY: " << join(report.attracted) << '\n';
      language = build_case_language(report, plan);
      accepted = report.attracted;
      break;
    default: {
      const std::size_t iterations = a.iterations.value_or(report.outside.size());
      const auto state = algorithm1(*generator, plan, report.outside, iterations);
      for (const auto j : state.accepted) accepted.push_back(report.outside[j]);
      out << "scattered: " << join(report.outside) << "\naccepted_positions: " << join(state.accepted)
          << "\nforbidden: " << to_string(state.forbidden) << '\n';
      language = state.language;
      if (language.empty()) {
        out << "language: {}\nverified: 0/0\n";
        return kPropertyFailure;
      }
      break;
    }
  }

  const RefutationCheck check = verify_refutation(*generator, plan, language, accepted, allowed_noise);
  out << "language: " << to_string(language) << "\naccepted: " << join(accepted) << "\nerrors: " << join(check.errors)
      << "\ninvalid_prefixes: " << join(check.invalid_prefixes) << "\nverified: " << check.errors.size() << '/'
      << accepted.size() << '\n';
  const bool refuted = !accepted.empty() && check.errors == accepted && check.invalid_prefixes.empty();
  return refuted ? kSuccess : kPropertyFailure;
}

struct CheckArgs {
  std::string suite = "all";
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const check::SuiteReport report = check::run_suite(a.suite, a.trials, a.seed);
  out << report.format();
  return report.ok() ? kSuccess : kPropertyFailure;
}

struct ServeArgs {
  std::string collection;
  NoiseLevel noise = 0;
  std::string strategy = "closure";
};

int cmd_serve(const ServeArgs& a) {
  std::shared_ptr<const Collection> collection;
  if (a.strategy == "closure") {
    if (a.collection.empty()) throw Error("serve --strategy closure needs --collection");
    collection = std::make_shared<const Collection>(load_collection(a.collection));
  }
  auto generator = make_generator(a.strategy, collection, a.noise);
  serve_generator(stdin, stdout, *generator);
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noisy generation in the limit: closures, dimensions, games and the refutation adversary", "ngen"};
  app.require_subcommand(1);

  ClosureArgs closure_args;
  auto* closure = app.add_subcommand("closure", "Noisy closure of a set");
  closure->add_option("--collection", closure_args.collection, "Collection file")->required();
  closure->add_option("--noise", closure_args.noise, "Noise level i")->required();
  closure->add_option("--set", closure_args.set, "Elements \"(c,k) (c,k) ...\"");
  closure->add_option("--window", closure_args.window, "List this many members of an infinite closure");

  DimArgs dim_args;
  auto* dim = app.add_subcommand("dim", "Noisy closure dimension");
  dim->add_option("--collection", dim_args.collection, "Collection file")->required();
  dim->add_option("--noise", dim_args.noise, "Noise level i")->required();
  dim->add_option("--max-size", dim_args.max_size, "Search budget");
  dim->add_option("--pool-depth", dim_args.pool_depth, "Fresh representatives per block");

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Play the generation game");
  play_cmd->add_option("--collection", play_args.collection, "Collection file")->required();
  play_cmd->add_option("--target", play_args.target, "Target language name (columns: 0,2,...)")->required();
  play_cmd->add_option("--noise", play_args.noise, "Generator noise level")->required();
  play_cmd->add_option("--steps", play_args.steps, "Number of rounds")->check(CLI::PositiveNumber);
  play_cmd->add_option("--schedule", play_args.schedule, "prefix | random | interleave:p,q,...");
  play_cmd->add_option("--noise-strings", play_args.noise_strings, "Noise strings \"(c,k) ...\"");
  play_cmd->add_option("--seed", play_args.seed, "Enumeration seed");
  play_cmd->add_option("--trace", play_args.trace, "Trace output file (stdout when absent)");
  play_cmd->add_option("--generator", play_args.generator, "closure | external:CMD");

  RefuteArgs refute_args;
  auto* refute = app.add_subcommand("refute", "Run the refutation adversary on the column family");
  refute->add_option("--horizon", refute_args.horizon, "Number of ladder sets");
  refute->add_option("--iterations", refute_args.iterations, "Construction steps in the scattered case");
  refute->add_option("--seed", refute_args.seed, "Recorded seed");
  refute->add_option("--generator", refute_args.generator, "closure | fresh-column | ladder-inside | external:CMD");
  refute->add_option("--level", refute_args.level, "Noise level of the built-in closure generator");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Property suites");
  check_cmd->add_option("--suite", check_args.suite, "all | closure | dimension | generators | refutation");
  check_cmd->add_option("--trials", check_args.trials, "Random instances");
  check_cmd->add_option("--seed", check_args.seed, "Seed");

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "Answer 'history ...' lines on stdin");
  serve->add_option("--collection", serve_args.collection, "Collection file (closure strategy)");
  serve->add_option("--noise", serve_args.noise, "Noise level (closure strategy)");
  serve->add_option("--strategy", serve_args.strategy, "closure | fresh-column | ladder-inside");

  std::vector<const char*> argv{"ngen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (closure->parsed()) return cmd_closure(closure_args, out);
    if (dim->parsed()) return cmd_dim(dim_args, out);
    if (play_cmd->parsed()) return cmd_play(play_args, out);
    if (refute->parsed()) return cmd_refute(refute_args, out);
    if (check_cmd->parsed()) return cmd_check(check_args, out);
    if (serve->parsed()) return cmd_serve(serve_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace noisygen::cli
