#include "noisygen/game.hpp"

#include <fstream>
#include <sstream>

#include "noisygen/error.hpp"

namespace noisygen {

ClosureStatus ClosureStatus::of(const ClosureResult& closure) {
  if (!closure.is_finite()) return {Kind::Infinite, 0};
  const std::size_t n = *closure.set().finite_size();
  return n == 0 ? ClosureStatus{Kind::Empty, 0} : ClosureStatus{Kind::Finite, n};
}

std::string ClosureStatus::to_string() const {
  switch (kind) {
    case Kind::Empty:
      return "empty";
    case Kind::Finite:
      return "finite:" + std::to_string(size);
    case Kind::Infinite:
      return "infinite";
  }
  return "?";
}

GameTrace play(const Collection& collection, Generator& generator, Enumeration& enumeration,
               std::size_t steps, NoiseLevel level, std::optional<std::size_t> promised_tstar) {
  if (steps == 0) throw Error("play needs at least one step");

  GameTrace trace;
  trace.header = TraceHeader{collection.name(),
                             level,
                             enumeration.schedule().to_string(),
                             enumeration.seed(),
                             promised_tstar,
                             enumeration.noise().size() > level};

  const SymbolicLanguage& target = enumeration.target();
  GeneratorState state;
  for (std::size_t t = 0; t < steps; ++t) {
    const Element x = enumeration.next();
    state.receive(x);
    const GeneratorOutput out = generator.next(state);
    TraceStep step;
    step.t = t;
    step.x = x;
    step.z = out.z;
    step.correct = target.contains(out.z) && !state.sample().contains(out.z);
    step.closure = ClosureStatus::of(noisy_closure(collection, state.sample(), level));
    step.chain_index = out.chain_index;
    step.truncated = out.truncated;
    trace.steps.push_back(step);
  }
  return trace;
}

std::optional<std::size_t> settle_time(const GameTrace& trace) {
  if (trace.steps.empty()) throw Error("settle_time of an empty trace");
  std::size_t t = trace.steps.size();
  while (t > 0 && trace.steps[t - 1].correct) --t;
  if (t == trace.steps.size()) return std::nullopt;
  return t;
}

std::string format_trace(const GameTrace& trace) {
  std::ostringstream out;
  const auto& h = trace.header;
  out << "#! collection=" << h.collection << '\n';
  out << "#! noise=" << h.noise << '\n';
  out << "#! schedule=" << h.schedule << '\n';
  out << "#! seed=" << h.seed << '\n';
  out << "#! promised_tstar=" << (h.promised_tstar ? std::to_string(*h.promised_tstar) : "none") << '\n';
  if (h.noise_mismatch) out << "#! noise_mismatch=1\n";
  for (const auto& s : trace.steps) {
    out << "t=" << s.t << " x=" << to_string(s.x) << " z=" << to_string(s.z)
        << " correct=" << (s.correct ? 1 : 0) << " closure=" << s.closure.to_string() << '\n';
  }
  return out.str();
}

void write_trace(const GameTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write trace file '" + path + "'");
  out << format_trace(trace);
}

}  // namespace noisygen
