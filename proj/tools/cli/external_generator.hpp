#pragma once

#include <cstdio>
#include <string>

#include "noisygen/generators.hpp"

namespace noisygen {

/// A generator running as a child process (`/bin/sh -c <command>`). Each step
/// writes `history (c,k) (c,k) ...` on one line to the child's standard input
/// and reads one `(c,k)` line back. reset() stops the child; the next query
/// starts a new one, which gives the fresh state the refutation needs.
class ExternalGenerator final : public Generator {
 public:
  explicit ExternalGenerator(std::string command);
  ~ExternalGenerator() override;

  ExternalGenerator(const ExternalGenerator&) = delete;
  ExternalGenerator& operator=(const ExternalGenerator&) = delete;

  /// Throws Error when the child cannot be started, exits, or answers with
  /// something other than an element.
  GeneratorOutput next(const GeneratorState& state) override;
  void reset() override;
  std::string name() const override { return "external:" + command_; }

 private:
  void start();
  void stop() noexcept;

  std::string command_;
  int pid_ = -1;
  int to_child_ = -1;
  std::FILE* from_child_ = nullptr;
};

/// Answers `history ...` lines from `in` with `generator`, one reply per line.
/// Returns the number of lines answered. Throws ParseError on a malformed line.
std::size_t serve_generator(std::FILE* in, std::FILE* out, Generator& generator);

}  // namespace noisygen
