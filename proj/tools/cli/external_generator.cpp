#include "external_generator.hpp"

#include <csignal>
#include <cstring>
#include <sstream>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "noisygen/error.hpp"

namespace noisygen {
namespace {

std::string read_line(std::FILE* in, bool& eof) {
  std::string line;
  int ch = 0;
  while ((ch = std::fgetc(in)) != EOF && ch != '\n') line.push_back(static_cast<char>(ch));
  eof = ch == EOF && line.empty();
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void write_all(int fd, const std::string& text) {
  std::size_t done = 0;
  while (done < text.size()) {
    const ssize_t n = ::write(fd, text.data() + done, text.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("external generator: write failed: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

std::string history_line(std::span<const Element> history) {
  std::string line = "history";
  for (const Element e : history) line += " " + to_string(e);
  return line + "\n";
}

}  // namespace

ExternalGenerator::ExternalGenerator(std::string command) : command_(std::move(command)) {
  if (command_.empty()) throw Error("external generator: empty command");
}

ExternalGenerator::~ExternalGenerator() { stop(); }

void ExternalGenerator::start() {
  // A child that dies mid-write must surface as an Error, not kill the harness.
  std::signal(SIGPIPE, SIG_IGN);

  int down[2];
  int up[2];
  if (::pipe2(down, O_CLOEXEC) != 0) throw Error("external generator: pipe failed");
  if (::pipe2(up, O_CLOEXEC) != 0) {
    ::close(down[0]);
    ::close(down[1]);
    throw Error("external generator: pipe failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {down[0], down[1], up[0], up[1]}) ::close(fd);
    throw Error("external generator: fork failed");
  }
  if (pid == 0) {
    ::dup2(down[0], STDIN_FILENO);
    ::dup2(up[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(down[0]);
  ::close(up[1]);
  pid_ = pid;
  to_child_ = down[1];
  from_child_ = ::fdopen(up[0], "r");
  if (from_child_ == nullptr) {
    ::close(up[0]);
    stop();
    throw Error("external generator: fdopen failed");
  }
}

void ExternalGenerator::stop() noexcept {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ != nullptr) std::fclose(from_child_);
  to_child_ = -1;
  from_child_ = nullptr;
  if (pid_ > 0) {
    ::kill(pid_, SIGTERM);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
  }
  pid_ = -1;
}

void ExternalGenerator::reset() { stop(); }

GeneratorOutput ExternalGenerator::next(const GeneratorState& state) {
  if (pid_ < 0) start();
  write_all(to_child_, history_line(state.history()));
  bool eof = false;
  const std::string reply = read_line(from_child_, eof);
  if (eof) {
    stop();
    throw Error("external generator: child closed its output");
  }
  const auto z = parse_element(reply);
  if (!z) {
    stop();
    throw Error("external generator: malformed reply '" + reply + "'");
  }
  return {*z, std::nullopt, false};
}

std::size_t serve_generator(std::FILE* in, std::FILE* out, Generator& generator) {
  std::size_t answered = 0;
  for (std::size_t line_no = 1;; ++line_no) {
    bool eof = false;
    const std::string line = read_line(in, eof);
    if (eof) break;
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word) || word != "history") {
      throw ParseError(line_no, "expected 'history (c,k) ...'");
    }
    GeneratorState state;
    while (tokens >> word) {
      const auto e = parse_element(word);
      if (!e) throw ParseError(line_no, "bad element '" + word + "'");
      state.receive(*e);
    }
    const std::string reply = to_string(generator.next(state).z) + "\n";
    std::fputs(reply.c_str(), out);
    std::fflush(out);
    ++answered;
  }
  return answered;
}

}  // namespace noisygen
