#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul::cli {

enum ExitStatus : int {
  kSuccess = 0,   // success, or predicate true
  kFalse = 1,     // predicate false or suite failure
  kUsage = 2,     // parse or usage error
  kResource = 3,  // exhaustive/dense bound exceeded
};

enum class Command { sign, sign_word, table, check_morphism, check_cocycle, example, verify };

struct Invocation {
  Command command = Command::sign;
  bool json = false;
  std::string degrees;
  std::string perm;
  std::string base_order;
  std::string word;
  std::string u = "auto";
  std::string output;
  bool cochain = false;
  std::size_t n = 5;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

/// Thrown by parse_invocation; `status()` is the exit status to report
/// (0 after --help, kUsage otherwise). `what()` is the text to print.
class UsageError : public std::runtime_error {
public:
  UsageError(const std::string& text, int status, bool to_stdout)
      : std::runtime_error(text), status_(status), to_stdout_(to_stdout) {}
  int status() const noexcept { return status_; }
  bool to_stdout() const noexcept { return to_stdout_; }

private:
  int status_;
  bool to_stdout_;
};

/// `args` excludes the program name.
Invocation parse_invocation(const std::vector<std::string>& args);

int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// parse_invocation + run with exit-status mapping.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace koszul::cli
