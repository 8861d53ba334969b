#pragma once

#include <stdexcept>
#include <string>

namespace izeta {

// Error taxonomy.  The CLI maps each kind to a process exit code, so library
// code picks the kind by what went wrong, not by who is expected to catch it:
//   validation   -> bad input (parse errors, graph preconditions)      exit 2
//   cross_check  -> two independent routes disagreed, or an internal
//                   exactness/convergence guarantee failed             exit 3
//   budget       -> a work estimate exceeded the configured budget     exit 4
enum class ErrorKind { validation, cross_check, budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::validation: return 2;
      case ErrorKind::cross_check: return 3;
      case ErrorKind::budget: return 4;
    }
    return 3;
  }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_validation(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::validation, code, msg);
}
[[noreturn]] inline void fail_cross_check(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::cross_check, code, msg);
}
[[noreturn]] inline void fail_budget(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::budget, code, msg);
}

}  // namespace izeta
