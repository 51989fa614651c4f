#ifndef CCM_ERRORS_HPP_
#define CCM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ccm {

// Bad caller input: out-of-range ids, malformed graphs, invalid cliques.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not follow the profile or graph format. Carries the
// 1-based line number of the offending line (0 when not tied to a line).
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what
                            : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// No assignment satisfies the usage constraints of the rule.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to enumerate more than its guard allows.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size preconditions rejected in strict mode.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// A generated instance broke one of its counting identities. Always a bug.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ccm

#endif  // CCM_ERRORS_HPP_
