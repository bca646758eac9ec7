#ifndef FATPOINT_ERRORS_HPP
#define FATPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fatpoint {

/// Two operands live over alphabets of different sizes.
class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("alphabet mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// Multiplicities violate the required m2 >= max(m0, m1) ordering.
class InvalidOrdering : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside the parameter region its statement covers.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed; always a bug or a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fatpoint

#endif
