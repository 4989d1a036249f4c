#pragma once

#include <stdexcept>
#include <string>

namespace pairzeta {

// Division by zero, evaluation at a pole, or an argument outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series product or inverse needed a coefficient its inputs do not determine.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonGenericTauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when two computations that must agree do not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pairzeta
