#ifndef TWJAC_ERRORS_HPP
#define TWJAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twjac {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct NonExactDivision : std::runtime_error {
  explicit NonExactDivision(const std::string& what)
      : std::runtime_error("non-exact polynomial division: " + what) {}
};

struct NotInvariant : std::runtime_error {
  explicit NotInvariant(const std::string& what)
      : std::runtime_error("potential not invariant: " + what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what)
      : std::runtime_error("parse error: " + what) {}
};

}  // namespace twjac

#endif
