#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hunters {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A request exceeds a representational limit (word width, memory).
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class NonTerminating : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t best_lower_bound = 0)
      : Error(what), best_lower_bound_(best_lower_bound) {}

  // Largest hunter count proven insufficient plus one, when known.
  std::size_t best_lower_bound() const noexcept { return best_lower_bound_; }

 private:
  std::size_t best_lower_bound_;
};

class Inapplicable : public Error {
 public:
  Inapplicable(const std::string& what, long long u_even, long long u_odd)
      : Error(what), u_even_(u_even), u_odd_(u_odd) {}

  long long u_even() const noexcept { return u_even_; }
  long long u_odd() const noexcept { return u_odd_; }

 private:
  long long u_even_;
  long long u_odd_;
};

}  // namespace hunters
