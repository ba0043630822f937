#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gredcheck {

// Input text could not be parsed. `offset` is the byte position of the
// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A loaded object violates one of its declared invariants.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The configured reduction-step budget ran out. Callers convert this
// into an "unknown" verdict; it never stands for a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long long limit)
      : std::runtime_error("step budget of " + std::to_string(limit) +
                           " reduction steps exhausted"),
        limit_(limit) {}

  long long limit() const { return limit_; }

 private:
  long long limit_;
};

}  // namespace gredcheck
