#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gredcheck {

// An ordered list of distinct variable names. Rings are cheap handles;
// two rings are equal when they list the same names in the same order.
class Ring {
 public:
  // Names must match [a-zA-Z][a-zA-Z0-9_]* and be pairwise distinct.
  explicit Ring(std::vector<std::string> names);

  int arity() const { return static_cast<int>(names_->size()); }
  const std::string& var(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& vars() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;

  // New ring with `name` appended.
  Ring extended(const std::string& name) const;
  // New ring containing only the variables selected by `keep` (indices
  // into this ring, in the given sequence).
  Ring subring(const std::vector<int>& keep) const;

  // A variable name not present in this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  std::string str() const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_valid_variable_name(std::string_view name);

}  // namespace gredcheck
