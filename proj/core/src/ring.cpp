#include "gredcheck/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gredcheck {

bool is_valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring::Ring(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_valid_variable_name(n)) {
      throw std::invalid_argument("invalid variable name: '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate variable name: '" + n + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (int i = 0; i < arity(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

Ring Ring::extended(const std::string& name) const {
  auto names = *names_;
  names.push_back(name);
  return Ring(std::move(names));
}

Ring Ring::subring(const std::vector<int>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int i : keep) names.push_back(var(i));
  return Ring(std::move(names));
}

std::string Ring::fresh_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (int k = 0;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

std::string Ring::str() const {
  std::string out;
  for (int i = 0; i < arity(); ++i) {
    if (i) out += ",";
    out += var(i);
  }
  return out;
}

}  // namespace gredcheck
