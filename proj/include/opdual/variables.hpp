#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace opdual {

// Ordered set of distinct variable names. The position of a name defines the
// default ranking used by monomial orders (earlier = lower).
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> indexOf(std::string_view name) const;

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr makeVariables(std::vector<std::string> names);

inline bool sameVariables(const VarsPtr& a, const VarsPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace opdual
