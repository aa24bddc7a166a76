#include "opdual/variables.hpp"

#include <stdexcept>

namespace opdual {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!index_.emplace(names_[i], i).second) {
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
  }
}

std::optional<std::size_t> VariableSet::indexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarsPtr makeVariables(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

}  // namespace opdual
