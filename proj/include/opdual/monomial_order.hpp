#pragma once

#include <compare>
#include <string>
#include <vector>

#include "opdual/monomial.hpp"
#include "opdual/variables.hpp"

namespace opdual {

enum class OrderKind { Lex, GrLex, GrevLex };

OrderKind orderKindFromString(const std::string& name);
std::string orderKindToString(OrderKind kind);

// Total order on monomials: lex / grlex / grevlex over a variable ranking.
// The ranking lists variable names ascending: first name is the smallest.
// With the default ranking the VariableSet order itself is ascending.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, VarsPtr vars);
  MonomialOrder(OrderKind kind, VarsPtr vars, const std::vector<std::string>& rankingAscending);

  OrderKind kind() const { return kind_; }
  const VarsPtr& vars() const { return vars_; }
  std::vector<std::string> rankingNames() const;

  // Throws std::invalid_argument when a or b is not over this order's
  // variable count.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  OrderKind kind_;
  VarsPtr vars_;
  std::vector<std::size_t> byRankDesc_;  // variable indices, most significant first
};

}  // namespace opdual
