#include "opdual/monomial_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace opdual {

OrderKind orderKindFromString(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw std::invalid_argument("unknown monomial order: " + name);
}

std::string orderKindToString(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  throw std::logic_error("bad OrderKind");
}

MonomialOrder::MonomialOrder(OrderKind kind, VarsPtr vars)
    : kind_(kind), vars_(std::move(vars)) {
  byRankDesc_.resize(vars_->size());
  for (std::size_t i = 0; i < byRankDesc_.size(); ++i) {
    byRankDesc_[i] = byRankDesc_.size() - 1 - i;
  }
}

MonomialOrder::MonomialOrder(OrderKind kind, VarsPtr vars,
                             const std::vector<std::string>& rankingAscending)
    : kind_(kind), vars_(std::move(vars)) {
  if (rankingAscending.size() != vars_->size()) {
    throw std::invalid_argument("ranking must list every variable exactly once");
  }
  std::vector<bool> seen(vars_->size(), false);
  byRankDesc_.resize(vars_->size());
  for (std::size_t rank = 0; rank < rankingAscending.size(); ++rank) {
    auto idx = vars_->indexOf(rankingAscending[rank]);
    if (!idx) throw std::invalid_argument("ranking names unknown variable: " + rankingAscending[rank]);
    if (seen[*idx]) throw std::invalid_argument("ranking repeats variable: " + rankingAscending[rank]);
    seen[*idx] = true;
    byRankDesc_[vars_->size() - 1 - rank] = *idx;
  }
}

std::vector<std::string> MonomialOrder::rankingNames() const {
  std::vector<std::string> out(byRankDesc_.size());
  for (std::size_t i = 0; i < byRankDesc_.size(); ++i) {
    out[byRankDesc_.size() - 1 - i] = vars_->name(byRankDesc_[i]);
  }
  return out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.varCount() != vars_->size() || b.varCount() != vars_->size()) {
    throw std::invalid_argument("monomial does not match the order's variable set");
  }
  if (kind_ != OrderKind::Lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (kind_ == OrderKind::GrevLex) {
    // Ties: scan from the least significant variable; the monomial with the
    // smaller exponent at the first difference is the greater one.
    for (auto it = byRankDesc_.rbegin(); it != byRankDesc_.rend(); ++it) {
      std::uint32_t ea = a.exponent(*it), eb = b.exponent(*it);
      if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t idx : byRankDesc_) {
    std::uint32_t ea = a.exponent(idx), eb = b.exponent(idx);
    if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace opdual
