#include "opdual/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opdual {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t varCount, std::size_t index, std::uint32_t exp) {
  if (index >= varCount) throw std::out_of_range("variable index out of range");
  Monomial m(varCount);
  m.exps_[index] = exp;
  m.degree_ = exp;
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  if (degree_ > m.degree_ || exps_.size() != m.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += m.exps_[i];
  out.degree_ = degree_ + m.degree_;
  return out;
}

Monomial Monomial::dividedBy(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = deg;
  return out;
}

}  // namespace opdual
