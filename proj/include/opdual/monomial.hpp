#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace opdual {

// Exponent vector over a fixed variable count. The all-zeros vector is the
// unit monomial. Total degree is cached.
class Monomial {
 public:
  explicit Monomial(std::size_t varCount) : exps_(varCount, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t varCount, std::size_t index, std::uint32_t exp = 1);

  std::size_t varCount() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t degree() const { return degree_; }
  bool isUnit() const { return degree_ == 0; }

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  // Requires other.divides(*this).
  Monomial dividedBy(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Structural order used only for canonical term storage; monomial orders
  // live in MonomialOrder.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return exps_ <=> other.exps_;
  }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

}  // namespace opdual
