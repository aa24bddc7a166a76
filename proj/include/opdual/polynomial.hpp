#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "opdual/monomial.hpp"
#include "opdual/monomial_order.hpp"
#include "opdual/rational.hpp"
#include "opdual/variables.hpp"

namespace opdual {

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term& other) const {
    return mono == other.mono && coeff == other.coeff;
  }
};

// Sparse multivariate polynomial over Q. Terms are stored in a canonical
// order-independent form (sorted by the structural monomial order, no zero
// coefficients), so equality is representation equality regardless of which
// monomial order later queries the value.
class Polynomial {
 public:
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

  static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
  static Polynomial constant(VarsPtr vars, Rational value);
  static Polynomial variable(VarsPtr vars, std::size_t index);
  static Polynomial fromTerm(VarsPtr vars, Monomial mono, Rational coeff);
  // Combines duplicates, strips zeros, sorts.
  static Polynomial fromTerms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // Coefficient of the unit monomial (0 when absent).
  Rational constantValue() const;
  Rational coefficient(const Monomial& mono) const;
  std::uint32_t totalDegree() const;
  Rational coefficientSum() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& other) const {
    return sameVariables(vars_, other.vars_) && terms_ == other.terms_;
  }

  Term leadingTerm(const MonomialOrder& order) const;  // throws on zero
  Monomial leadingMonomial(const MonomialOrder& order) const;
  // f / leading coefficient; throws on zero.
  Polynomial monic(const MonomialOrder& order) const;

 private:
  friend class PolynomialBuilder;
  VarsPtr vars_;
  std::vector<Term> terms_;  // ascending structural order, nonzero coeffs
};

Polynomial operator*(const Rational& c, const Polynomial& f);

// Maps variable index -> replacement polynomial over the target variables.
Polynomial substitute(const Polynomial& f,
                      const std::function<Polynomial(std::size_t)>& image,
                      const VarsPtr& target);

// Accumulates terms and normalizes once; used by hot paths.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(VarsPtr vars) : vars_(std::move(vars)) {}
  void add(Monomial mono, Rational coeff);
  Polynomial build();

 private:
  VarsPtr vars_;
  std::vector<Term> terms_;
};

}  // namespace opdual
