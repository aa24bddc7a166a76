#include "opdual/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace opdual {

namespace {

void requireSameVars(const Polynomial& f, const Polynomial& g) {
  if (!sameVariables(f.variables(), g.variables())) {
    throw std::invalid_argument("polynomials over different variable sets");
  }
}

}  // namespace

Polynomial Polynomial::constant(VarsPtr vars, Rational value) {
  Polynomial f(std::move(vars));
  if (value != 0) f.terms_.push_back({Monomial(f.vars_->size()), std::move(value)});
  return f;
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t index) {
  Polynomial f(vars);
  f.terms_.push_back({Monomial::variable(vars->size(), index), Rational(1)});
  return f;
}

Polynomial Polynomial::fromTerm(VarsPtr vars, Monomial mono, Rational coeff) {
  if (mono.varCount() != vars->size()) {
    throw std::invalid_argument("monomial does not match variable set");
  }
  Polynomial f(std::move(vars));
  if (coeff != 0) f.terms_.push_back({std::move(mono), std::move(coeff)});
  return f;
}

Polynomial Polynomial::fromTerms(VarsPtr vars, std::vector<Term> terms) {
  PolynomialBuilder builder(std::move(vars));
  for (auto& t : terms) builder.add(std::move(t.mono), std::move(t.coeff));
  return builder.build();
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isUnit());
}

Rational Polynomial::constantValue() const {
  for (const Term& t : terms_) {
    if (t.mono.isUnit()) return t.coeff;
  }
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return t.mono < m; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return Rational(0);
}

std::uint32_t Polynomial::totalDegree() const {
  std::uint32_t deg = 0;
  for (const Term& t : terms_) deg = std::max(deg, t.mono.degree());
  return deg;
}

Rational Polynomial::coefficientSum() const {
  Rational sum(0);
  for (const Term& t : terms_) sum += t.coeff;
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  requireSameVars(*this, g);
  Polynomial out(vars_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() && b != g.terms_.end()) {
    if (a->mono < b->mono) {
      out.terms_.push_back(*a++);
    } else if (b->mono < a->mono) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
      ++a, ++b;
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, g.terms_.end());
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  requireSameVars(*this, g);
  std::map<Monomial, Rational> acc;
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) {
      Monomial m = a.mono.times(b.mono);
      auto [it, inserted] = acc.try_emplace(std::move(m), 0);
      it->second += a.coeff * b.coeff;
    }
  }
  Polynomial out(vars_);
  out.terms_.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) out.terms_.push_back({mono, std::move(coeff)});
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial out(vars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

Term Polynomial::leadingTerm(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (order.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  }
  return *best;
}

Monomial Polynomial::leadingMonomial(const MonomialOrder& order) const {
  return leadingTerm(order).mono;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  Rational lc = leadingTerm(order).coeff;
  if (lc == 1) return *this;
  Rational inv = Rational(1) / lc;
  return scaled(inv);
}

Polynomial substitute(const Polynomial& f,
                      const std::function<Polynomial(std::size_t)>& image,
                      const VarsPtr& target) {
  Polynomial out = Polynomial::zero(target);
  for (const Term& t : f.terms()) {
    Polynomial product = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < t.mono.varCount(); ++v) {
      for (std::uint32_t e = 0; e < t.mono.exponent(v); ++e) {
        product = product * image(v);
      }
    }
    out = out + product;
  }
  return out;
}

void PolynomialBuilder::add(Monomial mono, Rational coeff) {
  if (coeff != 0) terms_.push_back({std::move(mono), std::move(coeff)});
}

Polynomial PolynomialBuilder::build() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  Polynomial out(std::move(vars_));
  out.terms_ = std::move(merged);
  return out;
}

}  // namespace opdual
