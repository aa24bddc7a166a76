#pragma once

#include <cstdint>
#include <vector>

#include "opdual/polynomial.hpp"

namespace opdual::detail {

// Engine-internal polynomial form: terms sorted descending under one fixed
// MonomialOrder. Conversions to/from the canonical Polynomial happen at the
// module boundary.
struct OrderedPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

OrderedPoly toOrdered(const Polynomial& f, const MonomialOrder& order);
Polynomial fromOrdered(const OrderedPoly& f, const VarsPtr& vars);

// Bit per variable with nonzero exponent; quick reject for divisibility.
std::uint32_t varMask(const Monomial& m);

// Divisor sequence with cached lead masks, kept in insertion order.
struct DivisorSet {
  std::vector<OrderedPoly> polys;
  std::vector<std::uint32_t> leadMasks;

  std::size_t size() const { return polys.size(); }
  void push(OrderedPoly p);
  void insertAt(std::size_t pos, OrderedPoly p);
  void clear() { polys.clear(); leadMasks.clear(); }
};

// target += c * m * g, keeping descending order. Single merge pass.
void addScaledShifted(OrderedPoly& target, const Rational& c, const Monomial& m,
                      const OrderedPoly& g, const MonomialOrder& order);

void makeMonic(OrderedPoly& f);

// Total order extending the monomial order to polynomials: compare term
// sequences descending, monomial first, coefficient as tiebreak, shorter
// prefix smaller. Returns <0, 0, >0.
int comparePolys(const OrderedPoly& a, const OrderedPoly& b, const MonomialOrder& order);

// Deterministic full reduction of f by the divisor sequence. With
// reverseDivisors the sequence is tried back to front at every step.
OrderedPoly normalFormOrdered(const OrderedPoly& f, const DivisorSet& divisors,
                              const MonomialOrder& order, bool reverseDivisors = false);
OrderedPoly normalFormOrdered(const OrderedPoly& f, const std::vector<OrderedPoly>& divisors,
                              const MonomialOrder& order);

bool isConstantPoly(const OrderedPoly& f);

}  // namespace opdual::detail
