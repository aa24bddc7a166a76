#include "opdual/detail/ordered_poly.hpp"

#include <algorithm>

namespace opdual::detail {

OrderedPoly toOrdered(const Polynomial& f, const MonomialOrder& order) {
  OrderedPoly out;
  out.terms = f.terms();
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return out;
}

Polynomial fromOrdered(const OrderedPoly& f, const VarsPtr& vars) {
  return Polynomial::fromTerms(vars, f.terms);
}

std::uint32_t varMask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.varCount(); ++i) {
    if (m.exponent(i) != 0) mask |= (1u << (i & 31));
  }
  return mask;
}

void DivisorSet::push(OrderedPoly p) {
  leadMasks.push_back(p.empty() ? 0 : varMask(p.lead().mono));
  polys.push_back(std::move(p));
}

void DivisorSet::insertAt(std::size_t pos, OrderedPoly p) {
  leadMasks.insert(leadMasks.begin() + pos, p.empty() ? 0 : varMask(p.lead().mono));
  polys.insert(polys.begin() + pos, std::move(p));
}

void addScaledShifted(OrderedPoly& target, const Rational& c, const Monomial& m,
                      const OrderedPoly& g, const MonomialOrder& order) {
  std::vector<Term> merged;
  merged.reserve(target.terms.size() + g.terms.size());
  auto a = target.terms.begin();
  auto b = g.terms.begin();
  while (a != target.terms.end() && b != g.terms.end()) {
    Monomial bm = b->mono.times(m);
    auto cmp = order.compare(a->mono, bm);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back({std::move(bm), b->coeff * c});
      ++b;
    } else {
      Rational sum = a->coeff + b->coeff * c;
      if (sum != 0) merged.push_back({std::move(a->mono), std::move(sum)});
      ++a, ++b;
    }
  }
  while (a != target.terms.end()) {
    merged.push_back(std::move(*a));
    ++a;
  }
  while (b != g.terms.end()) {
    merged.push_back({b->mono.times(m), b->coeff * c});
    ++b;
  }
  target.terms = std::move(merged);
}

void makeMonic(OrderedPoly& f) {
  if (f.empty()) return;
  Rational lc = f.terms.front().coeff;
  if (lc == 1) return;
  Rational inv = Rational(1) / lc;
  for (Term& t : f.terms) t.coeff *= inv;
}

int comparePolys(const OrderedPoly& a, const OrderedPoly& b, const MonomialOrder& order) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = order.compare(a.terms[i].mono, b.terms[i].mono);
    if (c == std::strong_ordering::greater) return 1;
    if (c == std::strong_ordering::less) return -1;
    int cc = cmp(a.terms[i].coeff, b.terms[i].coeff);
    if (cc != 0) return cc;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

OrderedPoly normalFormOrdered(const OrderedPoly& f, const DivisorSet& divisors,
                              const MonomialOrder& order, bool reverseDivisors) {
  OrderedPoly work = f;
  std::vector<Term> remainder;
  std::size_t start = 0;  // terms before `start` already moved to the remainder
  while (start < work.terms.size()) {
    const Term& lead = work.terms[start];
    std::uint32_t leadMask = varMask(lead.mono);
    const OrderedPoly* hit = nullptr;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      std::size_t i = reverseDivisors ? divisors.size() - 1 - k : k;
      if ((divisors.leadMasks[i] & ~leadMask) != 0) continue;
      if (divisors.polys[i].lead().mono.divides(lead.mono)) {
        hit = &divisors.polys[i];
        break;
      }
    }
    if (hit == nullptr) {
      remainder.push_back(std::move(work.terms[start]));
      ++start;
      continue;
    }
    Rational factor = -lead.coeff / hit->lead().coeff;
    Monomial shift = lead.mono.dividedBy(hit->lead().mono);
    OrderedPoly tail;
    tail.terms.assign(std::make_move_iterator(work.terms.begin() + start),
                      std::make_move_iterator(work.terms.end()));
    addScaledShifted(tail, factor, shift, *hit, order);
    work.terms = std::move(tail.terms);
    start = 0;
  }
  OrderedPoly out;
  out.terms = std::move(remainder);
  return out;
}

OrderedPoly normalFormOrdered(const OrderedPoly& f, const std::vector<OrderedPoly>& divisors,
                              const MonomialOrder& order) {
  DivisorSet set;
  for (const OrderedPoly& d : divisors) set.push(d);
  return normalFormOrdered(f, set, order);
}

bool isConstantPoly(const OrderedPoly& f) {
  return f.terms.size() == 1 && f.terms.front().mono.isUnit();
}

}  // namespace opdual::detail
