#include "opdual/division.hpp"

#include <stdexcept>

#include "opdual/detail/ordered_poly.hpp"

namespace opdual {

using detail::OrderedPoly;

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  std::vector<OrderedPoly> divs;
  divs.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    if (d.isZero()) throw std::invalid_argument("zero divisor in normalForm");
    divs.push_back(detail::toOrdered(d, order));
  }
  OrderedPoly r = detail::normalFormOrdered(detail::toOrdered(f, order), divs, order);
  return detail::fromOrdered(r, f.variables());
}

DivisionResult divideTracked(const Polynomial& f, std::span<const Polynomial> divisors,
                             const MonomialOrder& order) {
  std::vector<OrderedPoly> divs;
  divs.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    if (d.isZero()) throw std::invalid_argument("zero divisor in divideTracked");
    divs.push_back(detail::toOrdered(d, order));
  }

  OrderedPoly work = detail::toOrdered(f, order);
  std::vector<Term> remainder;
  std::vector<PolynomialBuilder> quotients;
  for (std::size_t i = 0; i < divs.size(); ++i) quotients.emplace_back(f.variables());

  while (!work.empty()) {
    const Term& lead = work.lead();
    std::size_t hit = divs.size();
    for (std::size_t i = 0; i < divs.size(); ++i) {
      if (divs[i].lead().mono.divides(lead.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == divs.size()) {
      remainder.push_back(work.terms.front());
      work.terms.erase(work.terms.begin());
      continue;
    }
    Rational q = lead.coeff / divs[hit].lead().coeff;
    Monomial shift = lead.mono.dividedBy(divs[hit].lead().mono);
    quotients[hit].add(shift, q);
    detail::addScaledShifted(work, -q, shift, divs[hit], order);
  }

  DivisionResult out{Polynomial::fromTerms(f.variables(), std::move(remainder)), {}};
  out.quotients.reserve(divs.size());
  for (auto& b : quotients) out.quotients.push_back(b.build());
  return out;
}

Polynomial monicForm(const Polynomial& f, const MonomialOrder& order) {
  if (f.isZero()) throw std::invalid_argument("monicForm of the zero polynomial");
  return f.monic(order);
}

}  // namespace opdual
