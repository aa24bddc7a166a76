#pragma once

#include <span>
#include <vector>

#include "opdual/polynomial.hpp"

namespace opdual {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor: f = sum q_i g_i + r
};

// Full multivariate division with tail reduction. At every reduction step the
// divisors are tried in the given sequence order, so the result is
// deterministic for a fixed divisor sequence. No monomial of the remainder is
// divisible by any divisor's leading monomial.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

DivisionResult divideTracked(const Polynomial& f, std::span<const Polynomial> divisors,
                             const MonomialOrder& order);

Polynomial monicForm(const Polynomial& f, const MonomialOrder& order);

}  // namespace opdual
