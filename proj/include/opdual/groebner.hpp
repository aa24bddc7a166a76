#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opdual/division.hpp"
#include "opdual/polynomial.hpp"

namespace opdual {

struct StageRecord {
  int stage = 0;
  std::size_t elementsBeforeSelfReduce = 0;
  std::size_t eliminatedBySelfReduce = 0;
  std::size_t survivingGenerators = 0;
  std::size_t nonzeroSPolynomials = 0;
};

struct GroebnerOptions {
  // Stop as soon as a nonzero constant shows up after self-reduction; the
  // basis is then {1} and the trace is truncated at that stage. Off for the
  // reference staged runs so the recorded trace matches the full iteration.
  bool stopAtUnit = false;
  // Worker threads for the S-polynomial phase of each stage. Results are
  // merged in pair order, so the outcome is identical for any worker count.
  int workers = 1;
  std::size_t maxStages = 64;
  // Divisor try-order inside the staged engine's normal forms. The final
  // reduced basis is order-independent; only the stage trace moves. Ascending
  // is the default assumption.
  bool selfReduceDescendingDivisors = false;
  bool spolyDescendingDivisors = false;
};

struct GroebnerResult {
  std::vector<Polynomial> basis;  // reduced GB, ascending under `order`
  MonomialOrder order;
  std::vector<StageRecord> trace;

  bool isUnit() const {
    return basis.size() == 1 && basis.front().isConstant() && !basis.front().isZero();
  }
};

// (lcm/lt(f))·f − (lcm/lt(g))·g over the leading monomials' lcm.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// One ascending pass: each element is replaced by the monic normal form
// against the previously kept elements, or dropped when that form is zero.
// Output sorted ascending.
std::vector<Polynomial> selfReduce(std::span<const Polynomial> generators,
                                   const MonomialOrder& order);

// Staged Buchberger: per stage, self-reduce, then form all pairwise
// S-polynomials, keep the monic normal forms of the nonzero reductions, merge
// and repeat until nothing changes. The returned basis is post-processed to
// the unique reduced GB.
GroebnerResult buchbergerStaged(std::span<const Polynomial> generators,
                                const MonomialOrder& order, const GroebnerOptions& options = {});

// Pair-queue Buchberger with the product criterion and smallest-lcm
// selection. Same reduced basis as the staged algorithm (it is unique per
// ideal and order) but usually far fewer reductions; no stage trace.
GroebnerResult buchbergerQueue(std::span<const Polynomial> generators, const MonomialOrder& order,
                               const GroebnerOptions& options = {});

bool isUnitIdeal(std::span<const Polynomial> generators, const MonomialOrder& order);

// Membership via normal form against the reduced basis.
bool contains(const GroebnerResult& gb, const Polynomial& f);

bool idealsEqual(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const MonomialOrder& order);

}  // namespace opdual
