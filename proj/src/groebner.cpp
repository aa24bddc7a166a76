#include "opdual/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "opdual/detail/ordered_poly.hpp"

namespace opdual {

using detail::DivisorSet;
using detail::OrderedPoly;

namespace {

// Generator set kept sorted ascending under comparePolys, with lead masks in
// sync for fast division.
struct GenSet {
  DivisorSet set;

  std::size_t size() const { return set.size(); }
  const std::vector<OrderedPoly>& polys() const { return set.polys; }

  std::size_t lowerBound(const OrderedPoly& p, const MonomialOrder& order) const {
    std::size_t lo = 0, hi = set.polys.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (detail::comparePolys(set.polys[mid], p, order) < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  bool insert(OrderedPoly p, const MonomialOrder& order) {
    std::size_t pos = lowerBound(p, order);
    if (pos < set.polys.size() && detail::comparePolys(set.polys[pos], p, order) == 0) {
      return false;
    }
    set.insertAt(pos, std::move(p));
    return true;
  }

  bool containsEqual(const OrderedPoly& p, const MonomialOrder& order) const {
    std::size_t pos = lowerBound(p, order);
    return pos < set.polys.size() && detail::comparePolys(set.polys[pos], p, order) == 0;
  }
};

bool samePolys(const std::vector<OrderedPoly>& a, const std::vector<OrderedPoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].terms != b[i].terms) return false;
  }
  return true;
}

OrderedPoly sPolyOrdered(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Term& lf = f.lead();
  const Term& lg = g.lead();
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  OrderedPoly out;
  detail::addScaledShifted(out, Rational(1) / lf.coeff, l.dividedBy(lf.mono), f, order);
  detail::addScaledShifted(out, Rational(-1) / lg.coeff, l.dividedBy(lg.mono), g, order);
  return out;
}

GenSet selfReducePass(const std::vector<OrderedPoly>& input, const MonomialOrder& order,
                      bool descendingDivisors = false) {
  std::vector<OrderedPoly> queue = input;
  std::sort(queue.begin(), queue.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return detail::comparePolys(a, b, order) < 0;
  });
  GenSet kept;
  for (OrderedPoly& f : queue) {
    OrderedPoly r = detail::normalFormOrdered(f, kept.set, order, descendingDivisors);
    if (r.empty()) continue;
    detail::makeMonic(r);
    kept.insert(std::move(r), order);
  }
  return kept;
}

// All pairwise S-polynomials of g reduced against g; returns the distinct
// nonzero monic normal forms that are not already in g, sorted ascending.
std::vector<OrderedPoly> sPolyPhase(const GenSet& g, const MonomialOrder& order, int workers,
                                    bool descendingDivisors = false) {
  const std::size_t n = g.size();
  if (n < 2) return {};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  std::vector<OrderedPoly> reduced(pairs.size());
  auto runRange = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      OrderedPoly h = sPolyOrdered(g.polys()[pairs[k].first], g.polys()[pairs[k].second], order);
      if (h.empty()) continue;
      OrderedPoly r = detail::normalFormOrdered(h, g.set, order, descendingDivisors);
      if (!r.empty()) detail::makeMonic(r);
      reduced[k] = std::move(r);
    }
  };

  int useWorkers = std::max(1, workers);
  if (useWorkers == 1 || pairs.size() < 64) {
    runRange(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    std::size_t chunk = (pairs.size() + useWorkers - 1) / useWorkers;
    for (int w = 0; w < useWorkers; ++w) {
      std::size_t lo = std::min(pairs.size(), static_cast<std::size_t>(w) * chunk);
      std::size_t hi = std::min(pairs.size(), lo + chunk);
      if (lo < hi) threads.emplace_back(runRange, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  GenSet fresh;
  for (OrderedPoly& r : reduced) {
    if (r.empty()) continue;
    if (g.containsEqual(r, order)) continue;
    fresh.insert(std::move(r), order);
  }
  return std::move(fresh.set.polys);
}

std::vector<OrderedPoly> toReducedBasis(std::vector<OrderedPoly> g, const MonomialOrder& order) {
  // Minimal basis: ascending scan keeps leads pairwise non-divisible, because
  // divisibility is compatible with the monomial order.
  std::sort(g.begin(), g.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return detail::comparePolys(a, b, order) < 0;
  });
  std::vector<OrderedPoly> minimal;
  for (OrderedPoly& f : g) {
    bool redundant = false;
    for (const OrderedPoly& k : minimal) {
      if (k.lead().mono.divides(f.lead().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(f));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      DivisorSet others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push(minimal[j]);
      }
      OrderedPoly r = detail::normalFormOrdered(minimal[i], others, order);
      detail::makeMonic(r);
      if (r.terms != minimal[i].terms) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return detail::comparePolys(a, b, order) < 0;
  });
  return minimal;
}

std::vector<OrderedPoly> inputGenerators(std::span<const Polynomial> generators,
                                         const MonomialOrder& order) {
  std::vector<OrderedPoly> g;
  g.reserve(generators.size());
  for (const Polynomial& f : generators) {
    if (!f.isZero()) g.push_back(detail::toOrdered(f, order));
  }
  return g;
}

GroebnerResult finishResult(std::vector<OrderedPoly> g, const MonomialOrder& order,
                            std::vector<StageRecord> trace, bool unit) {
  GroebnerResult result{{}, order, std::move(trace)};
  if (unit) {
    result.basis.push_back(Polynomial::constant(order.vars(), Rational(1)));
    return result;
  }
  std::vector<OrderedPoly> reduced = toReducedBasis(std::move(g), order);
  result.basis.reserve(reduced.size());
  for (const OrderedPoly& f : reduced) {
    result.basis.push_back(detail::fromOrdered(f, order.vars()));
  }
  return result;
}

}  // namespace

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.isZero() || g.isZero()) throw std::invalid_argument("sPolynomial of zero polynomial");
  OrderedPoly s = sPolyOrdered(detail::toOrdered(f, order), detail::toOrdered(g, order), order);
  return detail::fromOrdered(s, f.variables());
}

std::vector<Polynomial> selfReduce(std::span<const Polynomial> generators,
                                   const MonomialOrder& order) {
  GenSet out = selfReducePass(inputGenerators(generators, order), order);
  std::vector<Polynomial> result;
  result.reserve(out.size());
  for (const OrderedPoly& f : out.polys()) result.push_back(detail::fromOrdered(f, order.vars()));
  return result;
}

GroebnerResult buchbergerStaged(std::span<const Polynomial> generators,
                                const MonomialOrder& order, const GroebnerOptions& options) {
  std::vector<OrderedPoly> g = inputGenerators(generators, order);
  if (g.empty()) return GroebnerResult{{}, order, {}};
  std::sort(g.begin(), g.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return detail::comparePolys(a, b, order) < 0;
  });

  std::vector<StageRecord> trace;
  bool unit = false;
  for (std::size_t stage = 1;; ++stage) {
    if (stage > options.maxStages) {
      throw std::runtime_error("staged Buchberger exceeded the stage bound");
    }
    StageRecord record;
    record.stage = static_cast<int>(stage);
    record.elementsBeforeSelfReduce = g.size();

    GenSet current = selfReducePass(g, order, options.selfReduceDescendingDivisors);
    record.eliminatedBySelfReduce = record.elementsBeforeSelfReduce - current.size();
    record.survivingGenerators = current.size();

    bool sameAsBefore = samePolys(g, current.polys());

    if (current.size() == 1 && detail::isConstantPoly(current.polys().front())) {
      record.nonzeroSPolynomials = 0;
      trace.push_back(record);
      unit = true;
      g = std::move(current.set.polys);
      break;
    }
    if (options.stopAtUnit &&
        std::any_of(current.polys().begin(), current.polys().end(),
                    [](const OrderedPoly& f) { return detail::isConstantPoly(f); })) {
      record.nonzeroSPolynomials = 0;
      trace.push_back(record);
      unit = true;
      g = std::move(current.set.polys);
      break;
    }

    std::vector<OrderedPoly> fresh = sPolyPhase(current, order, options.workers,
                                                options.spolyDescendingDivisors);
    record.nonzeroSPolynomials = fresh.size();
    trace.push_back(record);

    if (fresh.empty() && sameAsBefore) {
      g = std::move(current.set.polys);
      break;
    }
    for (OrderedPoly& f : fresh) current.insert(std::move(f), order);
    g = std::move(current.set.polys);
  }

  return finishResult(std::move(g), order, std::move(trace), unit);
}

GroebnerResult buchbergerQueue(std::span<const Polynomial> generators, const MonomialOrder& order,
                               const GroebnerOptions& /*options*/) {
  GenSet start = selfReducePass(inputGenerators(generators, order), order);
  std::vector<OrderedPoly> g = std::move(start.set.polys);
  if (g.empty()) return GroebnerResult{{}, order, {}};

  DivisorSet divisors;
  for (const OrderedPoly& f : g) divisors.push(f);

  auto unitIn = [&](const std::vector<OrderedPoly>& polys) {
    return std::any_of(polys.begin(), polys.end(),
                       [](const OrderedPoly& f) { return detail::isConstantPoly(f); });
  };
  if (unitIn(g)) return finishResult({}, order, {}, true);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pairLess = [&](const Pair& a, const Pair& b) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto addPairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = g[i].lead().mono;
      const Monomial& b = g[j].lead().mono;
      Monomial l = Monomial::lcm(a, b);
      // Product criterion: coprime leading monomials reduce to zero.
      if (l.degree() == a.degree() + b.degree()) {
        treated.insert({i, j});
        continue;
      }
      queue.push_back(Pair{i, j, std::move(l)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) addPairs(j);

  auto chainSkip = [&](const Pair& p) {
    // Buchberger's chain criterion: drop (i, j) when some g_k divides the
    // pair's lcm and both (i, k) and (j, k) were already treated.
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g[k].lead().mono.divides(p.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::pair(std::min(a, b), std::max(a, b));
      };
      if (treated.count(key(p.i, k)) != 0 && treated.count(key(p.j, k)) != 0) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pairLess);
    Pair p = std::move(*it);
    queue.erase(it);
    treated.insert({p.i, p.j});
    if (chainSkip(p)) continue;
    OrderedPoly h = sPolyOrdered(g[p.i], g[p.j], order);
    if (h.empty()) continue;
    OrderedPoly r = detail::normalFormOrdered(h, divisors, order);
    if (r.empty()) continue;
    detail::makeMonic(r);
    if (detail::isConstantPoly(r)) return finishResult({}, order, {}, true);
    g.push_back(r);
    divisors.push(std::move(r));
    addPairs(g.size() - 1);
  }

  return finishResult(std::move(g), order, {}, false);
}

bool isUnitIdeal(std::span<const Polynomial> generators, const MonomialOrder& order) {
  return buchbergerQueue(generators, order, {}).isUnit();
}

bool contains(const GroebnerResult& gb, const Polynomial& f) {
  if (f.isZero()) return true;
  return normalForm(f, gb.basis, gb.order).isZero();
}

bool idealsEqual(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const MonomialOrder& order) {
  GroebnerResult ga = buchbergerQueue(a, order, {});
  GroebnerResult gb = buchbergerQueue(b, order, {});
  if (ga.basis.size() != gb.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i) {
    if (!(ga.basis[i] == gb.basis[i])) return false;
  }
  return true;
}

}  // namespace opdual
