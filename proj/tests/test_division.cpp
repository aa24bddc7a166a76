#include <doctest.h>

#include <random>

#include "opdual/classifier.hpp"
#include "opdual/division.hpp"
#include "opdual/poly_parser.hpp"

using namespace opdual;

TEST_CASE("normal form examples") {
  VarsPtr vars = makeVariables({"A"});
  MonomialOrder order(OrderKind::GrevLex, vars);
  std::vector<Polynomial> divisors = {parsePolynomial("A", vars)};
  CHECK(normalForm(parsePolynomial("A^2", vars), divisors, order).isZero());
  CHECK(normalForm(parsePolynomial("A + 1", vars), divisors, order) ==
        Polynomial::constant(vars, Rational(1)));
}

TEST_CASE("a listed basis element reduces to zero against its basis") {
  // X3*Y2*Y3 - X2*Y3^2 + X2 is itself an element of the quoted case-18 basis.
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(18));
  const VarsPtr& vars = rcf.matrix.variables();
  MonomialOrder order = caseOrder(rcf, OrderKind::GrevLex, RankingScheme::ColumnMajorAsc);
  std::vector<Polynomial> basis;
  for (const std::string& text : expectedFullGB(18)) basis.push_back(parsePolynomial(text, vars));
  REQUIRE(basis.size() == 13);
  Polynomial f = parsePolynomial("X3*Y2*Y3 - X2*Y3^2 + X2", vars);
  CHECK(normalForm(f, basis, order).isZero());
}

TEST_CASE("division identity reconstructs the dividend") {
  std::mt19937_64 rng(23);
  VarsPtr vars = makeVariables({"A", "B", "C"});
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  auto randomPoly = [&](int maxTerms) {
    PolynomialBuilder builder(vars);
    int n = static_cast<int>(rng() % (maxTerms + 1));
    for (int t = 0; t < n; ++t) {
      std::vector<std::uint32_t> e(3);
      for (auto& x : e) x = exp(rng);
      builder.add(Monomial(std::move(e)), Rational(num(rng)));
    }
    return builder.build();
  };
  for (OrderKind kind : {OrderKind::Lex, OrderKind::GrevLex}) {
    MonomialOrder order(kind, vars);
    for (int i = 0; i < 50; ++i) {
      Polynomial f = randomPoly(6);
      std::vector<Polynomial> divisors;
      for (int d = 0; d < 3; ++d) {
        Polynomial g = randomPoly(4);
        if (!g.isZero()) divisors.push_back(g);
      }
      if (divisors.empty()) continue;
      DivisionResult result = divideTracked(f, divisors, order);
      Polynomial rebuilt = result.remainder;
      for (std::size_t d = 0; d < divisors.size(); ++d) {
        rebuilt = rebuilt + result.quotients[d] * divisors[d];
      }
      CHECK(rebuilt == f);
      // No remainder monomial is divisible by any divisor's lead.
      for (const Term& t : result.remainder.terms()) {
        for (const Polynomial& g : divisors) {
          CHECK(!g.leadingMonomial(order).divides(t.mono));
        }
      }
    }
  }
}

TEST_CASE("division is deterministic in the divisor sequence") {
  VarsPtr vars = makeVariables({"A", "B"});
  MonomialOrder order(OrderKind::Lex, vars, {"B", "A"});
  Polynomial f = parsePolynomial("A*B^2", vars);
  std::vector<Polynomial> seq1 = {parsePolynomial("A*B - 1", vars),
                                  parsePolynomial("B^2 - 1", vars)};
  std::vector<Polynomial> seq2 = {parsePolynomial("B^2 - 1", vars),
                                  parsePolynomial("A*B - 1", vars)};
  CHECK(normalForm(f, seq1, order) == parsePolynomial("B", vars));
  CHECK(normalForm(f, seq2, order) == parsePolynomial("A", vars));
}

TEST_CASE("zero divisors are rejected") {
  VarsPtr vars = makeVariables({"A"});
  MonomialOrder order(OrderKind::Lex, vars);
  std::vector<Polynomial> divisors = {Polynomial::zero(vars)};
  CHECK_THROWS_AS(normalForm(parsePolynomial("A", vars), divisors, order),
                  std::invalid_argument);
  CHECK_THROWS_AS(monicForm(Polynomial::zero(vars), order), std::invalid_argument);
}
