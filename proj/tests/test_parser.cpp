#include <doctest.h>

#include <random>

#include "opdual/classifier.hpp"
#include "opdual/poly_parser.hpp"

using namespace opdual;

TEST_CASE("parsing examples") {
  VarsPtr vars = makeVariables({"W2", "W3", "X2", "X3", "Z4", "A"});
  MonomialOrder order(OrderKind::GrevLex, vars);

  Polynomial f = parsePolynomial("W2*X2 + W3*X3", vars);
  CHECK(f.termCount() == 2);
  CHECK(f.coefficient(Monomial(std::vector<std::uint32_t>{1, 0, 1, 0, 0, 0})) == 1);

  Polynomial g = parsePolynomial("Z4^2 + 1", vars);
  CHECK(g.coefficient(Monomial(std::vector<std::uint32_t>{0, 0, 0, 0, 2, 0})) == 1);
  CHECK(g.constantValue() == 1);

  Polynomial h = parsePolynomial("-1/2*A", vars);
  CHECK(h.leadingTerm(order).coeff == makeRational(-1, 2));

  CHECK(parsePolynomial(" - 1/2 * A ", vars) == h);
  CHECK(parsePolynomial("0", vars).isZero());
}

TEST_CASE("parse errors carry a position") {
  VarsPtr vars = makeVariables({"A"});
  CHECK_THROWS_AS(parsePolynomial("A + ", vars), ParseError);
  CHECK_THROWS_AS(parsePolynomial("A B", vars), ParseError);
  CHECK_THROWS_AS(parsePolynomial("A^", vars), ParseError);
  CHECK_THROWS_AS(parsePolynomial("", vars), ParseError);
  try {
    parsePolynomial("A + Q", vars);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("format and reparse round-trips random polynomials") {
  std::mt19937_64 rng(11);
  VarsPtr vars = makeVariables({"A", "B", "C"});
  std::uniform_int_distribution<int> exp(0, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (OrderKind kind : {OrderKind::Lex, OrderKind::GrevLex}) {
    MonomialOrder order(kind, vars);
    for (int i = 0; i < 100; ++i) {
      PolynomialBuilder builder(vars);
      int n = static_cast<int>(rng() % 6);
      for (int t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(3);
        for (auto& x : e) x = exp(rng);
        builder.add(Monomial(std::move(e)), makeRational(num(rng), den(rng)));
      }
      Polynomial f = builder.build();
      CHECK(parsePolynomial(formatPolynomial(f, order), vars) == f);
    }
  }
}

TEST_CASE("round-trips the quoted greatest basis elements") {
  // The transcription corpus includes the degree-5 polynomial with 14 terms
  // (case 1) and the degree-7 polynomial with 36 terms (case 2).
  for (int caseS : nonassocFamilyCases()) {
    ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
    MonomialOrder order = caseOrder(rcf, OrderKind::GrevLex, RankingScheme::ColumnMajorAsc);
    Polynomial f = parsePolynomial(expectedGreatestLex(caseS), rcf.matrix.variables());
    CHECK(!f.isZero());
    CHECK(parsePolynomial(formatPolynomial(f, order), rcf.matrix.variables()) == f);
  }
  Polynomial case1 =
      parsePolynomial(expectedGreatestLex(1), nonassocMatrix(case70FromCase35(1)).matrix.variables());
  CHECK(case1.termCount() == 14);
  CHECK(case1.totalDegree() == 5);
  Polynomial case2 =
      parsePolynomial(expectedGreatestLex(2), nonassocMatrix(case70FromCase35(2)).matrix.variables());
  CHECK(case2.termCount() == 36);
  CHECK(case2.totalDegree() == 7);
}
