#include <doctest.h>

#include <random>

#include "opdual/poly_matrix.hpp"
#include "opdual/poly_parser.hpp"

using namespace opdual;

namespace {

// Test-local row reduction oracle, independent of rcfNumeric.
std::vector<std::vector<Rational>> rrefOracle(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return a;
  std::size_t rows = a.size(), cols = a[0].size(), row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[row], a[p]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      Rational f = a[r][col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
  }
  // Drop zero rows.
  std::vector<std::vector<Rational>> out;
  for (const auto& r : a) {
    bool zero = true;
    for (const auto& v : r) zero = zero && v == 0;
    if (!zero) out.push_back(r);
  }
  return out;
}

PolyMatrix fromRationals(const std::vector<std::vector<Rational>>& rows, const VarsPtr& vars,
                         std::size_t cols) {
  PolyMatrix m(vars, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Polynomial::constant(vars, rows[r][c]);
  }
  return m;
}

}  // namespace

TEST_CASE("parametric RCF construction") {
  // Full pattern: [I4 | P] with 16 parameters named column-major.
  ParametricRCF full = buildParametricRCF(PivotPattern{{1, 2, 3, 4}, {}}, 8,
                                          ParamNaming::ColumnMajorWXYZ);
  CHECK(full.matrix.rows() == 4);
  CHECK(full.matrix.variables()->size() == 16);
  CHECK(full.paramsColumnMajor.front() == "W1");
  CHECK(full.paramsColumnMajor.back() == "Z4");
  CHECK(full.paramsRowMajor.front() == "W1");
  CHECK(full.paramsRowMajor[1] == "X1");

  // Case-21 pattern {1,3,5,7}: RCF structure alone forces the six zeros.
  ParametricRCF sparse = buildParametricRCF(PivotPattern{{1, 3, 5, 7}, {}}, 8,
                                            ParamNaming::ColumnMajorWXYZ);
  CHECK(sparse.matrix.variables()->size() == 10);
  CHECK(!sparse.matrix.variables()->indexOf("W2"));
  CHECK(sparse.matrix.variables()->indexOf("Y3"));

  // No free slots at all.
  ParametricRCF none = buildParametricRCF(PivotPattern{{5, 6, 7, 8}, {}}, 8,
                                          ParamNaming::ColumnMajorWXYZ);
  CHECK(none.matrix.variables()->size() == 0);
  CHECK(none.matrix.isConstant());

  CHECK_THROWS_AS(buildParametricRCF(PivotPattern{{2, 1}, {}}, 8, ParamNaming::RowMajorLetters),
                  std::invalid_argument);
  CHECK_THROWS_AS(buildParametricRCF(PivotPattern{{1, 9}, {}}, 8, ParamNaming::RowMajorLetters),
                  std::invalid_argument);

  // Slots zeroed beyond RCF structure lose their parameter.
  ParametricRCF zeroed = buildParametricRCF(PivotPattern{{1, 2, 3, 4}, {{1, 5}}}, 8,
                                            ParamNaming::ColumnMajorWXYZ);
  CHECK(zeroed.matrix.variables()->size() == 15);
  CHECK(zeroed.matrix.at(0, 4).isZero());
  CHECK(!zeroed.matrix.variables()->indexOf("W1"));
  CHECK_THROWS_AS(buildParametricRCF(PivotPattern{{1, 2}, {{1, 2}}}, 8,
                                     ParamNaming::RowMajorLetters),
                  std::invalid_argument);
}

TEST_CASE("letter naming matches the row-major reading") {
  // Pivots {1,2,3,8}: rows carry A..D, E..H, I..L scanning left to right.
  ParametricRCF m = buildParametricRCF(PivotPattern{{1, 2, 3, 8}, {}}, 8,
                                       ParamNaming::RowMajorLetters);
  CHECK(m.matrix.variables()->size() == 12);
  CHECK(m.matrix.at(0, 3) == Polynomial::variable(m.matrix.variables(), 0));  // A
  CHECK(m.matrix.at(1, 3) ==
        Polynomial::variable(m.matrix.variables(), *m.matrix.variables()->indexOf("E")));
  CHECK(m.matrix.at(2, 6) ==
        Polynomial::variable(m.matrix.variables(), *m.matrix.variables()->indexOf("L")));
}

TEST_CASE("numeric RCF agrees with the oracle on random matrices") {
  std::mt19937_64 rng(5);
  VarsPtr none = makeVariables({});
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int round = 0; round < 60; ++round) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    std::vector<std::vector<Rational>> data(rows, std::vector<Rational>(cols));
    for (auto& r : data) {
      for (auto& v : r) v = Rational(entry(rng));
    }
    RcfResult rcf = rcfNumeric(fromRationals(data, none, cols));
    std::vector<std::vector<Rational>> expected = rrefOracle(data);
    REQUIRE(rcf.matrix.rows() == expected.size());
    for (std::size_t r = 0; r < expected.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        CHECK(rcf.matrix.at(r, c).constantValue() == expected[r][c]);
      }
    }
    CHECK(rcf.pivotCols.size() == expected.size());
    // Idempotent.
    RcfResult again = rcfNumeric(rcf.matrix);
    CHECK(again.matrix == rcf.matrix);
  }
}

TEST_CASE("rcfNumeric rejects non-constant input") {
  VarsPtr vars = makeVariables({"A"});
  PolyMatrix m(vars, 1, 2);
  m.at(0, 0) = Polynomial::variable(vars, 0);
  CHECK_THROWS_AS(rcfNumeric(m), std::invalid_argument);
}

TEST_CASE("column negation and leading-sign repair on the displayed example") {
  // Pivots {2,3,4,5}: row 4's pivot sits in column 5, so it flips in step 1
  // and is restored in step 2; rows 1..3 keep their pivots.
  ParametricRCF rcf = buildParametricRCF(PivotPattern{{2, 3, 4, 5}, {}}, 8,
                                         ParamNaming::RowMajorLetters);
  PolyMatrix rPrime = negateColumns(rcf.matrix, {5, 6, 7, 8});
  CHECK(rPrime.at(3, 4).constantValue() == -1);
  PolyMatrix rSecond = fixLeadingSigns(rPrime, rcf.pivotCols);
  CHECK(rSecond.at(3, 4).constantValue() == 1);
  // Row 4's tail is back to the original sign; rows 1..3 keep negated tails.
  CHECK(rSecond.at(3, 5) == rcf.matrix.at(3, 5));
  CHECK(rSecond.at(0, 5) == -rcf.matrix.at(0, 5));

  VarsPtr none = makeVariables({});
  PolyMatrix zero(none, 2, 3);
  CHECK(negateColumns(zero, {1, 2, 3}) == zero);
}

TEST_CASE("structured nullspace solves the system exactly") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int round = 0; round < 40; ++round) {
    // Random RCF pattern with random constant entries in the free slots.
    int n = 4 + static_cast<int>(rng() % 5);
    int r = 1 + static_cast<int>(rng() % std::min(n - 1, 4));
    std::vector<int> pivots;
    for (int c = 1; c <= n && static_cast<int>(pivots.size()) < r; ++c) {
      if (rng() % 2 == 0 || n - c <= r - static_cast<int>(pivots.size()) - 1) {
        pivots.push_back(c);
      }
    }
    ParametricRCF rcf = buildParametricRCF(PivotPattern{pivots, {}}, n,
                                           ParamNaming::RowMajorLetters);
    PolyMatrix nullspace = structuredNullspace(rcf.matrix, rcf.pivotCols);
    CHECK(nullspace.rows() == static_cast<std::size_t>(n - static_cast<int>(pivots.size())));
    PolyMatrix product = rcf.matrix * nullspace.transposed();
    CHECK(product.isZero());
  }

  VarsPtr none = makeVariables({});
  PolyMatrix identity = PolyMatrix::identity(none, 3);
  PolyMatrix empty = structuredNullspace(identity, {1, 2, 3});
  CHECK(empty.rows() == 0);
}

TEST_CASE("stack reduction preserves the stacked row space") {
  std::mt19937_64 rng(29);
  VarsPtr none = makeVariables({});
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int round = 0; round < 30; ++round) {
    std::size_t cols = 5, upperRows = 2, lowerRows = 2;
    std::vector<std::vector<Rational>> upper(upperRows, std::vector<Rational>(cols));
    for (auto& r : upper) {
      for (auto& v : r) v = Rational(entry(rng));
    }
    RcfResult upperRcf = rcfNumeric(fromRationals(upper, none, cols));
    if (upperRcf.matrix.rows() == 0) continue;
    std::vector<std::vector<Rational>> lower(lowerRows, std::vector<Rational>(cols));
    for (auto& r : lower) {
      for (auto& v : r) v = Rational(entry(rng));
    }
    PolyMatrix lowerM = fromRationals(lower, none, cols);
    PolyMatrix reduced = stackReduce(upperRcf.matrix, upperRcf.pivotCols, lowerM);

    auto stackOf = [&](const PolyMatrix& bottom) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = 0; r < upperRcf.matrix.rows(); ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < cols; ++c) row.push_back(upperRcf.matrix.at(r, c).constantValue());
        rows.push_back(row);
      }
      for (std::size_t r = 0; r < bottom.rows(); ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < cols; ++c) row.push_back(bottom.at(r, c).constantValue());
        rows.push_back(row);
      }
      return rrefOracle(rows);
    };
    CHECK(stackOf(lowerM) == stackOf(reduced));
    // Pivot columns of the upper block are eliminated.
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
      for (int pc : upperRcf.pivotCols) CHECK(reduced.at(r, pc - 1).isZero());
    }
  }
}

TEST_CASE("stacking a matrix on itself reduces to zero") {
  ParametricRCF rcf = buildParametricRCF(PivotPattern{{1, 2, 3, 4}, {}}, 8,
                                         ParamNaming::ColumnMajorWXYZ);
  PolyMatrix reduced = stackReduce(rcf.matrix, rcf.pivotCols, rcf.matrix);
  CHECK(reduced.isZero());
}

TEST_CASE("monic diagonal normalization") {
  VarsPtr vars = makeVariables({"A", "B"});
  MonomialOrder order(OrderKind::GrevLex, vars);

  PolyMatrix m(vars, 2, 2);
  m.at(0, 0) = parsePolynomial("2*A", vars);
  m.at(0, 1) = parsePolynomial("4*B", vars);
  m.at(1, 1) = parsePolynomial("B", vars);
  DiagonalNormalizeResult result = monicDiagonalNormalize(m, order);
  CHECK(result.matrix.at(0, 0) == parsePolynomial("A", vars));
  CHECK(result.matrix.at(0, 1) == parsePolynomial("2*B", vars));
  CHECK(result.skippedRows.empty());

  PolyMatrix identity = PolyMatrix::identity(vars, 3);
  CHECK(monicDiagonalNormalize(identity, order).matrix == identity);

  PolyMatrix withZero(vars, 2, 2);
  withZero.at(0, 0) = parsePolynomial("-A", vars);
  DiagonalNormalizeResult skipped = monicDiagonalNormalize(withZero, order);
  CHECK(skipped.skippedRows == std::vector<int>{2});
  CHECK(skipped.matrix.at(0, 0) == parsePolynomial("A", vars));
}

TEST_CASE("parameter count matches the free-slot formula") {
  // Pivot-pattern count: sum (n - j_i) - (r - i), checked against the actual
  // number of fresh variables for every 4-of-8 pattern.
  std::vector<int> current{1, 2, 3, 4};
  while (true) {
    ParametricRCF rcf = buildParametricRCF(PivotPattern{current, {}}, 8,
                                           ParamNaming::ColumnMajorWXYZ);
    int expected = 0;
    for (int i = 1; i <= 4; ++i) expected += (8 - current[i - 1]) - (4 - i);
    CHECK(static_cast<int>(rcf.matrix.variables()->size()) == expected);
    int i = 3;
    while (i >= 0 && current[i] == 8 - (3 - i)) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < 4; ++j) current[j] = current[j - 1] + 1;
  }
}

TEST_CASE("matrix text and json forms round-trip") {
  ParametricRCF rcf = buildParametricRCF(PivotPattern{{1, 3}, {}}, 4,
                                         ParamNaming::RowMajorLetters);
  MonomialOrder order(OrderKind::GrevLex, rcf.matrix.variables());
  std::string text = matrixToText(rcf.matrix, order);
  PolyMatrix fromText = matrixFromText(text);
  CHECK(fromText.rows() == rcf.matrix.rows());
  CHECK(fromText.cols() == rcf.matrix.cols());
  std::string json = matrixToJson(rcf.matrix, order).dump();
  PolyMatrix fromJson = matrixFromJson(json);
  CHECK(fromJson == rcf.matrix);
}
