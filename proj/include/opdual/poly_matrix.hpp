#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "opdual/polynomial.hpp"

namespace opdual {

// Rectangular matrix with polynomial entries over one shared variable set.
// Row/column indices are 0-based internally; reports use 1-based columns to
// match the quadratic-basis numbering.
class PolyMatrix {
 public:
  PolyMatrix(VarsPtr vars, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(VarsPtr vars, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarsPtr& variables() const { return vars_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool isConstant() const;
  bool isZero() const;
  PolyMatrix transposed() const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  bool operator==(const PolyMatrix& other) const;

  // All distinct monic nonzero entries; the generating set of the entry ideal.
  std::vector<Polynomial> entryIdealGenerators(const MonomialOrder& order) const;
  // Any nonzero constant entry anywhere?
  bool hasNonzeroConstantEntry() const;

 private:
  VarsPtr vars_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

// RCF pivot layout: strictly increasing 1-based pivot columns plus optional
// extra (row, col) slots forced to zero beyond what RCF structure already
// forces.
struct PivotPattern {
  std::vector<int> pivotColumns;            // 1-based
  std::set<std::pair<int, int>> zeroedSlots;  // 1-based (row, col)
};

enum class ParamNaming {
  ColumnMajorWXYZ,  // non-pivot columns get letters W, X, Y, Z, ...; entry in row i is W_i etc.
  RowMajorLetters,  // free slots get A, B, C, ... scanning rows left to right
};

struct ParametricRCF {
  PolyMatrix matrix;
  std::vector<int> pivotCols;                 // 1-based
  std::vector<std::string> paramsColumnMajor;  // parameter names, column-major reading
  std::vector<std::string> paramsRowMajor;     // parameter names, row-major reading
};

// RCF-shaped matrix with fresh parameter variables in every free slot that is
// not explicitly zeroed. Throws std::invalid_argument on an invalid pattern.
ParametricRCF buildParametricRCF(const PivotPattern& pattern, int cols, ParamNaming naming);

struct RcfResult {
  PolyMatrix matrix;
  std::vector<int> pivotCols;  // 1-based
};

// Unique reduced row echelon form over Q; requires constant entries.
RcfResult rcfNumeric(const PolyMatrix& m);

PolyMatrix negateColumns(const PolyMatrix& m, const std::vector<int>& cols1Based);

// Re-monicize rows whose pivot entry is -1; pivot entries must be +-1.
PolyMatrix fixLeadingSigns(const PolyMatrix& m, const std::vector<int>& pivotCols1Based);

// Nullspace basis of an RCF matrix with unit pivots: one row per free column,
// free variables set to standard basis vectors, pivot variables solved by
// pure polynomial arithmetic.
PolyMatrix structuredNullspace(const PolyMatrix& m, const std::vector<int>& pivotCols1Based);

// Eliminates the upper block's pivot columns from the lower block using the
// upper rows' unit pivots; returns the reduced lower block.
PolyMatrix stackReduce(const PolyMatrix& upper, const std::vector<int>& upperPivotCols1Based,
                       const PolyMatrix& lower);

struct DiagonalNormalizeResult {
  PolyMatrix matrix;
  std::vector<int> skippedRows;  // 1-based rows with a zero diagonal entry
};

// Scales each row by a rational so its diagonal entry is monic under `order`.
DiagonalNormalizeResult monicDiagonalNormalize(const PolyMatrix& t, const MonomialOrder& order);

// JSON form {"cols": n, "rows": [[entry text, ...], ...], "variables": [...]}.
nlohmann::json matrixToJson(const PolyMatrix& m, const MonomialOrder& order);
PolyMatrix matrixFromJson(const std::string& text);
// Compact text form: one row per line, entries separated by commas.
std::string matrixToText(const PolyMatrix& m, const MonomialOrder& order);
PolyMatrix matrixFromText(const std::string& text);
// Dispatches on leading '{'.
PolyMatrix matrixFromFile(const std::string& path);

}  // namespace opdual
