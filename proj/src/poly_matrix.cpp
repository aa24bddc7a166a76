#include "opdual/poly_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opdual/ideal_json.hpp"
#include "opdual/poly_parser.hpp"

namespace opdual {

namespace {

void requireSameShape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

bool isConstantOne(const Polynomial& p) { return p.isConstant() && p.constantValue() == 1; }

void validatePivots(const PolyMatrix& m, const std::vector<int>& pivotCols1Based) {
  if (pivotCols1Based.size() != m.rows()) {
    throw std::invalid_argument("pivot column count must equal the row count");
  }
  for (std::size_t i = 0; i < pivotCols1Based.size(); ++i) {
    int c = pivotCols1Based[i];
    if (c < 1 || static_cast<std::size_t>(c) > m.cols()) {
      throw std::invalid_argument("pivot column out of range");
    }
    if (!isConstantOne(m.at(i, c - 1))) {
      throw std::invalid_argument("pivot entry is not the constant 1");
    }
  }
}

}  // namespace

PolyMatrix::PolyMatrix(VarsPtr vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols) {
  entries_.resize(rows_ * cols_, Polynomial::zero(vars_));
}

PolyMatrix PolyMatrix::identity(VarsPtr vars, std::size_t n) {
  PolyMatrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(vars, Rational(1));
  return m;
}

bool PolyMatrix::isConstant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.isConstant(); });
}

bool PolyMatrix::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.isZero(); });
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(vars_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix out(vars_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Polynomial sum = Polynomial::zero(vars_);
      for (std::size_t k = 0; k < cols_; ++k) sum = sum + at(r, k) * other.at(k, c);
      out.at(r, c) = std::move(sum);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  requireSameShape(*this, other);
  PolyMatrix out(vars_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<Polynomial> PolyMatrix::entryIdealGenerators(const MonomialOrder& order) const {
  std::vector<Polynomial> out;
  for (const Polynomial& p : entries_) {
    if (p.isZero()) continue;
    Polynomial m = p.monic(order);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

bool PolyMatrix::hasNonzeroConstantEntry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Polynomial& p) {
    return p.isConstant() && !p.isZero();
  });
}

ParametricRCF buildParametricRCF(const PivotPattern& pattern, int cols, ParamNaming naming) {
  const int r = static_cast<int>(pattern.pivotColumns.size());
  if (r == 0 || cols <= 0 || r > cols) throw std::invalid_argument("invalid pivot pattern");
  for (int i = 0; i < r; ++i) {
    int c = pattern.pivotColumns[i];
    if (c < 1 || c > cols) throw std::invalid_argument("pivot column out of range");
    if (i > 0 && pattern.pivotColumns[i - 1] >= c) {
      throw std::invalid_argument("pivot columns must be strictly increasing");
    }
  }
  for (const auto& [row, col] : pattern.zeroedSlots) {
    if (row < 1 || row > r || col < 1 || col > cols) {
      throw std::invalid_argument("zeroed slot out of range");
    }
    if (std::find(pattern.pivotColumns.begin(), pattern.pivotColumns.end(), col) !=
        pattern.pivotColumns.end()) {
      throw std::invalid_argument("zeroed slot inside a pivot column");
    }
  }

  std::vector<int> freeCols;
  for (int c = 1; c <= cols; ++c) {
    if (std::find(pattern.pivotColumns.begin(), pattern.pivotColumns.end(), c) ==
        pattern.pivotColumns.end()) {
      freeCols.push_back(c);
    }
  }

  auto isFreeSlot = [&](int row, int col) {
    // RCF: entries left of the row's pivot are zero, pivot columns are fixed.
    if (col <= pattern.pivotColumns[row - 1]) return false;
    if (pattern.zeroedSlots.count({row, col}) != 0) return false;
    return std::find(freeCols.begin(), freeCols.end(), col) != freeCols.end();
  };

  static const char* kColumnLetters[] = {"W", "X", "Y", "Z"};
  std::vector<std::pair<std::pair<int, int>, std::string>> slotNames;  // ((row, col), name)
  if (naming == ParamNaming::ColumnMajorWXYZ) {
    if (freeCols.size() > 4) {
      throw std::invalid_argument("W/X/Y/Z naming needs at most 4 non-pivot columns");
    }
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
      for (int row = 1; row <= r; ++row) {
        if (isFreeSlot(row, freeCols[k])) {
          slotNames.push_back({{row, freeCols[k]}, kColumnLetters[k] + std::to_string(row)});
        }
      }
    }
  } else {
    int next = 0;
    for (int row = 1; row <= r; ++row) {
      for (int col = 1; col <= cols; ++col) {
        if (isFreeSlot(row, col)) {
          if (next >= 26) throw std::invalid_argument("too many parameters for letter naming");
          slotNames.push_back({{row, col}, std::string(1, static_cast<char>('A' + next))});
          ++next;
        }
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(slotNames.size());
  for (const auto& [slot, name] : slotNames) names.push_back(name);
  VarsPtr vars = makeVariables(names);

  PolyMatrix m(vars, r, cols);
  for (int i = 0; i < r; ++i) {
    m.at(i, pattern.pivotColumns[i] - 1) = Polynomial::constant(vars, Rational(1));
  }
  for (const auto& [slot, name] : slotNames) {
    m.at(slot.first - 1, slot.second - 1) = Polynomial::variable(vars, *vars->indexOf(name));
  }

  ParametricRCF out{std::move(m), pattern.pivotColumns, {}, {}};
  // Column-major reading: non-pivot columns left to right, rows top to bottom.
  std::vector<std::pair<std::pair<int, int>, std::string>> byColumn = slotNames;
  std::sort(byColumn.begin(), byColumn.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  for (const auto& [slot, name] : byColumn) out.paramsColumnMajor.push_back(name);
  std::vector<std::pair<std::pair<int, int>, std::string>> byRow = slotNames;
  std::sort(byRow.begin(), byRow.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [slot, name] : byRow) out.paramsRowMajor.push_back(name);
  return out;
}

RcfResult rcfNumeric(const PolyMatrix& m) {
  if (!m.isConstant()) throw std::invalid_argument("rcfNumeric needs constant entries");
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).constantValue();
  }

  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivotRow = row;
    while (pivotRow < m.rows() && a[pivotRow][col] == 0) ++pivotRow;
    if (pivotRow == m.rows()) continue;
    std::swap(a[row], a[pivotRow]);
    Rational inv = Rational(1) / a[row][col];
    for (std::size_t c = col; c < m.cols(); ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(static_cast<int>(col) + 1);
    ++row;
  }

  PolyMatrix out(m.variables(), row, m.cols());
  for (std::size_t r = 0; r < row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(r, c) = Polynomial::constant(m.variables(), a[r][c]);
    }
  }
  return RcfResult{std::move(out), std::move(pivots)};
}

PolyMatrix negateColumns(const PolyMatrix& m, const std::vector<int>& cols1Based) {
  PolyMatrix out = m;
  for (int c : cols1Based) {
    if (c < 1 || static_cast<std::size_t>(c) > m.cols()) {
      throw std::invalid_argument("column index out of range");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, c - 1) = -out.at(r, c - 1);
  }
  return out;
}

PolyMatrix fixLeadingSigns(const PolyMatrix& m, const std::vector<int>& pivotCols1Based) {
  if (pivotCols1Based.size() != m.rows()) {
    throw std::invalid_argument("pivot column count must equal the row count");
  }
  PolyMatrix out = m;
  for (std::size_t i = 0; i < pivotCols1Based.size(); ++i) {
    int c = pivotCols1Based[i];
    if (c < 1 || static_cast<std::size_t>(c) > m.cols()) {
      throw std::invalid_argument("pivot column out of range");
    }
    const Polynomial& pivot = out.at(i, c - 1);
    if (!pivot.isConstant() || (pivot.constantValue() != 1 && pivot.constantValue() != -1)) {
      throw std::invalid_argument("pivot entry is not +-1");
    }
    if (pivot.constantValue() == -1) {
      for (std::size_t col = 0; col < m.cols(); ++col) out.at(i, col) = -out.at(i, col);
    }
  }
  return out;
}

PolyMatrix structuredNullspace(const PolyMatrix& m, const std::vector<int>& pivotCols1Based) {
  validatePivots(m, pivotCols1Based);
  std::vector<int> freeCols;
  for (int c = 1; c <= static_cast<int>(m.cols()); ++c) {
    if (std::find(pivotCols1Based.begin(), pivotCols1Based.end(), c) == pivotCols1Based.end()) {
      freeCols.push_back(c);
    }
  }
  PolyMatrix out(m.variables(), freeCols.size(), m.cols());
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    out.at(k, freeCols[k] - 1) = Polynomial::constant(m.variables(), Rational(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out.at(k, pivotCols1Based[i] - 1) = -m.at(i, freeCols[k] - 1);
    }
  }
  return out;
}

PolyMatrix stackReduce(const PolyMatrix& upper, const std::vector<int>& upperPivotCols1Based,
                       const PolyMatrix& lower) {
  if (upper.cols() != lower.cols()) throw std::invalid_argument("column count mismatch");
  validatePivots(upper, upperPivotCols1Based);
  PolyMatrix out = lower;
  for (std::size_t i = 0; i < upper.rows(); ++i) {
    std::size_t pc = static_cast<std::size_t>(upperPivotCols1Based[i]) - 1;
    for (std::size_t l = 0; l < out.rows(); ++l) {
      Polynomial factor = out.at(l, pc);
      if (factor.isZero()) continue;
      for (std::size_t c = 0; c < out.cols(); ++c) {
        out.at(l, c) = out.at(l, c) - factor * upper.at(i, c);
      }
    }
  }
  return out;
}

DiagonalNormalizeResult monicDiagonalNormalize(const PolyMatrix& t, const MonomialOrder& order) {
  if (t.rows() != t.cols()) throw std::invalid_argument("monicDiagonalNormalize needs a square matrix");
  DiagonalNormalizeResult out{t, {}};
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Polynomial& d = t.at(i, i);
    if (d.isZero()) {
      out.skippedRows.push_back(static_cast<int>(i) + 1);
      continue;
    }
    Rational lc = d.leadingTerm(order).coeff;
    if (lc == 1) continue;
    Rational inv = Rational(1) / lc;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      out.matrix.at(i, c) = out.matrix.at(i, c).scaled(inv);
    }
  }
  return out;
}

namespace {

VarsPtr inferVariables(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::string> names;
  auto scan = [&](const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        ++i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
          ++i;
        }
        std::string name = text.substr(start, i - start);
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      } else {
        ++i;
      }
    }
  };
  for (const auto& row : rows) {
    for (const std::string& cell : row) scan(cell);
  }
  return makeVariables(std::move(names));
}

PolyMatrix matrixFromCells(const std::vector<std::vector<std::string>>& rows, VarsPtr vars) {
  if (rows.empty()) throw FormatError("matrix has no rows");
  std::size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw FormatError("ragged matrix rows");
  }
  if (!vars) vars = inferVariables(rows);
  PolyMatrix m(vars, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m.at(r, c) = parsePolynomial(rows[r][c], vars);
      } catch (const ParseError& e) {
        throw FormatError("bad matrix entry '" + rows[r][c] + "': " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

nlohmann::json matrixToJson(const PolyMatrix& m, const MonomialOrder& order) {
  nlohmann::json j;
  j["cols"] = m.cols();
  j["variables"] = m.variables()->names();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(formatPolynomial(m.at(r, c), order));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

PolyMatrix matrixFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw FormatError("matrix file needs a 'rows' array");
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw FormatError("matrix rows must be arrays");
    std::vector<std::string> cells;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        cells.push_back(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        cells.push_back(std::to_string(cell.get<long long>()));
      } else {
        throw FormatError("matrix entries must be strings or integers");
      }
    }
    rows.push_back(std::move(cells));
  }
  VarsPtr vars;
  if (j.contains("variables")) {
    std::vector<std::string> names;
    for (const auto& n : j["variables"]) names.push_back(n.get<std::string>());
    vars = makeVariables(std::move(names));
  }
  PolyMatrix m = matrixFromCells(rows, vars);
  if (j.contains("cols") && j["cols"].get<std::size_t>() != m.cols()) {
    throw FormatError("'cols' does not match the row width");
  }
  return m;
}

std::string matrixToText(const PolyMatrix& m, const MonomialOrder& order) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ", ";
      out << formatPolynomial(m.at(r, c), order);
    }
    out << "\n";
  }
  return out.str();
}

PolyMatrix matrixFromText(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return matrixFromCells(rows, nullptr);
}

PolyMatrix matrixFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrixFromJson(text);
  return matrixFromText(text);
}

}  // namespace opdual
