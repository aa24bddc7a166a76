#include "opdual/operad.hpp"

#include <sstream>
#include <stdexcept>

namespace opdual {

namespace {

std::string opText(Op op) { return op == Op::Bar ? "|-" : "-|"; }

}  // namespace

TreeMonomial TreeMonomial::leaf() { return TreeMonomial{}; }

TreeMonomial TreeMonomial::graft(Op root, TreeMonomial left, TreeMonomial right) {
  TreeMonomial out;
  out.root_ = std::make_shared<const Node>(Node{root, left.root_, right.root_});
  return out;
}

int TreeMonomial::weight() const {
  int w = 0;
  // Iterative count via explicit stack to keep deep trees cheap.
  std::vector<const Node*> stack;
  if (root_) stack.push_back(root_.get());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    ++w;
    if (n->left) stack.push_back(n->left.get());
    if (n->right) stack.push_back(n->right.get());
  }
  return w;
}

namespace {

void renderNode(const std::shared_ptr<const TreeMonomial::Node>& node, std::ostringstream& out,
                int& nextArg, bool parenthesize);

}  // namespace

std::string TreeMonomial::label() const {
  std::ostringstream out;
  int nextArg = 1;
  renderNode(root_, out, nextArg, false);
  return out.str();
}

bool TreeMonomial::operator==(const TreeMonomial& other) const {
  struct Cmp {
    static bool eq(const Node* a, const Node* b) {
      if (a == b) return true;
      if (!a || !b) return false;
      return a->op == b->op && eq(a->left.get(), b->left.get()) && eq(a->right.get(), b->right.get());
    }
  };
  return Cmp::eq(root_.get(), other.root_.get());
}

namespace {

void renderNode(const std::shared_ptr<const TreeMonomial::Node>& node, std::ostringstream& out,
                int& nextArg, bool parenthesize) {
  if (!node) {
    out << "x" << nextArg++;
    return;
  }
  if (parenthesize) out << "(";
  renderNode(node->left, out, nextArg, node->left != nullptr);
  out << opText(node->op);
  renderNode(node->right, out, nextArg, node->right != nullptr);
  if (parenthesize) out << ")";
}

}  // namespace

Integer dimension(unsigned w) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * w, w);
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, w);
  Integer result = binom * pow2;
  mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), w + 1);
  return result;
}

namespace {

// Unlabelled association types, heavier left subtree first.
struct Shape {
  std::shared_ptr<const Shape> left, right;  // both null = leaf
};
using ShapePtr = std::shared_ptr<const Shape>;

const std::vector<ShapePtr>& shapesOfWeight(unsigned w) {
  static std::vector<std::vector<ShapePtr>> cache;
  if (cache.size() > w) return cache[w];
  while (cache.size() <= w) {
    unsigned k = cache.size();
    std::vector<ShapePtr> shapes;
    if (k == 0) {
      shapes.push_back(nullptr);
    } else {
      for (int lw = static_cast<int>(k) - 1; lw >= 0; --lw) {
        for (const ShapePtr& l : cache[lw]) {
          for (const ShapePtr& r : cache[k - 1 - lw]) {
            shapes.push_back(std::make_shared<const Shape>(Shape{l, r}));
          }
        }
      }
    }
    cache.push_back(std::move(shapes));
  }
  return cache[w];
}

TreeMonomial labelShape(const ShapePtr& shape, const std::vector<Op>& labels, std::size_t& next) {
  if (!shape) return TreeMonomial::leaf();
  // In-order over internal nodes: left subtree, this node, right subtree.
  TreeMonomial left = labelShape(shape->left, labels, next);
  Op op = labels[next++];
  TreeMonomial right = labelShape(shape->right, labels, next);
  return TreeMonomial::graft(op, std::move(left), std::move(right));
}

}  // namespace

std::vector<TreeMonomial> enumerateBasis(unsigned w, unsigned bound) {
  if (w > bound) throw std::invalid_argument("enumerateBasis weight exceeds the configured bound");
  std::vector<TreeMonomial> out;
  for (const ShapePtr& shape : shapesOfWeight(w)) {
    std::vector<Op> labels(w, Op::Bar);
    while (true) {
      std::size_t next = 0;
      out.push_back(labelShape(shape, labels, next));
      // Advance the in-order label word lexicographically (|- < -|).
      int i = static_cast<int>(w) - 1;
      while (i >= 0 && labels[i] == Op::Dash) labels[i--] = Op::Bar;
      if (i < 0) break;
      labels[i] = Op::Dash;
    }
  }
  return out;
}

const std::vector<std::string>& quadraticBasisLabels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const TreeMonomial& m : enumerateBasis(2)) out.push_back(m.label());
    return out;
  }();
  return labels;
}

QuadraticSpace canonicalQuadraticSpace(const PolyMatrix& rows) {
  if (rows.cols() != 8) throw std::invalid_argument("quadratic space needs 8 columns");
  RcfResult rcf = rcfNumeric(rows);
  return QuadraticSpace{std::move(rcf.matrix), std::move(rcf.pivotCols)};
}

PolyMatrix innerProductForm() {
  VarsPtr none = makeVariables({});
  PolyMatrix g(none, 8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    g.at(i, i) = Polynomial::constant(none, Rational(i < 4 ? 1 : -1));
  }
  return g;
}

QuadraticSpace lodayDual(const QuadraticSpace& r) {
  if (r.matrix.cols() != 8) throw std::invalid_argument("relation matrix needs 8 columns");
  PolyMatrix rPrime = negateColumns(r.matrix, {5, 6, 7, 8});
  PolyMatrix rSecond = fixLeadingSigns(rPrime, r.pivotCols);
  PolyMatrix dual = structuredNullspace(rSecond, r.pivotCols);
  if (dual.isConstant()) return canonicalQuadraticSpace(dual);
  std::vector<int> freeCols;
  for (int c = 1; c <= 8; ++c) {
    if (std::find(r.pivotCols.begin(), r.pivotCols.end(), c) == r.pivotCols.end()) {
      freeCols.push_back(c);
    }
  }
  return QuadraticSpace{std::move(dual), std::move(freeCols)};
}

PolyMatrix selfDualObstruction(const QuadraticSpace& r) {
  if (r.pivotCols.size() != 4) {
    throw std::invalid_argument("self-duality needs relation rank 4");
  }
  QuadraticSpace dual = lodayDual(r);
  return stackReduce(r.matrix, r.pivotCols, dual.matrix);
}

bool osbornUnitalCheck(const std::vector<Rational>& relationRow) {
  Rational sum(0);
  bool nonzero = false;
  for (const Rational& c : relationRow) {
    if (c != 0) nonzero = true;
    sum += c;
  }
  if (!nonzero) throw std::invalid_argument("osbornUnitalCheck of the zero relation");
  return sum == 0;
}

namespace {

PolyMatrix constantRows(const std::vector<std::vector<int>>& rows) {
  VarsPtr none = makeVariables({});
  PolyMatrix m(none, rows.size(), 8);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      m.at(r, c) = Polynomial::constant(none, Rational(rows[r][c]));
    }
  }
  return m;
}

struct CatalogRecord {
  const char* name;
  const char* dual;
  std::vector<std::vector<int>> rows;
};

// Relation transcriptions in the weight-2 basis (columns m1..m8):
//   m1 = (a|-b)|-c  m2 = (a|-b)-|c  m3 = (a-|b)|-c  m4 = (a-|b)-|c
//   m5 = a|-(b|-c)  m6 = a|-(b-|c)  m7 = a-|(b|-c)  m8 = a-|(b-|c)
const std::vector<CatalogRecord>& catalogRecords() {
  static const std::vector<CatalogRecord> records = {
      {"two-associative", "dual-two-associative",
       {{1, 0, 0, 0, -1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, -1}}},
      {"dual-two-associative", "two-associative",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, -1},
        {0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0}}},
      {"duplicial", "dual-duplicial",
       {{1, 0, 0, 0, -1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1, 0, 0}}},
      {"dual-duplicial", "duplicial",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, -1},
        {0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0}}},
      {"completely-associative", "completely-associative",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 1, 0, 0, 0, -1, 0},
        {0, 0, 0, 1, 0, 0, 0, -1}}},
      {"two-compatible", "dual-two-compatible",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, -1},
        {0, 1, 1, 0, 0, -1, -1, 0}}},
      // Completely associative plus the bar exchange (a|-b)-|c = (a-|b)|-c;
      // the two-compatible relation itself is the dependent sum of the mixed
      // associativities.
      {"dual-two-compatible", "two-compatible",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 1, 0, 0, 0, -1, 0},
        {0, 0, 0, 1, 0, 0, 0, -1},
        {0, 1, -1, 0, 0, 0, 0, 0}}},
      {"diassociative", "dendriform",
       {{1, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, -1},
        {0, 1, 0, 0, 0, -1, 0, 0},
        {1, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, -1}}},
      {"dendriform", "diassociative",
       {{0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 1, 0, 0, -1, -1},
        {-1, 0, -1, 0, 1, 0, 0, 0}}},
  };
  return records;
}

}  // namespace

const std::vector<std::string>& catalogNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CatalogRecord& r : catalogRecords()) out.push_back(r.name);
    return out;
  }();
  return names;
}

NamedOperadEntry catalogEntry(const std::string& name) {
  for (const CatalogRecord& r : catalogRecords()) {
    if (name == r.name) {
      return NamedOperadEntry{r.name, canonicalQuadraticSpace(constantRows(r.rows)),
                              std::string(r.dual)};
    }
  }
  throw std::invalid_argument("unknown operad name: " + name);
}

bool checkDualPair(const std::string& a, const std::string& b) {
  QuadraticSpace dual = lodayDual(catalogEntry(a).relations);
  QuadraticSpace target = catalogEntry(b).relations;
  return dual.matrix == target.matrix && dual.pivotCols == target.pivotCols;
}

}  // namespace opdual
