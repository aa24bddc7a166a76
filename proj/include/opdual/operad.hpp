#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opdual/poly_matrix.hpp"
#include "opdual/rational.hpp"

namespace opdual {

// The two binary operations; Bar renders "|-", Dash renders "-|".
enum class Op : unsigned char { Bar, Dash };

// Complete rooted binary tree with operation-labelled internal nodes; the
// monomial basis element of weight w has w internal nodes and w+1 leaves.
class TreeMonomial {
 public:
  static TreeMonomial leaf();
  static TreeMonomial graft(Op root, TreeMonomial left, TreeMonomial right);

  int weight() const;
  // Rendering with arguments x1..x_{w+1}, e.g. "(x1|-x2)-|x3".
  std::string label() const;

  bool operator==(const TreeMonomial& other) const;

  struct Node {
    Op op;
    std::shared_ptr<const Node> left, right;  // null = leaf
  };

 private:
  std::shared_ptr<const Node> root_;  // null = bare argument
};

// dim O(w) = 2^w/(w+1) * C(2w, w), exactly.
Integer dimension(unsigned w);

// Deterministic basis order: association types with heavier left subtrees
// first (recursively), labels enumerated lexicographically over the written
// left-to-right operation sequence with |- before -|. For w = 2 this is
// exactly the ordered basis of the 8-column quadratic space.
std::vector<TreeMonomial> enumerateBasis(unsigned w, unsigned bound = 8);

// Labels of the weight-2 basis in column order.
const std::vector<std::string>& quadraticBasisLabels();

// Relation space as the row space of a matrix in the weight-2 basis
// coordinates; when canonical, the matrix is the unique full-rank RCF
// representative and pivotCols lists its leading-one columns (1-based).
struct QuadraticSpace {
  PolyMatrix matrix;
  std::vector<int> pivotCols;
};

QuadraticSpace canonicalQuadraticSpace(const PolyMatrix& rows);

// Gram matrix of the duality pairing in the weight-2 basis: +1 on the four
// left-nested monomials, -1 on the four right-nested ones.
PolyMatrix innerProductForm();

// Koszul dual relation matrix: negate the right-nested columns, restore
// leading signs, take the structured nullspace. Constant input is returned
// canonicalized.
QuadraticSpace lodayDual(const QuadraticSpace& r);

// Obstruction matrix T for a rank-4 space: the residue of reducing the dual
// by R. R is self-dual exactly on the zero set of the ideal generated by T's
// entries.
PolyMatrix selfDualObstruction(const QuadraticSpace& r);

// Coefficient-sum criterion: a homogeneous relation holds in some unital
// algebra iff its coefficient sum is 0.
bool osbornUnitalCheck(const std::vector<Rational>& relationRow);

struct NamedOperadEntry {
  std::string name;
  QuadraticSpace relations;
  std::optional<std::string> expectedDualName;
};

const std::vector<std::string>& catalogNames();
NamedOperadEntry catalogEntry(const std::string& name);  // throws std::invalid_argument

// Row spaces of lodayDual(catalog(a)) and catalog(b) coincide.
bool checkDualPair(const std::string& a, const std::string& b);

}  // namespace opdual
