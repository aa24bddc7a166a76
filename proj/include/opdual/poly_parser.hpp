#pragma once

#include <stdexcept>
#include <string>

#include "opdual/polynomial.hpp"

namespace opdual {

// Raised on malformed polynomial text; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace insignificant, '*' explicit):
//   expr   := term (('+'|'-') term)*          (unary '-' allowed on the first term)
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := IDENT ('^' UINT)?
//   coeff  := INT ('/' UINT)?
//   IDENT  := [A-Za-z][A-Za-z0-9_]*
Polynomial parsePolynomial(const std::string& text, const VarsPtr& vars);

// Terms descending under `order`; canonical signs; factors of a monomial in
// VariableSet order. parse(format(f)) == f.
std::string formatPolynomial(const Polynomial& f, const MonomialOrder& order);

}  // namespace opdual
