#include "opdual/poly_parser.hpp"

#include <cctype>
#include <sstream>

namespace opdual {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarsPtr& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    PolynomialBuilder builder(vars_);
    skipSpace();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      int sign = 1;
      skipSpace();
      if (first) {
        if (accept('-')) sign = -1;
        else accept('+');
      } else {
        if (accept('-')) sign = -1;
        else if (accept('+')) sign = 1;
        else break;
      }
      auto [mono, coeff] = parseTerm();
      builder.add(std::move(mono), sign < 0 ? Rational(-coeff) : coeff);
      first = false;
      skipSpace();
      if (pos_ == text_.size()) break;
    }
    skipSpace();
    if (pos_ != text_.size()) throw ParseError("unexpected input", pos_);
    return builder.build();
  }

 private:
  std::pair<Monomial, Rational> parseTerm() {
    Rational coeff(1);
    Monomial mono(vars_->size());
    bool any = false;
    skipSpace();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = parseCoeff();
      any = true;
    } else {
      mono = mono.times(parseFactor());
      any = true;
    }
    while (true) {
      skipSpace();
      if (!accept('*')) break;
      skipSpace();
      mono = mono.times(parseFactor());
    }
    if (!any) throw ParseError("expected term", pos_);
    return {std::move(mono), std::move(coeff)};
  }

  Rational parseCoeff() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    skipSpace();
    if (accept('/')) {
      skipSpace();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", pos_);
      std::string den = text_.substr(dstart, pos_ - dstart);
      return rationalFromString(num + "/" + den);
    }
    return rationalFromString(num);
  }

  Monomial parseFactor() {
    skipSpace();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected variable", pos_);
    }
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    auto index = vars_->indexOf(name);
    if (!index) throw ParseError("unknown variable: " + name, start);
    std::uint32_t exp = 1;
    skipSpace();
    if (accept('^')) {
      skipSpace();
      std::size_t estart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == estart) throw ParseError("expected exponent", pos_);
      exp = static_cast<std::uint32_t>(std::stoul(text_.substr(estart, pos_ - estart)));
    }
    return Monomial::variable(vars_->size(), *index, exp);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  const VarsPtr& vars_;
  std::size_t pos_ = 0;
};

void appendMonomial(std::ostringstream& out, const Monomial& mono, const VariableSet& vars,
                    bool leadingStar) {
  bool first = !leadingStar;
  for (std::size_t i = 0; i < mono.varCount(); ++i) {
    std::uint32_t e = mono.exponent(i);
    if (e == 0) continue;
    if (!first) out << "*";
    first = false;
    out << vars.name(i);
    if (e > 1) out << "^" << e;
  }
}

}  // namespace

Polynomial parsePolynomial(const std::string& text, const VarsPtr& vars) {
  return Parser(text, vars).parse();
}

std::string formatPolynomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.isZero()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(f.termCount());
  for (const Term& t : f.terms()) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
    return order.greater(a->mono, b->mono);
  });
  std::ostringstream out;
  bool first = true;
  for (const Term* t : sorted) {
    Rational c = t->coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational mag = negative ? Rational(-c) : c;
    if (t->mono.isUnit()) {
      out << rationalToString(mag);
    } else if (mag == 1) {
      appendMonomial(out, t->mono, *f.variables(), false);
    } else {
      out << rationalToString(mag);
      appendMonomial(out, t->mono, *f.variables(), true);
    }
    first = false;
  }
  return out.str();
}

}  // namespace opdual
