#include "opdual/rational.hpp"

#include <stdexcept>

namespace opdual {

Rational rationalFromString(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  value.canonicalize();
  return value;
}

std::string rationalToString(const Rational& value) {
  return value.get_str();
}

Rational makeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

}  // namespace opdual
