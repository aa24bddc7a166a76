#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "opdual/groebner.hpp"
#include "opdual/polynomial.hpp"

namespace opdual {

// Raised on structurally invalid input files (bad schema, bad polynomial
// text, unknown order names).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& message) : std::runtime_error(message) {}
};

struct IdealFile {
  VarsPtr vars;
  MonomialOrder order;
  std::vector<Polynomial> generators;
};

// Schema: {"variables": [...], "order": "lex"|"grlex"|"grevlex",
//          "ranking": [...] (optional), "generators": [...]}
IdealFile readIdealJson(const std::string& text);
IdealFile readIdealFile(const std::string& path);

nlohmann::json idealToJson(const IdealFile& ideal);
nlohmann::json groebnerResultToJson(const IdealFile& ideal, const GroebnerResult& result);

}  // namespace opdual
