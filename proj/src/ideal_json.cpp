#include "opdual/ideal_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opdual/poly_parser.hpp"

namespace opdual {

namespace {

using nlohmann::json;

std::vector<std::string> stringList(const json& j, const char* field) {
  if (!j.is_array()) throw FormatError(std::string(field) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw FormatError(std::string(field) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

IdealFile readIdealJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators")) {
    throw FormatError("ideal file needs 'variables' and 'generators'");
  }
  VarsPtr vars;
  try {
    vars = makeVariables(stringList(j["variables"], "variables"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  OrderKind kind = OrderKind::GrevLex;
  if (j.contains("order")) {
    if (!j["order"].is_string()) throw FormatError("'order' must be a string");
    try {
      kind = orderKindFromString(j["order"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  std::vector<std::string> ranking;
  if (j.contains("ranking")) ranking = stringList(j["ranking"], "ranking");

  MonomialOrder order = [&] {
    try {
      return ranking.empty() ? MonomialOrder(kind, vars) : MonomialOrder(kind, vars, ranking);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }();

  std::vector<Polynomial> gens;
  for (const std::string& text : stringList(j["generators"], "generators")) {
    try {
      gens.push_back(parsePolynomial(text, vars));
    } catch (const ParseError& e) {
      throw FormatError("bad generator '" + text + "': " + e.what());
    }
  }
  return IdealFile{vars, order, std::move(gens)};
}

IdealFile readIdealFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return readIdealJson(buf.str());
}

nlohmann::json idealToJson(const IdealFile& ideal) {
  json j;
  j["variables"] = ideal.vars->names();
  j["order"] = orderKindToString(ideal.order.kind());
  j["ranking"] = ideal.order.rankingNames();
  json gens = json::array();
  for (const Polynomial& f : ideal.generators) gens.push_back(formatPolynomial(f, ideal.order));
  j["generators"] = gens;
  return j;
}

nlohmann::json groebnerResultToJson(const IdealFile& ideal, const GroebnerResult& result) {
  json j = idealToJson(ideal);
  json basis = json::array();
  for (const Polynomial& f : result.basis) basis.push_back(formatPolynomial(f, result.order));
  j["basis"] = basis;
  j["basisSize"] = result.basis.size();
  json trace = json::array();
  for (const StageRecord& r : result.trace) {
    trace.push_back({{"stage", r.stage},
                     {"elementsBeforeSelfReduce", r.elementsBeforeSelfReduce},
                     {"eliminatedBySelfReduce", r.eliminatedBySelfReduce},
                     {"survivingGenerators", r.survivingGenerators},
                     {"nonzeroSPolynomials", r.nonzeroSPolynomials}});
  }
  j["trace"] = trace;
  return j;
}

}  // namespace opdual
