#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opdual/ideal_json.hpp"
#include "opdual/poly_parser.hpp"
#include "opdual/report.hpp"

using namespace opdual;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("ideal files round-trip") {
  std::string text = R"({
    "variables": ["A", "B"],
    "order": "grevlex",
    "generators": ["A^2 - B", "A*B - 1"]
  })";
  IdealFile ideal = readIdealJson(text);
  CHECK(ideal.vars->size() == 2);
  CHECK(ideal.order.kind() == OrderKind::GrevLex);
  REQUIRE(ideal.generators.size() == 2);

  nlohmann::json j = idealToJson(ideal);
  IdealFile again = readIdealJson(j.dump());
  CHECK(again.generators == ideal.generators);
  CHECK(again.order.rankingNames() == ideal.order.rankingNames());

  CHECK_THROWS_AS(readIdealJson("{"), FormatError);
  CHECK_THROWS_AS(readIdealJson(R"({"variables": ["A"]})"), FormatError);
  CHECK_THROWS_AS(readIdealJson(R"({"variables": ["A"], "order": "best",
                                   "generators": []})"),
                  FormatError);
  CHECK_THROWS_AS(readIdealJson(R"({"variables": ["A"], "generators": ["A+Q"]})"), FormatError);
}

TEST_CASE("groebner result serialization carries the trace") {
  IdealFile ideal = readIdealJson(R"({
    "variables": ["A"],
    "order": "grevlex",
    "generators": ["A + 1", "A"]
  })");
  GroebnerResult result = buchbergerStaged(ideal.generators, ideal.order);
  nlohmann::json j = groebnerResultToJson(ideal, result);
  CHECK(j["basisSize"] == 1);
  CHECK(j["basis"][0] == "1");
  CHECK(j["trace"].size() == result.trace.size());
  CHECK(j["trace"][0].contains("nonzeroSPolynomials"));
}

TEST_CASE("classification summary is byte-stable across worker counts") {
  ClassifierConfig one;
  one.jobs = 1;
  ClassifierConfig two;
  two.jobs = 2;
  auto a = classifyAssoc(one);
  auto b = classifyAssoc(two);
  std::string ja = classificationSummaryJson("assoc", a, one).dump(2);
  std::string jb = classificationSummaryJson("assoc", b, two).dump(2);
  CHECK(ja == jb);
}

TEST_CASE("assoc classification table matches the golden file") {
  ClassifierConfig config;
  config.jobs = 2;
  std::string table = renderClassifyTable("assoc", classifyAssoc(config));
  CHECK(table == readFile(std::string(OPDUAL_GOLDEN_DIR) + "/classify_assoc.txt"));
}

TEST_CASE("one-op report is stable") {
  std::string report = renderOneOpReport(oneOperationClassification());
  CHECK(report == readFile(std::string(OPDUAL_GOLDEN_DIR) + "/one_op.txt"));
}

TEST_CASE("catalog report renders ranks and dual checks") {
  std::string report = renderCatalogReport(catalogEntry("diassociative"));
  CHECK(report.find("rank 5") != std::string::npos);
  CHECK(report.find("dendriform (verified)") != std::string::npos);
  std::string all = renderCatalogDualChecks();
  CHECK(all.find("FAIL") == std::string::npos);
}
