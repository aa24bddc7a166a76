// Command-line surface for the duality engine and the classification runs.
//
// Exit codes: 0 success, 1 usage/unknown name, 2 input format error,
// 3 internal invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opdual/classifier.hpp"
#include "opdual/ideal_json.hpp"
#include "opdual/operad.hpp"
#include "opdual/poly_parser.hpp"
#include "opdual/report.hpp"

namespace {

using namespace opdual;

int runDual(const std::string& matrixFile, const std::string& format) {
  PolyMatrix m = matrixFromFile(matrixFile);
  if (m.cols() != 8) throw FormatError("relation matrices have 8 columns");
  QuadraticSpace space =
      m.isConstant() ? canonicalQuadraticSpace(m) : [&] {
        // Parametric input: pivots are the leading unit entries per row.
        std::vector<int> pivots;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          std::size_t c = 0;
          while (c < m.cols() && m.at(r, c).isZero()) ++c;
          if (c == m.cols() || !m.at(r, c).isConstant() || m.at(r, c).constantValue() != 1) {
            throw FormatError("row " + std::to_string(r + 1) + " has no leading 1");
          }
          pivots.push_back(static_cast<int>(c) + 1);
        }
        return QuadraticSpace{m, pivots};
      }();
  QuadraticSpace dual = lodayDual(space);
  if (format == "json") {
    std::cout << dualReportJson(space, dual).dump(2) << "\n";
  } else {
    std::cout << renderDualReport(space, dual);
  }
  return 0;
}

int runGroebner(const std::string& idealFile, const std::string& orderName,
                const std::string& rankingCsv, const std::string& format) {
  IdealFile ideal = readIdealFile(idealFile);
  MonomialOrder order = ideal.order;
  if (!orderName.empty() || !rankingCsv.empty()) {
    OrderKind kind = orderName.empty() ? ideal.order.kind() : orderKindFromString(orderName);
    std::vector<std::string> ranking;
    if (!rankingCsv.empty()) {
      std::size_t start = 0;
      while (true) {
        std::size_t comma = rankingCsv.find(',', start);
        ranking.push_back(rankingCsv.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    order = ranking.empty() ? MonomialOrder(kind, ideal.vars)
                            : MonomialOrder(kind, ideal.vars, ranking);
  }
  GroebnerResult result = buchbergerStaged(ideal.generators, order);
  IdealFile configured{ideal.vars, order, ideal.generators};
  if (format == "json") {
    std::cout << groebnerResultToJson(configured, result).dump(2) << "\n";
  } else {
    std::cout << renderGroebnerReport(configured, result);
  }
  return 0;
}

int runClassify(const std::string& mode, int caseNumber, int jobs, OrderKind order,
                RankingScheme ranking, const std::string& format) {
  ClassifierConfig config;
  config.order = order;
  config.ranking = ranking;
  config.jobs = jobs;

  if (mode == "one-op") {
    auto solutions = oneOperationClassification();
    if (format == "json") {
      std::cout << oneOpJson(solutions).dump(2) << "\n";
    } else {
      std::cout << renderOneOpReport(solutions);
    }
    return 0;
  }

  std::vector<CaseReport> reports;
  if (mode == "nonassoc") {
    if (caseNumber > 0) {
      reports.push_back(nonassocCase(caseNumber, config));
    } else {
      reports = classifyNonassoc(config);
    }
  } else {
    if (caseNumber > 0) {
      reports.push_back(assocCase(caseNumber, config));
    } else {
      reports = classifyAssoc(config);
    }
  }
  if (format == "json") {
    std::cout << classificationSummaryJson(mode, reports, config).dump(2) << "\n";
  } else {
    std::cout << renderClassifyTable(mode, reports);
  }
  return 0;
}

int runCatalog(const std::string& name, bool checkAllDuals) {
  if (checkAllDuals) {
    std::string report = renderCatalogDualChecks();
    std::cout << report;
    return report.find("FAIL") == std::string::npos ? 0 : 3;
  }
  std::cout << renderCatalogReport(catalogEntry(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification engine for self-dual quadratic nonsymmetric operads"};
  app.require_subcommand(1);

  auto* dual = app.add_subcommand("dual", "Koszul dual of a relation matrix");
  std::string matrixFile;
  std::string dualFormat = "text";
  dual->add_option("--matrix", matrixFile, "matrix file (JSON or comma-separated rows)")
      ->required();
  dual->add_option("--format", dualFormat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* groebner = app.add_subcommand("groebner", "Staged Buchberger run on an ideal file");
  std::string idealFile, orderName, rankingCsv;
  std::string gbFormat = "text";
  groebner->add_option("--ideal", idealFile, "ideal file (JSON)")->required();
  groebner->add_option("--order", orderName, "lex|grlex|grevlex")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  groebner->add_option("--ranking", rankingCsv, "comma-separated variables, ascending");
  groebner->add_option("--format", gbFormat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "Run a classification pipeline");
  std::string mode;
  int caseNumber = 0;
  int jobs = 1;
  std::string classifyOrder = "grevlex";
  std::string classifyRanking = "column-major-desc";
  std::string classifyFormat = "text";
  classify->add_option("mode", mode, "nonassoc|assoc|one-op")
      ->required()
      ->check(CLI::IsMember({"nonassoc", "assoc", "one-op"}));
  classify->add_option("--case", caseNumber,
                       "single case number (nonassoc: all-70 numbering; assoc: 1..15)");
  classify->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
  classify->add_option("--order", classifyOrder, "lex|grlex|grevlex")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  classify->add_option("--ranking", classifyRanking,
                       "column-major|column-major-desc|row-major|row-major-desc");
  classify->add_option("--format", classifyFormat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "Named-operad catalog");
  std::string catalogName;
  bool checkAllDuals = false;
  catalog->add_option("name", catalogName, "operad name");
  catalog->add_flag("--check-all-duals", checkAllDuals, "verify every catalog pairing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (dual->parsed()) return runDual(matrixFile, dualFormat);
    if (groebner->parsed()) return runGroebner(idealFile, orderName, rankingCsv, gbFormat);
    if (classify->parsed()) {
      return runClassify(mode, caseNumber, jobs, orderKindFromString(classifyOrder),
                         rankingSchemeFromString(classifyRanking), classifyFormat);
    }
    if (catalog->parsed()) {
      if (!checkAllDuals && catalogName.empty()) {
        std::cerr << "catalog needs a name or --check-all-duals\n";
        return 1;
      }
      return runCatalog(catalogName, checkAllDuals);
    }
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
