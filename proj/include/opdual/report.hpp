#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "opdual/classifier.hpp"
#include "opdual/ideal_json.hpp"
#include "opdual/operad.hpp"

namespace opdual {

// Greatest basis element under the computation order / under lex with the
// same variable ranking. Empty result for the empty or unit basis is the
// element itself.
Polynomial greatestUnderComputationOrder(const GroebnerResult& result);
Polynomial greatestUnderLex(const GroebnerResult& result);

std::string renderClassifyTable(const std::string& mode, const std::vector<CaseReport>& reports);
nlohmann::json classificationSummaryJson(const std::string& mode,
                                         const std::vector<CaseReport>& reports,
                                         const ClassifierConfig& config);

std::string renderGroebnerReport(const IdealFile& ideal, const GroebnerResult& result);

std::string renderDualReport(const QuadraticSpace& input, const QuadraticSpace& dual);
nlohmann::json dualReportJson(const QuadraticSpace& input, const QuadraticSpace& dual);

std::string renderCatalogReport(const NamedOperadEntry& entry);
std::string renderCatalogDualChecks();

std::string renderOneOpReport(const std::vector<OneOpSolution>& solutions);
nlohmann::json oneOpJson(const std::vector<OneOpSolution>& solutions);

}  // namespace opdual
