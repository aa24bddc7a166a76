#include "opdual/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opdual/poly_parser.hpp"

namespace opdual {

namespace {

using nlohmann::json;

Polynomial greatestUnder(const GroebnerResult& result, const MonomialOrder& order) {
  if (result.basis.empty()) {
    throw std::invalid_argument("empty basis has no greatest element");
  }
  const Polynomial* best = &result.basis.front();
  for (const Polynomial& f : result.basis) {
    // Compare term sequences descending under `order`.
    const Polynomial& g = *best;
    auto fs = f.terms();
    auto gs = g.terms();
    std::vector<const Term*> ft, gt;
    for (const Term& t : fs) ft.push_back(&t);
    for (const Term& t : gs) gt.push_back(&t);
    auto desc = [&](const Term* a, const Term* b) { return order.greater(a->mono, b->mono); };
    std::sort(ft.begin(), ft.end(), desc);
    std::sort(gt.begin(), gt.end(), desc);
    bool fGreater = false;
    std::size_t n = std::min(ft.size(), gt.size());
    bool decided = false;
    for (std::size_t i = 0; i < n && !decided; ++i) {
      auto c = order.compare(ft[i]->mono, gt[i]->mono);
      if (c != std::strong_ordering::equal) {
        fGreater = c == std::strong_ordering::greater;
        decided = true;
      } else if (ft[i]->coeff != gt[i]->coeff) {
        fGreater = ft[i]->coeff > gt[i]->coeff;
        decided = true;
      }
    }
    if (!decided) fGreater = ft.size() > gt.size();
    if (fGreater) best = &f;
  }
  return *best;
}

std::string caseLabel(const CaseReport& report) {
  std::ostringstream out;
  bool first = true;
  auto add = [&](const char* tag, const std::optional<int>& v) {
    if (!v) return;
    if (!first) out << "/";
    out << tag << *v;
    first = false;
  };
  add("n", report.case70);
  add("c1:", report.case35);
  add("a", report.caseAssoc);
  return out.str();
}

std::string pivotText(const std::vector<int>& pivots) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (i) out << ",";
    out << pivots[i];
  }
  out << "}";
  return out.str();
}

}  // namespace

Polynomial greatestUnderComputationOrder(const GroebnerResult& result) {
  return greatestUnder(result, result.order);
}

Polynomial greatestUnderLex(const GroebnerResult& result) {
  MonomialOrder lex(OrderKind::Lex, result.order.vars(), result.order.rankingNames());
  return greatestUnder(result, lex);
}

std::string renderClassifyTable(const std::string& mode, const std::vector<CaseReport>& reports) {
  std::ostringstream out;
  out << "classification: " << mode << "\n";
  out << std::left << std::setw(14) << "case" << std::setw(12) << "pivots" << std::setw(8)
      << "params" << std::setw(22) << "verdict" << std::setw(6) << "|GB|"
      << "signature families\n";
  std::size_t rejected = 0, unit = 0, family = 0;
  for (const CaseReport& r : reports) {
    switch (r.verdict) {
      case Verdict::StructurallyRejected: ++rejected; break;
      case Verdict::UnitIdeal: ++unit; break;
      case Verdict::SelfDualFamily: ++family; break;
    }
    out << std::left << std::setw(14) << caseLabel(r) << std::setw(12) << pivotText(r.pivots)
        << std::setw(8) << r.parameterCount << std::setw(22) << verdictToString(r.verdict);
    if (r.groebner) {
      out << std::setw(6) << r.groebner->basis.size();
    } else {
      out << std::setw(6) << "-";
    }
    if (r.signatureVerified) {
      out << (*r.signatureVerified ? "yes" : "NO");
      if (r.signatureFromProofOnly) out << "(proof)";
    } else {
      out << "-";
    }
    for (const FamilyCheck& f : r.families) {
      out << " " << f.name << (f.verified && f.operadLevelVerified ? ":ok" : ":FAIL");
    }
    out << "\n";
  }
  out << "totals: structurally-rejected " << rejected << ", unit-ideal " << unit
      << ", self-dual-family " << family << "\n";
  return out.str();
}

json classificationSummaryJson(const std::string& mode, const std::vector<CaseReport>& reports,
                               const ClassifierConfig& config) {
  json cases = json::array();
  for (const CaseReport& r : reports) {
    json c;
    c["case70"] = r.case70 ? json(*r.case70) : json(nullptr);
    c["case35"] = r.case35 ? json(*r.case35) : json(nullptr);
    c["caseAssoc"] = r.caseAssoc ? json(*r.caseAssoc) : json(nullptr);
    c["pivots"] = r.pivots;
    c["parameterCount"] = r.parameterCount;
    c["verdict"] = verdictToString(r.verdict);
    if (r.groebner) {
      c["gbSize"] = r.groebner->basis.size();
      if (!r.groebner->basis.empty()) {
        c["gbGreatestLex"] = formatPolynomial(greatestUnderLex(*r.groebner), r.groebner->order);
      } else {
        c["gbGreatestLex"] = nullptr;
      }
    } else {
      c["gbSize"] = nullptr;
      c["gbGreatestLex"] = nullptr;
    }
    c["signatureVerified"] = r.signatureVerified ? json(*r.signatureVerified) : json(nullptr);
    if (r.signatureFromProofOnly) c["signatureFromProofOnly"] = true;
    json families = json::array();
    for (const FamilyCheck& f : r.families) {
      families.push_back({{"name", f.name},
                          {"verified", f.verified},
                          {"operadLevelVerified", f.operadLevelVerified}});
    }
    c["families"] = families;
    cases.push_back(c);
  }
  json partition = json::object();
  for (const CaseReport& r : reports) {
    partition[verdictToString(r.verdict)] = partition.value(verdictToString(r.verdict), 0) + 1;
  }
  return json{{"mode", mode},
              {"order", orderKindToString(config.order)},
              {"ranking", rankingSchemeToString(config.ranking)},
              {"cases", cases},
              {"partition", partition}};
}

std::string renderGroebnerReport(const IdealFile& ideal, const GroebnerResult& result) {
  std::ostringstream out;
  out << "order: " << orderKindToString(result.order.kind()) << "\n";
  out << "ranking:";
  for (const std::string& name : result.order.rankingNames()) out << " " << name;
  out << "\n";
  out << "generators: " << ideal.generators.size() << "\n";
  out << "basis size: " << result.basis.size() << "\n";
  for (const Polynomial& f : result.basis) {
    out << "  " << formatPolynomial(f, result.order) << "\n";
  }
  if (!result.basis.empty()) {
    out << "greatest (computation order): "
        << formatPolynomial(greatestUnderComputationOrder(result), result.order) << "\n";
    out << "greatest (lex):               "
        << formatPolynomial(greatestUnderLex(result), result.order) << "\n";
  }
  if (!result.trace.empty()) {
    out << "stage trace:\n";
    for (const StageRecord& r : result.trace) {
      out << "  stage " << r.stage << ": " << r.elementsBeforeSelfReduce
          << " elements, self-reduction eliminates " << r.eliminatedBySelfReduce << ", "
          << r.survivingGenerators << " survive, " << r.nonzeroSPolynomials
          << " nonzero S-polynomials\n";
    }
  }
  return out.str();
}

namespace {

MonomialOrder matrixOrder(const PolyMatrix& m) {
  return MonomialOrder(OrderKind::GrevLex, m.variables());
}

}  // namespace

std::string renderDualReport(const QuadraticSpace& input, const QuadraticSpace& dual) {
  std::ostringstream out;
  out << "input rank " << input.matrix.rows() << ", dual rank " << dual.matrix.rows() << "\n";
  out << "basis columns:";
  for (const std::string& label : quadraticBasisLabels()) out << " " << label;
  out << "\n";
  out << "dual relation matrix:\n" << matrixToText(dual.matrix, matrixOrder(dual.matrix));
  out << "input row coefficient sums (0 = holds in unital algebras):";
  MonomialOrder order = matrixOrder(input.matrix);
  for (std::size_t r = 0; r < input.matrix.rows(); ++r) {
    Polynomial sum = Polynomial::zero(input.matrix.variables());
    for (std::size_t c = 0; c < input.matrix.cols(); ++c) sum = sum + input.matrix.at(r, c);
    out << " [" << formatPolynomial(sum, order) << "]";
  }
  out << "\n";
  return out.str();
}

json dualReportJson(const QuadraticSpace& input, const QuadraticSpace& dual) {
  json j;
  j["inputRank"] = input.matrix.rows();
  j["dualRank"] = dual.matrix.rows();
  j["basisLabels"] = quadraticBasisLabels();
  j["dual"] = matrixToJson(dual.matrix, matrixOrder(dual.matrix));
  return j;
}

std::string renderCatalogReport(const NamedOperadEntry& entry) {
  std::ostringstream out;
  out << entry.name << ": rank " << entry.relations.matrix.rows() << "\n";
  out << "relation matrix (columns = ordered weight-2 basis):\n"
      << matrixToText(entry.relations.matrix, matrixOrder(entry.relations.matrix));
  out << "row coefficient sums (Osborn unital test):";
  for (std::size_t r = 0; r < entry.relations.matrix.rows(); ++r) {
    Rational sum(0);
    std::vector<Rational> row;
    for (std::size_t c = 0; c < 8; ++c) {
      Rational v = entry.relations.matrix.at(r, c).constantValue();
      sum += v;
      row.push_back(v);
    }
    out << " " << rationalToString(sum) << (osbornUnitalCheck(row) ? "(unital)" : "");
  }
  out << "\n";
  if (entry.expectedDualName) {
    bool ok = checkDualPair(entry.name, *entry.expectedDualName);
    out << "dual: " << *entry.expectedDualName << (ok ? " (verified)" : " (MISMATCH)") << "\n";
  }
  return out.str();
}

std::string renderCatalogDualChecks() {
  std::ostringstream out;
  bool all = true;
  for (const std::string& name : catalogNames()) {
    NamedOperadEntry entry = catalogEntry(name);
    bool ok = entry.expectedDualName && checkDualPair(name, *entry.expectedDualName);
    all = all && ok;
    out << name << " -> " << (entry.expectedDualName ? *entry.expectedDualName : "?") << ": "
        << (ok ? "ok" : "FAIL") << "\n";
  }
  out << (all ? "all dual pairings verified" : "DUAL PAIRING FAILURES") << "\n";
  return out.str();
}

std::string renderOneOpReport(const std::vector<OneOpSolution>& solutions) {
  std::ostringstream out;
  out << "self-dual relations a*m1 + b*m2 (up to scale):\n";
  for (const OneOpSolution& s : solutions) {
    out << "  (a, b) = (" << rationalToString(s.a) << ", " << rationalToString(s.b) << ")  "
        << (s.unital ? "unital-compatible (associative)" : "not unital (anti-associative)")
        << "\n";
  }
  return out.str();
}

json oneOpJson(const std::vector<OneOpSolution>& solutions) {
  json arr = json::array();
  for (const OneOpSolution& s : solutions) {
    arr.push_back({{"a", rationalToString(s.a)},
                   {"b", rationalToString(s.b)},
                   {"unital", s.unital}});
  }
  return json{{"solutions", arr}};
}

}  // namespace opdual
