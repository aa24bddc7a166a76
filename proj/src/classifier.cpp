#include "opdual/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "opdual/poly_parser.hpp"

namespace opdual {

namespace {

using nlohmann::json;

static const char kCasesJson[] =
#include "cases_data.inc"
    ;

struct NonassocCaseData {
  int case35 = 0;
  std::vector<int> pivots;
  std::vector<std::string> zeroedParams;
  SignaturePair signature;
  bool proofOnly = false;
  int gbSize = 0;
  std::string greatestLex;
  std::vector<std::string> fullGB;
  std::vector<SolutionFamily> families;
};

struct AssocCaseData {
  int case15 = 0;
  std::vector<int> pivots;
  std::vector<std::vector<std::string>> table6;
  std::vector<std::string> gb;
  std::vector<SolutionFamily> families;
};

struct CaseData {
  std::vector<int> familyCases;
  std::vector<int> unitCases;
  std::vector<std::array<std::size_t, 4>> case5Trace;
  std::map<int, NonassocCaseData> nonassoc;
  std::map<int, AssocCaseData> assoc;
  std::vector<SolutionMatrix> solutionMatrices;
};

std::vector<SolutionFamily> parseFamilies(const json& j) {
  std::vector<SolutionFamily> out;
  for (const auto& f : j) {
    SolutionFamily fam;
    fam.name = f.at("name").get<std::string>();
    for (const auto& a : f.at("aux")) fam.auxVariables.push_back(a.get<std::string>());
    for (const auto& s : f.at("sideRelations")) fam.sideRelations.push_back(s.get<std::string>());
    for (const auto& [key, value] : f.at("assign").items()) {
      fam.assignments[key] = value.get<std::string>();
    }
    out.push_back(std::move(fam));
  }
  return out;
}

const CaseData& caseData() {
  static const CaseData data = [] {
    CaseData d;
    json j = json::parse(kCasesJson);
    const json& na = j.at("nonassoc");
    for (const auto& c : na.at("familyCases")) d.familyCases.push_back(c.get<int>());
    for (const auto& c : na.at("unitIdealCases")) d.unitCases.push_back(c.get<int>());
    for (const auto& row : na.at("case5Trace")) {
      d.case5Trace.push_back({row[0].get<std::size_t>(), row[1].get<std::size_t>(),
                              row[2].get<std::size_t>(), row[3].get<std::size_t>()});
    }
    for (const auto& c : na.at("cases")) {
      NonassocCaseData entry;
      entry.case35 = c.at("case").get<int>();
      for (const auto& p : c.at("pivots")) entry.pivots.push_back(p.get<int>());
      for (const auto& z : c.at("zeroedParams")) entry.zeroedParams.push_back(z.get<std::string>());
      for (int i = 0; i < 4; ++i) {
        entry.signature.D[i] = c.at("D")[i].get<int>();
        entry.signature.E[i] = c.at("E")[i].get<int>();
      }
      entry.proofOnly = c.at("signatureFromProofOnly").get<bool>();
      entry.gbSize = c.at("gbSize").get<int>();
      entry.greatestLex = c.at("greatestLex").get<std::string>();
      if (c.contains("fullGB")) {
        for (const auto& g : c.at("fullGB")) entry.fullGB.push_back(g.get<std::string>());
      }
      entry.families = parseFamilies(c.at("families"));
      d.nonassoc[entry.case35] = std::move(entry);
    }
    const json& as = j.at("assoc");
    for (const auto& c : as.at("cases")) {
      AssocCaseData entry;
      entry.case15 = c.at("case").get<int>();
      for (const auto& p : c.at("pivots")) entry.pivots.push_back(p.get<int>());
      for (const auto& row : c.at("table6")) {
        std::vector<std::string> cells;
        for (const auto& cell : row) cells.push_back(cell.get<std::string>());
        entry.table6.push_back(std::move(cells));
      }
      if (c.contains("gb")) {
        for (const auto& g : c.at("gb")) entry.gb.push_back(g.get<std::string>());
      }
      entry.families = parseFamilies(c.at("families"));
      d.assoc[entry.case15] = std::move(entry);
    }
    for (const auto& m : as.at("solutionMatrices")) {
      SolutionMatrix sm;
      sm.name = m.at("name").get<std::string>();
      for (const auto& a : m.at("aux")) sm.auxVariables.push_back(a.get<std::string>());
      for (const auto& s : m.at("sideRelations")) sm.sideRelations.push_back(s.get<std::string>());
      for (const auto& p : m.at("pivots")) sm.pivotCols.push_back(p.get<int>());
      for (const auto& row : m.at("rows")) {
        std::vector<std::string> cells;
        for (const auto& cell : row) cells.push_back(cell.get<std::string>());
        sm.rows.push_back(std::move(cells));
      }
      d.solutionMatrices.push_back(std::move(sm));
    }
    return d;
  }();
  return data;
}

const NonassocCaseData& nonassocData(int caseS) {
  auto it = caseData().nonassoc.find(caseS);
  if (it == caseData().nonassoc.end()) {
    throw std::invalid_argument("case " + std::to_string(caseS) + " is not in the family set");
  }
  return it->second;
}

const AssocCaseData& assocData(int case15) {
  auto it = caseData().assoc.find(case15);
  if (it == caseData().assoc.end()) {
    throw std::invalid_argument("invalid associative case " + std::to_string(case15));
  }
  return it->second;
}

std::vector<std::string> rankingFor(const std::vector<std::string>& colMajor,
                                    const std::vector<std::string>& rowMajor,
                                    RankingScheme scheme) {
  std::vector<std::string> ranking;
  switch (scheme) {
    case RankingScheme::ColumnMajorAsc: ranking = colMajor; break;
    case RankingScheme::ColumnMajorDesc:
      ranking.assign(colMajor.rbegin(), colMajor.rend());
      break;
    case RankingScheme::RowMajorAsc: ranking = rowMajor; break;
    case RankingScheme::RowMajorDesc:
      ranking.assign(rowMajor.rbegin(), rowMajor.rend());
      break;
  }
  return ranking;
}

GroebnerResult runEngine(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const ClassifierConfig& config) {
  if (config.fastEngine) return buchbergerQueue(gens, order);
  GroebnerOptions options;
  return buchbergerStaged(gens, order, options);
}

// The heavy obstruction bases (case 1 runs for minutes) are shared across
// classification runs and the acceptance sweep. Keyed per case and
// configuration; concurrent requests for the same key wait on one compute.
const GroebnerResult& cachedObstructionGB(int case70, const std::vector<Polynomial>& gens,
                                          const MonomialOrder& order,
                                          const ClassifierConfig& config) {
  using Key = std::tuple<int, OrderKind, RankingScheme, bool>;
  static std::mutex mutex;
  static std::map<Key, std::shared_future<GroebnerResult>> cache;
  Key key{case70, config.order, config.ranking, config.fastEngine};

  std::packaged_task<GroebnerResult()> task(
      [&gens, &order, &config] { return runEngine(gens, order, config); });
  std::shared_future<GroebnerResult> future;
  bool runHere = false;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
      future = task.get_future().share();
      cache.emplace(key, future);
      runHere = true;
    } else {
      future = it->second;
    }
  }
  if (runHere) task();
  return future.get();
}

// T restricted to the non-pivot columns (the parameter block).
PolyMatrix coreColumns(const PolyMatrix& t, const std::vector<int>& pivotCols) {
  std::vector<int> freeCols;
  for (int c = 1; c <= static_cast<int>(t.cols()); ++c) {
    if (std::find(pivotCols.begin(), pivotCols.end(), c) == pivotCols.end()) freeCols.push_back(c);
  }
  PolyMatrix out(t.variables(), t.rows(), freeCols.size());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < freeCols.size(); ++c) out.at(r, c) = t.at(r, freeCols[c] - 1);
  }
  return out;
}

bool sameGeneratorSets(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  for (const Polynomial& f : a) {
    if (std::find(b.begin(), b.end(), f) == b.end()) return false;
  }
  return true;
}

struct SideContext {
  VarsPtr aux;
  MonomialOrder order;
  std::vector<Polynomial> gb;
};

SideContext sideContext(const SolutionFamily& family) {
  VarsPtr aux = makeVariables(family.auxVariables);
  MonomialOrder order(OrderKind::GrevLex, aux);
  std::vector<Polynomial> gens;
  for (const std::string& text : family.sideRelations) {
    gens.push_back(parsePolynomial(text, aux));
  }
  std::vector<Polynomial> gb;
  if (!gens.empty()) gb = buchbergerQueue(gens, order).basis;
  return SideContext{aux, order, std::move(gb)};
}

bool reducesToZero(const Polynomial& f, const SideContext& side) {
  if (f.isZero()) return true;
  if (side.gb.empty()) return false;
  return normalForm(f, side.gb, side.order).isZero();
}

// Substitution images of a case's parameters into the auxiliary ring.
std::vector<Polynomial> familyImages(const SolutionFamily& family, const VarsPtr& params,
                                     const SideContext& side) {
  std::vector<Polynomial> images;
  images.reserve(params->size());
  for (std::size_t v = 0; v < params->size(); ++v) {
    auto it = family.assignments.find(params->name(v));
    if (it == family.assignments.end()) {
      throw std::invalid_argument("family '" + family.name + "' leaves parameter " +
                                  params->name(v) + " unassigned");
    }
    images.push_back(parsePolynomial(it->second, side.aux));
  }
  return images;
}

PolyMatrix substituteMatrix(const PolyMatrix& m, const std::vector<Polynomial>& images,
                            const VarsPtr& target) {
  PolyMatrix out(target, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(r, c) =
          substitute(m.at(r, c), [&](std::size_t v) { return images[v]; }, target);
    }
  }
  return out;
}

const PolyMatrix& twoAssociativeRows(const VarsPtr& vars) {
  thread_local std::optional<std::pair<VarsPtr, PolyMatrix>> cache;
  if (!cache || cache->first != vars) {
    PolyMatrix a(vars, 2, 8);
    a.at(0, 0) = Polynomial::constant(vars, Rational(1));
    a.at(0, 4) = Polynomial::constant(vars, Rational(-1));
    a.at(1, 3) = Polynomial::constant(vars, Rational(1));
    a.at(1, 7) = Polynomial::constant(vars, Rational(-1));
    cache = {vars, std::move(a)};
  }
  return cache->second;
}

}  // namespace

std::vector<SubsetChoice> enumerateSubsets(int r, int n, const std::set<int>& mustContain) {
  std::vector<SubsetChoice> out;
  std::vector<int> current(r);
  int number = 0;
  auto emit = [&](const std::vector<int>& cols) {
    for (int m : mustContain) {
      if (std::find(cols.begin(), cols.end(), m) == cols.end()) return;
    }
    out.push_back(SubsetChoice{cols, ++number});
  };
  // Lexicographic enumeration of r-subsets of {1..n}.
  for (int i = 0; i < r; ++i) current[i] = i + 1;
  while (true) {
    emit(current);
    int i = r - 1;
    while (i >= 0 && current[i] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < r; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

int parameterCount(const std::vector<int>& pivotCols, int n) {
  int r = static_cast<int>(pivotCols.size());
  int p = 0;
  for (int i = 1; i <= r; ++i) p += (n - pivotCols[i - 1]) - (r - i);
  return p;
}

std::string rankingSchemeToString(RankingScheme scheme) {
  switch (scheme) {
    case RankingScheme::ColumnMajorAsc: return "column-major";
    case RankingScheme::ColumnMajorDesc: return "column-major-desc";
    case RankingScheme::RowMajorAsc: return "row-major";
    case RankingScheme::RowMajorDesc: return "row-major-desc";
  }
  throw std::logic_error("bad RankingScheme");
}

RankingScheme rankingSchemeFromString(const std::string& name) {
  if (name == "column-major") return RankingScheme::ColumnMajorAsc;
  if (name == "column-major-desc") return RankingScheme::ColumnMajorDesc;
  if (name == "row-major") return RankingScheme::RowMajorAsc;
  if (name == "row-major-desc") return RankingScheme::RowMajorDesc;
  throw std::invalid_argument("unknown ranking scheme: " + name);
}

MonomialOrder caseOrder(const ParametricRCF& rcf, OrderKind kind, RankingScheme scheme) {
  return MonomialOrder(kind, rcf.matrix.variables(),
                       rankingFor(rcf.paramsColumnMajor, rcf.paramsRowMajor, scheme));
}

std::string verdictToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::StructurallyRejected: return "structurally-rejected";
    case Verdict::UnitIdeal: return "unit-ideal";
    case Verdict::SelfDualFamily: return "self-dual-family";
  }
  throw std::logic_error("bad Verdict");
}

const std::vector<int>& nonassocFamilyCases() { return caseData().familyCases; }
const std::vector<int>& nonassocUnitCases() { return caseData().unitCases; }

int case70FromCase35(int case35) {
  auto all = enumerateSubsets(4, 8);
  int seen = 0;
  for (const SubsetChoice& s : all) {
    if (s.columns[0] == 1 && ++seen == case35) return s.caseNumber;
  }
  throw std::invalid_argument("contains-1 case number out of range");
}

ParametricRCF nonassocMatrix(int case70) {
  auto all = enumerateSubsets(4, 8);
  if (case70 < 1 || case70 > static_cast<int>(all.size())) {
    throw std::invalid_argument("case number out of range (1..70)");
  }
  const std::vector<int>& pivots = all[case70 - 1].columns;
  bool inS = false;
  if (pivots[0] == 1) {
    int case35 = 0, seen = 0;
    for (const SubsetChoice& s : all) {
      if (s.columns[0] != 1) continue;
      ++seen;
      if (s.caseNumber == case70) {
        case35 = seen;
        break;
      }
    }
    inS = caseData().nonassoc.count(case35) != 0;
  }
  PivotPattern pattern{pivots, {}};
  return buildParametricRCF(pattern, 8,
                            inS ? ParamNaming::ColumnMajorWXYZ : ParamNaming::RowMajorLetters);
}

CaseReport nonassocCase(int case70, const ClassifierConfig& config) {
  auto all = enumerateSubsets(4, 8);
  if (case70 < 1 || case70 > static_cast<int>(all.size())) {
    throw std::invalid_argument("case number out of range (1..70)");
  }
  const std::vector<int>& pivots = all[case70 - 1].columns;

  std::optional<int> case35;
  {
    int seen = 0;
    for (const SubsetChoice& s : all) {
      if (s.columns[0] != 1) continue;
      ++seen;
      if (s.caseNumber == case70) {
        case35 = seen;
        break;
      }
      if (s.caseNumber > case70) break;
    }
  }
  std::optional<int> caseAssoc;
  {
    int seen = 0;
    for (const SubsetChoice& s : all) {
      bool has14 = std::find(s.columns.begin(), s.columns.end(), 1) != s.columns.end() &&
                   std::find(s.columns.begin(), s.columns.end(), 4) != s.columns.end();
      if (!has14) continue;
      ++seen;
      if (s.caseNumber == case70) {
        caseAssoc = seen;
        break;
      }
      if (s.caseNumber > case70) break;
    }
  }

  ParametricRCF rcf = nonassocMatrix(case70);
  PolyMatrix t = selfDualObstruction(QuadraticSpace{rcf.matrix, rcf.pivotCols});

  CaseReport report{case70,
                    case35,
                    caseAssoc,
                    pivots,
                    parameterCount(pivots, 8),
                    Verdict::StructurallyRejected,
                    t,
                    std::nullopt,
                    std::nullopt,
                    false,
                    {}};

  if (t.hasNonzeroConstantEntry()) return report;

  MonomialOrder order = caseOrder(rcf, config.order, config.ranking);
  std::vector<Polynomial> gens = t.entryIdealGenerators(order);
  GroebnerResult gb = cachedObstructionGB(case70, gens, order, config);
  report.verdict = gb.isUnit() ? Verdict::UnitIdeal : Verdict::SelfDualFamily;

  bool inS = case35 && caseData().nonassoc.count(*case35) != 0;
  if (inS && report.verdict == Verdict::SelfDualFamily) {
    const NonassocCaseData& data = nonassocData(*case35);
    report.signatureFromProofOnly = data.proofOnly;

    PolyMatrix core = monicDiagonalNormalize(coreColumns(t, pivots), order).matrix;
    PolyMatrix target = signatureTarget(*case35);
    std::vector<Polynomial> coreGens = core.entryIdealGenerators(order);
    std::vector<Polynomial> targetGens = target.entryIdealGenerators(order);
    report.signatureVerified = sameGeneratorSets(coreGens, targetGens)
                                   ? true
                                   : idealsEqual(coreGens, targetGens, order);

    for (const SolutionFamily& family : data.families) {
      FamilyCheck check;
      check.name = family.name;
      check.verified = verifySolutionFamily(family, t);
      check.operadLevelVerified = verifyFamilyAtOperadLevel(family, rcf.matrix, pivots);
      report.families.push_back(std::move(check));
    }
  }
  report.groebner = std::move(gb);
  return report;
}

namespace {

std::vector<CaseReport> classifyParallel(int count, int jobs,
                                         const std::function<CaseReport(int)>& runCase) {
  std::vector<std::optional<CaseReport>> slots(count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) slots[i] = runCase(i + 1);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) break;
        slots[i] = runCase(i + 1);
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::vector<CaseReport> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace

std::vector<CaseReport> classifyNonassoc(const ClassifierConfig& config) {
  return classifyParallel(70, config.jobs,
                          [&](int case70) { return nonassocCase(case70, config); });
}

const GroebnerResult& nonassocObstructionGB(int caseS, const ClassifierConfig& config) {
  int case70 = case70FromCase35(caseS);
  ParametricRCF rcf = nonassocMatrix(case70);
  MonomialOrder order = caseOrder(rcf, config.order, config.ranking);
  PolyMatrix t = selfDualObstruction(QuadraticSpace{rcf.matrix, rcf.pivotCols});
  std::vector<Polynomial> gens = t.entryIdealGenerators(order);
  return cachedObstructionGB(case70, gens, order, config);
}

PolyMatrix parameterMatrix(int caseS) {
  const NonassocCaseData& data = nonassocData(caseS);
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
  return coreColumns(rcf.matrix, data.pivots);
}

SignaturePair signatureFor(int caseS) { return nonassocData(caseS).signature; }
bool signatureFromProofOnly(int caseS) { return nonassocData(caseS).proofOnly; }
std::vector<std::string> zeroedParamsFor(int caseS) { return nonassocData(caseS).zeroedParams; }
int expectedGbSize(int caseS) { return nonassocData(caseS).gbSize; }
std::string expectedGreatestLex(int caseS) { return nonassocData(caseS).greatestLex; }
std::vector<std::string> expectedFullGB(int caseS) { return nonassocData(caseS).fullGB; }

PolyMatrix signatureTarget(int caseS) {
  SignaturePair sig = signatureFor(caseS);
  PolyMatrix p = parameterMatrix(caseS);
  const VarsPtr& vars = p.variables();
  PolyMatrix d(vars, 4, 4), e(vars, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    d.at(i, i) = Polynomial::constant(vars, Rational(sig.D[i]));
    e.at(i, i) = Polynomial::constant(vars, Rational(sig.E[i]));
  }
  return p.transposed() * d * p - e;
}

PolyMatrix obstructionCore(int caseS, const ClassifierConfig& config) {
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
  PolyMatrix t = selfDualObstruction(QuadraticSpace{rcf.matrix, rcf.pivotCols});
  MonomialOrder order = caseOrder(rcf, config.order, config.ranking);
  return monicDiagonalNormalize(coreColumns(t, rcf.pivotCols), order).matrix;
}

bool verifySignatureEquivalence(int caseS, const ClassifierConfig& config) {
  ParametricRCF rcf = nonassocMatrix(case70FromCase35(caseS));
  MonomialOrder order = caseOrder(rcf, config.order, config.ranking);
  PolyMatrix core = obstructionCore(caseS, config);
  PolyMatrix target = signatureTarget(caseS);
  std::vector<Polynomial> a = core.entryIdealGenerators(order);
  std::vector<Polynomial> b = target.entryIdealGenerators(order);
  if (sameGeneratorSets(a, b)) return true;
  return idealsEqual(a, b, order);
}

std::vector<SolutionFamily> familiesForNonassocCase(int caseS) {
  return nonassocData(caseS).families;
}

bool verifySolutionFamily(const SolutionFamily& family, const PolyMatrix& obstruction) {
  SideContext side = sideContext(family);
  std::vector<Polynomial> images = familyImages(family, obstruction.variables(), side);
  for (std::size_t r = 0; r < obstruction.rows(); ++r) {
    for (std::size_t c = 0; c < obstruction.cols(); ++c) {
      Polynomial sub =
          substitute(obstruction.at(r, c), [&](std::size_t v) { return images[v]; }, side.aux);
      if (!reducesToZero(sub, side)) return false;
    }
  }
  return true;
}

bool verifyFamilyAtOperadLevel(const SolutionFamily& family, const PolyMatrix& relationMatrix,
                               const std::vector<int>& pivotCols) {
  SideContext side = sideContext(family);
  std::vector<Polynomial> images = familyImages(family, relationMatrix.variables(), side);
  PolyMatrix substituted = substituteMatrix(relationMatrix, images, side.aux);
  PolyMatrix t = selfDualObstruction(QuadraticSpace{substituted, pivotCols});
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (!reducesToZero(t.at(r, c), side)) return false;
    }
  }
  return true;
}

ParametricRCF assocMatrix(int case15) {
  const AssocCaseData& data = assocData(case15);
  return buildParametricRCF(PivotPattern{data.pivots, {}}, 8, ParamNaming::ColumnMajorWXYZ);
}

std::vector<ParametricRCF> assocBuildCases() {
  std::vector<ParametricRCF> out;
  for (int i = 1; i <= 15; ++i) out.push_back(assocMatrix(i));
  return out;
}

AssocReduced applyAssociativityConditions(const ParametricRCF& rcf) {
  const VarsPtr& vars = rcf.matrix.variables();
  if (std::find(rcf.pivotCols.begin(), rcf.pivotCols.end(), 1) == rcf.pivotCols.end() ||
      std::find(rcf.pivotCols.begin(), rcf.pivotCols.end(), 4) == rcf.pivotCols.end()) {
    throw std::invalid_argument("associativity conditions need pivots in columns 1 and 4");
  }
  PolyMatrix reducedA = stackReduce(rcf.matrix, rcf.pivotCols, twoAssociativeRows(vars));

  // Rank parameters column-major; each condition eliminates its greatest one.
  std::vector<std::size_t> rankOf(vars->size());
  for (std::size_t rank = 0; rank < rcf.paramsColumnMajor.size(); ++rank) {
    rankOf[*vars->indexOf(rcf.paramsColumnMajor[rank])] = rank;
  }

  std::map<std::size_t, Polynomial> assign;
  auto substituteAssigned = [&](const Polynomial& f) {
    return substitute(
        f,
        [&](std::size_t v) {
          auto it = assign.find(v);
          return it != assign.end() ? it->second : Polynomial::variable(vars, v);
        },
        vars);
  };

  for (std::size_t r = 0; r < reducedA.rows(); ++r) {
    for (std::size_t c = 0; c < reducedA.cols(); ++c) {
      Polynomial eq = substituteAssigned(reducedA.at(r, c));
      if (eq.isZero()) continue;
      if (eq.isConstant()) {
        throw std::runtime_error("inconsistent associativity conditions");
      }
      // Affine-linear in the parameters: solve for the greatest variable.
      std::size_t best = 0;
      bool found = false;
      for (const Term& t : eq.terms()) {
        if (t.mono.isUnit()) continue;
        if (t.mono.degree() != 1) {
          throw std::runtime_error("associativity condition is not affine-linear");
        }
        for (std::size_t v = 0; v < vars->size(); ++v) {
          if (t.mono.exponent(v) != 0 && (!found || rankOf[v] > rankOf[best])) {
            best = v;
            found = true;
          }
        }
      }
      Monomial bestMono = Monomial::variable(vars->size(), best);
      Rational coeff = eq.coefficient(bestMono);
      Polynomial rest = eq - Polynomial::fromTerm(vars, bestMono, coeff);
      Polynomial value = rest.scaled(Rational(-1) / coeff);
      for (auto& [v, rhs] : assign) {
        rhs = substitute(
            rhs,
            [&](std::size_t u) {
              return u == best ? value : Polynomial::variable(vars, u);
            },
            vars);
      }
      assign.emplace(best, std::move(value));
    }
  }

  // Project onto the surviving parameters.
  std::vector<std::string> survivorNames;
  std::vector<std::size_t> survivorIndex;
  for (std::size_t v = 0; v < vars->size(); ++v) {
    if (assign.find(v) == assign.end()) {
      survivorNames.push_back(vars->name(v));
      survivorIndex.push_back(v);
    }
  }
  VarsPtr reducedVars = makeVariables(survivorNames);
  std::vector<Polynomial> images(vars->size(), Polynomial::zero(reducedVars));
  std::vector<Polynomial> fullImages;
  fullImages.reserve(vars->size());
  for (std::size_t v = 0; v < vars->size(); ++v) {
    auto it = assign.find(v);
    fullImages.push_back(it != assign.end() ? it->second : Polynomial::variable(vars, v));
  }
  for (std::size_t v = 0; v < vars->size(); ++v) {
    images[v] = substitute(
        fullImages[v],
        [&](std::size_t u) {
          auto pos = std::find(survivorIndex.begin(), survivorIndex.end(), u);
          if (pos == survivorIndex.end()) {
            throw std::logic_error("unresolved substitution chain");
          }
          return Polynomial::variable(reducedVars,
                                      static_cast<std::size_t>(pos - survivorIndex.begin()));
        },
        reducedVars);
  }

  AssocReduced out{substituteMatrix(rcf.matrix, images, reducedVars), rcf.pivotCols, {}, {}};
  auto survives = [&](const std::string& name) {
    return std::find(survivorNames.begin(), survivorNames.end(), name) != survivorNames.end();
  };
  for (const std::string& name : rcf.paramsColumnMajor) {
    if (survives(name)) out.paramsColumnMajor.push_back(name);
  }
  for (const std::string& name : rcf.paramsRowMajor) {
    if (survives(name)) out.paramsRowMajor.push_back(name);
  }
  return out;
}

std::vector<std::vector<std::string>> expectedAssocReduced(int case15) {
  return assocData(case15).table6;
}
std::vector<std::string> expectedAssocGB(int case15) { return assocData(case15).gb; }
std::vector<SolutionFamily> familiesForAssocCase(int case15) { return assocData(case15).families; }

CaseReport assocCase(int case15, const ClassifierConfig& config) {
  const AssocCaseData& data = assocData(case15);
  ParametricRCF rcf = assocMatrix(case15);
  AssocReduced reduced = applyAssociativityConditions(rcf);
  PolyMatrix t = selfDualObstruction(QuadraticSpace{reduced.matrix, reduced.pivotCols});

  std::optional<int> case70;
  std::optional<int> case35;
  for (const SubsetChoice& s : enumerateSubsets(4, 8)) {
    if (s.columns == data.pivots) {
      case70 = s.caseNumber;
      break;
    }
  }
  for (const SubsetChoice& s : enumerateSubsets(4, 8, {1})) {
    if (s.columns == data.pivots) {
      case35 = s.caseNumber;
      break;
    }
  }

  CaseReport report{case70,
                    case35,
                    case15,
                    data.pivots,
                    static_cast<int>(reduced.paramsColumnMajor.size()),
                    Verdict::StructurallyRejected,
                    t,
                    std::nullopt,
                    std::nullopt,
                    false,
                    {}};

  if (t.hasNonzeroConstantEntry()) return report;

  MonomialOrder order(config.order, reduced.matrix.variables(),
                      rankingFor(reduced.paramsColumnMajor, reduced.paramsRowMajor,
                                 config.ranking));
  std::vector<Polynomial> gens = t.entryIdealGenerators(order);
  GroebnerResult gb = runEngine(gens, order, config);
  report.verdict = gb.isUnit() ? Verdict::UnitIdeal : Verdict::SelfDualFamily;
  report.groebner = std::move(gb);

  for (const SolutionFamily& family : data.families) {
    FamilyCheck check;
    check.name = family.name;
    check.verified = verifySolutionFamily(family, t);
    check.operadLevelVerified =
        verifyFamilyAtOperadLevel(family, reduced.matrix, reduced.pivotCols);
    report.families.push_back(std::move(check));
  }
  return report;
}

std::vector<CaseReport> classifyAssoc(const ClassifierConfig& config) {
  return classifyParallel(15, config.jobs, [&](int case15) { return assocCase(case15, config); });
}

std::vector<SolutionMatrix> assocSolutionMatrices() { return caseData().solutionMatrices; }

bool verifySolutionMatrixSelfDual(const SolutionMatrix& solution) {
  VarsPtr aux = makeVariables(solution.auxVariables);
  MonomialOrder order(OrderKind::GrevLex, aux);
  std::vector<Polynomial> sideGens;
  for (const std::string& text : solution.sideRelations) {
    sideGens.push_back(parsePolynomial(text, aux));
  }
  std::vector<Polynomial> sideGB;
  if (!sideGens.empty()) sideGB = buchbergerQueue(sideGens, order).basis;

  PolyMatrix m(aux, solution.rows.size(), 8);
  for (std::size_t r = 0; r < solution.rows.size(); ++r) {
    for (std::size_t c = 0; c < 8; ++c) m.at(r, c) = parsePolynomial(solution.rows[r][c], aux);
  }
  PolyMatrix t = selfDualObstruction(QuadraticSpace{m, solution.pivotCols});
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const Polynomial& e = t.at(r, c);
      if (e.isZero()) continue;
      if (sideGB.empty()) return false;
      if (!normalForm(e, sideGB, order).isZero()) return false;
    }
  }
  return true;
}

std::vector<std::array<std::size_t, 4>> expectedCase5Trace() { return caseData().case5Trace; }

std::vector<OneOpSolution> oneOperationClassification() {
  // Two-column analogue of the pipeline over O(2) = span{m1, m2} with the
  // form diag(1, -1). Pivot {2} rejects structurally like the no-column-1
  // cases; pivot {1} gives the obstruction A^2 - 1.
  VarsPtr vars = makeVariables({"A"});
  PolyMatrix r(vars, 1, 2);
  r.at(0, 0) = Polynomial::constant(vars, Rational(1));
  r.at(0, 1) = Polynomial::variable(vars, 0);
  std::vector<int> pivots{1};
  PolyMatrix rPrime = negateColumns(r, {2});
  PolyMatrix rSecond = fixLeadingSigns(rPrime, pivots);
  PolyMatrix dual = structuredNullspace(rSecond, pivots);
  PolyMatrix t = stackReduce(r, pivots, dual);

  std::vector<OneOpSolution> out;
  for (int value : {1, -1}) {
    // (a, b) = (1, value) is a solution when every entry of T vanishes at
    // A = value.
    bool solves = true;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      Polynomial sub = substitute(
          t.at(0, c), [&](std::size_t) { return Polynomial::constant(vars, Rational(value)); },
          vars);
      if (!sub.isZero()) solves = false;
    }
    if (!solves) continue;
    OneOpSolution solution;
    solution.a = Rational(1);
    solution.b = Rational(value);
    solution.unital = osbornUnitalCheck({solution.a, solution.b});
    out.push_back(std::move(solution));
  }
  return out;
}

}  // namespace opdual
