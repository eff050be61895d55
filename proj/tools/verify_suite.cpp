// Reference verification suite: replays the published fixtures end to end
// (worked example, polynomial tables, crossovers, sweeps, relation checks)
// and reports pass/fail per criterion. Everything asserted here is exact.

#include "verify_suite.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "hrange/analysis.hpp"
#include "hrange/search.hpp"

namespace hrange::verify {

namespace {

using hrange::search::Box;
using hrange::search::SearchOptions;
using hrange::search::SearchReport;
using hrange::search::SearchSpec;

struct Reporter {
  std::ostream& out;
  bool ok = true;

  void check(const std::string& what, bool pass) {
    out << "  " << (pass ? "ok" : "FAIL") << "  " << what << '\n';
    ok = ok && pass;
  }
  template <typename T>
  void check_eq(const std::string& what, const T& actual, const T& expected) {
    if (actual == expected) {
      out << "  ok  " << what << '\n';
    } else {
      out << "  FAIL  " << what << " (got " << actual << ", want " << expected << ")\n";
      ok = false;
    }
  }
};

const ParametricBasis kWorkedB{Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0};
const ParametricBasis kBestH0{Family::hofmeister(), {1, 0, 0, 0, 0, 0}, 0};

// Worked example: basis, cover, decomposition, regular form, polynomial.
bool criterion1(Reporter& rep, const SuiteOptions& opt) {
  const CoverLimits limits{opt.max_entries};
  const ConcreteBasis b = instantiate(kWorkedB, 20);
  rep.check("instantiate t=20 = {1,182,10780,438441}, h=240",
            b == ConcreteBasis{182, 10780, 438441, 240});

  const CoverResult naive = cover_naive(b, limits);
  const CoverResult fast = cover_fast(b, limits);
  rep.check_eq<i64>("cover at h=240", naive.cover, 28491279);
  rep.check("both engines agree", naive == fast);

  rep.check("greedy decomposition = (79,58,39,64)",
            decompose_greedy(naive.cover, b) == Generation{79, 58, 39, 64});

  const std::vector<i64> samples{12, 13, 14};
  const RegularForm rf = infer_regular_form(kWorkedB, samples, limits);
  rep.check("regular form from t in {12,13,14} = ((4,3,2,3),(-1,-2,-1,4))",
            rf == RegularForm{4, 3, 2, 3, -1, -2, -1, 4});

  rep.check("cover polynomial = (162,318,68,4,-1)",
            expand_cover_polynomial(kWorkedB, rf) == CoverPolynomial{162, 318, 68, 4, -1});
  return rep.ok;
}

// r=0 comparison: the competing polynomial and the crossover point.
bool criterion2(Reporter& rep, const SuiteOptions& opt) {
  const CoverLimits limits{opt.max_entries};
  const RegularForm rf = infer_regular_form(kBestH0, std::vector<i64>{12, 13, 14}, limits);
  const CoverPolynomial h0 = expand_cover_polynomial(kBestH0, rf);
  rep.check("r=0 polynomial = (162,312,137,19,-2)",
            h0 == CoverPolynomial{162, 312, 137, 19, -2});

  const CoverPolynomial b0{162, 318, 68, 4, -1};
  const auto res = analysis::crossover(b0, h0, 100);
  rep.check("crossover at t* = 12", res.t_star.has_value() && *res.t_star == 12);
  return rep.ok;
}

// Sequence family: t^3 identity for p = 0..10 and exact DP checks.
bool criterion3(Reporter& rep, const SuiteOptions& opt) {
  const CoverLimits limits{opt.max_entries};
  for (i64 p = 0; p <= 10; ++p) {
    const auto r = analysis::verify_sequence_family(p, std::vector<i64>{}, limits);
    if (!r.t3_match) {
      rep.check("t^3 coefficient = 18p+708 at p=" + std::to_string(p), false);
      return rep.ok;
    }
  }
  rep.check("t^3 coefficient = 18p+708 for p = 0..10", true);

  const CoverPolynomial table_rows[2] = {{162, 708, 886, 453, 95}, {162, 726, 240, -234, 66}};
  for (i64 p = 0; p <= 1; ++p) {
    const auto r = analysis::verify_sequence_family(p, std::vector<i64>{21, 22}, limits);
    rep.check("full polynomial matches the r=7 table row at p=" + std::to_string(p),
              r.polynomial == table_rows[p]);
    for (const auto& chk : r.checks) {
      std::ostringstream what;
      what << "DP = formula at p=" << p << " t=" << chk.t << " (" << chk.formula_value << ")";
      rep.check(what.str(), chk.match);
    }
    if (p == 0)
      rep.check_eq<i64>("p=0 t=21 value", r.checks.at(0).formula_value, 38463044);
  }
  return rep.ok;
}

// Oracle equivalence of the two cover engines.
bool criterion4(Reporter& rep, const SuiteOptions& opt) {
  const CoverLimits limits{opt.max_entries};
  const ConcreteBasis fixtures[] = {
      {182, 10780, 438441, 240}, {2, 3, 4, 1},           {2, 3, 4, 3},
      {9, 31, 87, 12},           {197, 12696, 541857, 259},
  };
  bool all = true;
  for (const ConcreteBasis& b : fixtures)
    all = all && cover_naive(b, limits) == cover_fast(b, limits);
  rep.check("engines agree on the fixture bases", all);

  std::mt19937 rng(1993);
  std::uniform_int_distribution<i64> d2(2, 58), gap(1, 20), dh(1, 40);
  int done = 0;
  bool random_ok = true;
  while (done < 50) {
    ConcreteBasis b;
    b.a2 = d2(rng);
    b.a3 = b.a2 + gap(rng);
    b.a4 = b.a3 + gap(rng);
    b.h = dh(rng);
    if (b.a4 > 60) continue;
    random_ok = random_ok && cover_naive(b, limits) == cover_fast(b, limits);
    ++done;
  }
  rep.check("engines agree on 50 pseudo-random bases (a4 <= 60, h <= 40)", random_ok);
  return rep.ok;
}

SearchSpec box_spec(Family fam, int r, i64 t, const CVector& center, i64 width, i64 max_entries) {
  SearchSpec spec;
  spec.family = fam;
  spec.r = r;
  spec.t_values = {t};
  const auto c = center.as_array();
  for (int i = 0; i < 6; ++i) spec.boxes[i] = Box{c[i] - width, c[i] + width};
  spec.seed_champion = center;
  spec.limits.max_entries = max_entries;
  return spec;
}

// Desk-scale sweep reproduction: three champions.
bool criterion5(Reporter& rep, const SuiteOptions& opt) {
  struct Case {
    const char* label;
    Family family;
    int r;
    i64 t;
    CVector center;
    i64 width;
  };
  const Case cases[] = {
      {"B r=11 t=8, boxes +-2", Family::braunschaedel(), 11, 8, {11, 4, 2, 10, 1, 2}, 2},
      {"B r=0 t=12, boxes +-2", Family::braunschaedel(), 0, 12, {2, 2, -1, 3, -1, 0}, 2},
      {"H r=0 t=6, boxes +-1", Family::hofmeister(), 0, 6, {1, 0, 0, 0, 0, 0}, 1},
  };
  for (const Case& cs : cases) {
    const SearchSpec spec = box_spec(cs.family, cs.r, cs.t, cs.center, cs.width, opt.max_entries);
    SearchOptions sopt;
    sopt.threads = opt.threads;
    const SearchReport report = hrange::search::search_family(spec, sopt);
    const auto& r0 = report.per_t.at(0);
    std::ostringstream what;
    what << cs.label << ": champion is the seeded row (cover " << r0.champion_cover << ")";
    rep.check(what.str(), r0.has_champion && r0.champion == cs.center);
    rep.check("counts conserved", r0.counts.conserved());
  }
  return rep.ok;
}

// Pruning soundness: pruned and exhaustive sweeps agree exactly.
bool criterion6(Reporter& rep, const SuiteOptions& opt) {
  const SearchSpec spec =
      box_spec(Family::hofmeister(), 0, 6, {1, 0, 0, 0, 0, 0}, 1, opt.max_entries);
  SearchOptions pruned, exhaustive;
  pruned.threads = exhaustive.threads = opt.threads;
  exhaustive.pruning = false;
  const SearchReport a = hrange::search::search_family(spec, pruned);
  const SearchReport b = hrange::search::search_family(spec, exhaustive);
  const auto& ra = a.per_t.at(0);
  const auto& rb = b.per_t.at(0);
  rep.check("same champion with and without pruning",
            ra.champion == rb.champion && ra.champion_cover == rb.champion_cover);
  rep.check("same tie set", ra.ties == rb.ties);
  return rep.ok;
}

// Relation suite over re-derived regular forms.
bool criterion7(Reporter& rep, const SuiteOptions& opt) {
  using analysis::SelmerRow;
  using analysis::SelmerType;
  const CoverLimits limits{opt.max_entries};
  const std::vector<i64> samples{12, 13, 14};

  // Rows with k5 = (5,3,2,3) whose large-t regular forms re-derive cleanly;
  // rows printed with transcription noise re-derive to conforming values,
  // which is the point of re-deriving.
  const std::vector<std::pair<int, CVector>> type_a = {
      {0, {2, 1, 0, 1, 0, 1}},  {0, {1, 0, 0, 0, 0, 0}},  {1, {1, 0, 2, 1, 1, 0}},
      {1, {2, 1, 1, 1, 1, 1}},  {2, {1, 0, 2, 1, 1, 0}},  {3, {3, 1, 2, 2, 1, 1}},
      {4, {3, 1, 2, 2, 1, 1}},  {7, {8, 4, 1, 7, 1, 0}},  {8, {8, 4, 1, 7, 1, 0}},
      {9, {8, 4, 1, 7, 1, 0}},  {9, {7, 3, 3, 5, 2, 2}},  {11, {11, 5, 2, 9, 2, 0}},
  };

  std::vector<SelmerRow> rows;
  for (const auto& [r, c] : type_a) {
    const ParametricBasis pb{Family::hofmeister(), c, r};
    rows.push_back({r, c, infer_regular_form(pb, samples, limits)});
  }
  const auto reports = analysis::verify_selmer_relations(rows);
  int passing_a = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const bool ok = reports[i].type == SelmerType::A && reports[i].all_ok;
    passing_a += ok;
    std::ostringstream what;
    const auto c = type_a[i].second.as_array();
    what << "type A relations, r=" << type_a[i].first << " c=(";
    for (int j = 0; j < 6; ++j) what << (j ? "," : "") << c[j];
    what << ")";
    rep.check(what.str(), ok);
  }
  rep.check("at least 8 type-A rows verified", passing_a >= 8);

  const ParametricBasis pbB{Family::hofmeister(), {11, 6, 1, 10, 1, 0}, 10};
  const std::vector<SelmerRow> brow{{10, pbB.c, infer_regular_form(pbB, samples, limits)}};
  const auto breport = analysis::verify_selmer_relations(brow);
  rep.check("type B relations, r=10 c=(11,6,1,10,1,0)",
            breport.at(0).type == SelmerType::B && breport.at(0).all_ok);
  return rep.ok;
}

const char* criterion_title(int n) {
  switch (n) {
    case 1: return "worked example (basis, cover, decomposition, regular form, polynomial)";
    case 2: return "competing r=0 polynomial and crossover";
    case 3: return "sequence-family identities and DP checks";
    case 4: return "oracle equivalence of the cover engines";
    case 5: return "sweep reproduction at desk scale";
    case 6: return "pruning soundness";
    case 7: return "regular-form relation suite";
    default: return "";
  }
}

}  // namespace

bool run_criterion(int n, std::ostream& out, const SuiteOptions& opt) {
  Reporter rep{out};
  out << "criterion " << n << ": " << criterion_title(n) << '\n';
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  switch (n) {
    case 1: ok = criterion1(rep, opt); break;
    case 2: ok = criterion2(rep, opt); break;
    case 3: ok = criterion3(rep, opt); break;
    case 4: ok = criterion4(rep, opt); break;
    case 5: ok = criterion5(rep, opt); break;
    case 6: ok = criterion6(rep, opt); break;
    case 7: ok = criterion7(rep, opt); break;
    default: out << "  FAIL  unknown criterion\n"; return false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  out << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " (" << buf << "s)\n";
  return ok;
}

bool run_paper_suite(std::ostream& out, const SuiteOptions& opt) {
  bool all = true;
  for (int n = 1; n <= kCriterionCount; ++n) all = run_criterion(n, out, opt) && all;
  out << (all ? "all criteria passed" : "SUITE FAILED") << '\n';
  return all;
}

}  // namespace hrange::verify
