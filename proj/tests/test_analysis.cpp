#include <doctest.h>

#include <vector>

#include "hrange/analysis.hpp"

using namespace hrange;
using namespace hrange::analysis;

namespace {

// Validated cover polynomials for the two r=0 family members.
const CoverPolynomial kPolyB0{162, 318, 68, 4, -1};
const CoverPolynomial kPolyH0{162, 312, 137, 19, -2};
// Two r=11 rows whose covers trade places late.
const CoverPolynomial kPolyB12{162, 930, 1436, 839, 226};   // (12,5,1,12,1,0)
const CoverPolynomial kPolyB11{162, 912, 1816, 1546, 478};  // (11,4,2,10,1,2)

}  // namespace

TEST_CASE("the r=0 crossover happens at t=12") {
  const CrossoverResult res = crossover(kPolyB0, kPolyH0, 100);
  REQUIRE(res.t_star.has_value());
  CHECK(*res.t_star == 12);
  CHECK(res.sign_table[10] == std::pair<i64, int>{11, -1});
  CHECK(res.sign_table[11] == std::pair<i64, int>{12, 1});
  // Exact differences at the flip.
  CHECK(kPolyB0.eval(11) - kPolyH0.eval(11) == -527);
  CHECK(kPolyB0.eval(12) - kPolyH0.eval(12) == 253);
}

TEST_CASE("crossover requires distinct polynomials") {
  CHECK_THROWS_AS(crossover(kPolyB0, kPolyB0, 50), std::invalid_argument);
}

TEST_CASE("crossover reports no t_star when the second polynomial dominates") {
  const CrossoverResult res = crossover(kPolyH0, kPolyB0, 100);
  CHECK_FALSE(res.t_star.has_value());
}

TEST_CASE("the probe must reach the root bound") {
  // D = (0, 6, -69, -15, 1): bound = 2 + 69/6 = 13.
  try {
    crossover(kPolyB0, kPolyH0, 12);
    FAIL("expected InsufficientProbeError");
  } catch (const InsufficientProbeError& e) {
    CHECK(e.root_bound == 13);
  }
  CHECK(crossover(kPolyB0, kPolyH0, 13).t_star == 12);
}

TEST_CASE("the late r=11 pair crosses pairwise at t=23") {
  const CrossoverResult res = crossover(kPolyB12, kPolyB11, 100);
  REQUIRE(res.t_star.has_value());
  CHECK(*res.t_star == 23);

  // Exact covers at the flip, polynomial vs dynamic program.
  const ParametricBasis p11{Family::braunschaedel(), {11, 4, 2, 10, 1, 2}, 11};
  const ParametricBasis p12{Family::braunschaedel(), {12, 5, 1, 12, 1, 0}, 11};
  CHECK(cover_fast(instantiate(p11, 22)).cover == 48573882);
  CHECK(cover_fast(instantiate(p12, 22)).cover == 48565820);
  CHECK(cover_fast(instantiate(p11, 23)).cover == 57427246);
  CHECK(cover_fast(instantiate(p12, 23)).cover == 57428719);
  CHECK(kPolyB11.eval(22) == 48573882);
  CHECK(kPolyB12.eval(23) == 57428719);
}

TEST_CASE("schedule picks the r=0 winner over 12..16 from polynomials") {
  const RegularForm rfB{4, 3, 2, 3, -1, -2, -1, 4};
  const RegularForm rfH{5, 3, 2, 3, -1, -1, -1, 3};
  const std::vector<ScheduleCandidate> cands{
      {Family::hofmeister(), {1, 0, 0, 0, 0, 0}, rfH},
      {Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, rfB},
  };
  const auto entries = best_schedule(0, 12, 16, cands);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].t_lo == 12);
  CHECK(entries[0].t_hi == 16);
  CHECK(entries[0].candidate_index == 1);
  CHECK(entries[0].source == CoverSource::Polynomial);
}

TEST_CASE("a single candidate owns the whole range") {
  const std::vector<ScheduleCandidate> cands{
      {Family::hofmeister(), {1, 0, 0, 0, 0, 0}, RegularForm{5, 3, 2, 3, -1, -1, -1, 3}}};
  const auto entries = best_schedule(0, 5, 9, cands);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].t_lo == 5);
  CHECK(entries[0].t_hi == 9);
}

TEST_CASE("the r=11 schedule switches from H to B at t=8, by DP") {
  const std::vector<ScheduleCandidate> cands{
      {Family::hofmeister(), {10, 4, 3, 7, 2, 2}, std::nullopt},
      {Family::braunschaedel(), {11, 4, 2, 10, 1, 2}, std::nullopt},
  };
  const auto entries = best_schedule(11, 7, 9, cands);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0] == ScheduleEntry{7, 7, 0, cands[0].family, cands[0].c, CoverSource::Dp});
  CHECK(entries[1] == ScheduleEntry{8, 9, 1, cands[1].family, cands[1].c, CoverSource::Dp});
}

TEST_CASE("schedule choices have the maximum DP cover") {
  const RegularForm rfB{4, 3, 2, 3, -1, -2, -1, 4};
  const RegularForm rfH{5, 3, 2, 3, -1, -1, -1, 3};
  const std::vector<ScheduleCandidate> cands{
      {Family::hofmeister(), {1, 0, 0, 0, 0, 0}, rfH},
      {Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, rfB},
  };
  const auto entries = best_schedule(0, 12, 13, cands);
  for (i64 t = 12; t <= 13; ++t) {
    i64 best = -1;
    for (const auto& cand : cands)
      best = std::max(best, cover_naive(instantiate({cand.family, cand.c, 0}, t)).cover);
    // The scheduled candidate's DP cover equals the max.
    const auto& e = entries[0];
    const i64 chosen = cover_naive(instantiate({e.family, e.c, 0}, t)).cover;
    CHECK(chosen == best);
  }
}

TEST_CASE("sequence family t^3 identity holds for p = 0..10") {
  for (i64 p = 0; p <= 10; ++p) {
    const SequenceFamilyReport rep = verify_sequence_family(p, std::vector<i64>{});
    CHECK(rep.t3_expected == 18 * p + 708);
    CHECK(rep.t3_match);
    CHECK(rep.f8 == 0);
    CHECK(rep.f9 == 3 * p + 4);
    CHECK(rep.x_max == 4 * p + 6);
  }
}

TEST_CASE("sequence family polynomials match the published r=7 rows") {
  CHECK(verify_sequence_family(0, std::vector<i64>{}).polynomial ==
        CoverPolynomial{162, 708, 886, 453, 95});
  CHECK(verify_sequence_family(1, std::vector<i64>{}).polynomial ==
        CoverPolynomial{162, 726, 240, -234, 66});
}

TEST_CASE("sequence family DP check at p=0, t=21") {
  const SequenceFamilyReport rep = verify_sequence_family(0, std::vector<i64>{21});
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].formula_value == 38463044);
  CHECK(rep.checks[0].dp_cover == 38463044);
  CHECK(rep.checks[0].match);
}

TEST_CASE("type A relation suite on two re-derived rows") {
  const std::vector<i64> samples{12, 13, 14};
  std::vector<SelmerRow> rows;
  {
    const ParametricBasis pb{Family::hofmeister(), {8, 4, 1, 7, 1, 0}, 7};
    rows.push_back({7, pb.c, infer_regular_form(pb, samples)});
  }
  {
    const ParametricBasis pb{Family::hofmeister(), {11, 5, 2, 9, 2, 0}, 11};
    rows.push_back({11, pb.c, infer_regular_form(pb, samples)});
  }
  const auto reports = verify_selmer_relations(rows);
  REQUIRE(reports.size() == 2);
  for (const auto& rep : reports) {
    CHECK(rep.type == SelmerType::A);
    CHECK(rep.all_ok);
    CHECK(rep.checks.size() == 4);
  }
}

TEST_CASE("type B relation suite on the re-derived r=10 row") {
  const ParametricBasis pb{Family::hofmeister(), {11, 6, 1, 10, 1, 0}, 10};
  const RegularForm rf = infer_regular_form(pb, std::vector<i64>{12, 13, 14});
  CHECK(rf == RegularForm{9, 3, 2, 3, 8, 0, -1, 9});
  const std::vector<SelmerRow> rows{{10, pb.c, rf}};
  const auto reports = verify_selmer_relations(rows);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].type == SelmerType::B);
  CHECK(reports[0].all_ok);
  REQUIRE(reports[0].checks.size() == 2);
  CHECK(reports[0].checks[0].expected == 1);  // C52 = c42
  CHECK(reports[0].checks[1].expected == 0);  // C53 = 2*c43
}

TEST_CASE("a (4,3,2,3) form is classified as another type, not a failure") {
  const std::vector<SelmerRow> rows{
      {0, {2, 2, -1, 3, -1, 0}, RegularForm{4, 3, 2, 3, -1, -2, -1, 4}}};
  const auto reports = verify_selmer_relations(rows);
  CHECK(reports[0].type == SelmerType::Other);
  CHECK(reports[0].all_ok);
  CHECK(reports[0].checks.empty());
}

TEST_CASE("scaled optimal basis instantiates exactly") {
  const MossigeOptimalReport rep = verify_mossige_optimal({25, 1});
  CHECK(rep.as_written.basis == ConcreteBasis{240, 14994, 461588, 300});
  CHECK(rep.as_written.formula_value == 57224914);
  // At desk scale the closed form does not yet describe either variant's
  // DP cover; the discrepancy is recorded, not an error.
  CHECK(rep.as_written.dp.cover == 46621310);
  CHECK_FALSE(rep.as_written.match);
  CHECK(rep.zero_shift.basis.a3 == 14514);
  CHECK(rep.zero_shift.basis.a4 == 447188);
  CHECK(rep.zero_shift.dp.cover == 46953742);
  CHECK(rep.zero_shift.formula_value == 55439794);
  CHECK_FALSE(rep.zero_shift.match);
}

TEST_CASE("T = 0 collapses the scaled basis to the pure-t skeleton") {
  const MossigeOptimalReport rep = verify_mossige_optimal({3, 0});
  CHECK(rep.as_written.basis.a2 == 27);  // 9t
  CHECK(rep.as_written.basis.h == 36);   // 12t
}

TEST_CASE("scaled optimal parameters are validated") {
  CHECK_THROWS_AS(verify_mossige_optimal({24, 1}), std::invalid_argument);  // T > t/25
  CHECK_THROWS_AS(verify_mossige_optimal({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(verify_mossige_optimal({25, -1}), std::invalid_argument);
}
