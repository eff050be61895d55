#include "hrange/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hrange::analysis {

CrossoverResult crossover(const CoverPolynomial& A, const CoverPolynomial& B, i64 t_probe_max) {
  if (A == B) throw std::invalid_argument("crossover requires distinct polynomials");
  if (t_probe_max < 1 || t_probe_max > 1'000'000)
    throw std::invalid_argument("probe range must be in 1..1e6");

  const auto a = A.coeffs();
  const auto b = B.coeffs();
  std::array<i64, 5> d{};  // descending, degree 4..0
  for (int i = 0; i < 5; ++i) d[i] = checked_add(a[i], -b[i]);

  int lead = 0;
  while (lead < 5 && d[lead] == 0) ++lead;

  // All real roots of D lie strictly below 1 + max|d_i| / |d_lead|.
  i64 max_abs = 0;
  for (int i = lead + 1; i < 5; ++i) max_abs = std::max<i64>(max_abs, std::llabs(d[i]));
  const i64 root_bound = 2 + max_abs / std::llabs(d[lead]);

  CrossoverResult res;
  res.sign_table.reserve(static_cast<std::size_t>(t_probe_max));
  CoverPolynomial D{d[0], d[1], d[2], d[3], d[4]};
  for (i64 t = 1; t <= t_probe_max; ++t) {
    const i64 v = D.eval(t);
    res.sign_table.emplace_back(t, v > 0 ? 1 : (v < 0 ? -1 : 0));
  }

  if (d[lead] < 0) return res;  // B dominates for large t
  if (t_probe_max < root_bound)
    throw InsufficientProbeError("probe range ends below the root bound", root_bound);

  i64 t_star = 1;
  for (const auto& [t, sign] : res.sign_table)
    if (sign <= 0) t_star = t + 1;
  res.t_star = t_star;  // beyond the root bound the sign is the leading sign
  return res;
}

std::vector<ScheduleEntry> best_schedule(int r, i64 t_lo, i64 t_hi,
                                         std::span<const ScheduleCandidate> candidates,
                                         const CoverLimits& limits) {
  if (candidates.empty()) throw std::invalid_argument("best_schedule requires candidates");
  if (t_lo < 1 || t_hi < t_lo) throw std::invalid_argument("bad t range");

  std::vector<CoverPolynomial> polys(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].rf)
      polys[i] = expand_cover_polynomial({candidates[i].family, candidates[i].c, r},
                                         *candidates[i].rf);

  std::vector<ScheduleEntry> out;
  for (i64 t = t_lo; t <= t_hi; ++t) {
    std::size_t best_idx = 0;
    i64 best_cover = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      i64 cover;
      if (candidates[i].rf) {
        cover = polys[i].eval(t);
      } else {
        const ConcreteBasis b = instantiate({candidates[i].family, candidates[i].c, r}, t);
        cover = cover_fast(b, limits).cover;
      }
      if (cover > best_cover) {
        best_cover = cover;
        best_idx = i;
      }
    }
    const CoverSource src = candidates[best_idx].rf ? CoverSource::Polynomial : CoverSource::Dp;
    if (!out.empty() && out.back().candidate_index == best_idx && out.back().t_hi == t - 1) {
      out.back().t_hi = t;
    } else {
      out.push_back(ScheduleEntry{t, t, best_idx, candidates[best_idx].family,
                                  candidates[best_idx].c, src});
    }
  }
  return out;
}

namespace {

ParametricBasis sequence_family_member(i64 p) {
  return {Family::hofmeister(), CVector{8 + p, 4 + p, 1 - p, 7 + 2 * p, 1, -2 * p}, 7};
}

RegularForm sequence_family_form(i64 p) {
  return RegularForm{5, 3, 2, 3, 2, -p, -(2 * p + 1), 4 * p + 7};
}

}  // namespace

SequenceFamilyReport verify_sequence_family(i64 p, std::span<const i64> t_checks,
                                            const CoverLimits& limits) {
  if (p < 0) throw std::invalid_argument("p must be non-negative");

  SequenceFamilyReport rep;
  rep.p = p;
  rep.f8 = 0;
  rep.f9 = 3 * p + 4;
  rep.x_max = 4 * p + 6;
  rep.t3_expected = 18 * p + 708;

  const ParametricBasis pb = sequence_family_member(p);
  const RegularForm rf = sequence_family_form(p);
  rep.polynomial = expand_cover_polynomial(pb, rf);
  rep.t3_actual = rep.polynomial.p3;
  rep.t3_match = rep.t3_actual == rep.t3_expected;

  for (i64 t : t_checks) {
    const ConcreteBasis b = instantiate(pb, t);
    SequenceFamilyCheck chk;
    chk.t = t;
    chk.dp_cover = cover_fast(b, limits).cover;
    chk.formula_value = rf.value(b, t);
    chk.match = chk.dp_cover == chk.formula_value;
    rep.checks.push_back(chk);
  }
  return rep;
}

std::vector<SelmerRowReport> verify_selmer_relations(std::span<const SelmerRow> rows) {
  std::vector<SelmerRowReport> out;
  out.reserve(rows.size());
  for (const SelmerRow& row : rows) {
    SelmerRowReport rep;
    const auto& c = row.c;
    const auto& rf = row.rf;
    const auto add = [&rep](std::string name, i64 expected, i64 actual) {
      const bool ok = expected == actual;
      rep.checks.push_back({std::move(name), expected, actual, ok});
      rep.all_ok = rep.all_ok && ok;
    };

    if (rf.k() == std::array<i64, 4>{5, 3, 2, 3}) {
      rep.type = SelmerType::A;
      const i64 s1 = 2 * c.c41 - 3 * c.c31 - 2;
      const i64 s2 = 2 * c.c42 - c.c32;
      const i64 s3 = 3 * c.c43 + 1;
      add("c51", c.c21 - c.c31 - 2, rf.c51);
      add("c52", c.c32 - 1, rf.c52);
      add("c53", c.c43 - 1, rf.c53);
      add("c54", row.r - s1 - s2 - s3 + 2, rf.c54);
    } else if (rf.k() == std::array<i64, 4>{9, 3, 2, 3}) {
      rep.type = SelmerType::B;
      // Budget-normalized coefficients recovered from the regular form.
      const i64 C52 = rf.c52 - (c.c32 - c.c42 - 1);
      const i64 C53 = rf.c53 + (c.c43 + 1);
      add("C52", c.c42, C52);
      add("C53", 2 * c.c43, C53);
    } else {
      rep.type = SelmerType::Other;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

i64 mossige_formula(const ConcreteBasis& b, i64 t, i64 T) {
  return (3 * t + 45 * T + 3) * b.a4 + (2 * t - 20 * T - 1) * b.a3 + (3 * t - 15 * T + 1) * b.a2 +
         (5 * t + T - 2);
}

ConcreteBasis mossige_basis(i64 t, i64 T, i64 a3_shift) {
  ConcreteBasis b;
  b.a2 = 9 * t + 15 * T;
  b.a3 = (4 * t + 14 * T) + (3 * t - 15 * T + a3_shift) * b.a2;
  b.a4 = (9 * t + 23 * T) + (2 * t - 2 * T) * b.a2 + (2 * t - 20 * T) * b.a3;
  b.h = 12 * t;
  validate_basis(b);
  return b;
}

}  // namespace

MossigeOptimalReport verify_mossige_optimal(const MossigeOptimalParams& params,
                                            const CoverLimits& limits) {
  if (params.t < 1) throw std::invalid_argument("t must be positive");
  if (params.T < 0 || 25 * params.T > params.t)
    throw std::invalid_argument("requires 0 <= T <= t/25");

  MossigeOptimalReport rep;
  rep.params = params;

  const auto run = [&](i64 shift) {
    MossigeOptimalVariant v;
    v.basis = mossige_basis(params.t, params.T, shift);
    v.dp = cover_fast(v.basis, limits);
    v.formula_value = mossige_formula(v.basis, params.t, params.T);
    v.match = v.dp.cover == v.formula_value;
    return v;
  };
  rep.as_written = run(2);
  rep.zero_shift = run(0);
  return rep;
}

}  // namespace hrange::analysis
