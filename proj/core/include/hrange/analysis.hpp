#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrange/polynomial.hpp"

namespace hrange::analysis {

// Least t from which A(t) exceeds B(t) for good, with an exact sign probe.
struct CrossoverResult {
  std::optional<i64> t_star;
  std::vector<std::pair<i64, int>> sign_table;  // (t, sign of A(t)-B(t)) for t = 1..probe
};

// Evaluates D = A - B exactly for t = 1..t_probe_max. When D's leading
// coefficient is positive, positivity beyond the probe is guaranteed by an
// integer root bound (1 + max|d_i|/|d_lead|); the probe must reach that
// bound or InsufficientProbeError is raised. Returns no t_star when B
// dominates for large t. Precondition: A != B.
CrossoverResult crossover(const CoverPolynomial& A, const CoverPolynomial& B, i64 t_probe_max);

struct ScheduleCandidate {
  Family family;
  CVector c;
  // When present (validated by infer_regular_form), covers come from the
  // expanded polynomial; otherwise from the DP engine per t.
  std::optional<RegularForm> rf;
};

enum class CoverSource { Polynomial, Dp };

struct ScheduleEntry {
  i64 t_lo = 0, t_hi = 0;
  std::size_t candidate_index = 0;
  Family family;
  CVector c;
  CoverSource source = CoverSource::Dp;

  bool operator==(const ScheduleEntry&) const = default;
};

// Per t in [t_lo, t_hi], picks the candidate with the largest exact cover
// (earliest candidate wins ties); merges consecutive equal choices.
std::vector<ScheduleEntry> best_schedule(int r, i64 t_lo, i64 t_hi,
                                         std::span<const ScheduleCandidate> candidates,
                                         const CoverLimits& limits = {});

// The one-parameter family (8+p, 4+p, 1-p, 7+2p, 1, -2p) at r = 7, whose
// cover has regular form k5 = (5,3,2,3), c5 = (2, -p, -(2p+1), 4p+7) and
// t^3 coefficient 18p + 708.
struct SequenceFamilyCheck {
  i64 t = 0;
  i64 dp_cover = 0;
  i64 formula_value = 0;
  bool match = false;
};

struct SequenceFamilyReport {
  i64 p = 0;
  i64 f8 = 0;       // admissibility margin, identically 0 for this family
  i64 f9 = 0;       // 3p + 4
  i64 x_max = 0;    // 4p + 6
  i64 t3_expected = 0;  // 18p + 708
  i64 t3_actual = 0;    // t^3 coefficient of the expanded cover polynomial
  bool t3_match = false;
  CoverPolynomial polynomial;
  std::vector<SequenceFamilyCheck> checks;
};

SequenceFamilyReport verify_sequence_family(i64 p, std::span<const i64> t_checks,
                                            const CoverLimits& limits = {});

// Empirical linear relations between a basis' coefficients and its
// re-derived regular form. Type A rows have k5 = (5,3,2,3): the regular form
// is determined by
//   c51 = c21 - c31 - 2,  c52 = c32 - 1,  c53 = c43 - 1,
//   c54 = r - s1 - s2 - s3 + 2
// with s1 = 2c41 - 3c31 - 2, s2 = 2c42 - c32, s3 = 3c43 + 1 (the relations in
// the budget-normalized coefficients, whose sum is r). Type B rows have
// k5 = (9,3,2,3) and satisfy C52 = c42, C53 = 2c43 in the same normalization.
struct SelmerRow {
  int r = 0;
  CVector c;
  RegularForm rf;  // re-derived via infer_regular_form
};

enum class SelmerType { A, B, Other };

struct SelmerCheck {
  std::string name;
  i64 expected = 0;
  i64 actual = 0;
  bool ok = false;
};

struct SelmerRowReport {
  SelmerType type = SelmerType::Other;
  std::vector<SelmerCheck> checks;
  bool all_ok = true;
};

std::vector<SelmerRowReport> verify_selmer_relations(std::span<const SelmerRow> rows);

// Scaled optimal basis for r = 0 with secondary parameter T <= t/25:
//   a2 = 9t + 15T
//   a3 = (4t + 14T) + (3t - 15T + 2) a2
//   a4 = (9t + 23T) + (2t - 2T) a2 + (2t - 20T) a3,  h = 12t.
// The closed-form range candidate is
//   (3t + 45T + 3) a4 + (2t - 20T - 1) a3 + (3t - 15T + 1) a2 + (5t + T - 2),
// stated for the variant with the +2 dropped from the a3 multiplier. Both
// variants are instantiated and compared against the formula; discrepancies
// are recorded, not errors.
struct MossigeOptimalParams {
  i64 t = 0;
  i64 T = 0;
};

struct MossigeOptimalVariant {
  ConcreteBasis basis;
  CoverResult dp;
  i64 formula_value = 0;
  bool match = false;
};

struct MossigeOptimalReport {
  MossigeOptimalParams params;
  MossigeOptimalVariant as_written;  // with the +2 in the a3 multiplier
  MossigeOptimalVariant zero_shift;  // with the +2 dropped
};

MossigeOptimalReport verify_mossige_optimal(const MossigeOptimalParams& params,
                                            const CoverLimits& limits = {});

}  // namespace hrange::analysis
