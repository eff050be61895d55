#pragma once

#include <span>
#include <vector>

#include "hrange/basis.hpp"

namespace hrange {

// Ceiling for cover scans, in table entries (one entry per scanned value).
// A scan that reaches the ceiling without finding a gap raises MemoryCapError.
struct CoverLimits {
  i64 max_entries = 150'000'000;  // ~300 MB of 16-bit stamp counts
};

// cover = largest n with every 1..n representable in <= h stamps;
// first_gap = n + 1, the smallest unrepresentable value.
struct CoverResult {
  i64 cover = 0;
  i64 first_gap = 0;

  bool operator==(const CoverResult&) const = default;
};

// Dynamic program over minimal stamp counts m[x] for an arbitrary
// denomination list (must start with 1, strictly increasing): the oracle.
// Used directly for prefix bases of 1..3 denominations.
CoverResult cover_dp(std::span<const i64> denoms, i64 h, const CoverLimits& limits = {});

// m[x] = 1 + min over denominations d <= x of m[x-d]; cover = first x with
// m[x] > h, minus one.
CoverResult cover_naive(const ConcreteBasis& b, const CoverLimits& limits = {});

// Same result as cover_naive. A generation found at y yields generations at
// every y + i*a4 (one extra stamp per step), so each residue class mod a4
// carries a running best; the same propagation is applied mod a3, and the
// {1, a2} tail is closed-form. O(a3 + a4) memory instead of O(cover).
CoverResult cover_fast(const ConcreteBasis& b, const CoverLimits& limits = {});

// True iff x = q4*a4 + q3*a3 + q2*a2 + q1 with sum(q) <= h, q >= 0.
// Bounded enumeration of q4, q3 with the {1, a2} remainder in closed form.
bool can_represent(i64 x, const ConcreteBasis& b);

// q4 = floor(x/a4), then q3, q2, q1 greedily. No stamp-budget constraint.
Generation decompose_greedy(i64 x, const ConcreteBasis& b);

// Prefix admissibility: a2 <= n(h,{1})+1, a3 <= n(h,{1,a2})+1,
// a4 <= n(h,{1,a2,a3})+1. On failure reports the failing level and the
// failing prefix's cover, which is also the candidate's exact cover (any
// representation of prefix_cover+1 would need a denomination above it).
enum class PrefixLevel { A2, A3, A4 };

struct AdmissibilityResult {
  bool admissible = true;
  PrefixLevel failed = PrefixLevel::A2;
  i64 prefix_cover = 0;  // cover of the failing prefix; meaningful when !admissible
};

AdmissibilityResult admissible_prefix(const ConcreteBasis& b, const CoverLimits& limits = {});

}  // namespace hrange
