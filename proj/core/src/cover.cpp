#include "hrange/cover.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hrange {

namespace {

using u16 = std::uint16_t;

// Stamp counts are stored in 16 bits. While the scan runs, m[x] <= h + 1
// (the predecessor min is <= h or the scan would have stopped), so any h
// up to this bound is safe.
constexpr i64 kMaxBudget = 65'000;

void check_budget(i64 h) {
  if (h < 1) throw std::invalid_argument("stamp budget h must be >= 1");
  if (h > kMaxBudget) throw std::invalid_argument("stamp budget h exceeds 16-bit stamp storage");
}

void check_limits(const CoverLimits& limits) {
  if (limits.max_entries < 2) throw std::invalid_argument("memory cap must allow at least 2 entries");
}

}  // namespace

CoverResult cover_dp(std::span<const i64> denoms, i64 h, const CoverLimits& limits) {
  if (denoms.empty() || denoms.front() != 1)
    throw std::invalid_argument("denomination list must start with 1");
  for (std::size_t i = 1; i < denoms.size(); ++i)
    if (denoms[i] <= denoms[i - 1]) throw std::invalid_argument("denominations must be strictly increasing");
  check_budget(h);
  check_limits(limits);

  std::vector<u16> m;
  m.reserve(1024);
  m.push_back(0);  // m[0] = 0

  for (i64 x = 1;; ++x) {
    if (x > limits.max_entries)
      throw MemoryCapError("cover scan exceeded the configured entry ceiling");
    i64 best = std::numeric_limits<i64>::max();
    for (i64 d : denoms) {
      if (d > x) break;
      best = std::min<i64>(best, m[static_cast<std::size_t>(x - d)]);
    }
    i64 mx = best + 1;
    if (mx > h) return {x - 1, x};
    m.push_back(static_cast<u16>(mx));
  }
}

CoverResult cover_naive(const ConcreteBasis& b, const CoverLimits& limits) {
  validate_basis(b);
  const i64 denoms[4] = {1, b.a2, b.a3, b.a4};
  return cover_dp(denoms, b.h, limits);
}

CoverResult cover_fast(const ConcreteBasis& b, const CoverLimits& limits) {
  validate_basis(b);
  check_budget(b.h);
  check_limits(limits);

  const i64 a2 = b.a2, a3 = b.a3, a4 = b.a4, h = b.h;
  const i64 cap = limits.max_entries;
  const i64 clamp = h + 1;  // stamp counts above the budget are all equivalent

  // Running minima per residue class:
  //   g3[y mod a3] = min over z <= y with z = y (mod a3) of m2(z) - z/a3
  //   g4[x mod a4] = min over y <= x with y = x (mod a4) of m3(y) - y/a4
  // where m2 is the closed-form {1, a2} stamp count,
  //   m3(y) = y/a3 + g3[y mod a3]  and  m(x) = x/a4 + g4[x mod a4].
  // Entries are clamped at h+1; a clamped entry can never decide a value
  // as representable (its contribution stays above h because the quotient
  // at insertion never exceeds the quotient at lookup).
  // The tables grow with the scan: residue x is first touched at value x,
  // so a full table is only ever paid for once the scan got that far.
  std::vector<u16> g3{0}, g4{0};
  g3.reserve(256);
  g4.reserve(256);

  i64 q2 = 0, r2 = 0;  // x = q2*a2 + r2
  i64 q3 = 0, r3 = 0;  // x = q3*a3 + r3
  i64 q4 = 0, r4 = 0;  // x = q4*a4 + r4

  for (i64 x = 1;; ++x) {
    if (x > cap) throw MemoryCapError("cover scan exceeded the configured entry ceiling");

    if (++r2 == a2) { r2 = 0; ++q2; }
    const i64 m2 = q2 + r2;

    i64 m3;
    if (++r3 == a3) { r3 = 0; ++q3; }
    if (q3 == 0) {  // x < a3: table still growing, only the base term exists
      g3.push_back(static_cast<u16>(std::min(m2, clamp)));
      m3 = m2;
    } else {
      u16& slot = g3[static_cast<std::size_t>(r3)];
      const i64 cand = m2 - q3;  // >= 0: m2(x) >= ceil(x/a2) >= x/a3
      if (cand < slot) slot = static_cast<u16>(cand);
      m3 = q3 + slot;
    }

    i64 m;
    if (++r4 == a4) { r4 = 0; ++q4; }
    if (q4 == 0) {  // x < a4
      g4.push_back(static_cast<u16>(std::min(m3, clamp)));
      m = m3;
    } else {
      u16& slot = g4[static_cast<std::size_t>(r4)];
      const i64 cand = m3 - q4;  // >= 0: m3(x) >= ceil(x/a3) >= x/a4
      if (cand < slot) slot = static_cast<u16>(cand);
      m = q4 + slot;
    }

    if (m > h) return {x - 1, x};
  }
}

bool can_represent(i64 x, const ConcreteBasis& b) {
  validate_basis(b);
  if (x < 1) throw std::invalid_argument("can_represent requires x >= 1");

  // Minimal {1, a2} stamp count is greedy: floor(y/a2) + y mod a2.
  const auto tail2 = [&](i64 y) { return y / b.a2 + y % b.a2; };

  const i64 q4_hi = std::min(x / b.a4, b.h);
  for (i64 q4 = q4_hi; q4 >= 0; --q4) {
    const i64 rem4 = x - q4 * b.a4;
    const i64 budget4 = b.h - q4;
    if (rem4 > budget4 * b.a3) continue;  // even all-a3 stamps fall short
    const i64 q3_hi = std::min(rem4 / b.a3, budget4);
    for (i64 q3 = q3_hi; q3 >= 0; --q3) {
      const i64 rem3 = rem4 - q3 * b.a3;
      const i64 budget3 = budget4 - q3;
      if (rem3 > budget3 * b.a2) continue;
      if (tail2(rem3) <= budget3) return true;
    }
  }
  return false;
}

Generation decompose_greedy(i64 x, const ConcreteBasis& b) {
  validate_basis(b);
  if (x < 1) throw std::invalid_argument("decompose_greedy requires x >= 1");
  Generation g;
  g.q4 = x / b.a4;
  i64 rem = x - g.q4 * b.a4;
  g.q3 = rem / b.a3;
  rem -= g.q3 * b.a3;
  g.q2 = rem / b.a2;
  g.q1 = rem - g.q2 * b.a2;
  return g;
}

AdmissibilityResult admissible_prefix(const ConcreteBasis& b, const CoverLimits& limits) {
  validate_basis(b);
  AdmissibilityResult res;

  // n(h, {1}) = h.
  if (b.a2 > b.h + 1) {
    res.admissible = false;
    res.failed = PrefixLevel::A2;
    res.prefix_cover = b.h;
    return res;
  }
  const i64 d2[2] = {1, b.a2};
  const i64 n2 = cover_dp(d2, b.h, limits).cover;
  if (b.a3 > n2 + 1) {
    res.admissible = false;
    res.failed = PrefixLevel::A3;
    res.prefix_cover = n2;
    return res;
  }
  const i64 d3[3] = {1, b.a2, b.a3};
  const i64 n3 = cover_dp(d3, b.h, limits).cover;
  if (b.a4 > n3 + 1) {
    res.admissible = false;
    res.failed = PrefixLevel::A4;
    res.prefix_cover = n3;
    return res;
  }
  return res;
}

}  // namespace hrange
