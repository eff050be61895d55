#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hrange/errors.hpp"

namespace hrange {

using i64 = std::int64_t;

// Overflow-checked signed arithmetic. All value computations go through
// these so an out-of-range intermediate is an error, never a wrap.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// The six t-slopes of a parametric family, in table order
// (k21, k31, k32, k41, k42, k43).
struct KVector {
  i64 k21, k31, k32, k41, k42, k43;
  bool operator==(const KVector&) const = default;
};

enum class FamilyName { Hofmeister, Braunschaedel, Custom };

struct Family {
  FamilyName name;
  KVector k;

  static Family hofmeister() { return {FamilyName::Hofmeister, {9, 4, 3, 7, 2, 2}}; }
  static Family braunschaedel() { return {FamilyName::Braunschaedel, {9, 2, 3, 7, 2, 2}}; }
  // Any slopes with k21 >= 1.
  static Family custom(const KVector& k);

  bool operator==(const Family&) const = default;
};

std::string to_string(FamilyName name);
FamilyName family_from_string(const std::string& s);

// The six constant coefficients, same order as KVector.
struct CVector {
  i64 c21 = 0, c31 = 0, c32 = 0, c41 = 0, c42 = 0, c43 = 0;

  std::array<i64, 6> as_array() const { return {c21, c31, c32, c41, c42, c43}; }
  static CVector from_array(const std::array<i64, 6>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }

  bool operator==(const CVector&) const = default;
  // Lexicographic in table order; the search tie-break.
  bool operator<(const CVector& o) const { return as_array() < o.as_array(); }
};

// A family member: slopes, constants, and the residue r of h = 12t + r.
struct ParametricBasis {
  Family family;
  CVector c;
  int r = 0;  // 0 <= r <= 11
};

// Concrete quadruple {1, a2, a3, a4} with stamp budget h (a1 = 1 implicit).
struct ConcreteBasis {
  i64 a2 = 0, a3 = 0, a4 = 0;
  i64 h = 0;

  bool operator==(const ConcreteBasis&) const = default;
};

// Throws std::invalid_argument unless 1 < a2 < a3 < a4 and h >= 1.
void validate_basis(const ConcreteBasis& b);

// Multiplicities of (1, a2, a3, a4) realizing a value.
struct Generation {
  i64 q1 = 0, q2 = 0, q3 = 0, q4 = 0;

  i64 value(const ConcreteBasis& b) const;
  i64 stamps() const { return q1 + q2 + q3 + q4; }
  bool operator==(const Generation&) const = default;
};

// a2 = k21*t + c21
// a3 = (k32*t + c32)*a2 + (k31*t + c31)
// a4 = (k43*t + c43)*a3 + (k42*t + c42)*a2 + (k41*t + c41)
// h  = 12*t + r
// Throws NonMonotoneError / OverflowError; std::invalid_argument on bad t or r.
ConcreteBasis instantiate(const ParametricBasis& pb, i64 t);

// Status-returning variant for hot enumeration loops.
enum class InstantiateStatus { Ok, NonMonotone, Overflow };
struct InstantiateResult {
  InstantiateStatus status = InstantiateStatus::Ok;
  ConcreteBasis basis;
};
InstantiateResult try_instantiate(const ParametricBasis& pb, i64 t);

}  // namespace hrange
