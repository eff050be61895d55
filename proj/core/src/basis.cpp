#include "hrange/basis.hpp"

#include <stdexcept>

namespace hrange {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

Family Family::custom(const KVector& k) {
  if (k.k21 < 1) throw std::invalid_argument("custom family requires k21 >= 1");
  return {FamilyName::Custom, k};
}

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::Hofmeister: return "hofmeister";
    case FamilyName::Braunschaedel: return "braunschaedel";
    case FamilyName::Custom: return "custom";
  }
  return "custom";
}

FamilyName family_from_string(const std::string& s) {
  if (s == "hofmeister") return FamilyName::Hofmeister;
  if (s == "braunschaedel") return FamilyName::Braunschaedel;
  if (s == "custom") return FamilyName::Custom;
  throw std::invalid_argument("unknown family: " + s);
}

void validate_basis(const ConcreteBasis& b) {
  if (!(1 < b.a2 && b.a2 < b.a3 && b.a3 < b.a4))
    throw std::invalid_argument("basis requires 1 < a2 < a3 < a4");
  if (b.h < 1) throw std::invalid_argument("basis requires h >= 1");
}

i64 Generation::value(const ConcreteBasis& b) const {
  i64 v = checked_mul(q4, b.a4);
  v = checked_add(v, checked_mul(q3, b.a3));
  v = checked_add(v, checked_mul(q2, b.a2));
  return checked_add(v, q1);
}

namespace {

// k*t + c, overflow-checked.
i64 lin(i64 k, i64 c, i64 t) { return checked_add(checked_mul(k, t), c); }

ConcreteBasis instantiate_raw(const ParametricBasis& pb, i64 t) {
  const KVector& k = pb.family.k;
  const CVector& c = pb.c;
  ConcreteBasis b;
  b.a2 = lin(k.k21, c.c21, t);
  b.a3 = checked_add(checked_mul(lin(k.k32, c.c32, t), b.a2), lin(k.k31, c.c31, t));
  b.a4 = checked_add(checked_mul(lin(k.k43, c.c43, t), b.a3),
                     checked_add(checked_mul(lin(k.k42, c.c42, t), b.a2), lin(k.k41, c.c41, t)));
  b.h = checked_add(checked_mul(12, t), pb.r);
  return b;
}

}  // namespace

ConcreteBasis instantiate(const ParametricBasis& pb, i64 t) {
  if (t < 1) throw std::invalid_argument("instantiate requires t >= 1");
  if (pb.r < 0 || pb.r > 11) throw std::invalid_argument("residue r must be in 0..11");
  ConcreteBasis b = instantiate_raw(pb, t);
  if (!(1 < b.a2 && b.a2 < b.a3 && b.a3 < b.a4))
    throw NonMonotoneError("instantiated basis is not monotone (1 < a2 < a3 < a4)");
  return b;
}

InstantiateResult try_instantiate(const ParametricBasis& pb, i64 t) {
  InstantiateResult res;
  try {
    res.basis = instantiate(pb, t);
  } catch (const NonMonotoneError&) {
    res.status = InstantiateStatus::NonMonotone;
  } catch (const OverflowError&) {
    res.status = InstantiateStatus::Overflow;
  }
  return res;
}

}  // namespace hrange
