#include "hrange/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrange {

namespace {

// Horner evaluation over descending coefficients, overflow-checked.
template <std::size_t N>
i64 eval_desc(const std::array<i64, N>& coeffs, i64 t) {
  i64 acc = 0;
  for (i64 c : coeffs) acc = checked_add(checked_mul(acc, t), c);
  return acc;
}

}  // namespace

i64 BasisPolynomials::eval_a2(i64 t) const { return eval_desc(a2, t); }
i64 BasisPolynomials::eval_a3(i64 t) const { return eval_desc(a3, t); }
i64 BasisPolynomials::eval_a4(i64 t) const { return eval_desc(a4, t); }

i64 RegularForm::value(const ConcreteBasis& b, i64 t) const {
  i64 v = checked_mul(checked_add(checked_mul(k54, t), c54), b.a4);
  v = checked_add(v, checked_mul(checked_add(checked_mul(k53, t), c53), b.a3));
  v = checked_add(v, checked_mul(checked_add(checked_mul(k52, t), c52), b.a2));
  return checked_add(v, checked_add(checked_mul(k51, t), c51));
}

i64 CoverPolynomial::eval(i64 t) const { return eval_desc(coeffs(), t); }

BasisPolynomials expand_basis_polynomials(const ParametricBasis& pb) {
  const auto& [k21, k31, k32, k41, k42, k43] = pb.family.k;
  const auto& [c21, c31, c32, c41, c42, c43] = pb.c;

  BasisPolynomials out;
  out.a2 = {k21, c21};
  out.a3 = {k32 * k21,
            k32 * c21 + c32 * k21 + k31,
            c32 * c21 + c31};
  out.a4 = {k43 * k32 * k21,
            k43 * k32 * c21 + k43 * c32 * k21 + c43 * k32 * k21 + k43 * k31 + k42 * k21,
            k43 * c32 * c21 + c43 * k32 * c21 + c43 * c32 * k21 + k43 * c31 + c43 * k31 +
                k42 * c21 + c42 * k21 + k41,
            c43 * c32 * c21 + c43 * c31 + c42 * c21 + c41};
  return out;
}

CoverPolynomial expand_cover_polynomial(const ParametricBasis& pb, const RegularForm& rf) {
  const auto& [k21, k31, k32, k41, k42, k43] = pb.family.k;
  const auto& [c21, c31, c32, c41, c42, c43] = pb.c;
  const i64 k51 = rf.k51, k52 = rf.k52, k53 = rf.k53, k54 = rf.k54;
  const i64 c51 = rf.c51, c52 = rf.c52, c53 = rf.c53, c54 = rf.c54;

  CoverPolynomial p;
  p.p4 = k54 * k43 * k32 * k21;

  p.p3 = k54 * k43 * k32 * c21 + k54 * k43 * c32 * k21 + k54 * c43 * k32 * k21 +
         c54 * k43 * k32 * k21 + k54 * k43 * k31 + k54 * k42 * k21 + k53 * k32 * k21;

  p.p2 = k54 * k43 * c32 * c21 + k54 * c43 * k32 * c21 + k54 * c43 * c32 * k21 +
         c54 * k43 * k32 * c21 + c54 * k43 * c32 * k21 + c54 * c43 * k32 * k21 +
         k54 * k43 * c31 + k54 * c43 * k31 + c54 * k43 * k31 +
         k54 * k42 * c21 + k54 * c42 * k21 + c54 * k42 * k21 +
         k53 * k32 * c21 + k53 * c32 * k21 + c53 * k32 * k21 +
         k54 * k41 + k53 * k31 + k52 * k21;

  p.p1 = k54 * c43 * c32 * c21 + c54 * k43 * c32 * c21 + c54 * c43 * k32 * c21 +
         c54 * c43 * c32 * k21 +
         k54 * c43 * c31 + c54 * k43 * c31 + c54 * c43 * k31 +
         k54 * c42 * c21 + c54 * k42 * c21 + c54 * c42 * k21 +
         k53 * c32 * c21 + c53 * k32 * c21 + c53 * c32 * k21 +
         k54 * c41 + c54 * k41 +
         k53 * c31 + c53 * k31 +
         k52 * c21 + c52 * k21 +
         k51;

  p.p0 = c54 * c43 * c32 * c21 +
         c54 * c43 * c31 + c54 * c42 * c21 + c53 * c32 * c21 +
         c54 * c41 + c53 * c31 + c52 * c21 +
         c51;

  return p;
}

RegularForm infer_regular_form(const ParametricBasis& pb, std::span<const i64> t_samples,
                               const CoverLimits& limits) {
  if (t_samples.size() < 3)
    throw std::invalid_argument("infer_regular_form requires at least 3 samples");
  for (std::size_t i = 0; i < t_samples.size(); ++i) {
    if (t_samples[i] < 1) throw std::invalid_argument("samples must be positive");
    for (std::size_t j = i + 1; j < t_samples.size(); ++j)
      if (t_samples[i] == t_samples[j]) throw std::invalid_argument("samples must be distinct");
  }

  // Greedy quotients (q1, q2, q3, q4) of the cover at each sample.
  std::vector<std::array<i64, 4>> quots;
  quots.reserve(t_samples.size());
  for (i64 t : t_samples) {
    const ConcreteBasis b = instantiate(pb, t);
    const CoverResult cr = cover_fast(b, limits);
    const Generation g = decompose_greedy(cr.cover, b);
    quots.push_back({g.q1, g.q2, g.q3, g.q4});
  }

  const i64 t0 = t_samples[0], t1 = t_samples[1];
  std::array<i64, 4> k{}, c{};
  for (int j = 0; j < 4; ++j) {
    const i64 dq = quots[1][j] - quots[0][j];
    const i64 dt = t1 - t0;
    if (dq % dt != 0)
      throw FitFailureError("quotient slope is not an integer across the first two samples", t1);
    k[j] = dq / dt;
    c[j] = quots[0][j] - k[j] * t0;
  }
  for (std::size_t s = 2; s < t_samples.size(); ++s) {
    for (int j = 0; j < 4; ++j) {
      if (quots[s][j] != k[j] * t_samples[s] + c[j])
        throw FitFailureError("quotient is not exactly linear at a verification sample",
                              t_samples[s]);
    }
  }

  return RegularForm{k[0], k[1], k[2], k[3], c[0], c[1], c[2], c[3]};
}

}  // namespace hrange
