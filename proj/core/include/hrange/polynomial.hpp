#pragma once

#include <array>
#include <span>
#include <vector>

#include "hrange/cover.hpp"

namespace hrange {

// Exact integer expansions of a2, a3, a4 as polynomials in t.
// Coefficients are stored highest degree first.
struct BasisPolynomials {
  std::array<i64, 2> a2{};  // degree 1
  std::array<i64, 3> a3{};  // degree 2
  std::array<i64, 4> a4{};  // degree 3

  i64 eval_a2(i64 t) const;
  i64 eval_a3(i64 t) const;
  i64 eval_a4(i64 t) const;
};

BasisPolynomials expand_basis_polynomials(const ParametricBasis& pb);

// The cover written as linear-in-t multiples of a4, a3, a2, 1:
// C = (k54*t + c54)*a4 + (k53*t + c53)*a3 + (k52*t + c52)*a2 + (k51*t + c51).
struct RegularForm {
  i64 k51 = 0, k52 = 0, k53 = 0, k54 = 0;
  i64 c51 = 0, c52 = 0, c53 = 0, c54 = 0;

  std::array<i64, 4> k() const { return {k51, k52, k53, k54}; }
  std::array<i64, 4> c() const { return {c51, c52, c53, c54}; }

  // Evaluates the form on a concrete basis.
  i64 value(const ConcreteBasis& b, i64 t) const;

  bool operator==(const RegularForm&) const = default;
};

// The cover as a degree-4 integer polynomial in t (coefficients of t^4..t^0).
struct CoverPolynomial {
  i64 p4 = 0, p3 = 0, p2 = 0, p1 = 0, p0 = 0;

  i64 eval(i64 t) const;
  std::array<i64, 5> coeffs() const { return {p4, p3, p2, p1, p0}; }

  bool operator==(const CoverPolynomial&) const = default;
};

// Exact term-by-term expansion of the regular form over the family formulas.
CoverPolynomial expand_cover_polynomial(const ParametricBasis& pb, const RegularForm& rf);

// For each sample t: compute the cover, decompose it greedily, and fit each
// of the four quotients as k*t + c from the first two samples; the fit must
// hold exactly on every remaining sample (FitFailureError otherwise, with the
// offending sample). Requires >= 3 distinct positive samples.
RegularForm infer_regular_form(const ParametricBasis& pb, std::span<const i64> t_samples,
                               const CoverLimits& limits = {});

}  // namespace hrange
