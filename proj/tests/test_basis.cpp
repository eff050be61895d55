#include <doctest.h>

#include <random>

#include "hrange/basis.hpp"
#include "hrange/polynomial.hpp"

using namespace hrange;

TEST_CASE("instantiate reproduces the worked r=0 basis at t=20") {
  const ParametricBasis pb{Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0};
  const ConcreteBasis b = instantiate(pb, 20);
  CHECK(b.a2 == 182);
  CHECK(b.a3 == 10780);
  CHECK(b.a4 == 438441);
  CHECK(b.h == 240);
}

TEST_CASE("instantiate with zero constants is direct substitution") {
  const ParametricBasis pb{Family::hofmeister(), {}, 0};
  const ConcreteBasis b = instantiate(pb, 1);
  CHECK(b.a2 == 9);
  CHECK(b.a3 == 3 * 9 + 4);
  CHECK(b.a4 == 2 * 31 + 2 * 9 + 7);
  CHECK(b.h == 12);
}

TEST_CASE("instantiate the r=7 basis at t=21") {
  const ParametricBasis pb{Family::hofmeister(), {8, 4, 1, 7, 1, 0}, 7};
  const ConcreteBasis b = instantiate(pb, 21);
  CHECK(b.a2 == 197);
  CHECK(b.a3 == 12696);
  CHECK(b.a4 == 541857);
  CHECK(b.h == 259);
}

TEST_CASE("instantiate rejects non-monotone bases") {
  // a3 = (3-3)*9 + 4 = 4 < a2 = 9 at t=1.
  const ParametricBasis pb{Family::hofmeister(), {0, 0, -3, 0, 0, 0}, 0};
  CHECK_THROWS_AS(instantiate(pb, 1), NonMonotoneError);
}

TEST_CASE("instantiate detects 64-bit overflow instead of wrapping") {
  const ParametricBasis pb{Family::hofmeister(), {}, 0};
  CHECK_THROWS_AS(instantiate(pb, 1'000'000'000), OverflowError);
}

TEST_CASE("instantiate validates t and r") {
  const ParametricBasis pb{Family::hofmeister(), {}, 0};
  CHECK_THROWS_AS(instantiate(pb, 0), std::invalid_argument);
  CHECK_THROWS_AS(instantiate({Family::hofmeister(), {}, 12}, 1), std::invalid_argument);
  CHECK_THROWS_AS(instantiate({Family::hofmeister(), {}, -1}, 1), std::invalid_argument);
}

TEST_CASE("custom families require k21 >= 1") {
  CHECK_THROWS_AS(Family::custom({0, 1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK(Family::custom({1, 0, 1, 0, 0, 1}).name == FamilyName::Custom);
}

TEST_CASE("basis polynomial expansion, zero constants") {
  const BasisPolynomials bp = expand_basis_polynomials({Family::hofmeister(), {}, 0});
  CHECK(bp.a2 == std::array<i64, 2>{9, 0});
  CHECK(bp.a3 == std::array<i64, 3>{27, 4, 0});
  CHECK(bp.a4 == std::array<i64, 4>{54, 26, 7, 0});
  CHECK(bp.eval_a4(1) == 87);  // agrees with direct substitution
}

TEST_CASE("basis polynomial expansion matches the worked ai at t=20") {
  const BasisPolynomials bp =
      expand_basis_polynomials({Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0});
  CHECK(bp.eval_a2(20) == 182);
  CHECK(bp.eval_a3(20) == 10780);
  CHECK(bp.eval_a4(20) == 438441);
}

TEST_CASE("a4 leading coefficient is 54 for both named families") {
  for (const Family& f : {Family::hofmeister(), Family::braunschaedel()}) {
    const BasisPolynomials bp = expand_basis_polynomials({f, {5, -3, 2, 0, 1, -1}, 3});
    CHECK(bp.a4[0] == 54);
  }
}

TEST_CASE("expansion equals instantiation for random members, t <= 30") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<i64> coef(-6, 6);
  std::uniform_int_distribution<i64> tval(1, 30);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const Family fam = iter % 2 ? Family::hofmeister() : Family::braunschaedel();
    const CVector c{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
    const ParametricBasis pb{fam, c, static_cast<int>(iter % 12)};
    const i64 t = tval(rng);
    const InstantiateResult r = try_instantiate(pb, t);
    if (r.status != InstantiateStatus::Ok) continue;
    const BasisPolynomials bp = expand_basis_polynomials(pb);
    CHECK(bp.eval_a2(t) == r.basis.a2);
    CHECK(bp.eval_a3(t) == r.basis.a3);
    CHECK(bp.eval_a4(t) == r.basis.a4);
    ++checked;
  }
  CHECK(checked > 100);
}
