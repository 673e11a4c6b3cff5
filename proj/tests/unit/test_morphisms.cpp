#include <doctest.h>

#include <random>

#include "kas/morphisms.hpp"

using kas::morphism_apply;
using kas::Morphism;
using kas::Rational;
using kas::RatFunc;

namespace {
RatFunc var(const std::string& n) { return RatFunc::variable(n); }
const RatFunc one = RatFunc::constant(Rational(1));
}  // namespace

TEST_CASE("alpha") {
  const Morphism m = kas::alpha();
  CHECK(morphism_apply(m, Rational(2), Rational(0)) == Rational(1));
  // alpha(1) * alpha(1) = 9 = alpha(1 +' 1) = alpha(4) at h = 2.
  const Rational h(2);
  const Rational product = morphism_apply(m, h, Rational(1)) * morphism_apply(m, h, Rational(1));
  CHECK(product == Rational(9));
  CHECK(morphism_apply(m, h, Rational(4)) == Rational(9));

  // (1 + h u)(1 + h v) = 1 + h (u + v + h u v) symbolically.
  const RatFunc lhs = m.map * substitute(m.map, {{"u", var("v")}});
  const RatFunc rhs = substitute(m.map, {{"u", m.source_law.compose}});
  CHECK(ratfunc_eq(lhs, rhs));
}

TEST_CASE("alpha inverse") {
  const Morphism inv = kas::alpha_inverse();
  CHECK(morphism_apply(inv, Rational(2), Rational(1)) == Rational(0));
  CHECK(morphism_apply(inv, Rational(2), Rational(9)) == Rational(4));
  CHECK(ratfunc_eq(substitute(inv.map, {{"u", kas::alpha().map}}), var("u")));
  // Evaluation needs h invertible.
  CHECK_THROWS_AS(morphism_apply(inv, Rational(0), Rational(3)),
                  kas::ZeroDenominatorError);
}

TEST_CASE("beta squared") {
  const Morphism m = kas::beta_squared();
  CHECK(morphism_apply(m, Rational(1), Rational(0)) == Rational(1));
  CHECK(morphism_apply(m, Rational(1), Rational(1, 2)) == Rational(3));
  const RatFunc lhs = substitute(m.map, {{"u", kas::lorentz_law().compose}});
  const RatFunc rhs = m.map * substitute(m.map, {{"u", var("v")}});
  CHECK(ratfunc_eq(lhs, rhs));
  CHECK_THROWS_AS(morphism_apply(m, Rational(1), Rational(1)),
                  kas::ZeroDenominatorError);
}

TEST_CASE("beta inverse") {
  const Morphism binv = kas::beta_inverse();
  CHECK(morphism_apply(binv, Rational(1), Rational(1)) == Rational(0));
  CHECK(morphism_apply(binv, Rational(1), Rational(2)) == Rational(3, 5));
  CHECK(morphism_apply(kas::beta_squared(), Rational(1), Rational(3, 5)) ==
        Rational(4));

  // beta^2(beta_inv(v)) = v^2.
  const RatFunc round = substitute(kas::beta_squared().map, {{"u", binv.map}});
  CHECK(ratfunc_eq(round, var("u") * var("u")));

  // beta_inv(v w) = beta_inv(v) + beta_inv(w) in the Lorentz law.
  const RatFunc at_v = substitute(binv.map, {{"u", var("v")}});
  const RatFunc lhs = substitute(binv.map, {{"u", var("u") * var("v")}});
  const RatFunc rhs = substitute(kas::lorentz_law().compose,
                                 {{"u", binv.map}, {"v", at_v}});
  CHECK(ratfunc_eq(lhs, rhs));

  // v^2 + 1 = 0 never happens over Q, but h = 0 does.
  CHECK_THROWS_AS(morphism_apply(binv, Rational(0), Rational(2)),
                  kas::ZeroDenominatorError);
}

TEST_CASE("kummer psi") {
  CHECK(ratfunc_eq(kas::kummer_psi(1).map, var("u")));

  const Morphism psi2 = kas::kummer_psi(2);
  // psi_2(u) = u^2 + 2u at h = 1.
  CHECK(morphism_apply(psi2, Rational(1), Rational(3)) == Rational(15));
  // 1 +' 1 = 3 at h = 1; 3 +'' 3 = 15 in the target (parameter h^2 = 1).
  CHECK(morphism_apply(psi2, Rational(1), Rational(1)) == Rational(3));

  for (int n = 1; n <= 7; ++n) {
    const Morphism psi = kas::kummer_psi(n);
    const RatFunc h = var("h"), u = var("u");
    CHECK(ratfunc_eq(one + h.pow(n) * psi.map, (one + h * u).pow(n)));
  }
  CHECK_THROWS_AS(kas::kummer_psi(0), std::invalid_argument);
}

TEST_CASE("kummer psi tower") {
  const RatFunc h = var("h");
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2; n <= 3; ++n) {
      const RatFunc composed = substitute(
          kas::kummer_psi(m).map, {{"h", h.pow(n)}, {"u", kas::kummer_psi(n).map}});
      CHECK(ratfunc_eq(composed, kas::kummer_psi(m * n).map));
    }
  }
}

TEST_CASE("kummer phi") {
  CHECK(ratfunc_eq(kas::kummer_phi(1).map, var("u")));

  // phi_2 doubles in the Lorentz group: phi_2(1/2) = 1/2 + 1/2 = 4/5 at h = 1.
  const Morphism phi2 = kas::kummer_phi(2);
  CHECK(morphism_apply(phi2, Rational(1), Rational(1, 2)) == Rational(4, 5));

  const Morphism b2 = kas::beta_squared();
  const RatFunc h = var("h");
  for (const int n : {2, 3}) {
    const Morphism phi = kas::kummer_phi(n);
    const RatFunc lhs = substitute(b2.map, {{"h", h.pow(n)}, {"u", phi.map}});
    CHECK(ratfunc_eq(lhs, b2.map.pow(n)));
  }
  CHECK_THROWS_AS(kas::kummer_phi(0), std::invalid_argument);
}

TEST_CASE("phi is a pointwise homomorphism") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> num(-4, 4);
  const Rational h(1, 2);
  const kas::GroupLaw lorentz = kas::lorentz_law();
  for (const int n : {2, 3, 5}) {
    const Morphism phi = kas::kummer_phi(n);
    const Rational hn = h.pow(n);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const Rational u(num(rng), 9), v(num(rng), 9);
      bool hom = false;
      try {
        const Rational lhs =
            morphism_apply(phi, h, kas::compose_points(lorentz, h, u, v));
        const Rational rhs = kas::compose_points(
            lorentz, hn, morphism_apply(phi, h, u), morphism_apply(phi, h, v));
        hom = lhs == rhs;
      } catch (const kas::ZeroDenominatorError&) {
        continue;
      }
      CHECK(hom);
      ++checked;
    }
    CHECK(checked > 40);
  }
}

TEST_CASE("morphisms send neutral to neutral") {
  for (const Morphism& m :
       {kas::alpha(), kas::alpha_inverse(), kas::beta_squared(), kas::beta_inverse(),
        kas::kummer_psi(3), kas::kummer_phi(3)}) {
    const RatFunc at_neutral =
        substitute(m.map, {{"u", RatFunc::constant(m.source_law.neutral)}});
    CHECK(ratfunc_eq(at_neutral, RatFunc::constant(m.target_law.neutral)));
  }
}
