#include <doctest.h>

#include <random>

#include "kas/group_law.hpp"
#include "kas/specialization.hpp"

using kas::CycloNum;
using kas::FpElem;
using kas::FpPoly;
using kas::Rational;

TEST_CASE("artin-schreier map") {
  CHECK(kas::artin_schreier(FpElem(5, 0)) == FpElem(5, 0));
  CHECK(kas::artin_schreier(FpElem(7, 1)) == FpElem(7, 0));
  // u^p = u on F_p, so the map vanishes identically.
  for (std::int64_t x = 0; x < 5; ++x) {
    CHECK(kas::artin_schreier(FpElem(5, x)).is_zero());
  }
}

TEST_CASE("artin-schreier polynomial and printing") {
  const FpPoly p3 = kas::artin_schreier_poly(3);
  CHECK(p3.degree() == 3);
  CHECK(p3.to_string() == "u^3 - u (mod 3)");
  CHECK(kas::artin_schreier_poly(5).to_string() == "u^5 - u (mod 5)");
  // As a function it vanishes, but as a polynomial it is not zero.
  CHECK_FALSE(p3.is_zero());
  for (std::int64_t x = 0; x < 3; ++x) {
    CHECK(p3.eval(FpElem(3, x)).is_zero());
  }
}

TEST_CASE("fp polynomial helpers") {
  const FpPoly two = FpPoly::from_coeffs(7, {2});
  CHECK(two.is_constant(2));
  CHECK_FALSE(two.is_constant(3));
  CHECK(FpPoly::from_coeffs(7, {0, 0}).is_zero());
  CHECK(FpPoly::from_coeffs(7, {9, 14, 1}) == FpPoly::from_coeffs(7, {2, 0, 1}));
  CHECK(FpPoly::from_coeffs(5, {0, 3}).scaled(FpElem(5, 2)) ==
        FpPoly::from_coeffs(5, {0, 1}));
}

TEST_CASE("psi specialization at p = 2") {
  // h = -2: psi_2(u) = ((-2u+1)^2 - 1)/4 = u^2 - u, already over Z.
  const auto r = kas::specialize_psi(2);
  CHECK(r.coeffs_integral);
  REQUIRE(r.coeffs.size() == 3);
  CHECK(r.coeffs[0] == CycloNum::zero(2));
  CHECK(r.coeffs[1] == CycloNum::constant(2, Rational(-1)));
  CHECK(r.coeffs[2] == CycloNum::one(2));
  CHECK(r.fiber == kas::artin_schreier_poly(2));
  CHECK(r.ok());
}

TEST_CASE("psi specialization at p = 3") {
  const auto r = kas::specialize_psi(3);
  REQUIRE(r.coeffs.size() == 4);
  const CycloNum h = CycloNum::uniformizer(3);
  const CycloNum zeta_sq = CycloNum::zeta_power(3, 2);

  // psi_3(u) = u^3 - zeta^2 h u^2 - zeta^2 u; frozen coordinates checked
  // against the multiply-back identities coeff_2 * h = 3 and coeff_1 * h^2 = 3.
  CHECK(r.coeffs[3] == CycloNum::one(3));
  CHECK(r.coeffs[2] == -(zeta_sq * h));
  CHECK(r.coeffs[2] == CycloNum(3, {Rational(-2), Rational(-1)}));
  CHECK(r.coeffs[2] * h == CycloNum::constant(3, Rational(3)));
  CHECK(r.coeffs[1] == -zeta_sq);
  CHECK(r.coeffs[1] == CycloNum(3, {Rational(1), Rational(1)}));
  CHECK(r.coeffs[1] * h * h == CycloNum::constant(3, Rational(3)));
  CHECK(r.coeffs[0] == CycloNum::zero(3));

  CHECK(r.coeffs_integral);
  CHECK(r.fiber == kas::artin_schreier_poly(3));
  CHECK(r.ok());
}

TEST_CASE("psi fiber is u^p - u for every tested prime") {
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto r = kas::specialize_psi(p);
    CHECK(r.coeffs_integral);
    CHECK(r.fiber == kas::artin_schreier_poly(p));
    // Leading coefficient 1, constant coefficient 0.
    CHECK(r.coeffs.back() == CycloNum::one(p));
    CHECK(r.coeffs.front() == CycloNum::zero(p));
  }
}

TEST_CASE("psi coefficients reduce compatibly with points") {
  // reduce(psi_p(x)) = artin_schreier(reduce(x)) for integral x.
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> d(-4, 4);
  for (const std::int64_t p : {3, 5}) {
    const auto r = kas::specialize_psi(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> coords;
      for (std::int64_t i = 0; i < p - 1; ++i) {
        coords.emplace_back(d(rng));
      }
      const CycloNum x(p, coords);
      CycloNum value = CycloNum::zero(p);
      CycloNum power = CycloNum::one(p);
      for (const auto& coeff : r.coeffs) {
        value = value + coeff * power;
        power = power * x;
      }
      CHECK(kas::reduce_mod_h(value) == kas::artin_schreier(kas::reduce_mod_h(x)));
    }
  }
}

TEST_CASE("psi is a pointwise homomorphism over the cyclotomic ring") {
  // psi_p(u +'_h v) = psi_p(u) +'_{h^p} psi_p(v) with u, v in Z[zeta_p].
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> d(-3, 3);
  const std::int64_t p = 3;
  const auto r = kas::specialize_psi(p);
  const CycloNum h = CycloNum::uniformizer(p);
  const auto psi_at = [&](const CycloNum& x) {
    CycloNum value = CycloNum::zero(p);
    CycloNum power = CycloNum::one(p);
    for (const auto& coeff : r.coeffs) {
      value = value + coeff * power;
      power = power * x;
    }
    return value;
  };
  const kas::GroupLaw sos = kas::sos_law();
  for (int trial = 0; trial < 30; ++trial) {
    const CycloNum u(p, {Rational(d(rng)), Rational(d(rng))});
    const CycloNum v(p, {Rational(d(rng)), Rational(d(rng))});
    const CycloNum lhs = psi_at(kas::compose_points(sos, h, u, v));
    const CycloNum rhs =
        kas::compose_points(sos, h.pow(p), psi_at(u), psi_at(v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("phi specialization") {
  CHECK_THROWS_AS(kas::specialize_phi(2), std::invalid_argument);
  CHECK_THROWS_AS(kas::specialize_phi(9), std::invalid_argument);

  const auto r3 = kas::specialize_phi(3);
  CHECK(r3.num_integral);
  // 2u^3 - 2u = 2u^3 + u over F_3.
  CHECK(r3.num_fiber == FpPoly::from_coeffs(3, {0, 1, 0, 2}));
  CHECK(r3.den_fiber.is_constant(2));
  CHECK(r3.quotient_fiber == kas::artin_schreier_poly(3));
  CHECK(r3.ok());

  // Neutral to neutral: N(0) = 0, D(0) = 2.
  CHECK(r3.num_coeffs[0] == CycloNum::zero(3));
  CHECK(r3.den_coeffs[0] == CycloNum::constant(3, Rational(2)));

  for (const std::int64_t p : {5, 7, 11, 13}) {
    const auto r = kas::specialize_phi(p);
    CHECK(r.num_integral);
    CHECK(r.den_fiber.is_constant(2));
    CHECK(r.quotient_fiber == kas::artin_schreier_poly(p));
  }
}

TEST_CASE("ramification report") {
  const auto r3 = kas::verify_ramification(3);
  CHECK(r3.ok());
  CHECK(r3.valuation_of_p == 2);
  CHECK(r3.w == -(CycloNum::one(3) + CycloNum::uniformizer(3)));

  const auto r2 = kas::verify_ramification(2);
  CHECK(r2.ok());
  CHECK(r2.w == CycloNum::constant(2, Rational(-1)));

  const auto r7 = kas::verify_ramification(7);
  CHECK(r7.ok());
  CHECK(r7.valuation_of_p == 6);

  CHECK_THROWS_AS(kas::verify_ramification(6), std::invalid_argument);
}
