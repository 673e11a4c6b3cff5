#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "kas/group_law.hpp"

using kas::compose_points;
using kas::FpElem;
using kas::GroupLaw;
using kas::Rational;
using kas::RatFunc;

TEST_CASE("lorentz law at rational points") {
  const GroupLaw law = kas::lorentz_law();
  const Rational h(1);
  CHECK(compose_points(law, h, Rational(1, 2), Rational(1, 3)) == Rational(5, 7));
  CHECK(compose_points(law, h, Rational(1, 2), Rational(1, 2)) == Rational(4, 5));
  CHECK(compose_points(law, h, Rational(3, 4), Rational(0)) == Rational(3, 4));
  CHECK_THROWS_AS(compose_points(law, h, Rational(1), Rational(-1)),
                  kas::ZeroDenominatorError);
  CHECK(kas::law_inverse(law, h, Rational(2, 5)) == Rational(-2, 5));
}

TEST_CASE("sos law at points") {
  const GroupLaw law = kas::sos_law();
  CHECK(compose_points(law, Rational(2), Rational(1), Rational(1)) == Rational(4));
  CHECK(compose_points(law, Rational(0), Rational(3, 7), Rational(2, 7)) ==
        Rational(5, 7));
  CHECK(kas::law_inverse(law, Rational(1), Rational(1)) == Rational(-1, 2));
}

TEST_CASE("laws over a prime field") {
  const GroupLaw sos = kas::sos_law();
  // 2 + 4 + 1*2*4 = 14 = 4 mod 5
  CHECK(compose_points(sos, FpElem(5, 1), FpElem(5, 2), FpElem(5, 4)) ==
        FpElem(5, 4));
  const GroupLaw mul = kas::multiplicative_law();
  CHECK(compose_points(mul, FpElem(7, 1), FpElem(7, 3), FpElem(7, 3)) ==
        FpElem(7, 2));
}

TEST_CASE("multiplicative law at rational points") {
  const GroupLaw mul = kas::multiplicative_law();
  CHECK(compose_points(mul, Rational(0), Rational(3), Rational(3)) == Rational(9));
  CHECK(kas::law_inverse(mul, Rational(0), Rational(4)) == Rational(1, 4));
}

TEST_CASE("n-fold composition") {
  const GroupLaw law = kas::lorentz_law();
  const Rational h(1);
  const std::vector<Rational> points{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(kas::nfold_compose(law, h, std::span<const Rational>(points)) ==
        Rational(13, 14));
  const std::vector<Rational> two{Rational(1, 2), Rational(1, 2)};
  CHECK(kas::nfold_compose(law, h, std::span<const Rational>(two)) == Rational(4, 5));
  const std::vector<Rational> empty;
  CHECK(kas::nfold_compose(law, h, std::span<const Rational>(empty)) == Rational(0));
}

TEST_CASE("group axioms hold symbolically") {
  CHECK(kas::check_axioms(kas::lorentz_law()).all_hold());
  CHECK(kas::check_axioms(kas::sos_law()).all_hold());
  CHECK(kas::check_axioms(kas::additive_law()).all_hold());
  CHECK(kas::check_axioms(kas::multiplicative_law()).all_hold());
}

TEST_CASE("group axioms hold with the parameter pinned") {
  for (const Rational h : {Rational(0), Rational(1), Rational(1, 2), Rational(3)}) {
    const GroupLaw law =
        kas::lorentz_law().with_parameter(RatFunc::constant(h));
    CHECK(kas::check_axioms(law).all_hold());
  }
}

TEST_CASE("closed formula") {
  const GroupLaw lorentz = kas::lorentz_law();
  // n = 2 is the binary law itself.
  CHECK(ratfunc_eq(kas::closed_formula(2), lorentz.compose));
  for (int n = 2; n <= 5; ++n) {
    CHECK(ratfunc_eq(kas::closed_formula(n), kas::nfold_symbolic(lorentz, n)));
  }
  CHECK_THROWS_AS(kas::closed_formula(0), std::invalid_argument);
}

TEST_CASE("h = 0 degenerates to addition") {
  const RatFunc zero = RatFunc::constant(Rational(0));
  const RatFunc additive = RatFunc::variable("u") + RatFunc::variable("v");
  CHECK(ratfunc_eq(substitute(kas::lorentz_law().compose, {{"h", zero}}), additive));
  CHECK(ratfunc_eq(substitute(kas::sos_law().compose, {{"h", zero}}), additive));
}

TEST_CASE("axioms hold pointwise on random rational samples") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 8);
  const auto sample = [&] { return Rational(num(rng), den(rng)); };
  const std::vector<Rational> hs{Rational(0), Rational(1), Rational(1, 2), Rational(3)};

  for (const GroupLaw& law : {kas::lorentz_law(), kas::sos_law()}) {
    for (const Rational& h : hs) {
      int checked = 0;
      for (int trial = 0; trial < 200; ++trial) {
        const Rational u = sample(), v = sample(), w = sample();
        bool comm = false, assoc = false, neut = false, inv = false;
        try {
          comm = compose_points(law, h, u, v) == compose_points(law, h, v, u);
          const Rational left = compose_points(law, h, compose_points(law, h, u, v), w);
          const Rational right = compose_points(law, h, u, compose_points(law, h, v, w));
          assoc = left == right;
          neut = compose_points(law, h, u, Rational(0)) == u;
          inv = compose_points(law, h, u, kas::law_inverse(law, h, u)) == Rational(0);
        } catch (const kas::ZeroDenominatorError&) {
          continue;  // indeterminacy locus: skip
        }
        CHECK(comm);
        CHECK(assoc);
        CHECK(neut);
        CHECK(inv);
        ++checked;
      }
      CHECK(checked > 100);
    }
  }
}

TEST_CASE("n-fold composition is permutation invariant") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(2, 7);
  const GroupLaw law = kas::lorentz_law();
  const Rational h(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> points;
    for (int i = 0; i < 4; ++i) {
      points.emplace_back(num(rng), den(rng) * 10);  // small: keeps composites defined
    }
    std::vector<Rational> shuffled = points;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(kas::nfold_compose(law, h, std::span<const Rational>(points)) ==
          kas::nfold_compose(law, h, std::span<const Rational>(shuffled)));
  }
}
