#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "kas/cyclotomic.hpp"
#include "kas/fp.hpp"
#include "kas/polynomial.hpp"
#include "kas/ratfunc.hpp"
#include "kas/rational.hpp"

namespace kas {

/// Ring plumbing for evaluating Q-coefficient polynomials over a scalar type.
/// `like` supplies the ring context (modulus, cyclotomic prime) that the
/// coefficient embedding needs.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational from_rational(const Rational& c, const Rational&) { return c; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
};

template <>
struct RingTraits<double> {
  static double from_rational(const Rational& c, double) { return c.to_double(); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct RingTraits<FpElem> {
  static FpElem from_rational(const Rational& c, const FpElem& like) {
    const std::int64_t p = like.modulus();
    mpz_class pz(static_cast<long>(p));
    mpz_class num = ((c.numerator() % pz) + pz) % pz;
    mpz_class den = ((c.denominator() % pz) + pz) % pz;
    if (den == 0) {
      throw std::domain_error("coefficient denominator divisible by p");
    }
    return FpElem(p, num.get_si()) / FpElem(p, den.get_si());
  }
  static bool is_zero(const FpElem& x) { return x.is_zero(); }
};

template <>
struct RingTraits<CycloNum> {
  static CycloNum from_rational(const Rational& c, const CycloNum& like) {
    return CycloNum::constant(like.prime(), c);
  }
  static bool is_zero(const CycloNum& x) { return x.is_zero(); }
};

template <>
struct RingTraits<RatFunc> {
  static RatFunc from_rational(const Rational& c, const RatFunc&) {
    return RatFunc::constant(c);
  }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

namespace detail {
template <typename R>
R pow_by_squaring(const R& x, int e, const R& one) {
  R acc = one;
  R base = x;
  while (e > 0) {
    if (e & 1) {
      acc = acc * base;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
    }
  }
  return acc;
}
}  // namespace detail

/// Evaluates a polynomial over the scalar ring R. Every variable that
/// actually occurs must be bound in env; env must be non-empty so the ring
/// context can be inferred.
template <typename R>
R evaluate_poly(const MultiPoly& f, const std::map<std::string, R>& env) {
  if (env.empty()) {
    throw std::invalid_argument("evaluate_poly: empty environment");
  }
  using Traits = RingTraits<R>;
  const R& like = env.begin()->second;
  const R one = Traits::from_rational(Rational(1), like);
  R acc = Traits::from_rational(Rational(0), like);
  for (const auto& [exps, coeff] : f.terms()) {
    R term = Traits::from_rational(coeff, like);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) {
        continue;
      }
      const auto it = env.find(f.variables()[i]);
      if (it == env.end()) {
        throw std::invalid_argument("evaluate_poly: unbound variable " +
                                    f.variables()[i]);
      }
      term = term * detail::pow_by_squaring(it->second, exps[i], one);
    }
    acc = acc + term;
  }
  return acc;
}

/// Evaluates a rational function; throws ZeroDenominatorError on the
/// indeterminacy locus.
template <typename R>
R evaluate_ratfunc(const RatFunc& f, const std::map<std::string, R>& env) {
  const R den = evaluate_poly(f.den(), env);
  if (RingTraits<R>::is_zero(den)) {
    throw ZeroDenominatorError("evaluate_ratfunc: denominator vanished");
  }
  return evaluate_poly(f.num(), env) / den;
}

}  // namespace kas
