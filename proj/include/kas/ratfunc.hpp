#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "kas/polynomial.hpp"

namespace kas {

/// A rational-map denominator vanished: either an evaluation hit the
/// indeterminacy locus or a substitution produced an identically-zero
/// denominator.
class ZeroDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of two multivariate polynomials over Q. Not reduced to lowest
/// terms; equality is decided by cross-multiplication, so reduction is never
/// needed. The denominator's leading coefficient is normalized positive.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly::constant(Rational(1))) {}
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(const Rational& c);
  static RatFunc variable(const std::string& name);
  static RatFunc from_poly(MultiPoly p);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  /// Integer powers; negative exponents flip num/den (zero is not invertible).
  RatFunc pow(int e) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// Equality as rational functions: f.num*g.den - g.num*f.den == 0.
bool ratfunc_eq(const RatFunc& f, const RatFunc& g);

inline bool operator==(const RatFunc& a, const RatFunc& b) {
  return ratfunc_eq(a, b);
}

/// Simultaneous substitution of rational functions for variables. Unbound
/// variables are left alone. Throws ZeroDenominatorError if the resulting
/// denominator is identically zero.
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace kas
