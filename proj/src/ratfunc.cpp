#include "kas/ratfunc.hpp"

#include <ostream>

#include "kas/evaluate.hpp"

namespace kas {

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw ZeroDenominatorError("RatFunc: zero denominator");
  }
  if (den_.leading_coefficient().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::constant(const Rational& c) {
  return from_poly(MultiPoly::constant(c));
}

RatFunc RatFunc::variable(const std::string& name) {
  return from_poly(MultiPoly::variable(name));
}

RatFunc RatFunc::from_poly(MultiPoly p) {
  return RatFunc(std::move(p), MultiPoly::constant(Rational(1)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) {
    throw ZeroDenominatorError("RatFunc: division by zero");
  }
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (num_.is_zero()) {
      throw ZeroDenominatorError("RatFunc: negative power of zero");
    }
    return RatFunc(den_.pow(-e), num_.pow(-e));
  }
  return RatFunc(num_.pow(e), den_.pow(e));
}

bool ratfunc_eq(const RatFunc& f, const RatFunc& g) {
  return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings) {
  std::map<std::string, RatFunc> env;
  for (const auto& v : f.num().variables()) {
    env.emplace(v, RatFunc::variable(v));
  }
  for (const auto& v : f.den().variables()) {
    env.emplace(v, RatFunc::variable(v));
  }
  for (const auto& [v, g] : bindings) {
    env.insert_or_assign(v, g);
  }
  if (env.empty()) {
    return f;  // constant: nothing to substitute
  }
  const RatFunc den = evaluate_poly(f.den(), env);
  if (den.is_zero()) {
    throw ZeroDenominatorError("substitute: denominator identically zero");
  }
  return evaluate_poly(f.num(), env) / den;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.to_string();
}

}  // namespace kas
