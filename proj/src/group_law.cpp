#include "kas/group_law.hpp"

#include <stdexcept>

namespace kas {

namespace {
RatFunc var(const std::string& n) { return RatFunc::variable(n); }
const RatFunc kOne = RatFunc::constant(Rational(1));
}  // namespace

GroupLaw GroupLaw::with_parameter(const RatFunc& h_value) const {
  const std::map<std::string, RatFunc> b{{"h", h_value}};
  GroupLaw out;
  out.name = name;
  out.compose = substitute(compose, b);
  out.neutral = neutral;
  out.inverse = substitute(inverse, b);
  out.defined_when = out.compose.den();
  return out;
}

GroupLaw lorentz_law() {
  const RatFunc u = var("u"), v = var("v"), h = var("h");
  RatFunc compose = (u + v) / (kOne + h * h * u * v);
  GroupLaw law;
  law.name = "lorentz";
  law.compose = compose;
  law.neutral = Rational(0);
  law.inverse = -u;
  law.defined_when = compose.den();
  return law;
}

GroupLaw sos_law() {
  const RatFunc u = var("u"), v = var("v"), h = var("h");
  RatFunc compose = u + v + h * u * v;
  GroupLaw law;
  law.name = "sos";
  law.compose = compose;
  law.neutral = Rational(0);
  law.inverse = -u / (kOne + h * u);
  law.defined_when = compose.den();
  return law;
}

GroupLaw additive_law() {
  const RatFunc u = var("u"), v = var("v");
  GroupLaw law;
  law.name = "additive";
  law.compose = u + v;
  law.neutral = Rational(0);
  law.inverse = -u;
  law.defined_when = law.compose.den();
  return law;
}

GroupLaw multiplicative_law() {
  const RatFunc u = var("u"), v = var("v");
  GroupLaw law;
  law.name = "multiplicative";
  law.compose = u * v;
  law.neutral = Rational(1);
  law.inverse = kOne / u;
  law.defined_when = law.compose.den();
  return law;
}

AxiomReport check_axioms(const GroupLaw& law) {
  const RatFunc u = var("u"), v = var("v"), w = var("w");
  AxiomReport r;

  r.commutative = ratfunc_eq(law.compose, substitute(law.compose, {{"u", v}, {"v", u}}));

  const RatFunc left = substitute(law.compose, {{"u", law.compose}, {"v", w}});
  const RatFunc inner = substitute(law.compose, {{"u", v}, {"v", w}});
  const RatFunc right = substitute(law.compose, {{"v", inner}});
  r.associative = ratfunc_eq(left, right);

  const RatFunc with_neutral =
      substitute(law.compose, {{"v", RatFunc::constant(law.neutral)}});
  r.neutral_element = ratfunc_eq(with_neutral, u);

  const RatFunc with_inverse = substitute(law.compose, {{"v", law.inverse}});
  r.inverse_element = ratfunc_eq(with_inverse, RatFunc::constant(law.neutral));

  return r;
}

std::vector<std::string> fold_variables(int n) {
  if (n < 1) {
    throw std::invalid_argument("fold_variables: n must be >= 1");
  }
  static const std::vector<std::string> named = {"u", "v", "w", "t", "s"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (i < static_cast<int>(named.size())) {
      out.push_back(named[static_cast<std::size_t>(i)]);
    } else {
      out.push_back("x" + std::to_string(i + 1));
    }
  }
  return out;
}

RatFunc nfold_symbolic(const GroupLaw& law, int n) {
  const auto vars = fold_variables(n);
  RatFunc acc = var(vars[0]);
  for (int i = 1; i < n; ++i) {
    acc = substitute(law.compose,
                     {{"u", acc}, {"v", var(vars[static_cast<std::size_t>(i)])}});
  }
  return acc;
}

RatFunc closed_formula(int n) {
  if (n < 1) {
    throw std::invalid_argument("closed_formula: n must be >= 1");
  }
  const auto vars = fold_variables(n);
  const RatFunc h = var("h");
  RatFunc num = RatFunc::constant(Rational(0));
  RatFunc den = RatFunc::constant(Rational(0));
  for (int k = 0; k <= n; ++k) {
    const RatFunc sigma = RatFunc::from_poly(elementary_symmetric(k, vars));
    if (k % 2 == 1) {
      num = num + h.pow(k - 1) * sigma;
    } else {
      den = den + h.pow(k) * sigma;
    }
  }
  return num / den;
}

}  // namespace kas
