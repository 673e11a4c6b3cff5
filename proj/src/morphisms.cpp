#include "kas/morphisms.hpp"

#include <stdexcept>
#include <utility>

namespace kas {

namespace {
RatFunc var(const std::string& n) { return RatFunc::variable(n); }
const RatFunc kOne = RatFunc::constant(Rational(1));
}  // namespace

Morphism make_morphism(std::string name, GroupLaw source, GroupLaw target,
                       RatFunc map) {
  const RatFunc at_neutral =
      substitute(map, {{"u", RatFunc::constant(source.neutral)}});
  if (!ratfunc_eq(at_neutral, RatFunc::constant(target.neutral))) {
    throw std::logic_error("Morphism " + name + ": neutral not sent to neutral");
  }
  return Morphism{std::move(name), std::move(source), std::move(target), std::move(map)};
}

Morphism alpha() {
  const RatFunc u = var("u"), h = var("h");
  return make_morphism("alpha", sos_law(), multiplicative_law(), kOne + h * u);
}

Morphism alpha_inverse() {
  const RatFunc u = var("u"), h = var("h");
  return make_morphism("alpha_inverse", multiplicative_law(), sos_law(),
                       (u - kOne) / h);
}

Morphism beta_squared() {
  const RatFunc u = var("u"), h = var("h");
  return make_morphism("beta_squared", lorentz_law(), multiplicative_law(),
                       (kOne + h * u) / (kOne - h * u));
}

Morphism beta_inverse() {
  const RatFunc u = var("u"), h = var("h");
  return make_morphism("beta_inverse", multiplicative_law(), lorentz_law(),
                       (u * u - kOne) / (h * (u * u + kOne)));
}

Morphism kummer_psi(int n) {
  if (n < 1) {
    throw std::invalid_argument("kummer_psi: n must be >= 1");
  }
  const RatFunc u = var("u"), h = var("h");
  const RatFunc num = (h * u + kOne).pow(n) - kOne;
  const RatFunc map = num / h.pow(n);
  return make_morphism("psi_" + std::to_string(n), sos_law(),
                       sos_law().with_parameter(h.pow(n)), map);
}

Morphism kummer_phi(int n) {
  if (n < 1) {
    throw std::invalid_argument("kummer_phi: n must be >= 1");
  }
  const RatFunc u = var("u"), h = var("h");
  const RatFunc plus = (kOne + h * u).pow(n);
  const RatFunc minus = (kOne - h * u).pow(n);
  const RatFunc map = (plus - minus) / (h.pow(n) * (plus + minus));
  return make_morphism("phi_" + std::to_string(n), lorentz_law(),
                       lorentz_law().with_parameter(h.pow(n)), map);
}

}  // namespace kas
