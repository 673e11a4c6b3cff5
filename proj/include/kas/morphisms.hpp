#pragma once

#include <string>

#include "kas/evaluate.hpp"
#include "kas/group_law.hpp"

namespace kas {

/// A morphism of one-coordinate group laws, stored as a rational map in the
/// point variable u and the parameter h. Construction asserts that the map
/// sends the source neutral element to the target neutral element.
struct Morphism {
  std::string name;
  GroupLaw source_law;
  GroupLaw target_law;
  RatFunc map;  // in u (and h)
};

Morphism make_morphism(std::string name, GroupLaw source, GroupLaw target, RatFunc map);

/// alpha: SOS law -> multiplicative, u -> 1 + h u.
Morphism alpha();
/// alpha^{-1}: multiplicative -> SOS, u -> (u - 1)/h.
Morphism alpha_inverse();
/// Squared torus coordinate: Lorentz -> multiplicative, u -> (1+hu)/(1-hu).
Morphism beta_squared();
/// Inverse of the torus coordinate: multiplicative -> Lorentz,
/// u -> (u^2 - 1)/(h (u^2 + 1)).
Morphism beta_inverse();

/// The n-th power map transported to the SOS coordinate:
/// psi_n(u) = ((h u + 1)^n - 1)/h^n, SOS(h) -> SOS(h^n).
Morphism kummer_psi(int n);

/// The n-th power map transported to the Lorentz coordinate:
/// phi_n(u) = (1/h^n) ((1+hu)^n - (1-hu)^n) / ((1+hu)^n + (1-hu)^n),
/// Lorentz(h) -> Lorentz(h^n). Kept as an unreduced numerator/denominator
/// pair.
Morphism kummer_phi(int n);

/// Evaluates the morphism's map at a point of an arbitrary scalar ring.
template <typename T>
T morphism_apply(const Morphism& m, const T& h, const T& u) {
  return evaluate_ratfunc(m.map, std::map<std::string, T>{{"h", h}, {"u", u}});
}

}  // namespace kas
