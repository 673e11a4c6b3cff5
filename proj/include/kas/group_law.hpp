#pragma once

#include <span>
#include <string>
#include <vector>

#include "kas/evaluate.hpp"
#include "kas/ratfunc.hpp"

namespace kas {

/// A one-coordinate rational group law, stored symbolically in the point
/// variables u, v and the deformation parameter h. Concrete rings enter at
/// evaluation time: bind h (and the points) to scalars of the target ring.
struct GroupLaw {
  std::string name;
  RatFunc compose;        // in u, v (and h)
  Rational neutral;
  RatFunc inverse;        // in u (and h)
  MultiPoly defined_when; // denominator of compose

  /// Same law with the parameter h replaced by an expression (e.g. h^n).
  GroupLaw with_parameter(const RatFunc& h_value) const;
};

/// u + v over 1 + h^2 u v; neutral 0, inverse -u.
GroupLaw lorentz_law();
/// u + v + h u v; neutral 0, inverse -u/(1+hu).
GroupLaw sos_law();
/// u + v.
GroupLaw additive_law();
/// u * v; neutral 1, inverse 1/u.
GroupLaw multiplicative_law();

struct AxiomReport {
  bool commutative = false;
  bool associative = false;
  bool neutral_element = false;
  bool inverse_element = false;
  bool all_hold() const {
    return commutative && associative && neutral_element && inverse_element;
  }
};

/// Proves the four group axioms as rational-function identities.
AxiomReport check_axioms(const GroupLaw& law);

/// Variable names u, v, w, t, s, x6, x7, ... used for n-fold composites.
std::vector<std::string> fold_variables(int n);

/// Left-fold composite x1 + x2 + ... + xn as a rational function.
RatFunc nfold_symbolic(const GroupLaw& law, int n);

/// Closed form of the n-fold Lorentz composite:
/// (sum over odd k of h^{k-1} sigma_k) / (sum over even k of h^k sigma_k).
RatFunc closed_formula(int n);

/// Evaluates law.compose at points of an arbitrary scalar ring.
/// Throws ZeroDenominatorError on the indeterminacy locus.
template <typename T>
T compose_points(const GroupLaw& law, const T& h, const T& u, const T& v) {
  return evaluate_ratfunc(law.compose, std::map<std::string, T>{
                                           {"h", h}, {"u", u}, {"v", v}});
}

template <typename T>
T law_inverse(const GroupLaw& law, const T& h, const T& u) {
  return evaluate_ratfunc(law.inverse,
                          std::map<std::string, T>{{"h", h}, {"u", u}});
}

template <typename T>
T law_neutral(const GroupLaw& law, const T& like) {
  return RingTraits<T>::from_rational(law.neutral, like);
}

/// Left fold of compose_points; the empty sequence yields the neutral element.
template <typename T>
T nfold_compose(const GroupLaw& law, const T& h, std::span<const T> points) {
  T acc = law_neutral(law, h);
  for (const T& p : points) {
    acc = compose_points(law, h, acc, p);
  }
  return acc;
}

}  // namespace kas
