#pragma once

#include <array>
#include <utility>

#include "kas/evaluate.hpp"
#include "kas/mat2.hpp"
#include "kas/ratfunc.hpp"

namespace kas {

/// A_h(u) = [[1, -h^2 u], [-u, 1]] over any scalar ring.
template <typename T>
Mat2<T> mat_A(const T& h, const T& u) {
  const T one = RingTraits<T>::from_rational(Rational(1), h);
  return Mat2<T>{one, -(h * h * u), -u, one};
}

/// Symbolic A_h(u) in the variables h, u.
Mat2<RatFunc> mat_A_symbolic();

/// The bilinear form ((a,b),(a',b'))_h = h^2 a a' - b b'.
template <typename T>
struct MinkowskiForm {
  T h;
  T dot(const std::array<T, 2>& x, const std::array<T, 2>& y) const {
    return h * h * x[0] * y[0] - x[1] * y[1];
  }
};

/// The fixed conjugating matrix C_h = [[-h, h], [1, 1]], symbolic.
Mat2<RatFunc> conjugation_matrix_symbolic();

/// Conjugates A_h(u) to the diagonal torus: returns (C_h, C_h^{-1} A_h(u) C_h)
/// and checks the result equals diag(1+hu, 1-hu). Requires 2h invertible;
/// h = 0 (or characteristic 2) is the degeneration to the unipotent subgroup
/// and is rejected.
template <typename T>
std::pair<Mat2<T>, Mat2<T>> conjugate_to_diagonal(const T& h, const T& u) {
  using Traits = RingTraits<T>;
  const T one = Traits::from_rational(Rational(1), h);
  const T two_h = h + h;
  if (Traits::is_zero(two_h)) {
    throw std::domain_error(
        "conjugate_to_diagonal: 2h not invertible (unipotent degeneration)");
  }
  const Mat2<T> c{-h, h, one, one};
  // C^{-1} = adj(C) / det(C), det(C) = -2h.
  const T inv_det = -(one / two_h);
  const Mat2<T> c_inv = inv_det * Mat2<T>{one, -h, -one, -h};
  const Mat2<T> diag = c_inv * mat_A(h, u) * c;
  const T zero = Traits::from_rational(Rational(0), h);
  const Mat2<T> expected{one + h * u, zero, zero, one - h * u};
  if (!(diag == expected)) {
    throw std::logic_error("conjugate_to_diagonal: conjugate is not diag(1+hu, 1-hu)");
  }
  return {c, diag};
}

/// The four matrix-family identities, proved as rational-function identities:
///  - A(u)A(v) = b(u,v) A(u+v) with b = 1 + h^2 u v
///  - det A(u) det A(v) = b^2 det A(u+v)
///  - b(u,v) = sigma_0(u,v) + h^2 sigma_2(u,v)
///  - the normalized family B(u) = A(u)/det^{1/2}: entrywise squared,
///    (A(u)A(v))_ij^2 * a(u+v) = (A(u+v))_ij^2 * a(u) a(v)
struct CocycleIdentityReport {
  bool product_identity = false;
  bool determinant_coboundary = false;
  bool cocycle_sigma_form = false;
  bool normalized_family = false;
  bool all_hold() const {
    return product_identity && determinant_coboundary && cocycle_sigma_form &&
           normalized_family;
  }
};

CocycleIdentityReport verify_cocycle_identities();

}  // namespace kas
