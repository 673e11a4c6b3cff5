#pragma once

#include <span>
#include <vector>

#include "kas/mat2.hpp"

namespace kas {

/// A velocity together with its frame's speed limit c. |value| < c for
/// group-interior elements; |value| = c is admitted only as a fixed-point
/// probe. Velocities from different frames (different c) never mix.
struct Velocity {
  double value;
  double c;
};

/// Validating constructor. Roundoff overshoot past c within a few ulps is
/// snapped back to c; anything larger is rejected.
Velocity make_velocity(double value, double c);

/// Relativistic velocity addition (u + v)/(1 + u v / c^2).
Velocity add_velocity(const Velocity& u, const Velocity& v);

/// A boost in 1+1 dimensions acting on (x, t) column vectors:
/// gamma * [[1, -u/c^2], [-u, 1]] with gamma = (1 - u^2/c^2)^{-1/2}.
struct Boost {
  Mat2<double> matrix;
  Velocity u;
};

Boost boost_matrix(const Velocity& u);

/// The positive square root of (1 + u/c)/(1 - u/c); a strictly increasing
/// bijection (-c, c) -> (0, inf) turning velocity addition into
/// multiplication.
double beta_real(const Velocity& u);

/// artanh(u/c) = ln(beta_real(u)); additive under velocity addition.
double rapidity(const Velocity& u);

/// Inverse of rapidity: c * tanh(chi).
Velocity velocity_from_rapidity(double chi, double c);

/// |(u + v)_c - (u + v)| for each c in the sequence; the deviations decay
/// like c^{-2}.
std::vector<double> galilean_limit_probe(double u, double v,
                                         std::span<const double> cs);

}  // namespace kas
