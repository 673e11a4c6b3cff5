#include "kas/relativity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kas {

namespace {
constexpr double kUlpSlack = 4.0 * std::numeric_limits<double>::epsilon();

void require_interior(const Velocity& u, const char* who) {
  if (std::abs(u.value) >= u.c) {
    throw std::domain_error(std::string(who) + ": |u| must be < c");
  }
}
}  // namespace

Velocity make_velocity(double value, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("make_velocity: c must be positive and finite");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("make_velocity: velocity must be finite");
  }
  if (std::abs(value) > c) {
    if (std::abs(value) <= c * (1.0 + kUlpSlack)) {
      value = std::copysign(c, value);  // roundoff overshoot
    } else {
      throw std::invalid_argument("make_velocity: |value| exceeds c");
    }
  }
  return Velocity{value, c};
}

Velocity add_velocity(const Velocity& u, const Velocity& v) {
  if (u.c != v.c) {
    throw std::invalid_argument("add_velocity: velocities from different frames");
  }
  const double den = 1.0 + u.value * v.value / (u.c * u.c);
  if (den == 0.0) {
    throw std::domain_error("add_velocity: undefined composition (1 + uv/c^2 = 0)");
  }
  // ±c are exact fixed points; the quotient would merely round them.
  if (std::abs(u.value) == u.c) {
    return u;
  }
  if (std::abs(v.value) == v.c) {
    return v;
  }
  return make_velocity((u.value + v.value) / den, u.c);
}

Boost boost_matrix(const Velocity& u) {
  require_interior(u, "boost_matrix");
  const double ratio = u.value / u.c;
  const double gamma = 1.0 / std::sqrt((1.0 - ratio) * (1.0 + ratio));
  Mat2<double> m{gamma, -gamma * u.value / (u.c * u.c), -gamma * u.value, gamma};
  return Boost{m, u};
}

double beta_real(const Velocity& u) {
  require_interior(u, "beta_real");
  const double ratio = u.value / u.c;
  return std::sqrt((1.0 + ratio) / (1.0 - ratio));
}

double rapidity(const Velocity& u) {
  require_interior(u, "rapidity");
  return std::atanh(u.value / u.c);
}

Velocity velocity_from_rapidity(double chi, double c) {
  return make_velocity(c * std::tanh(chi), c);
}

std::vector<double> galilean_limit_probe(double u, double v,
                                         std::span<const double> cs) {
  std::vector<double> deviations;
  deviations.reserve(cs.size());
  for (const double c : cs) {
    if (!(c > std::max(std::abs(u), std::abs(v)))) {
      throw std::invalid_argument("galilean_limit_probe: c must exceed |u|, |v|");
    }
    const Velocity sum = add_velocity(make_velocity(u, c), make_velocity(v, c));
    deviations.push_back(std::abs(sum.value - (u + v)));
  }
  return deviations;
}

}  // namespace kas
