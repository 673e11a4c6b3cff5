#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kas/fp.hpp"
#include "kas/rational.hpp"

namespace kas {

/// Element of Q(zeta_p), zeta_p a primitive p-th root of unity, stored as
/// rational coordinates on the integral basis 1, zeta, ..., zeta^{p-2}.
/// The element lies in Z[zeta_p] exactly when every coordinate is an integer.
///
/// The basis length is p-1; for p = 2 it degenerates to the single basis
/// element 1 (zeta_2 = -1).
class CycloNum {
 public:
  CycloNum(std::int64_t p, std::vector<Rational> coords);

  /// Canonical representative of sum_m raw[m] * zeta^m, any number of powers.
  /// Powers m >= p-1 are folded in via zeta^p = 1 and
  /// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
  static CycloNum from_power_basis(std::int64_t p, std::span<const Rational> raw);

  static CycloNum constant(std::int64_t p, const Rational& c);
  static CycloNum zero(std::int64_t p) { return constant(p, Rational(0)); }
  static CycloNum one(std::int64_t p) { return constant(p, Rational(1)); }
  static CycloNum zeta(std::int64_t p);
  static CycloNum zeta_power(std::int64_t p, std::int64_t m);
  /// h = zeta - 1, the uniformizer of the h-adic structure.
  static CycloNum uniformizer(std::int64_t p);

  std::int64_t prime() const { return p_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const Rational& s);
  friend CycloNum operator*(const Rational& s, const CycloNum& a) { return a * s; }
  CycloNum operator-() const;

  /// Inverse in the field Q(zeta_p); throws on zero.
  CycloNum inverse() const;
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
    return a * b.inverse();
  }

  CycloNum pow(std::int64_t e) const;

  friend bool operator==(const CycloNum& a, const CycloNum& b) = default;

  /// Renders on the zeta-basis, e.g. "-1 - 1·ζ (p=3)".
  std::string to_string() const;

 private:
  std::int64_t p_;
  std::vector<Rational> coords_;
};

/// Residue map Z[zeta_p] -> F_p induced by zeta -> 1 (reduction mod h).
/// Requires an integral argument.
FpElem reduce_mod_h(const CycloNum& a);

/// h-adic valuation: the largest k with h^k | a in Z[zeta_p], extended to
/// Q(zeta_p) by v(x/n) = v(x) - v(n). Returns nullopt (+infinity) for zero.
std::optional<long> h_valuation(const CycloNum& a);

/// The unit w with h^{p-1} = w * p. Verified integral, invertible in
/// Z[zeta_p], and congruent to -1 mod h; any failure is an internal error.
CycloNum compute_unit_w(std::int64_t p);

std::ostream& operator<<(std::ostream& os, const CycloNum& a);

}  // namespace kas
