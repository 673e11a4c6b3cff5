#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kas/cyclotomic.hpp"
#include "kas/fp.hpp"

namespace kas {

/// Dense univariate polynomial over F_p; coeffs[i] is the coefficient of u^i,
/// values in [0, p), trailing zeros trimmed.
struct FpPoly {
  std::int64_t p = 0;
  std::vector<std::int64_t> coeffs;

  static FpPoly from_coeffs(std::int64_t p, std::vector<std::int64_t> coeffs);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_constant(std::int64_t value) const;

  FpPoly scaled(const FpElem& s) const;
  FpElem eval(const FpElem& x) const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  /// Symmetric-lift rendering, e.g. "u^3 - u (mod 3)".
  std::string to_string() const;
};

/// The Artin-Schreier map u -> u^p - u on F_p.
FpElem artin_schreier(const FpElem& u);
/// u^p - u as a polynomial over F_p.
FpPoly artin_schreier_poly(std::int64_t p);

/// psi_p over Z[zeta_p]: coefficient of u^i is binom(p,i) h^{i-p}. All
/// coefficients land in Z[zeta_p], and reduction mod h gives u^p - u.
struct PsiSpecialization {
  std::int64_t p = 0;
  CycloNum w;
  std::vector<CycloNum> coeffs;  // of psi_p, degrees 0..p
  bool coeffs_integral = false;
  FpPoly fiber;                  // coefficientwise reduction mod h
  bool fiber_is_artin_schreier = false;

  bool ok() const { return coeffs_integral && fiber_is_artin_schreier; }
};

PsiSpecialization specialize_psi(std::int64_t p);

/// phi_p over Z[zeta_p], for odd p: N(u) = ((1+hu)^p - (1-hu)^p)/h^p and
/// D(u) = (1+hu)^p + (1-hu)^p. N is integral; mod h, N = 2(u^p - u), D = 2,
/// and the quotient is u^p - u.
struct PhiSpecialization {
  std::int64_t p = 0;
  std::vector<CycloNum> num_coeffs;
  std::vector<CycloNum> den_coeffs;
  bool num_integral = false;
  FpPoly num_fiber;
  FpPoly den_fiber;
  bool den_fiber_is_two = false;
  FpPoly quotient_fiber;
  bool quotient_is_artin_schreier = false;

  bool ok() const {
    return num_integral && den_fiber_is_two && quotient_is_artin_schreier;
  }
};

PhiSpecialization specialize_phi(std::int64_t p);

/// h^{p-1} = w p with w a unit congruent to -1 mod h.
struct RamificationReport {
  std::int64_t p = 0;
  long valuation_of_p = 0;
  CycloNum w;
  bool valuation_ok = false;
  bool w_integral = false;
  bool w_unit = false;
  bool w_congruent_minus_one = false;

  bool ok() const {
    return valuation_ok && w_integral && w_unit && w_congruent_minus_one;
  }
};

RamificationReport verify_ramification(std::int64_t p);

}  // namespace kas
