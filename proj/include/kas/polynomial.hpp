#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "kas/rational.hpp"

namespace kas {

/// Exact multivariate polynomial over Q.
///
/// The variable universe is a sorted list of names; terms map exponent
/// vectors (one entry per variable) to nonzero rational coefficients.
/// Operations on polynomials with different universes align them to the
/// merged universe first, so universes are a representation detail, not
/// part of the value: equality ignores unused variables.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the value itself when is_constant()).
  Rational constant_value() const;

  int total_degree() const;
  int degree_in(const std::string& var) const;

  /// Coefficient of the lexicographically largest exponent vector.
  Rational leading_coefficient() const;

  /// Re-expresses the polynomial over a superset universe (sorted).
  MultiPoly aligned_to(const std::vector<std::string>& universe) const;

  static std::vector<std::string> merged_universe(const MultiPoly& a,
                                                  const MultiPoly& b);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }

  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  void prune();

  std::vector<std::string> vars_;  // sorted, unique
  TermMap terms_;                  // no zero coefficients
};

/// Elementary symmetric polynomial sigma_k in the given variables; sigma_0 = 1.
MultiPoly elementary_symmetric(int k, std::span<const std::string> vars);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace kas
