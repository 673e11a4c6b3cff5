#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace kas {

/// Arbitrary-precision rational number in canonical form:
/// denominator > 0, gcd(numerator, denominator) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(mpz_class(n)) {}
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpz_class n) : q_(std::move(n)) {}

  Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) {
    if (sgn(q_.get_den()) == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
  }

  static Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) {
      throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational inverse() const {
    if (is_zero()) {
      throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(mpq_class(1) / q_);
  }

  /// Exponentiation with integer exponent; negative exponents invert.
  Rational pow(long e) const {
    if (e < 0) {
      return inverse().pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(n), std::move(d));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace kas
