#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kas {

/// Deterministic primality test (GMP-backed).
bool is_prime(std::int64_t n);

/// Element of the prime field F_p, stored as its representative in [0, p).
/// The modulus travels with the value; mixing moduli is an error.
class FpElem {
 public:
  FpElem(std::int64_t p, std::int64_t value) : p_(p) {
    if (p < 2) {
      throw std::invalid_argument("FpElem: modulus must be >= 2");
    }
    if (p >= (std::int64_t{1} << 62)) {
      throw std::invalid_argument("FpElem: modulus too large");
    }
    v_ = value % p;
    if (v_ < 0) {
      v_ += p;
    }
  }

  std::int64_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  /// Signed representative in (-p/2, p/2].
  std::int64_t symmetric_value() const { return v_ > p_ / 2 ? v_ - p_ : v_; }

  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    a.check_same(b);
    return FpElem(a.p_, addmod(a.v_, b.v_, a.p_));
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    a.check_same(b);
    return FpElem(a.p_, addmod(a.v_, a.p_ - b.v_, a.p_));
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    a.check_same(b);
    return FpElem(a.p_, mulmod(a.v_, b.v_, a.p_));
  }
  friend FpElem operator/(const FpElem& a, const FpElem& b) {
    a.check_same(b);
    return a * b.inverse();
  }

  FpElem operator-() const { return FpElem(p_, p_ - v_); }

  FpElem inverse() const;

  FpElem pow(std::int64_t e) const {
    if (e < 0) {
      return inverse().pow(-e);
    }
    FpElem base = *this;
    FpElem acc(p_, 1);
    while (e > 0) {
      if (e & 1) {
        acc = acc * base;
      }
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const FpElem& a, const FpElem& b) = default;

  std::string to_string() const;

 private:
  static std::int64_t addmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return (a + b) % p;
  }
  static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(p));
  }
  void check_same(const FpElem& o) const {
    if (p_ != o.p_) {
      throw std::invalid_argument("FpElem: mixed moduli");
    }
  }

  std::int64_t p_;
  std::int64_t v_;
};

}  // namespace kas
