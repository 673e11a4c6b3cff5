#pragma once

#include <array>

namespace kas {

/// 2x2 matrix over an arbitrary scalar ring (exact or floating point).
template <typename T>
struct Mat2 {
  // Row-major: [[a, b], [c, d]].
  T a, b, c, d;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }

  friend Mat2 operator*(const T& s, const Mat2& x) {
    return Mat2{s * x.a, s * x.b, s * x.c, s * x.d};
  }

  T det() const { return a * d - b * c; }

  std::array<T, 2> row(int i) const {
    return i == 0 ? std::array<T, 2>{a, b} : std::array<T, 2>{c, d};
  }
  std::array<T, 2> col(int j) const {
    return j == 0 ? std::array<T, 2>{a, c} : std::array<T, 2>{b, d};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

}  // namespace kas
