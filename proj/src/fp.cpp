#include "kas/fp.hpp"

#include <gmpxx.h>

namespace kas {

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  mpz_class z(static_cast<long>(n));
  // 2 = definitely prime, 1 = probably; both are certain for 64-bit inputs
  // with this many rounds.
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

FpElem FpElem::inverse() const {
  if (v_ == 0) {
    throw std::domain_error("FpElem: inverse of zero");
  }
  // Extended Euclid on (v, p); gcd must be 1 for a prime modulus.
  std::int64_t r0 = v_, r1 = p_;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw std::domain_error("FpElem: value not invertible (modulus not prime?)");
  }
  return FpElem(p_, s0);
}

std::string FpElem::to_string() const {
  return std::to_string(v_) + " (mod " + std::to_string(p_) + ")";
}

}  // namespace kas
