#include "kas/cyclotomic.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace kas {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("CycloNum: p = " + std::to_string(p) + " is not prime");
  }
}

// Univariate polynomial over Q, dense, used only for inversion modulo
// Phi_p(y) = 1 + y + ... + y^{p-1}.
struct QPoly {
  std::vector<Rational> c;

  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      if (!c[i].is_zero()) {
        return i;
      }
    }
    return -1;
  }

  bool is_zero() const { return degree() < 0; }

  Rational lead() const { return c[static_cast<std::size_t>(degree())]; }
};

QPoly sub_scaled(const QPoly& a, const QPoly& b, const Rational& s, int shift) {
  // a - s * y^shift * b
  QPoly r = a;
  if (r.c.size() < b.c.size() + static_cast<std::size_t>(shift)) {
    r.c.resize(b.c.size() + static_cast<std::size_t>(shift));
  }
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    r.c[i + static_cast<std::size_t>(shift)] -= s * b.c[i];
  }
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return QPoly{};
  }
  QPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.c.size() < b.c.size()) {
    r.c.resize(b.c.size());
  }
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    r.c[i] -= b.c[i];
  }
  return r;
}

// Remainder of a modulo m (monic-leading division works over Q).
QPoly poly_rem(QPoly a, const QPoly& m) {
  const int dm = m.degree();
  while (a.degree() >= dm) {
    const Rational q = a.lead() / m.lead();
    a = sub_scaled(a, m, q, a.degree() - dm);
    a.c.resize(static_cast<std::size_t>(std::max(a.degree() + 1, 0)));
  }
  return a;
}

}  // namespace

CycloNum::CycloNum(std::int64_t p, std::vector<Rational> coords)
    : p_(p), coords_(std::move(coords)) {
  require_prime(p);
  if (coords_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("CycloNum: coordinate vector must have length p-1");
  }
}

CycloNum CycloNum::from_power_basis(std::int64_t p, std::span<const Rational> raw) {
  require_prime(p);
  if (raw.empty()) {
    throw std::invalid_argument("CycloNum: empty power list");
  }
  std::vector<Rational> coords(static_cast<std::size_t>(p - 1), Rational(0));
  for (std::size_t m = 0; m < raw.size(); ++m) {
    const Rational& c = raw[m];
    if (c.is_zero()) {
      continue;
    }
    const std::int64_t e = static_cast<std::int64_t>(m) % p;
    if (e <= p - 2) {
      coords[static_cast<std::size_t>(e)] += c;
    } else {
      // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
      for (auto& coord : coords) {
        coord -= c;
      }
    }
  }
  return CycloNum(p, std::move(coords));
}

CycloNum CycloNum::constant(std::int64_t p, const Rational& c) {
  require_prime(p);
  std::vector<Rational> coords(static_cast<std::size_t>(p - 1), Rational(0));
  coords[0] = c;
  return CycloNum(p, std::move(coords));
}

CycloNum CycloNum::zeta(std::int64_t p) { return zeta_power(p, 1); }

CycloNum CycloNum::zeta_power(std::int64_t p, std::int64_t m) {
  require_prime(p);
  m %= p;
  if (m < 0) {
    m += p;
  }
  std::vector<Rational> raw(static_cast<std::size_t>(m + 1), Rational(0));
  raw.back() = Rational(1);
  return from_power_basis(p, raw);
}

CycloNum CycloNum::uniformizer(std::int64_t p) {
  return zeta(p) - one(p);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

bool CycloNum::is_integral() const {
  for (const auto& c : coords_) {
    if (!c.is_integer()) {
      return false;
    }
  }
  return true;
}

namespace {
void check_same_prime(const CycloNum& a, const CycloNum& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("CycloNum: mixed primes");
  }
}
}  // namespace

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  check_same_prime(a, b);
  std::vector<Rational> coords(a.coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] += b.coords_[i];
  }
  return CycloNum(a.p_, std::move(coords));
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  check_same_prime(a, b);
  std::vector<Rational> coords(a.coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] -= b.coords_[i];
  }
  return CycloNum(a.p_, std::move(coords));
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  check_same_prime(a, b);
  const std::size_t n = a.coords_.size();
  std::vector<Rational> conv(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords_[j].is_zero()) {
        continue;
      }
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  return CycloNum::from_power_basis(a.p_, conv);
}

CycloNum operator*(const CycloNum& a, const Rational& s) {
  std::vector<Rational> coords(a.coords_);
  for (auto& c : coords) {
    c *= s;
  }
  return CycloNum(a.p_, std::move(coords));
}

CycloNum CycloNum::operator-() const {
  std::vector<Rational> coords(coords_);
  for (auto& c : coords) {
    c = -c;
  }
  return CycloNum(p_, std::move(coords));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) {
    throw std::domain_error("CycloNum: inverse of zero");
  }
  // Extended Euclid for gcd(A, Phi_p) over Q[y]; Phi_p is irreducible, so
  // the gcd is a nonzero constant g with s*A + t*Phi_p = g.
  QPoly r0{coords_};
  QPoly r1;
  r1.c.assign(static_cast<std::size_t>(p_), Rational(1));
  QPoly s0{{Rational(1)}};
  QPoly s1{{}};
  while (!r1.is_zero()) {
    // One full division step: r0 = q*r1 + rem, tracked on the s-side too.
    QPoly rem = r0;
    QPoly q{{}};
    const int d1 = r1.degree();
    while (rem.degree() >= d1 && !rem.is_zero()) {
      const int shift = rem.degree() - d1;
      const Rational factor = rem.lead() / r1.lead();
      if (q.c.size() < static_cast<std::size_t>(shift + 1)) {
        q.c.resize(static_cast<std::size_t>(shift + 1));
      }
      q.c[static_cast<std::size_t>(shift)] += factor;
      rem = sub_scaled(rem, r1, factor, shift);
    }
    QPoly snew = sub(s0, mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snew;
  }
  if (r0.degree() != 0) {
    throw std::logic_error("CycloNum: gcd with Phi_p not constant");
  }
  const Rational g = r0.c[0];
  QPoly phi;
  phi.c.assign(static_cast<std::size_t>(p_), Rational(1));
  QPoly inv = poly_rem(s0, phi);
  std::vector<Rational> coords(static_cast<std::size_t>(p_ - 1), Rational(0));
  for (std::size_t i = 0; i < inv.c.size() && i < coords.size(); ++i) {
    coords[i] = inv.c[i] / g;
  }
  return CycloNum(p_, std::move(coords));
}

CycloNum CycloNum::pow(std::int64_t e) const {
  if (e < 0) {
    return inverse().pow(-e);
  }
  CycloNum base = *this;
  CycloNum acc = one(p_);
  while (e > 0) {
    if (e & 1) {
      acc = acc * base;
    }
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) {
      continue;
    }
    if (first) {
      if (c.sign() < 0) {
        os << "-";
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational a = c.abs();
    if (k == 0) {
      os << a.to_string();
    } else {
      os << a.to_string() << "·ζ";
      if (k > 1) {
        os << "^" << k;
      }
    }
  }
  if (first) {
    os << "0";
  }
  os << " (p=" << p_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& a) {
  return os << a.to_string();
}

FpElem reduce_mod_h(const CycloNum& a) {
  if (!a.is_integral()) {
    throw std::invalid_argument("reduce_mod_h: argument not in Z[zeta_p]");
  }
  mpz_class sum(0);
  for (const auto& c : a.coords()) {
    sum += c.numerator();
  }
  mpz_class p(static_cast<long>(a.prime()));
  mpz_class r = ((sum % p) + p) % p;
  return FpElem(a.prime(), r.get_si());
}

namespace {

// Valuation of a nonzero integral element: strip factors of h.  Divisibility
// by h is exactly "residue = 0", and the quotient stays integral.
long integral_valuation(CycloNum a, const CycloNum& h_inv) {
  long v = 0;
  while (reduce_mod_h(a).is_zero()) {
    a = a * h_inv;
    if (!a.is_integral()) {
      throw std::logic_error("h_valuation: inexact division by h");
    }
    ++v;
  }
  return v;
}

}  // namespace

std::optional<long> h_valuation(const CycloNum& a) {
  if (a.is_zero()) {
    return std::nullopt;
  }
  const std::int64_t p = a.prime();
  const CycloNum h_inv = CycloNum::uniformizer(p).inverse();
  // Clear denominators: a = b / n with b integral, n a positive integer.
  mpz_class n(1);
  for (const auto& c : a.coords()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), n.get_mpz_t(), c.denominator().get_mpz_t());
    n = l;
  }
  const CycloNum b = a * Rational(n);
  long v = integral_valuation(b, h_inv);
  if (n != 1) {
    v -= integral_valuation(CycloNum::constant(p, Rational(n)), h_inv);
  }
  return v;
}

CycloNum compute_unit_w(std::int64_t p) {
  require_prime(p);
  const CycloNum h = CycloNum::uniformizer(p);
  const CycloNum w = h.pow(p - 1) * Rational(1, p);
  if (!w.is_integral()) {
    throw std::logic_error("compute_unit_w: h^{p-1}/p not integral");
  }
  if (!w.inverse().is_integral()) {
    throw std::logic_error("compute_unit_w: w is not a unit of Z[zeta_p]");
  }
  if (reduce_mod_h(w).value() != p - 1) {
    throw std::logic_error("compute_unit_w: w is not congruent to -1 mod h");
  }
  return w;
}

}  // namespace kas
