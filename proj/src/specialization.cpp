#include "kas/specialization.hpp"

#include <sstream>
#include <stdexcept>

namespace kas {

FpPoly FpPoly::from_coeffs(std::int64_t p, std::vector<std::int64_t> coeffs) {
  if (p < 2) {
    throw std::invalid_argument("FpPoly: modulus must be >= 2");
  }
  for (auto& c : coeffs) {
    c %= p;
    if (c < 0) {
      c += p;
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) {
    coeffs.pop_back();
  }
  return FpPoly{p, std::move(coeffs)};
}

bool FpPoly::is_constant(std::int64_t value) const {
  const FpPoly expected = from_coeffs(p, {value});
  return *this == expected;
}

FpPoly FpPoly::scaled(const FpElem& s) const {
  std::vector<std::int64_t> out;
  out.reserve(coeffs.size());
  for (const auto c : coeffs) {
    out.push_back((FpElem(p, c) * s).value());
  }
  return from_coeffs(p, std::move(out));
}

FpElem FpPoly::eval(const FpElem& x) const {
  FpElem acc(x.modulus(), 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + FpElem(x.modulus(), *it);
  }
  return acc;
}

std::string FpPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) {
      continue;
    }
    // Symmetric lift: print large residues as negative integers.
    if (c > p / 2) {
      c -= p;
    }
    if (first) {
      if (c < 0) {
        os << "-";
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) {
        os << a << "·";
      }
      os << "u";
      if (i > 1) {
        os << "^" << i;
      }
    }
  }
  if (first) {
    os << "0";
  }
  os << " (mod " << p << ")";
  return os.str();
}

FpElem artin_schreier(const FpElem& u) {
  return u.pow(u.modulus()) - u;
}

FpPoly artin_schreier_poly(std::int64_t p) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(p + 1), 0);
  coeffs[1] = p - 1;  // -u
  coeffs[static_cast<std::size_t>(p)] = 1;
  return FpPoly::from_coeffs(p, std::move(coeffs));
}

namespace {

void require_prime_arg(std::int64_t p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p = " + std::to_string(p) +
                                " is not prime");
  }
}

bool all_integral(const std::vector<CycloNum>& v) {
  for (const auto& c : v) {
    if (!c.is_integral()) {
      return false;
    }
  }
  return true;
}

FpPoly reduce_coeffs_mod_h(std::int64_t p, const std::vector<CycloNum>& coeffs) {
  std::vector<std::int64_t> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    out.push_back(reduce_mod_h(c).value());
  }
  return FpPoly::from_coeffs(p, std::move(out));
}

}  // namespace

PsiSpecialization specialize_psi(std::int64_t p) {
  require_prime_arg(p, "specialize_psi");
  const CycloNum h_inv = CycloNum::uniformizer(p).inverse();
  const CycloNum w = compute_unit_w(p);

  // psi_p(u) = ((h u + 1)^p - 1)/h^p; the u^i coefficient is binom(p,i) h^{i-p}.
  std::vector<CycloNum> coeffs;
  coeffs.reserve(static_cast<std::size_t>(p + 1));
  coeffs.push_back(CycloNum::zero(p));
  for (std::int64_t i = 1; i <= p; ++i) {
    const Rational binom = Rational::binomial(static_cast<unsigned long>(p),
                                              static_cast<unsigned long>(i));
    coeffs.push_back(h_inv.pow(p - i) * binom);
  }

  const bool integral = all_integral(coeffs);
  FpPoly fiber;
  bool fiber_ok = false;
  if (integral) {
    fiber = reduce_coeffs_mod_h(p, coeffs);
    fiber_ok = (fiber == artin_schreier_poly(p));
  }
  return PsiSpecialization{p, w, std::move(coeffs), integral, std::move(fiber),
                           fiber_ok};
}

PhiSpecialization specialize_phi(std::int64_t p) {
  require_prime_arg(p, "specialize_phi");
  if (p == 2) {
    throw std::invalid_argument("specialize_phi: p must be odd");
  }
  const CycloNum h = CycloNum::uniformizer(p);
  const CycloNum h_inv = h.inverse();

  // N(u) = ((1+hu)^p - (1-hu)^p)/h^p: odd-degree coefficients 2 binom(p,i) h^{i-p}.
  // D(u) = (1+hu)^p + (1-hu)^p: even-degree coefficients 2 binom(p,i) h^i.
  std::vector<CycloNum> num_coeffs, den_coeffs;
  for (std::int64_t i = 0; i <= p; ++i) {
    const Rational two_binom = Rational(2) * Rational::binomial(
                                                 static_cast<unsigned long>(p),
                                                 static_cast<unsigned long>(i));
    if (i % 2 == 1) {
      num_coeffs.push_back(h_inv.pow(p - i) * two_binom);
      den_coeffs.push_back(CycloNum::zero(p));
    } else {
      num_coeffs.push_back(CycloNum::zero(p));
      den_coeffs.push_back(h.pow(i) * two_binom);
    }
  }

  const bool num_integral = all_integral(num_coeffs);
  FpPoly num_fiber, den_fiber, quotient;
  bool den_is_two = false;
  bool quotient_ok = false;
  if (num_integral) {
    num_fiber = reduce_coeffs_mod_h(p, num_coeffs);
    den_fiber = reduce_coeffs_mod_h(p, den_coeffs);
    den_is_two = den_fiber.is_constant(2);
    if (den_is_two) {
      quotient = num_fiber.scaled(FpElem(p, 2).inverse());
      quotient_ok = (quotient == artin_schreier_poly(p));
    }
  }
  return PhiSpecialization{p,
                           std::move(num_coeffs),
                           std::move(den_coeffs),
                           num_integral,
                           std::move(num_fiber),
                           std::move(den_fiber),
                           den_is_two,
                           std::move(quotient),
                           quotient_ok};
}

RamificationReport verify_ramification(std::int64_t p) {
  require_prime_arg(p, "verify_ramification");
  const auto v = h_valuation(CycloNum::constant(p, Rational(p)));
  const long v_p = v.value_or(-1);
  const CycloNum w = CycloNum::uniformizer(p).pow(p - 1) * Rational(1, p);
  const bool w_integral = w.is_integral();
  const bool w_unit = w_integral && w.inverse().is_integral();
  const bool w_minus_one = w_integral && reduce_mod_h(w).value() == p - 1;
  return RamificationReport{p,      v_p,    w,          v_p == p - 1,
                            w_integral, w_unit, w_minus_one};
}

}  // namespace kas
