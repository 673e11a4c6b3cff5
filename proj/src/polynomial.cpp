#include "kas/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kas {

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) {
    p.terms_.emplace(Exponents{}, c);
  }
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) {
    throw std::invalid_argument("MultiPoly: empty variable name");
  }
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) {
    return true;
  }
  if (terms_.size() > 1) {
    return false;
  }
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) {
    throw std::logic_error("MultiPoly: not a constant");
  }
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) {
      s += x;
    }
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    return 0;
  }
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[idx]);
  }
  return d;
}

Rational MultiPoly::leading_coefficient() const {
  if (terms_.empty()) {
    return Rational(0);
  }
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& universe) const {
  MultiPoly out;
  out.vars_ = universe;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), vars_[i]);
    if (it == universe.end() || *it != vars_[i]) {
      throw std::invalid_argument("MultiPoly: universe is not a superset");
    }
    pos[i] = static_cast<std::size_t>(it - universe.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(universe.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      ne[pos[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::vector<std::string> MultiPoly::merged_universe(const MultiPoly& a,
                                                    const MultiPoly& b) {
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  return u;
}

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  const auto u = MultiPoly::merged_universe(a, b);
  MultiPoly x = a.aligned_to(u);
  const MultiPoly y = b.aligned_to(u);
  for (const auto& [e, c] : y.terms_) {
    auto [it, inserted] = x.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
    }
  }
  x.prune();
  return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    c = -c;
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto u = MultiPoly::merged_universe(a, b);
  const MultiPoly x = a.aligned_to(u);
  const MultiPoly y = b.aligned_to(u);
  MultiPoly r;
  r.vars_ = u;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      MultiPoly::Exponents e(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      auto [it, inserted] = r.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
      }
    }
  }
  r.prune();
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& s) {
  if (s.is_zero()) {
    return MultiPoly();
  }
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) {
    c *= s;
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) {
    throw std::invalid_argument("MultiPoly: negative exponent");
  }
  MultiPoly acc = constant(Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) {
      acc = acc * base;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
    }
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  const auto u = MultiPoly::merged_universe(a, b);
  return a.aligned_to(u).terms_ == b.aligned_to(u).terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  // Leading terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational a = c.abs();
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (!monomial.empty()) {
        monomial += "*";
      }
      monomial += vars_[i];
      if (e[i] > 1) {
        monomial += "^" + std::to_string(e[i]);
      }
    }
    if (monomial.empty()) {
      os << a.to_string();
    } else if (a.is_one()) {
      os << monomial;
    } else {
      os << a.to_string() << "*" << monomial;
    }
  }
  return os.str();
}

MultiPoly elementary_symmetric(int k, std::span<const std::string> vars) {
  const int n = static_cast<int>(vars.size());
  if (k < 0 || k > n) {
    throw std::invalid_argument("elementary_symmetric: k out of range");
  }
  // e[j] after processing i variables holds sigma_j of those variables.
  std::vector<MultiPoly> e(static_cast<std::size_t>(k + 1));
  e[0] = MultiPoly::constant(Rational(1));
  for (int i = 0; i < n; ++i) {
    const MultiPoly x = MultiPoly::variable(vars[static_cast<std::size_t>(i)]);
    for (int j = std::min(k, i + 1); j >= 1; --j) {
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + x * e[static_cast<std::size_t>(j - 1)];
    }
  }
  return e[static_cast<std::size_t>(k)];
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.to_string();
}

}  // namespace kas
