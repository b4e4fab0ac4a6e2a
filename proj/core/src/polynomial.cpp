#include "flagcoh/polynomial.hpp"

#include <sstream>

namespace flagcoh {

namespace {

Monomial shift(int i) { return Monomial{1} << (8 * (Polynomial::kMaxVariables - 1 - i)); }

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

Polynomial::Polynomial(int variables) : variables_(variables) {
  if (variables < 0 || variables > kMaxVariables) throw InvalidInput("polynomial ring supports at most 8 variables");
}

Polynomial Polynomial::constant(int variables, const Rational& c) {
  Polynomial p(variables);
  p.add(0, c);
  return p;
}

Polynomial Polynomial::variable(int variables, int i) {
  Polynomial p(variables);
  p.add(shift(i), 1);
  return p;
}

Polynomial Polynomial::linear(const IntVector& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add(shift(static_cast<int>(i)), coeffs[i]);
  return p;
}

Monomial Polynomial::pack(const std::vector<int>& exponents) {
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw InvalidInput("exponent out of range");
    m += shift(static_cast<int>(i)) * static_cast<Monomial>(exponents[i]);
  }
  return m;
}

std::vector<int> Polynomial::unpack(Monomial m, int variables) {
  std::vector<int> e(variables);
  for (int i = 0; i < variables; ++i) e[i] = exponent(m, i);
  return e;
}

int Polynomial::total_degree(Monomial m) {
  int d = 0;
  for (int i = 0; i < kMaxVariables; ++i) d += exponent(m, i);
  return d;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d >= 0 && total_degree(m) != d) return false;
    d = total_degree(m);
  }
  return true;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.variables_, b.variables_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < Polynomial::kMaxVariables; ++i)
        if (Polynomial::exponent(ma, i) + Polynomial::exponent(mb, i) > Polynomial::kMaxExponent)
          throw InvalidInput("exponent overflow in polynomial product");
      r.add(ma + mb, ca * cb);
    }
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool has_var = it->first != 0;
    bool printed = false;
    if (c != 1 || !has_var) {
      out << flagcoh::to_string(c);
      printed = true;
    }
    for (int i = 0; i < variables_; ++i) {
      int e = exponent(it->first, i);
      if (e == 0) continue;
      if (printed) out << "*";
      out << "t" << (i + 1);
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

Polynomial reflect(const RootSystem& rs, int i, const Polynomial& f) {
  const int n = rs.rank();
  const auto& a = rs.cartan()[i];
  Polynomial out(n);
  std::vector<int> moving;
  for (const auto& [m, c] : f.terms()) {
    // (-t_i)^{e_i} prod_{k != i} (t_k - a_k t_i)^{e_k}, expanded by choosing
    // how many factors of each binomial contribute t_i.
    const int ei = Polynomial::exponent(m, i);
    moving.clear();
    for (int k = 0; k < n; ++k)
      if (k != i && a[k] != 0 && Polynomial::exponent(m, k) > 0) moving.push_back(k);
    const Rational base = (ei % 2) ? Rational(-c) : c;
    auto expand = [&](auto&& self, std::size_t pos, Monomial mono, BigInt coef) -> void {
      if (pos == moving.size()) {
        out.add(mono, base * Rational(coef));
        return;
      }
      const int k = moving[pos];
      const int ek = Polynomial::exponent(m, k);
      BigInt pw = 1;
      for (int j = 0; j <= ek; ++j) {
        self(self, pos + 1, mono - shift(k) * static_cast<Monomial>(j) + shift(i) * static_cast<Monomial>(j),
             coef * binomial(ek, j) * pw);
        pw *= -a[k];
      }
    };
    expand(expand, 0, m, BigInt(1));
  }
  return out;
}

Polynomial divided_difference(const RootSystem& rs, int i, const Polynomial& f) {
  const int n = rs.rank();
  Polynomial diff = f - reflect(rs, i, f);
  Polynomial out(n);
  const Monomial ti = shift(i);
  for (const auto& [m, c] : diff.terms()) {
    FLAGCOH_CHECK(Polynomial::exponent(m, i) > 0,
                  "divided difference: numerator not divisible by t" + std::to_string(i + 1));
    out.add(m - ti, c);
  }
  return out;
}

Polynomial positive_root_product(const RootSystem& rs) {
  Polynomial p = Polynomial::constant(rs.rank(), 1);
  for (const auto& beta : rs.positive_roots()) p = p * Polynomial::linear(beta);
  return p;
}

}  // namespace flagcoh
