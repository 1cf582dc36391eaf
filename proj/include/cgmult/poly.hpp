#pragma once

#include <string>
#include <vector>

#include "cgmult/rational.hpp"

namespace cgm {

/// Univariate polynomial over the exact rationals; coefficients stored from
/// the constant term up, trailing zeros trimmed.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rational r) { return Poly({r}); }
  static Poly x_minus(Rational r) { return Poly({-r, Rational(1)}); }

  /// Monic product prod_i (x - roots[i]).
  static Poly from_roots(const std::vector<Rational>& roots) {
    Poly p = constant(Rational(1));
    for (const auto& r : roots) p = p * x_minus(r);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) - b.coeff(int(i));
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> out = p.c_;
    for (auto& x : out) x *= s;
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient of exact division; returns false if a remainder is left.
  bool divide_exact(const Poly& divisor, Poly& quotient) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = *this;
    std::vector<Rational> q(std::max<int>(degree() - divisor.degree() + 1, 0),
                            Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
      int k = rem.degree() - divisor.degree();
      Rational f = rem.c_.back() / divisor.c_.back();
      q[k] = f;
      rem = rem - f * shift(divisor, k);
    }
    quotient = Poly(std::move(q));
    return rem.is_zero();
  }

  std::string str() const;

private:
  static Poly shift(const Poly& p, int k) {
    if (p.is_zero()) return p;
    std::vector<Rational> out(p.c_.size() + k, Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i) out[i + k] = p.c_[i];
    return Poly(std::move(out));
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (coeff(k).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeff(k).str();
    if (k > 0) s += "*t^" + std::to_string(k);
  }
  return s;
}

}  // namespace cgm
