/**
 * @file  coeff.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals and
 *        univariate polynomials in the formal parameter beta.
 *
 * Every numeric value in the engine is a Scalar: an element of Q[beta]
 * with rationals kept in lowest terms.  beta is the single formal theory
 * parameter (the coefficient of the logarithmic partner of the conformal
 * vector in the Gurarie-Ludwig model); all other models only ever use the
 * degree-0 part.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace logva {

using Int = long long;
using Rat = mpq_class;

/// Error thrown when a computation exceeds a configured structural cap
/// (beta degree, zeta degree, nilpotency order, rewriting steps, ...).
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element of Q[beta].  Invariant: no trailing zero coefficients, so the
/// zero Scalar is the empty coefficient vector and degree() is well defined.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) { *this = Scalar(Rat(n)); }           // NOLINT(runtime/explicit)
  Scalar(Int n) { *this = Scalar(Rat(static_cast<long>(n))); }
  Scalar(const Rat& r) {                              // NOLINT(runtime/explicit)
    if (r != 0) c_.push_back(canonical(r));
  }

  /// The formal parameter itself.
  static Scalar beta() {
    Scalar s;
    s.c_ = {Rat(0), Rat(1)};
    return s;
  }

  /// Configurable degree cap; products exceeding it raise cap_error.
  /// No in-scope computation produces beta-degree > 2.
  static int& degree_cap() {
    static int cap = 4;
    return cap;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of beta^k (zero if absent).
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(k)];
  }

  /// Degree-0 view; requires is_rational().
  Rat rational() const {
    if (c_.empty()) return Rat(0);
    if (c_.size() > 1) throw std::logic_error("Scalar::rational: beta-degree > 0");
    return c_[0];
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.is_zero() || b.is_zero()) return r;
    int deg = a.degree() + b.degree();
    if (deg > degree_cap())
      throw cap_error("Scalar: beta-degree " + std::to_string(deg) +
                      " exceeds cap " + std::to_string(degree_cap()));
    r.c_.assign(static_cast<size_t>(deg) + 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Division by a nonzero rational.
  Scalar operator/(const Rat& q) const {
    if (q == 0) throw std::domain_error("Scalar: division by zero");
    Scalar r = *this;
    for (auto& c : r.c_) c = canonical(c / q);
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t k = 0; k < a.c_.size(); ++k)
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
  }

  /// Substitute a rational value for beta.
  Scalar pin_beta(const Rat& value) const {
    Rat acc(0), pw(1);
    for (const auto& q : c_) {
      acc += q * pw;
      pw *= value;
    }
    return Scalar(acc);
  }

  /// Canonical text rendering: "p/q", "p/q*b^k" terms joined by " + ".
  /// beta is spelled "b" in machine output, "β" when human = true.
  std::string str(bool human = false) const {
    if (c_.empty()) return "0";
    const char* b = human ? "β" : "b";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += c_[k].get_str();
      if (k == 1)
        out += std::string("*") + b;
      else if (k > 1)
        out += std::string("*") + b + "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static Rat canonical(Rat q) {
    q.canonicalize();
    return q;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& q : c_) q.canonicalize();
  }

  std::vector<Rat> c_;
};

/// Harmonic number h(j) = sum_{i=1}^{j} 1/i, with h(0) = 0.
inline Rat harmonic(Int j) {
  Rat h(0);
  for (Int i = 1; i <= j; ++i) h += Rat(1, static_cast<long>(i));
  return h;
}

/// Factorial as an exact rational.
inline Rat factorial(Int n) {
  Rat f(1);
  for (Int i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

/// Binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
inline Rat binomial(Int n, Int k) {
  if (k < 0) return Rat(0);
  Rat r(1);
  for (Int i = 0; i < k; ++i) r *= Rat(static_cast<long>(n - i), static_cast<long>(i + 1));
  r.canonicalize();
  return r;
}

}  // namespace logva
