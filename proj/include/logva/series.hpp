/**
 * @file  series.hpp
 * @brief Log-Laurent series arithmetic in one and two variable pairs
 *        (z, zeta): the total derivative D_z, the expansions theta_12 /
 *        theta_21 of log(z1 - z2), iota-expansion maps, divided powers,
 *        diagonal evaluation and coefficient extraction — all with explicit
 *        validity windows.
 *
 * Window semantics: a window [lo, hi] (with +/-infinity sentinels) means the
 * coefficients for every z-exponent inside the window are exactly known;
 * absent entries inside the window are exactly zero; exponents outside the
 * window are unknown.  Every operation computes the sound output window, and
 * extraction outside the window is a hard error — the engine never silently
 * approximates.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "logva/space.hpp"

namespace logva {

/// Error thrown when a coefficient is requested outside the certified window
/// or when an operation's sound window is empty.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr Int kNegInf = -(1LL << 40);
constexpr Int kPosInf = (1LL << 40);

inline Int sat_add(Int a, Int b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  return a + b;
}

/// Exactness window for one z-variable.
struct Window {
  Int lo = kNegInf;
  Int hi = kPosInf;

  bool contains(Int m) const { return m >= lo && m <= hi; }
  bool empty() const { return lo > hi; }
  static Window all() { return Window{}; }
};

/// One-variable log-Laurent series: finitely supported map
/// (z-exponent m, zeta-exponent k >= 0) -> State.
class LogSeries1 {
 public:
  using Key = std::pair<Int, Int>;  // (m, k)
  using Terms = std::map<Key, State>;

  Window window;

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }

  void add(Int m, Int k, const State& s) {
    if (s.is_zero()) return;
    auto it = t_.find({m, k});
    if (it == t_.end()) {
      t_.emplace(Key{m, k}, s);
    } else {
      it->second += s;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  /// Coefficient of z^m zeta^k; hard error outside the window.
  State extract(Int m, Int k) const {
    if (!window.contains(m))
      throw window_error("extract: z-exponent " + std::to_string(m) +
                         " outside certified window [" + std::to_string(window.lo) +
                         ", " + std::to_string(window.hi) + "]");
    auto it = t_.find({m, k});
    return it == t_.end() ? State() : it->second;
  }

  /// Drop entries that fell outside the window (keeps the stored-support
  /// invariant after window-shrinking operations).
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) {
      if (!window.contains(it->first.first))
        it = t_.erase(it);
      else
        ++it;
    }
  }

  LogSeries1& operator+=(const LogSeries1& o) {
    window.lo = std::max(window.lo, o.window.lo);
    window.hi = std::min(window.hi, o.window.hi);
    for (const auto& [k, s] : o.t_) add(k.first, k.second, s);
    prune();
    return *this;
  }
  friend LogSeries1 operator-(LogSeries1 a, const LogSeries1& b) {
    a.window.lo = std::max(a.window.lo, b.window.lo);
    a.window.hi = std::min(a.window.hi, b.window.hi);
    for (const auto& [k, s] : b.t_) a.add(k.first, k.second, -s);
    a.prune();
    return a;
  }

 private:
  Terms t_;
};

/// Two-variable log-Laurent series in variable pairs (z1, zeta1), (z2, zeta2)
/// (or (z2, zeta2), (z12, zeta12) for the iota_{z2,z12} expansion).
class LogSeries2 {
 public:
  using Key = std::array<Int, 4>;  // (m1, k1, m2, k2)
  using Terms = std::map<Key, State>;

  Window w1, w2;

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }

  void add(Int m1, Int k1, Int m2, Int k2, const State& s) {
    if (s.is_zero()) return;
    Key key{m1, k1, m2, k2};
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, s);
    } else {
      it->second += s;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  State extract(Int m1, Int k1, Int m2, Int k2) const {
    if (!w1.contains(m1) || !w2.contains(m2))
      throw window_error("extract: exponent pair outside certified window");
    auto it = t_.find(Key{m1, k1, m2, k2});
    return it == t_.end() ? State() : it->second;
  }

  void prune() {
    for (auto it = t_.begin(); it != t_.end();) {
      if (!w1.contains((*it).first[0]) || !w2.contains((*it).first[2]))
        it = t_.erase(it);
      else
        ++it;
    }
  }

  LogSeries2& operator+=(const LogSeries2& o) {
    w1.lo = std::max(w1.lo, o.w1.lo);
    w1.hi = std::min(w1.hi, o.w1.hi);
    w2.lo = std::max(w2.lo, o.w2.lo);
    w2.hi = std::min(w2.hi, o.w2.hi);
    for (const auto& [k, s] : o.t_) add(k[0], k[1], k[2], k[3], s);
    prune();
    return *this;
  }
  friend LogSeries2 operator-(LogSeries2 a, const LogSeries2& b) {
    LogSeries2 nb = b;
    for (auto& [k, s] : nb.t_) s = -s;
    return a += nb;
  }

  /// The constant series 1 (vacuum-valued), exact everywhere.
  static LogSeries2 one() {
    LogSeries2 s;
    s.add(0, 0, 0, 0, State::vacuum());
    return s;
  }

  friend bool operator==(const LogSeries2& a, const LogSeries2& b) {
    return a.t_ == b.t_;
  }

 private:
  Terms t_;
};

/// D_z = d/dz + z^{-1} d/dzeta.  Output window is the input window shifted
/// down by one.
LogSeries1 dz(const LogSeries1& s);
/// Per-variable total derivatives on two-variable series.
LogSeries2 dz1(const LogSeries2& s);
LogSeries2 dz2(const LogSeries2& s);

/// theta(12, M) = zeta1 - sum_{n=1}^{M} z1^{-n} z2^{n}/n, the expansion of
/// log(z1 - z2) for |z1| > |z2|; theta(21, M) swaps the variable roles.
/// Scalar-valued (coefficients are multiples of vac).
LogSeries2 theta(int kind, Int order);

/// Cauchy product with sound window intersection.  Throws window_error if
/// the sound output window is empty.
LogSeries2 mul(const LogSeries2& a, const LogSeries2& b);
LogSeries1 mul1(const LogSeries1& a, const LogSeries1& b);

/// s^j / j! by iterated multiplication; j < 0 gives the zero series.
LogSeries2 divided_power(const LogSeries2& s, Int j);

/// Set z1 = z2 = z, zeta1 = zeta2 = zeta (exponents add).
LogSeries1 diagonal(const LogSeries2& s);

/// One symbolic product term in the domain of an iota-expansion map:
/// coeff * z1^{e1} zeta1^{q1} z2^{e2} zeta2^{q2} z12^{e12} zeta12^{q12}.
struct IotaTerm {
  Scalar coeff = Scalar(1);
  Int e_z1 = 0, e_zeta1 = 0;
  Int e_z2 = 0, e_zeta2 = 0;
  Int e_z12 = 0, e_zeta12 = 0;
};
using IotaExpr = std::vector<IotaTerm>;

enum class IotaKind { z1z2, z2z1, z2z12 };

/// Homomorphic series expansion of expr in the domain selected by kind,
/// truncated to the given order.  For kinds z1z2/z2z1 the output variables
/// are (z1, zeta1), (z2, zeta2); for z2z12 they are (z2, zeta2), (z12, zeta12).
LogSeries2 iota_subst(IotaKind kind, const IotaExpr& expr, Int order);

}  // namespace logva
