/**
 * @file  series.cpp
 * @brief Windowed log-Laurent series arithmetic (see series.hpp).
 */
#include "logva/series.hpp"

#include <algorithm>

namespace logva {
namespace {

/// Interval of exponents where a factor may be nonzero: everything outside
/// the window is potentially nonzero; inside the window only the stored
/// support matters.  Returns {lo, hi}; lo > hi means "identically zero".
struct PossSupport {
  Int lo, hi;
  bool empty() const { return lo > hi; }
};

template <class Terms, class Proj>
PossSupport possible_support(const Window& w, const Terms& terms, Proj var_exp) {
  Int slo = kPosInf, shi = kNegInf;
  for (const auto& [k, s] : terms) {
    (void)s;
    slo = std::min(slo, var_exp(k));
    shi = std::max(shi, var_exp(k));
  }
  Int lo = (w.lo > kNegInf) ? kNegInf : slo;
  Int hi = (w.hi < kPosInf) ? kPosInf : shi;
  return {lo, hi};
}

/// Sound window of a convolution of two factors with windows aw/bw and
/// possible supports ap/bp: an output exponent m is certified only when no
/// split m = p + q puts p in an unknown region of one factor while q is
/// possibly nonzero for the other.
Window combine_windows(const Window& aw, const PossSupport& ap, const Window& bw,
                       const PossSupport& bp, const char* what) {
  Window out;
  if (aw.lo > kNegInf && !bp.empty()) out.lo = std::max(out.lo, sat_add(aw.lo, bp.hi));
  if (bw.lo > kNegInf && !ap.empty()) out.lo = std::max(out.lo, sat_add(bw.lo, ap.hi));
  if (aw.hi < kPosInf && !bp.empty()) out.hi = std::min(out.hi, sat_add(aw.hi, bp.lo));
  if (bw.hi < kPosInf && !ap.empty()) out.hi = std::min(out.hi, sat_add(bw.hi, ap.lo));
  if (out.empty())
    throw window_error(std::string(what) + ": sound output window is empty");
  return out;
}

/// Pointwise product of coefficient states; at most one factor may be a
/// genuine (non-vacuum) state.
State state_mul(const State& a, const State& b) {
  auto vac_coeff = [](const State& s, Scalar& c) {
    if (s.is_zero()) {
      c = Scalar();
      return true;
    }
    if (s.size() == 1 && s.terms().begin()->first.is_vacuum()) {
      c = s.terms().begin()->second;
      return true;
    }
    return false;
  };
  Scalar c;
  if (vac_coeff(a, c)) return c * b;
  if (vac_coeff(b, c)) return c * a;
  throw std::invalid_argument("mul: both factors are state-valued");
}

}  // namespace

LogSeries1 dz(const LogSeries1& s) {
  LogSeries1 out;
  out.window = {sat_add(s.window.lo, -1), sat_add(s.window.hi, -1)};
  for (const auto& [key, st] : s.terms()) {
    auto [m, k] = key;
    // D_z(z^m zeta^k) = m z^{m-1} zeta^k + k z^{m-1} zeta^{k-1}
    if (m != 0) out.add(m - 1, k, Scalar(m) * st);
    if (k != 0) out.add(m - 1, k - 1, Scalar(k) * st);
  }
  out.prune();
  return out;
}

LogSeries2 dz1(const LogSeries2& s) {
  LogSeries2 out;
  out.w1 = {sat_add(s.w1.lo, -1), sat_add(s.w1.hi, -1)};
  out.w2 = s.w2;
  for (const auto& [k, st] : s.terms()) {
    if (k[0] != 0) out.add(k[0] - 1, k[1], k[2], k[3], Scalar(k[0]) * st);
    if (k[1] != 0) out.add(k[0] - 1, k[1] - 1, k[2], k[3], Scalar(k[1]) * st);
  }
  out.prune();
  return out;
}

LogSeries2 dz2(const LogSeries2& s) {
  LogSeries2 out;
  out.w1 = s.w1;
  out.w2 = {sat_add(s.w2.lo, -1), sat_add(s.w2.hi, -1)};
  for (const auto& [k, st] : s.terms()) {
    if (k[2] != 0) out.add(k[0], k[1], k[2] - 1, k[3], Scalar(k[2]) * st);
    if (k[3] != 0) out.add(k[0], k[1], k[2] - 1, k[3] - 1, Scalar(k[3]) * st);
  }
  out.prune();
  return out;
}

LogSeries2 theta(int kind, Int order) {
  if (order < 0) throw std::invalid_argument("theta: order must be >= 0");
  LogSeries2 s;
  State vac = State::vacuum();
  if (kind == 12) {
    s.add(0, 1, 0, 0, vac);
    for (Int n = 1; n <= order; ++n)
      s.add(-n, 0, n, 0, Scalar(Rat(-1, static_cast<long>(n))) * vac);
    s.w1 = {-order, kPosInf};
    s.w2 = {kNegInf, order};
  } else if (kind == 21) {
    s.add(0, 0, 0, 1, vac);
    for (Int n = 1; n <= order; ++n)
      s.add(n, 0, -n, 0, Scalar(Rat(-1, static_cast<long>(n))) * vac);
    s.w1 = {kNegInf, order};
    s.w2 = {-order, kPosInf};
  } else {
    throw std::invalid_argument("theta: kind must be 12 or 21");
  }
  return s;
}

LogSeries2 mul(const LogSeries2& a, const LogSeries2& b) {
  auto ap1 = possible_support(a.w1, a.terms(), [](const LogSeries2::Key& k) { return k[0]; });
  auto bp1 = possible_support(b.w1, b.terms(), [](const LogSeries2::Key& k) { return k[0]; });
  auto ap2 = possible_support(a.w2, a.terms(), [](const LogSeries2::Key& k) { return k[2]; });
  auto bp2 = possible_support(b.w2, b.terms(), [](const LogSeries2::Key& k) { return k[2]; });
  LogSeries2 out;
  out.w1 = combine_windows(a.w1, ap1, b.w1, bp1, "mul(z1)");
  out.w2 = combine_windows(a.w2, ap2, b.w2, bp2, "mul(z2)");
  for (const auto& [ka, sa] : a.terms()) {
    for (const auto& [kb, sb] : b.terms()) {
      Int m1 = ka[0] + kb[0], m2 = ka[2] + kb[2];
      if (!out.w1.contains(m1) || !out.w2.contains(m2)) continue;
      out.add(m1, ka[1] + kb[1], m2, ka[3] + kb[3], state_mul(sa, sb));
    }
  }
  return out;
}

LogSeries1 mul1(const LogSeries1& a, const LogSeries1& b) {
  auto ap = possible_support(a.window, a.terms(),
                             [](const LogSeries1::Key& k) { return k.first; });
  auto bp = possible_support(b.window, b.terms(),
                             [](const LogSeries1::Key& k) { return k.first; });
  LogSeries1 out;
  out.window = combine_windows(a.window, ap, b.window, bp, "mul1");
  for (const auto& [ka, sa] : a.terms()) {
    for (const auto& [kb, sb] : b.terms()) {
      Int m = ka.first + kb.first;
      if (!out.window.contains(m)) continue;
      out.add(m, ka.second + kb.second, state_mul(sa, sb));
    }
  }
  return out;
}

LogSeries2 divided_power(const LogSeries2& s, Int j) {
  if (j < 0) return LogSeries2{};  // x^{(k)} = 0 for k < 0, exact everywhere
  LogSeries2 out = LogSeries2::one();
  for (Int i = 0; i < j; ++i) out = mul(out, s);
  if (j >= 2) {
    LogSeries2 scaled;
    scaled.w1 = out.w1;
    scaled.w2 = out.w2;
    Scalar inv(Rat(1) / factorial(j));
    for (const auto& [k, st] : out.terms()) scaled.add(k[0], k[1], k[2], k[3], inv * st);
    return scaled;
  }
  return out;
}

LogSeries1 diagonal(const LogSeries2& s) {
  auto p1 = possible_support(s.w1, s.terms(), [](const LogSeries2::Key& k) { return k[0]; });
  auto p2 = possible_support(s.w2, s.terms(), [](const LogSeries2::Key& k) { return k[2]; });
  LogSeries1 out;
  out.window = combine_windows(s.w1, p1, s.w2, p2, "diagonal");
  for (const auto& [k, st] : s.terms()) {
    Int m = k[0] + k[2];
    if (!out.window.contains(m)) continue;
    out.add(m, k[1] + k[3], st);
  }
  return out;
}

namespace {

LogSeries2 unit_monomial(Int m1, Int k1, Int m2, Int k2) {
  LogSeries2 s;
  s.add(m1, k1, m2, k2, State::vacuum());
  return s;
}

/// Binomial-series expansion sum_j C(e,j) x^{e-j} y^j (truncated at order)
/// written into variable slots chosen by the caller.
LogSeries2 binom_series(Int e, Int order, bool x_is_var1, const Scalar& y_sign,
                        Window wx, Window wy) {
  LogSeries2 s;
  Int jmax = (e >= 0) ? e : order;
  Scalar sign(1);
  for (Int j = 0; j <= jmax; ++j) {
    Scalar c = Scalar(binomial(e, j)) * sign;
    if (x_is_var1)
      s.add(e - j, 0, j, 0, c * State::vacuum());
    else
      s.add(j, 0, e - j, 0, c * State::vacuum());
    sign = sign * y_sign;
  }
  if (x_is_var1) {
    s.w1 = wx;
    s.w2 = wy;
  } else {
    s.w1 = wy;
    s.w2 = wx;
  }
  return s;
}

LogSeries2 expand_factor(IotaKind kind, const IotaTerm& t, Int order) {
  LogSeries2 acc = LogSeries2::one();
  auto mulin = [&acc](const LogSeries2& f) { acc = mul(acc, f); };

  switch (kind) {
    case IotaKind::z1z2:
    case IotaKind::z2z1: {
      if (t.e_z1 != 0 || t.e_zeta1 != 0)
        mulin(unit_monomial(t.e_z1, t.e_zeta1, 0, 0));
      if (t.e_z2 != 0 || t.e_zeta2 != 0)
        mulin(unit_monomial(0, 0, t.e_z2, t.e_zeta2));
      if (t.e_z12 != 0) {
        if (kind == IotaKind::z1z2) {
          // z12^e = sum_j C(e,j) z1^{e-j} (-z2)^j, |z1| > |z2|
          Window wx{t.e_z12 >= 0 ? kNegInf : t.e_z12 - order, kPosInf};
          Window wy{kNegInf, t.e_z12 >= 0 ? kPosInf : order};
          mulin(binom_series(t.e_z12, order, /*x_is_var1=*/true, Scalar(-1), wx, wy));
        } else {
          // z12^e = (-1)^e sum_j C(e,j) z2^{e-j} (-z1)^j, |z2| > |z1|
          Window wx{t.e_z12 >= 0 ? kNegInf : t.e_z12 - order, kPosInf};
          Window wy{kNegInf, t.e_z12 >= 0 ? kPosInf : order};
          LogSeries2 s =
              binom_series(t.e_z12, order, /*x_is_var1=*/false, Scalar(-1), wx, wy);
          if ((t.e_z12 % 2 + 2) % 2 == 1) {
            LogSeries2 neg;
            neg.w1 = s.w1;
            neg.w2 = s.w2;
            for (const auto& [k, st] : s.terms()) neg.add(k[0], k[1], k[2], k[3], -st);
            s = neg;
          }
          mulin(s);
        }
      }
      for (Int q = 0; q < t.e_zeta12; ++q)
        mulin(theta(kind == IotaKind::z1z2 ? 12 : 21, order));
      break;
    }
    case IotaKind::z2z12: {
      // Output variable pairs: var1 = (z2, zeta2), var2 = (z12, zeta12).
      if (t.e_z2 != 0 || t.e_zeta2 != 0)
        mulin(unit_monomial(t.e_z2, t.e_zeta2, 0, 0));
      if (t.e_z12 != 0 || t.e_zeta12 != 0)
        mulin(unit_monomial(0, 0, t.e_z12, t.e_zeta12));
      if (t.e_z1 != 0) {
        // z1^e = (z2 + z12)^e = sum_j C(e,j) z2^{e-j} z12^j, |z2| > |z12|
        Window wx{t.e_z1 >= 0 ? kNegInf : t.e_z1 - order, kPosInf};
        Window wy{kNegInf, t.e_z1 >= 0 ? kPosInf : order};
        mulin(binom_series(t.e_z1, order, /*x_is_var1=*/true, Scalar(1), wx, wy));
      }
      for (Int q = 0; q < t.e_zeta1; ++q) {
        // iota_{z2,z12} zeta1 = zeta2 - sum_{j>=1} (-1)^j z12^j z2^{-j} / j
        LogSeries2 s;
        s.add(0, 1, 0, 0, State::vacuum());
        for (Int j = 1; j <= order; ++j) {
          Rat c = Rat((j % 2) ? 1 : -1, static_cast<long>(j));
          s.add(-j, 0, j, 0, Scalar(c) * State::vacuum());
        }
        s.w1 = {-order, kPosInf};
        s.w2 = {kNegInf, order};
        mulin(s);
      }
      break;
    }
  }

  if (!(t.coeff == Scalar(1))) {
    LogSeries2 scaled;
    scaled.w1 = acc.w1;
    scaled.w2 = acc.w2;
    for (const auto& [k, st] : acc.terms())
      scaled.add(k[0], k[1], k[2], k[3], t.coeff * st);
    return scaled;
  }
  return acc;
}

}  // namespace

LogSeries2 iota_subst(IotaKind kind, const IotaExpr& expr, Int order) {
  bool first = true;
  LogSeries2 out;
  for (const auto& t : expr) {
    LogSeries2 f = expand_factor(kind, t, order);
    if (first) {
      out = f;
      first = false;
    } else {
      out += f;
    }
  }
  return out;
}

}  // namespace logva
