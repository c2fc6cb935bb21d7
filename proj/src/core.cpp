/**
 * @file  core.cpp
 * @brief The generic field engine: exact Y(a,z)v coefficients by recursion
 *        through the regularized product (see core.hpp).
 */
#include "logva/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace logva {

Int& locality_order_pad() {
  thread_local Int pad = 0;
  return pad;
}

Int locality_order(const Model& M, const Rat& wa, const Rat& wb) {
  (void)M;
  Int n0 = rat_ceil(wa + wb);
  if (n0 < 0) n0 = 0;
  if (n0 % 2 != 0) ++n0;  // even, per the locality-order convention
  return n0 + locality_order_pad();
}

TensorState braid(const Model& M, const TensorState& t) {
  return apply_slots(M.S, 0, 1, t, M.parity);
}

TensorState braid_pow(const Model& M, const TensorState& t, int s) {
  TensorState cur = t;
  for (int i = 0; i < s && !cur.is_zero(); ++i) cur = braid(M, cur);
  return cur;
}

namespace {

/// Coefficients of (q^p / p!) where q = -sum_{j>=1} x^j / j: the series part
/// of the divided power theta12^{(s)} along the coupled diagonal degree d
/// (each series factor contributes z1^{-j} z2^{j}).
class ThetaPowTable {
 public:
  // e(p, d): coefficient of x^d in q^p / p!.
  Rat get(Int p, Int d) {
    if (p < 0 || d < 0) return Rat(0);
    if (d < p) return Rat(0);  // q has valuation 1
    extend(p, d);
    return rows_[static_cast<size_t>(p)].count(d)
               ? rows_[static_cast<size_t>(p)][d]
               : Rat(0);
  }

 private:
  void extend(Int p, Int d) {
    if (rows_.empty()) rows_.push_back({{0, Rat(1)}});
    while (static_cast<Int>(rows_.size()) <= p) {
      Int pp = static_cast<Int>(rows_.size());
      rows_.push_back({});
      (void)pp;
    }
    for (Int pp = 1; pp <= p; ++pp) {
      auto& row = rows_[static_cast<size_t>(pp)];
      auto& prev = rows_[static_cast<size_t>(pp - 1)];
      Int have = row.empty() ? pp - 1 : row.rbegin()->first;
      for (Int dd = have + 1; dd <= d; ++dd) {
        Rat acc(0);
        for (Int j = 1; j <= dd; ++j) {
          auto it = prev.find(dd - j);
          if (it != prev.end()) acc += Rat(-1, static_cast<long>(j)) * it->second;
        }
        acc /= static_cast<long>(pp);
        acc.canonicalize();
        if (acc != 0) row[dd] = acc;
        else row.emplace(dd, Rat(0));  // keep the high-water mark dense
      }
      if (row.empty() || row.rbegin()->first < d) row.emplace(d, row.count(d) ? row[d] : Rat(0));
    }
  }

  std::vector<std::map<Int, Rat>> rows_;
};

ThetaPowTable& theta_pow_table() {
  thread_local ThetaPowTable t;
  return t;
}

/// Coefficient with which z^{a} zeta^{bpre} feeds z^{a-K} zeta^{bpost} under
/// the divided power D_z^{(K)}.
Rat dzK_coeff(Int K, Int a, Int bpre, Int bpost) {
  if (bpost > bpre || bpost < 0) return Rat(0);
  std::map<Int, Rat> cur{{bpre, Rat(1)}};
  for (Int i = 0; i < K; ++i) {
    std::map<Int, Rat> next;
    Int ze = a - i;
    for (const auto& [g, c] : cur) {
      if (ze != 0) next[g] += Rat(static_cast<long>(ze)) * c;
      if (g != 0) next[g - 1] += Rat(static_cast<long>(g)) * c;
    }
    cur = std::move(next);
  }
  auto it = cur.find(bpost);
  if (it == cur.end()) return Rat(0);
  Rat r = it->second / factorial(K);
  r.canonicalize();
  return r;
}

}  // namespace

State y_coeff(const Model& M, const Monomial& a, const Monomial& v, Int m, Int k) {
  if (k < 0 || k > M.zeta_cap) return State();
  if (a.is_vacuum()) return (m == 0 && k == 0) ? State(v) : State();
  // Grading bound: the coefficient has weight wt(a) + wt(v) + m.
  if (M.weight(a) + M.weight(v) + Rat(static_cast<long>(m)) < 0) return State();

  auto key = std::make_tuple(a, v, m, k);
  auto& memo = M.cache->ycoeff;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  State res;
  if (M.is_primitive(a)) {
    res = M.prim_coeff(a, v, m, k);
  } else {
    Decomp d = M.decompose(a);
    res = Scalar(d.scale) * derived_coeff(M, d.prim, d.n, d.rest, v, m, k);
  }
  memo.emplace(std::move(key), res);
  return res;
}

State y_coeff(const Model& M, const State& a, const State& v, Int m, Int k) {
  State out;
  for (const auto& [am, ac] : a.terms())
    for (const auto& [vm, vc] : v.terms())
      out.axpy(ac * vc, y_coeff(M, am, vm, m, k));
  return out;
}

State derived_coeff(const Model& M, const Monomial& g, Int n, const Monomial& w,
                    const Monomial& c, Int m, Int k) {
  const Rat wg = M.weight(g), ww = M.weight(w), wc = M.weight(c);
  const Int N = locality_order(M, wg, ww);
  const Int K = N - 1 - n;
  // Joint support bounds of the regularized product (certified by locality
  // for the s-summed product): z1 >= -B1, z2 >= -B2.
  const Int B1 = std::max<Int>(0, rat_ceil(wg + wc));
  const Int B2 = std::max<Int>(0, rat_ceil(ww + wc));

  // S^s (g (x) w), s = 0, 1, ... until nilpotency.
  std::vector<TensorState> Spow;
  {
    TensorState cur{TensorMono{g, w}};
    int s = 0;
    while (!cur.is_zero()) {
      if (s > M.s_nilp_cap) throw cap_error("derived_coeff: braiding nilpotency cap");
      Spow.push_back(cur);
      cur = braid(M, cur);
      ++s;
    }
  }

  auto& th = theta_pow_table();

  // Coefficient of z1^{m1} zeta1^{k1} z2^{m2} zeta2^{k2} in
  //   sum_s theta12^{(s)} z12^N (Y (x) Y)(S^s(g (x) w)) c.
  auto F_coeff = [&](Int m1, Int k1, Int m2, Int k2) -> State {
    State out;
    for (size_t s = 0; s < Spow.size(); ++s) {
      for (Int u = 0; u <= std::min<Int>(static_cast<Int>(s), k1); ++u) {
        const Int p = static_cast<Int>(s) - u;  // series part power
        const Rat inv_ufac = Rat(1) / factorial(u);
        for (Int t = 0; t <= N; ++t) {
          const Rat zc = binomial(N, t) * ((((N - t) % 2) != 0) ? Rat(-1) : Rat(1));
          // diagonal degree d of the theta series part
          const Int dmax = m2 + B2 - (N - t);
          for (Int d = (p == 0 ? 0 : p); d <= dmax; ++d) {
            if (p == 0 && d > 0) break;
            Rat tc = th.get(p, d);
            if (tc == 0) continue;
            const Int p1 = -d + t, p2 = d + (N - t);
            const Int mi = m2 - p2, mo = m1 - p1, ko = k1 - u;
            Rat coef = tc * inv_ufac * zc;
            coef.canonicalize();
            for (const auto& [tm, q] : Spow[s].terms()) {
              State inner = y_coeff(M, tm[1], c, mi, k2);
              if (inner.is_zero()) continue;
              State outer = y_coeff(M, State(tm[0]), inner, mo, ko);
              out.axpy(q * Scalar(coef), outer);
            }
          }
        }
      }
    }
    return out;
  };

  State res;
  for (Int m2 = -B2; m2 <= m + B1 + K; ++m2) {
    const Int m1pre = m - m2 + K;
    for (Int k2 = 0; k2 <= M.zeta_cap; ++k2) {
      const Int k1post = k - k2;
      if (k1post < 0) break;
      for (Int k1pre = k1post; k1pre <= k1post + K; ++k1pre) {
        Rat dcf = dzK_coeff(K, m1pre, k1pre, k1post);
        if (dcf == 0) continue;
        State h = F_coeff(m1pre, k1pre, m2, k2);
        res.axpy(Scalar(dcf), h);
      }
    }
  }
  return res;
}

State mode_action(const Model& M, const State& a, Int n, const State& v) {
  return y_coeff(M, a, v, -n - 1, 0);
}

State n_product(const Model& M, const State& a, const State& b, Int n) {
  return y_coeff(M, a, b, -n - 1, 0);
}

State n_product(const Model& M, const TensorState& t, Int n) {
  State out;
  for (const auto& [tm, q] : t.terms())
    out.axpy(q, y_coeff(M, tm[0], tm[1], -n - 1, 0));
  return out;
}

LogSeries1 field_eval(const Model& M, const State& a, const State& v, Int hi) {
  LogSeries1 out;
  out.window = {kNegInf, hi};
  if (a.is_zero() || v.is_zero()) return out;
  Int lo = -rat_ceil(M.max_weight(a) + M.max_weight(v));
  for (Int m = std::min<Int>(lo, hi); m <= hi; ++m)
    for (Int k = 0; k <= M.zeta_cap; ++k) out.add(m, k, y_coeff(M, a, v, m, k));
  return out;
}

std::map<std::pair<Int, Int>, State> singular_ope(const Model& M, const State& a,
                                                  const State& b, Int n_lo) {
  std::map<std::pair<Int, Int>, State> out;
  const Int n_hi = rat_ceil(M.max_weight(a) + M.max_weight(b));
  TensorState t = TensorState::product({&a, &b});
  Int i = 0;
  while (!t.is_zero()) {
    if (i > M.s_nilp_cap) throw cap_error("singular_ope: braiding nilpotency cap");
    Int lo = (i == 0) ? 0 : n_lo;
    for (Int n = lo; n <= n_hi; ++n) {
      State s = n_product(M, t, n);
      if (!s.is_zero()) out[{i, n}] = s;
    }
    t = braid(M, t);
    ++i;
  }
  return out;
}

std::string render_ope(const Model& M, const std::map<std::pair<Int, Int>, State>& ope,
                       bool human) {
  // Physics rendering per the OPE display convention: the (i, n) entry reads
  // z^{-n-1} log^i(z) * (-1)^i/i! * state.
  std::vector<std::pair<std::pair<Int, Int>, State>> items(ope.begin(), ope.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return x.first.first < y.first.first;
    return x.first.second > y.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [in, st] : items) {
    auto [i, n] = in;
    Scalar fac = Scalar(((i % 2) ? Rat(-1) : Rat(1)) / factorial(i));
    State disp = fac * st;
    if (!first) os << " + ";
    first = false;
    std::string piece;
    Int zp = -n - 1;
    if (zp != 0) piece += "z^" + std::to_string(zp) + " * ";
    if (i == 1)
      piece += "log(z) * ";
    else if (i > 1)
      piece += "log(z)^" + std::to_string(i) + " * ";
    std::string ss = M.render(disp, human);
    piece += (disp.size() > 1) ? "(" + ss + ")" : ss;
    os << piece;
  }
  if (first) os << "0";
  return os.str();
}

Field identity_field() {
  Field f;
  f.parity = 0;
  f.weight = Rat(0);
  f.coeff = [](const State& v, Int m, Int k) {
    return (m == 0 && k == 0) ? v : State();
  };
  return f;
}

Field field_of(const Model& M, const State& a) {
  Field f;
  f.parity = M.parity_of(a);
  f.weight = M.max_weight(a);
  f.coeff = [&M, a](const State& v, Int m, Int k) { return y_coeff(M, a, v, m, k); };
  return f;
}

Field dz_field(const Model& M, const Field& f) {
  (void)M;
  Field g;
  g.parity = f.parity;
  g.weight = f.weight;  // D_z shifts mode structure, not state weight
  auto base = f.coeff;
  g.coeff = [base](const State& v, Int m, Int k) {
    // [z^m zeta^k] D_z F = (m+1) F_{m+1,k} + (k+1) F_{m+1,k+1}
    State out = Scalar(m + 1) * base(v, m + 1, k);
    out += Scalar(k + 1) * base(v, m + 1, k + 1);
    return out;
  };
  return g;
}

Field normal_order(const Model& M, const Field& a, const Field& b) {
  Field f;
  f.parity = a.parity ^ b.parity;
  f.weight = a.weight + b.weight;
  int sign = (a.parity & b.parity) ? -1 : 1;
  auto ac = a.coeff, bc = b.coeff;
  Rat wa = a.weight, wb = b.weight;
  const Model* Mp = &M;
  Int zc = M.zeta_cap;
  f.coeff = [ac, bc, wa, wb, Mp, zc, sign](const State& v, Int m, Int k) {
    State out;
    Rat wv = Mp->max_weight(v);
    // a_+(z) b(z) v : creation part of a (z-exponents p >= 0).
    Int qlo = -rat_ceil(wb + wv);
    for (Int p = 0; p <= m - qlo; ++p) {
      for (Int kb = 0; kb <= k; ++kb) {
        State inner = bc(v, m - p, kb);
        if (inner.is_zero()) continue;
        out += ac(inner, p, k - kb);
      }
    }
    // +/- b(z) a_-(z) v : annihilation part of a (z-exponents p < 0).
    Int plo = -rat_ceil(wa + wv);
    for (Int p = plo; p < 0; ++p) {
      for (Int ka = 0; ka <= k; ++ka) {
        State inner = ac(v, p, ka);
        if (inner.is_zero()) continue;
        State term = bc(inner, m - p, k - ka);
        if (sign < 0) out -= term;
        else out += term;
      }
    }
    (void)zc;
    return out;
  };
  return f;
}

LogSeries1 eval(const Model& M, const Field& f, const State& v, Int hi) {
  LogSeries1 out;
  out.window = {kNegInf, hi};
  Int lo = -rat_ceil(f.weight + M.max_weight(v)) - 2;
  for (Int m = std::min<Int>(lo, hi); m <= hi; ++m)
    for (Int k = 0; k <= M.zeta_cap; ++k) out.add(m, k, f.coeff(v, m, k));
  return out;
}

State theta_map(const Model& M, const Field& f) {
  State vac = M.vacuum;
  Int lo = -rat_ceil(f.weight) - 2;
  for (Int m = lo; m < 0; ++m)
    for (Int k = 0; k <= M.zeta_cap; ++k)
      if (!f.coeff(vac, m, k).is_zero())
        throw std::runtime_error("theta_map: field is singular on the vacuum");
  for (Int k = 1; k <= M.zeta_cap; ++k)
    if (!f.coeff(vac, 0, k).is_zero())
      throw std::runtime_error("theta_map: field has zeta terms on the vacuum");
  return f.coeff(vac, 0, 0);
}

}  // namespace logva
