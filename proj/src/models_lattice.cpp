/**
 * @file  models_lattice.cpp
 * @brief The logarithmic lattice algebra for a positive-definite integral
 *        Gram matrix: free bosons with their logarithmic partners h~_i
 *        tensored with the twisted group algebra C_eps[Q].  Basis monomials
 *        carry a boson/tilde word plus a lattice point lambda; the vertex
 *        operators are
 *
 *   Gamma_lam(z) = E^-(z) E^+(z) e^{zeta lam_0^n} e^lam z^{(lam|mu)} eps(lam, mu),
 *
 * with E^-(z) = exp(sum_{p>0} lam_{-p} z^p/p), E^+(z) = exp(-sum lam_p z^-p/p),
 * and lam_0^n the tilde-derivative part of the zero mode.  The braiding map is
 *   S = -sum_kl G_kl d_k (x) d_l - sum_k (d_k (x) s_k + s_k (x) d_k),
 * where d_k = d/dh~_k and s_k = (alpha_k | lambda) is the semisimple charge
 * reading.  Central charge = rank.
 */
#include <cmath>

#include "logva/models.hpp"
#include "models_util.hpp"

namespace logva {

namespace {

Letter let(int tag, Int mode) {
  return Letter{static_cast<int32_t>(tag), static_cast<int32_t>(mode)};
}

/// Canonical form: an all-zero lattice vector is stored empty, so that the
/// bare vacuum monomial is Monomial{}.
Monomial norm_lat(Monomial m) {
  bool any = false;
  for (int32_t v : m.lat) any = any || (v != 0);
  if (!any) m.lat.clear();
  return m;
}

State map_lat(const State& s, const std::function<Monomial(Monomial)>& f,
              const std::function<Scalar(const Monomial&)>& c) {
  State out;
  for (const auto& [m, q] : s.terms()) out.add(f(m), q * c(m));
  return out;
}

}  // namespace

Model lattice_logva(const std::vector<std::vector<Int>>& gram) {
  const int r = static_cast<int>(gram.size());
  Model M;
  M.name = "lat";
  detail::LetterParity lp = [](const Letter&) { return 0; };

  auto ip = [gram, r](const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
    long s = 0;
    for (int i = 0; i < static_cast<int>(a.size()) && i < r; ++i)
      for (int j = 0; j < static_cast<int>(b.size()) && j < r; ++j)
        s += static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
             a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return s;
  };
  auto alpha_dot = [gram, r](int i, const std::vector<int32_t>& lam) {
    long s = 0;
    for (int j = 0; j < static_cast<int>(lam.size()) && j < r; ++j)
      s += static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
           lam[static_cast<size_t>(j)];
    return s;
  };
  // Bimultiplicative 2-cocycle: eps(a_i, a_j) = 1 for i < j,
  // eps(a_i, a_i) = (-1)^{|a_i|^2(|a_i|^2+1)/2},
  // eps(a_i, a_j) = (-1)^{(a_i|a_j) + |a_i|^2 |a_j|^2} for i > j.
  auto eps = [gram, r](const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
    long e = 0;
    for (int i = 0; i < r; ++i) {
      long ai = (i < static_cast<int>(a.size())) ? a[static_cast<size_t>(i)] : 0;
      if (ai == 0) continue;
      for (int j = 0; j < r; ++j) {
        long bj = (j < static_cast<int>(b.size())) ? b[static_cast<size_t>(j)] : 0;
        if (bj == 0) continue;
        long g = static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        long gii = static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(i)]);
        long gjj = static_cast<long>(gram[static_cast<size_t>(j)][static_cast<size_t>(j)]);
        long x = 0;
        if (i == j) x = gii * (gii + 1) / 2;
        else if (i > j) x = g + gii * gjj;
        e += ai * bj * x;
      }
    }
    return (e % 2 != 0) ? -1 : 1;
  };

  M.parity = [ip](const Monomial& m) { return static_cast<int>(ip(m.lat, m.lat) & 1); };
  M.weight = [ip](const Monomial& m) {
    long w = 0;
    for (const auto& l : m.word) w += l.mode;
    Rat res(ip(m.lat, m.lat), 2UL);
    res.canonicalize();
    res += w;
    return res;
  };

  // T = boson derivation + lambda_{-1} = sum_i lam_i x_{i,1}.
  {
    LinOp bos = detail::letter_map_derivation(
        [](const Letter& l) {
          if (l.mode == 0)
            return std::vector<std::pair<Letter, Rat>>{{let(l.tag, 1), Rat(1)}};
          return std::vector<std::pair<Letter, Rat>>{
              {let(l.tag, l.mode + 1), Rat(l.mode + 1)}};
        },
        lp, Rat(1));
    M.T.parity = 0;
    M.T.weight_shift = Rat(1);
    M.T.rule = [bos, lp](const Monomial& m) {
      State out = bos(m);
      for (size_t i = 0; i < m.lat.size(); ++i) {
        if (m.lat[i] == 0) continue;
        out.axpy(Scalar(Rat(m.lat[i])),
                 detail::word_mult(m, let(static_cast<int>(i), 1), lp));
      }
      return out;
    };
  }

  // Braiding map.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Rat g = Rat(static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]));
      if (g == 0) continue;
      LinOp phi = detail::deriv_op(let(i, 0), lp);
      auto base = phi.rule;
      Rat c = -g;
      phi.rule = [base, c](const Monomial& m) { return Scalar(c) * base(m); };
      M.S.pairs.push_back({phi, detail::deriv_op(let(j, 0), lp)});
    }
  }
  for (int i = 0; i < r; ++i) {
    LinOp d = detail::deriv_op(let(i, 0), lp);
    LinOp md = d;
    auto base = d.rule;
    md.rule = [base](const Monomial& m) { return -base(m); };
    LinOp sig;
    sig.parity = 0;
    sig.weight_shift = Rat(0);
    sig.rule = [alpha_dot, i](const Monomial& m) {
      long c = alpha_dot(i, m.lat);
      return c == 0 ? State() : State(m, Scalar(Rat(c)));
    };
    M.S.pairs.push_back({md, sig});
    M.S.pairs.push_back({[&] {
                           LinOp msig = sig;
                           auto sr = sig.rule;
                           msig.rule = [sr](const Monomial& m) { return -sr(m); };
                           return msig;
                         }(),
                         d});
  }

  M.is_primitive = [](const Monomial& m) {
    if (m.word.empty()) return !m.lat.empty();
    return m.word.size() == 1 && m.lat.empty() && m.word[0].mode <= 1;
  };

  M.prim_coeff = [gram, r, lp, ip, alpha_dot, eps](const Monomial& prim,
                                                   const Monomial& v, Int m, Int k) {
    if (!prim.word.empty()) {
      // Boson generators: as in the free boson model, except that the full
      // zero mode a_{i,0} includes the semisimple charge reading.
      int i = prim.word[0].tag;
      const auto& Gi = gram[static_cast<size_t>(i)];
      auto ai_ann = [&](Int p) {  // a_{i,p}, p >= 1
        State out;
        for (int j = 0; j < r; ++j) {
          if (Gi[static_cast<size_t>(j)] == 0) continue;
          out.axpy(Scalar(Rat(static_cast<long>(Gi[static_cast<size_t>(j)]))),
                   detail::word_del(v, let(j, p), lp));
        }
        return out;
      };
      auto ai_zero = [&]() {  // a_{i,0} = sum_j G_ij d_j + (alpha_i|lambda)
        State out = ai_ann(0);
        long c = alpha_dot(i, v.lat);
        if (c != 0) out.add(v, Scalar(Rat(c)));
        return out;
      };
      if (prim.word[0].mode == 0) {  // a~_i(z)
        if (k == 0) {
          if (m >= 0) return detail::word_mult(v, let(i, m), lp);
          return Scalar(Rat(1, static_cast<long>(m))) * ai_ann(-m);
        }
        if (k == 1 && m == 0) return ai_zero();
        return State();
      }
      // a_i(z)
      if (k != 0) return State();
      if (m >= 0) return Scalar(m + 1) * detail::word_mult(v, let(i, m + 1), lp);
      if (m == -1) return ai_zero();
      return ai_ann(-m - 1);
    }

    // Vertex operator Gamma_lam.
    const std::vector<int32_t>& lam = prim.lat;
    const Int e = m - ip(lam, v.lat);

    // zeta part: (lam_0^n)^k / k! applied to the tildes.
    State cur(v);
    for (Int t = 0; t < k && !cur.is_zero(); ++t) {
      State next;
      for (const auto& [mono, c] : cur.terms()) {
        for (int j = 0; j < r; ++j) {
          long g = 0;
          for (int i = 0; i < static_cast<int>(lam.size()); ++i)
            g += static_cast<long>(lam[static_cast<size_t>(i)]) *
                 static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          if (g == 0) continue;
          next.axpy(c * Scalar(Rat(g)), detail::word_del(mono, let(j, 0), lp));
        }
      }
      cur = next;
    }
    if (cur.is_zero()) return State();
    cur = Scalar(Rat(1) / factorial(k)) * cur;

    // E^+ = exp(-sum_{p>=1} lam_p z^{-p} / p): z-exponent -> state.
    Int maxmode = 0;
    for (const auto& l : v.word) maxmode = std::max<Int>(maxmode, l.mode);
    std::map<Int, State> mp{{0, cur}};
    for (Int p = 1; p <= maxmode; ++p) {
      auto Dp = [&](const State& s) {  // -(1/p) lam_p
        State out;
        for (const auto& [mono, c] : s.terms())
          for (int j = 0; j < r; ++j) {
            long g = 0;
            for (int i = 0; i < static_cast<int>(lam.size()); ++i)
              g += static_cast<long>(lam[static_cast<size_t>(i)]) *
                   static_cast<long>(
                       gram[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (g == 0) continue;
            out.axpy(c * Scalar(Rat(-g, static_cast<unsigned long>(p))),
                     detail::word_del(mono, let(j, p), lp));
          }
        return out;
      };
      std::map<Int, State> next;
      for (const auto& [z, st] : mp) {
        State pw = st;
        Int t = 0;
        Rat tf(1);
        while (!pw.is_zero()) {
          State add = Scalar(Rat(1) / tf) * pw;
          auto& slot = next[z - p * t];
          slot += add;
          ++t;
          tf *= static_cast<long>(t);
          pw = Dp(pw);
        }
      }
      mp = std::move(next);
    }

    // E^- = exp(sum_{p>=1} lam_{-p} z^p / p), lam_{-p}/p = sum_i lam_i x_{i,p};
    // only z-exponents up to the target e are needed.
    Int lo = 0;
    for (const auto& [z, st] : mp) lo = std::min(lo, z);
    for (Int p = 1; p <= e - lo; ++p) {
      auto Up = [&](const State& s) {
        State out;
        for (const auto& [mono, c] : s.terms())
          for (int i = 0; i < static_cast<int>(lam.size()); ++i) {
            if (lam[static_cast<size_t>(i)] == 0) continue;
            out.axpy(c * Scalar(Rat(lam[static_cast<size_t>(i)])),
                     detail::word_mult(mono, let(i, p), lp));
          }
        return out;
      };
      std::map<Int, State> next;
      for (const auto& [z, st] : mp) {
        State pw = st;
        Int t = 0;
        Rat tf(1);
        while (!pw.is_zero() && z + p * t <= e) {
          next[z + p * t] += Scalar(Rat(1) / tf) * pw;
          ++t;
          tf *= static_cast<long>(t);
          pw = Up(pw);
        }
      }
      mp = std::move(next);
    }

    auto it = mp.find(e);
    if (it == mp.end()) return State();

    // Charge shift and cocycle sign.
    int sg = eps(lam, v.lat);
    State out;
    for (const auto& [mono, c] : it->second.terms()) {
      Monomial sh = mono;
      sh.lat.resize(static_cast<size_t>(r), 0);
      for (int i = 0; i < static_cast<int>(lam.size()); ++i)
        sh.lat[static_cast<size_t>(i)] += lam[static_cast<size_t>(i)];
      out.add(norm_lat(sh), sg < 0 ? -c : c);
    }
    return out;
  };

  M.decompose = [](const Monomial& a) {
    Decomp d;
    const Letter& l = a.word.front();
    d.rest = a;
    d.rest.word.erase(d.rest.word.begin());
    if (l.mode == 0) {
      d.prim = Monomial{{let(l.tag, 0)}, {}};
      d.n = -1;
    } else {
      d.prim = Monomial{{let(l.tag, 1)}, {}};
      d.n = -l.mode;
      d.scale = Rat(1, static_cast<long>(l.mode));
    }
    return d;
  };

  for (int i = 0; i < r; ++i) {
    std::string suf = std::to_string(i + 1);
    M.generators.push_back({"a~" + suf, State(Monomial{{let(i, 0)}, {}})});
    M.generators.push_back({"a" + suf, State(Monomial{{let(i, 1)}, {}})});
    std::vector<int32_t> plus(static_cast<size_t>(r), 0), minus(static_cast<size_t>(r), 0);
    plus[static_cast<size_t>(i)] = 1;
    minus[static_cast<size_t>(i)] = -1;
    M.generators.push_back({"e" + suf, State(Monomial{{}, plus})});
    M.generators.push_back({"f" + suf, State(Monomial{{}, minus})});
  }

  {
    std::vector<std::vector<Rat>> g(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            Rat(static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    std::vector<std::vector<Rat>> ginv = detail::mat_inverse(g);
    State w;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rat c = ginv[static_cast<size_t>(i)][static_cast<size_t>(j)] / 2;
        if (c == 0) continue;
        State xij = detail::word_mult(Monomial{{let(j, 1)}, {}}, let(i, 1), lp);
        for (const auto& [mono, q] : xij.terms()) w.add(mono, Scalar(c) * q);
      }
    M.omega = w;
  }
  M.central_charge_expected = Scalar(Rat(r));

  // L0 nilpotent part: 1/2 sum_kl G_kl d_k d_l + sum_k s_k d_k.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat c = Rat(static_cast<long>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)])) / 2;
      if (c == 0) continue;
      LinOp f = detail::deriv_op(let(i, 0), lp);
      auto base = f.rule;
      f.rule = [base, c](const Monomial& m) { return Scalar(c) * base(m); };
      M.l0n_pairs.push_back({f, detail::deriv_op(let(j, 0), lp)});
    }
  for (int i = 0; i < r; ++i) {
    LinOp sig;
    sig.parity = 0;
    sig.weight_shift = Rat(0);
    sig.rule = [alpha_dot, i](const Monomial& m) {
      long c = alpha_dot(i, m.lat);
      return c == 0 ? State() : State(m, Scalar(Rat(c)));
    };
    M.l0n_pairs.push_back({sig, detail::deriv_op(let(i, 0), lp)});
  }

  M.render_mono = [r](const Monomial& m) {
    std::string out;
    bool anylat = false;
    for (int32_t v : m.lat) anylat = anylat || (v != 0);
    if (anylat) {
      std::string ex;
      for (size_t i = 0; i < m.lat.size(); ++i) {
        int32_t v = m.lat[i];
        if (v == 0) continue;
        std::string var = (r == 1) ? "a" : ("a" + std::to_string(i + 1));
        std::string piece;
        if (v == 1) piece = var;
        else if (v == -1) piece = "-" + var;
        else piece = std::to_string(v) + var;
        if (!ex.empty() && v > 0) ex += "+";
        ex += piece;
      }
      out = "e^{" + ex + "}";
    }
    size_t p = 0;
    while (p < m.word.size()) {
      size_t q = p;
      while (q < m.word.size() && m.word[q] == m.word[p]) ++q;
      if (!out.empty()) out += " ";
      const Letter& l = m.word[p];
      std::string base = (r == 1) ? "h" : ("h" + std::to_string(l.tag + 1));
      if (l.mode == 0) out += base + "~";
      else out += base + "(" + std::to_string(-l.mode) + ")";
      if (q - p > 1) out += "^" + std::to_string(q - p);
      p = q;
    }
    if (out.empty()) return std::string("|0>");
    return out;
  };

  M.basis = [r, lp, ip](const Rat& wt_cap, int logdeg_cap) {
    std::vector<std::pair<Letter, Rat>> alphabet;
    Int top = rat_ceil(wt_cap);
    for (Int n = 0; n <= top; ++n)
      for (int i = 0; i < r; ++i)
        alphabet.push_back({let(i, n), Rat(static_cast<long>(n))});
    // Enumerate charges in a box and keep those within the weight cap.
    std::vector<std::vector<int32_t>> charges;
    Int B = 2 * top;
    std::vector<int32_t> lam(static_cast<size_t>(r), 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == r) {
        Rat half(ip(lam, lam), 2UL);
        half.canonicalize();
        if (half <= wt_cap) charges.push_back(lam);
        return;
      }
      for (Int v = -B; v <= B; ++v) {
        lam[static_cast<size_t>(i)] = static_cast<int32_t>(v);
        rec(i + 1);
      }
      lam[static_cast<size_t>(i)] = 0;
    };
    rec(0);

    std::vector<Monomial> out;
    for (const auto& ch : charges) {
      Rat half(ip(ch, ch), 2UL);
      half.canonicalize();
      Rat left = wt_cap - half;
      auto words = detail::enumerate_words(alphabet, lp, left, logdeg_cap);
      for (auto& w : words) {
        Monomial m = w;
        m.lat = ch;
        out.push_back(norm_lat(m));
      }
    }
    return out;
  };

  return M;
}

}  // namespace logva
