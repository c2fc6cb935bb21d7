/**
 * @file  models_fb.cpp
 * @brief Logarithmic free bosons B^log for an arbitrary nondegenerate
 *        symmetric Gram matrix G.  Basis letters are x~_i (weight 0, the
 *        logarithmic variables) and x_{i,m} = a_{i,-m}/m for m >= 1; the
 *        generating fields are
 *
 *   a~_i(z) = x~_i + zeta a_{i,0} + sum_{n != 0} a_{i,n} z^{-n}/(-n),
 *   a_i(z)  = D_z a~_i(z) = sum_n a_{i,n} z^{-n-1},
 *
 * with a_{i,n} = sum_j G_ij d/dx_{j,n} for n >= 0 (n = 0 acting on the
 * tildes) and braiding S = -sum_ij G_ij d/dx~_i (x) d/dx~_j.  Conformal
 * vector omega = 1/2 sum_ij (G^-1)_ij x_{i,1} x_{j,1}; central charge = rank.
 */
#include "logva/models.hpp"
#include "models_util.hpp"

namespace logva {

namespace {
Letter let(int tag, Int mode) {
  return Letter{static_cast<int32_t>(tag), static_cast<int32_t>(mode)};
}
}  // namespace

Model free_boson(const std::vector<std::vector<Rat>>& gram) {
  const int r = static_cast<int>(gram.size());
  Model M;
  M.name = "fb:" + std::to_string(r);
  detail::LetterParity lp = [](const Letter&) { return 0; };

  M.parity = [](const Monomial&) { return 0; };
  M.weight = [](const Monomial& m) {
    long w = 0;
    for (const auto& l : m.word) w += l.mode;
    return Rat(w);
  };

  M.T = detail::letter_map_derivation(
      [](const Letter& l) {
        if (l.mode == 0)
          return std::vector<std::pair<Letter, Rat>>{{let(l.tag, 1), Rat(1)}};
        return std::vector<std::pair<Letter, Rat>>{
            {let(l.tag, l.mode + 1), Rat(l.mode + 1)}};
      },
      lp, Rat(1));

  // S = -sum_ij G_ij d/dx~_i (x) d/dx~_j
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (gram[i][j] == 0) continue;
      LinOp phi = detail::deriv_op(let(i, 0), lp);
      Rat c = -gram[static_cast<size_t>(i)][static_cast<size_t>(j)];
      auto base = phi.rule;
      phi.rule = [base, c](const Monomial& m) { return Scalar(c) * base(m); };
      M.S.pairs.push_back({phi, detail::deriv_op(let(j, 0), lp)});
    }
  }

  M.is_primitive = [](const Monomial& m) {
    return m.word.size() == 1 && m.word[0].mode <= 1;
  };

  M.prim_coeff = [gram, r, lp](const Monomial& prim, const Monomial& v, Int m, Int k) {
    int i = prim.word[0].tag;
    const auto& Gi = gram[static_cast<size_t>(i)];
    auto ai_del = [&](Int p) {  // a_{i,p} for p >= 0 (p = 0 hits the tildes)
      State out;
      for (int j = 0; j < r; ++j) {
        if (Gi[static_cast<size_t>(j)] == 0) continue;
        out.axpy(Scalar(Gi[static_cast<size_t>(j)]),
                 detail::word_del(v, let(j, p), lp));
      }
      return out;
    };
    if (prim.word[0].mode == 0) {  // a~_i(z)
      if (k == 0) {
        if (m >= 0) return detail::word_mult(v, let(i, m), lp);
        return Scalar(Rat(1, static_cast<long>(m))) * ai_del(-m);
      }
      if (k == 1 && m == 0) return ai_del(0);
      return State();
    }
    // a_i(z) = D_z a~_i(z)
    if (k != 0) return State();
    if (m >= 0) return Scalar(m + 1) * detail::word_mult(v, let(i, m + 1), lp);
    return ai_del(-m - 1);
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
  }
  if (r == 1) {
    M.generators.push_back({"x0", State(Monomial{{let(0, 0)}, {}})});
    M.generators.push_back({"x1", State(Monomial{{let(0, 1)}, {}})});
    M.generators.push_back({"xt", State(Monomial{{let(0, 0)}, {}})});
    M.generators.push_back({"x", State(Monomial{{let(0, 1)}, {}})});
  }

  {
    std::vector<std::vector<Rat>> ginv = detail::mat_inverse(gram);
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

  // L0 nilpotent part: 1/2 sum_kl G_kl d/dx~_k d/dx~_l.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat c = gram[static_cast<size_t>(i)][static_cast<size_t>(j)] / 2;
      if (c == 0) continue;
      LinOp f = detail::deriv_op(let(i, 0), lp);
      auto base = f.rule;
      f.rule = [base, c](const Monomial& m) { return Scalar(c) * base(m); };
      M.l0n_pairs.push_back({f, detail::deriv_op(let(j, 0), lp)});
    }

  M.render_mono = [r](const Monomial& m) {
    if (m.is_vacuum()) return std::string("|0>");
    std::string out;
    size_t p = 0;
    while (p < m.word.size()) {
      size_t q = p;
      while (q < m.word.size() && m.word[q] == m.word[p]) ++q;
      if (!out.empty()) out += " ";
      const Letter& l = m.word[p];
      if (r == 1)
        out += "x" + std::to_string(l.mode);
      else
        out += "x" + std::to_string(l.tag + 1) + "_" + std::to_string(l.mode);
      if (q - p > 1) out += "^" + std::to_string(q - p);
      p = q;
    }
    return out;
  };

  M.basis = [r, lp](const Rat& wt_cap, int logdeg_cap) {
    std::vector<std::pair<Letter, Rat>> alphabet;
    Int top = rat_ceil(wt_cap);
    for (Int n = 0; n <= top; ++n)
      for (int i = 0; i < r; ++i)
        alphabet.push_back({let(i, n), Rat(static_cast<long>(n))});
    return detail::enumerate_words(alphabet, lp, wt_cap, logdeg_cap);
  };

  return M;
}

}  // namespace logva
