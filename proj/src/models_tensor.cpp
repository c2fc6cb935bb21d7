/**
 * @file  models_tensor.cpp
 * @brief Tensor product of two logarithmic vertex algebras:
 *        Y(a (x) b, z) = Y'(a, z) (x) Y''(b, z) with Koszul signs,
 *        T = T' (x) I + I (x) T'', S = S'_13 + S''_24,
 *        omega = omega' (x) vac + vac (x) omega'', c = c' + c''.
 *
 * Basis monomials concatenate the factor words (second-factor letter tags are
 * offset by +1000) and pad-concatenate the lattice parts.  Every a' (x) vac
 * and vac (x) b'' is treated as primitive, with coefficients delegated to the
 * factor engines; mixed monomials peel the first factor exactly via
 *   a' (x) b'' = mu_{(-1)}((a' (x) vac) (x) (vac (x) b'')).
 */
#include "logva/core.hpp"
#include "logva/models.hpp"

namespace logva {

namespace {

constexpr int32_t kTagOffset = 1000;

/// Max lattice-vector length appearing in a model's generators/omega.
size_t lat_len(const Model& M) {
  size_t n = 0;
  auto scan = [&n](const State& s) {
    for (const auto& [m, c] : s.terms()) {
      (void)c;
      n = std::max(n, m.lat.size());
    }
  };
  for (const auto& g : M.generators) scan(g.state);
  scan(M.omega);
  scan(M.vacuum);
  return n;
}

struct Split {
  Monomial m1, m2;
};

}  // namespace

Model tensor_product(const Model& m1in, const Model& m2in) {
  auto M1 = std::make_shared<Model>(m1in);
  auto M2 = std::make_shared<Model>(m2in);
  const size_t len1 = lat_len(*M1);
  const size_t len2 = lat_len(*M2);

  auto split = [len1, len2](const Monomial& m) {
    Split s;
    for (const auto& l : m.word) {
      if (l.tag < kTagOffset)
        s.m1.word.push_back(l);
      else
        s.m2.word.push_back(Letter{static_cast<int32_t>(l.tag - kTagOffset), l.mode});
    }
    if (!m.lat.empty()) {
      bool a1 = false, a2 = false;
      for (size_t i = 0; i < len1 && i < m.lat.size(); ++i) a1 = a1 || m.lat[i] != 0;
      for (size_t i = len1; i < m.lat.size(); ++i) a2 = a2 || m.lat[i] != 0;
      if (a1) s.m1.lat.assign(m.lat.begin(),
                              m.lat.begin() + static_cast<std::ptrdiff_t>(len1));
      if (a2) s.m2.lat.assign(m.lat.begin() + static_cast<std::ptrdiff_t>(len1),
                              m.lat.end());
    }
    (void)len2;
    return s;
  };
  auto join = [len1, len2](const Monomial& a, const Monomial& b) {
    Monomial m;
    m.word = a.word;
    for (const auto& l : b.word)
      m.word.push_back(Letter{static_cast<int32_t>(l.tag + kTagOffset), l.mode});
    bool any = false;
    for (int32_t v : a.lat) any = any || v != 0;
    for (int32_t v : b.lat) any = any || v != 0;
    if (any) {
      m.lat.assign(len1 + len2, 0);
      for (size_t i = 0; i < a.lat.size(); ++i) m.lat[i] = a.lat[i];
      for (size_t i = 0; i < b.lat.size(); ++i) m.lat[len1 + i] = b.lat[i];
    }
    return m;
  };
  auto join_states = [join](const State& a, const State& b) {
    State out;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) out.add(join(ma, mb), ca * cb);
    return out;
  };

  Model M;
  M.name = "tensor(" + M1->name + "," + M2->name + ")";
  M.s_nilp_cap = M1->s_nilp_cap + M2->s_nilp_cap;
  M.zeta_cap = M1->zeta_cap + M2->zeta_cap;

  M.parity = [M1, M2, split](const Monomial& m) {
    Split s = split(m);
    return (M1->parity(s.m1) + M2->parity(s.m2)) & 1;
  };
  M.weight = [M1, M2, split](const Monomial& m) {
    Split s = split(m);
    Rat w = M1->weight(s.m1) + M2->weight(s.m2);
    return w;
  };

  // Lift an operator of one factor to the product.
  auto lift = [M1, M2, split, join](const LinOp& op, int slot) {
    LinOp out;
    out.parity = op.parity;
    out.weight_shift = op.weight_shift;
    out.rule = [M1, op, slot, split, join](const Monomial& m) {
      Split s = split(m);
      State out_state;
      if (slot == 0) {
        State img = op(s.m1);
        for (const auto& [mono, c] : img.terms()) out_state.add(join(mono, s.m2), c);
      } else {
        int sign = (op.parity != 0 && M1->parity(s.m1) != 0) ? -1 : 1;
        State img = op(s.m2);
        for (const auto& [mono, c] : img.terms())
          out_state.add(join(s.m1, mono), sign < 0 ? -c : c);
      }
      return out_state;
    };
    return out;
  };

  M.T.parity = 0;
  M.T.weight_shift = Rat(1);
  {
    LinOp t1 = lift(M1->T, 0), t2 = lift(M2->T, 1);
    M.T.rule = [t1, t2](const Monomial& m) { return t1(m) + t2(m); };
  }

  for (const auto& [phi, psi] : M1->S.pairs)
    M.S.pairs.push_back({lift(phi, 0), lift(psi, 0)});
  for (const auto& [phi, psi] : M2->S.pairs)
    M.S.pairs.push_back({lift(phi, 1), lift(psi, 1)});
  for (const auto& [f, g] : M1->l0n_pairs)
    M.l0n_pairs.push_back({lift(f, 0), lift(g, 0)});
  for (const auto& [f, g] : M2->l0n_pairs)
    M.l0n_pairs.push_back({lift(f, 1), lift(g, 1)});

  M.is_primitive = [split](const Monomial& m) {
    Split s = split(m);
    return s.m1.is_vacuum() != s.m2.is_vacuum();
  };

  M.prim_coeff = [M1, M2, split, join](const Monomial& prim, const Monomial& v, Int m,
                                       Int k) {
    Split p = split(prim);
    Split s = split(v);
    State out;
    if (p.m2.is_vacuum()) {
      // (a' (x) 1) acts in the first slot; nothing is crossed.
      State img = y_coeff(*M1, p.m1, s.m1, m, k);
      for (const auto& [mono, c] : img.terms()) out.add(join(mono, s.m2), c);
    } else {
      // (1 (x) b'') crosses the first factor of v.
      int sign = (M2->parity(p.m2) != 0 && M1->parity(s.m1) != 0) ? -1 : 1;
      State img = y_coeff(*M2, p.m2, s.m2, m, k);
      for (const auto& [mono, c] : img.terms())
        out.add(join(s.m1, mono), sign < 0 ? -c : c);
    }
    return out;
  };

  M.decompose = [split, join](const Monomial& a) {
    Split s = split(a);
    Decomp d;
    d.prim = join(s.m1, Monomial{});
    d.rest = join(Monomial{}, s.m2);
    d.n = -1;
    d.scale = Rat(1);
    return d;
  };

  for (const auto& g : M1->generators)
    M.generators.push_back({"1." + g.name, join_states(g.state, State::vacuum())});
  for (const auto& g : M2->generators)
    M.generators.push_back({"2." + g.name, join_states(State::vacuum(), g.state)});

  M.omega = join_states(M1->omega, State::vacuum()) +
            join_states(State::vacuum(), M2->omega);
  M.central_charge_expected = M1->central_charge_expected + M2->central_charge_expected;

  M.render_mono = [M1, M2, split](const Monomial& m) {
    Split s = split(m);
    return M1->render_mono(s.m1) + " (x) " + M2->render_mono(s.m2);
  };

  M.basis = [M1, M2, join](const Rat& wt_cap, int logdeg_cap) {
    std::vector<Monomial> out;
    auto b1 = M1->basis(wt_cap, logdeg_cap);
    for (const auto& m1 : b1) {
      Rat left = wt_cap - M1->weight(m1);
      auto b2 = M2->basis(left, logdeg_cap);
      for (const auto& m2 : b2) out.push_back(join(m1, m2));
    }
    return out;
  };

  return M;
}

}  // namespace logva
