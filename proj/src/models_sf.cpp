/**
 * @file  models_sf.cpp
 * @brief Symplectic fermions: the Grassmann algebra on odd variables xi_n,
 *        chi_n (n >= 0) with the logarithmic fields
 *
 *   xi(z)  = sum xi_n z^n  + zeta d/dchi_0 + sum_{n>=1} (d/dchi_n) z^{-n}/(-n),
 *   chi(z) = sum chi_n z^n - zeta d/dxi_0  - sum_{n>=1} (d/dxi_n)  z^{-n}/(-n),
 *
 * braiding S = d/dxi_0 (x) d/dchi_0 - d/dchi_0 (x) d/dxi_0, conformal vector
 * omega = chi_1 xi_1, central charge -2.
 */
#include "logva/models.hpp"
#include "models_util.hpp"

namespace logva {

namespace {
constexpr int kXi = 0;
constexpr int kChi = 1;

Letter let(int tag, Int mode) {
  return Letter{static_cast<int32_t>(tag), static_cast<int32_t>(mode)};
}
}  // namespace

Model symplectic_fermions() {
  Model M;
  M.name = "sf";
  detail::LetterParity lp = [](const Letter&) { return 1; };

  M.parity = [](const Monomial& m) { return static_cast<int>(m.word.size() & 1); };
  M.weight = [](const Monomial& m) {
    long w = 0;
    for (const auto& l : m.word) w += l.mode;
    return Rat(w);
  };

  M.T = detail::letter_map_derivation(
      [](const Letter& l) {
        return std::vector<std::pair<Letter, Rat>>{
            {let(l.tag, l.mode + 1), Rat(l.mode + 1)}};
      },
      lp, Rat(1));

  // S = d/dxi_0 (x) d/dchi_0 - d/dchi_0 (x) d/dxi_0
  LinOp dxi0 = detail::deriv_op(let(kXi, 0), lp);
  LinOp dchi0 = detail::deriv_op(let(kChi, 0), lp);
  LinOp mdchi0 = dchi0;
  mdchi0.rule = [dchi0](const Monomial& m) { return -dchi0(m); };
  M.S.pairs.push_back({dxi0, dchi0});
  M.S.pairs.push_back({mdchi0, dxi0});

  M.is_primitive = [](const Monomial& m) {
    return m.word.size() == 1 && m.word[0].mode == 0;
  };

  M.prim_coeff = [lp](const Monomial& prim, const Monomial& v, Int m, Int k) {
    int tag = prim.word[0].tag;
    int sgn = (tag == kXi) ? 1 : -1;  // chi(z) carries the opposite signs
    int other = (tag == kXi) ? kChi : kXi;
    if (k == 0) {
      if (m >= 0) return detail::word_mult(v, let(tag, m), lp);
      return Scalar(Rat(sgn, static_cast<long>(m))) *
             detail::word_del(v, let(other, -m), lp);
    }
    if (k == 1 && m == 0)
      return Scalar(sgn) * detail::word_del(v, let(other, 0), lp);
    return State();
  };

  M.decompose = [](const Monomial& a) {
    Decomp d;
    const Letter& l = a.word.front();
    d.prim = Monomial{{let(l.tag, 0)}, {}};
    d.n = -l.mode - 1;
    d.rest = a;
    d.rest.word.erase(d.rest.word.begin());
    return d;
  };

  // Generators and the conformal vector omega = chi_1 xi_1.
  M.generators.push_back({"xi", State(Monomial{{let(kXi, 0)}, {}})});
  M.generators.push_back({"chi", State(Monomial{{let(kChi, 0)}, {}})});
  {
    State xi1 = detail::word_mult(Monomial{}, let(kXi, 1), lp);
    State w;
    for (const auto& [mono, c] : xi1.terms())
      w.axpy(c, detail::word_mult(mono, let(kChi, 1), lp));
    M.omega = w;
  }
  M.central_charge_expected = Scalar(Rat(-2));

  // L0 nilpotent part: d/dchi_0 d/dxi_0.
  M.l0n_pairs.push_back({dchi0, dxi0});

  M.render_mono = [](const Monomial& m) {
    if (m.is_vacuum()) return std::string("|0>");
    std::string out;
    for (const auto& l : m.word) {
      if (!out.empty()) out += " ";
      out += (l.tag == kXi ? "xi" : "chi") + std::to_string(l.mode);
    }
    return out;
  };

  M.basis = [lp](const Rat& wt_cap, int logdeg_cap) {
    std::vector<std::pair<Letter, Rat>> alphabet;
    Int top = rat_ceil(wt_cap);
    for (Int n = 0; n <= top; ++n)
      for (int t : {kXi, kChi}) alphabet.push_back({let(t, n), Rat(static_cast<long>(n))});
    return detail::enumerate_words(alphabet, lp, wt_cap, logdeg_cap);
  };

  M.zeta_cap = 6;
  return M;
}

}  // namespace logva
