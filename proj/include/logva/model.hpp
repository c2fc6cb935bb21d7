/**
 * @file  model.hpp
 * @brief A packaged logarithmic vertex algebra: basis description, vacuum,
 *        translation operator T, braiding map S, primitive generator fields,
 *        conformal vector, grading — everything the generic engine needs.
 *
 * The engine reaches a model through a small functional surface:
 *  - parity / weight of canonical basis monomials;
 *  - is_primitive + prim_coeff: closed-form field coefficients for the
 *    model's primitive states (generators and their logarithmic primitives);
 *  - decompose: peel one creation mode off a non-primitive monomial,
 *    a = scale * mu_{(n)}(prim (x) rest), exactly;
 *  - basis: deterministic probe enumeration up to a weight cap.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "logva/braiding.hpp"

namespace logva {

/// Exact peeling of one creation mode: monomial = scale * mu_{(n)}(prim (x) rest).
struct Decomp {
  Monomial prim;
  Int n = -1;
  Rat scale = Rat(1);
  Monomial rest;
};

/// Idempotent memo tables shared by the engine for one model instance.
struct EngineCache {
  // (a, v, m, k) -> [z^m zeta^k] Y(a,z)v
  std::map<std::tuple<Monomial, Monomial, Int, Int>, State> ycoeff;
  // GL rewriting: (tag, mode, word) -> normal form of a_mode * word
  std::map<std::tuple<int, Int, Monomial>, State> gl_act;
};

struct Model {
  std::string name;

  State vacuum = State::vacuum();
  LinOp T;
  BraidingMap S;
  int s_nilp_cap = 16;
  Int zeta_cap = 8;

  ParityFn parity;
  std::function<Rat(const Monomial&)> weight;

  struct Generator {
    std::string name;
    State state;
  };
  std::vector<Generator> generators;

  State omega;
  Scalar central_charge_expected;

  std::function<bool(const Monomial&)> is_primitive;
  /// [z^m zeta^k] Y(prim, z) v for primitive monomials.
  std::function<State(const Monomial& prim, const Monomial& v, Int m, Int k)> prim_coeff;
  std::function<Decomp(const Monomial&)> decompose;

  std::function<std::string(const Monomial&)> render_mono;
  /// All basis monomials of weight <= cap, with the total degree in
  /// weight-zero letters capped by logdeg_cap (keeps lattice/boson
  /// enumerations finite).
  std::function<std::vector<Monomial>(const Rat& wt_cap, int logdeg_cap)> basis;

  /// Declared Jordan-Chevalley data: L0 nilpotent part as sum_i f_i g_i.
  std::vector<std::pair<LinOp, LinOp>> l0n_pairs;

  /// Gurarie-Ludwig extras (empty for the other models): direct rewriting
  /// route for generator modes, and the odd derivations eta / etabar.
  std::function<State(int tag, Int mode, const State&)> gl_mode_act;
  std::function<State(int a, Int m, int b, Int k, const State&)> gl_bracket;
  std::function<State(const State&)> gl_eta, gl_etabar;
  Scalar gl_beta;

  std::shared_ptr<EngineCache> cache = std::make_shared<EngineCache>();

  // -- conveniences -------------------------------------------------------

  int parity_of(const State& s) const {
    if (s.is_zero()) return 0;
    return parity(s.terms().begin()->first);
  }
  /// Largest weight among the monomials of s (states passed around the
  /// engine are weight-homogeneous; the max is a safe structural bound).
  Rat max_weight(const State& s) const {
    Rat w(0);
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
      (void)c;
      Rat wm = weight(m);
      if (first || wm > w) w = wm;
      first = false;
    }
    return w;
  }
  const Generator* find_generator(const std::string& gname) const {
    for (const auto& g : generators)
      if (g.name == gname) return &g;
    return nullptr;
  }

  std::string render(const State& s, bool human = false) const {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : s.terms()) {
      if (!out.empty()) out += " + ";
      std::string cs = c.str(human);
      if (cs == "1")
        out += render_mono(m);
      else if (c.is_rational() || s.size() == 1)
        out += cs + "*" + render_mono(m);
      else
        out += "(" + cs + ")*" + render_mono(m);
    }
    return out;
  }
};

/// ceil of a rational as Int.
inline Int rat_ceil(const Rat& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

}  // namespace logva
