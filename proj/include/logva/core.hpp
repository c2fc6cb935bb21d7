/**
 * @file  core.hpp
 * @brief Fields and the state-field correspondence: mode actions, the
 *        definitional (n+S)-product, recursive derived fields, normal
 *        ordering, singular-OPE extraction, and the Theta map.
 *
 * The central routine is y_coeff: the exact coefficient of z^m zeta^k in
 * Y(a,z)v for arbitrary basis states a, v.  Primitive states use the model's
 * closed-form field tables; everything else recurses through the regularized
 * product
 *
 *   Y(mu_{(n)}(g (x) w), z2) c
 *     = D_{z1}^{(N-1-n)} ( z12^N  sum_s theta12^{(s)} Y(g_s, z1) Y(w_s, z2) c ) |_{z1=z2}
 *
 * with (g_s (x) w_s) = S^s (g (x) w).  All sums are finite: the grading
 * bounds annihilation depth in each variable separately, and locality bounds
 * the joint z1-support of the regularized product, so every coefficient is
 * an exact finite sum — no truncation enters the computation path.
 */
#pragma once

#include "logva/model.hpp"
#include "logva/series.hpp"

namespace logva {

/// Extra even padding added to every auto-chosen locality order N; used by
/// the N-independence property test.  Thread-local, default 0.
Int& locality_order_pad();

/// Locality order used for the pair (a, b): the smallest even integer
/// >= weight(a) + weight(b), plus the current pad.
Int locality_order(const Model& M, const Rat& wa, const Rat& wb);

/// Exact coefficient of z^m zeta^k in Y(a,z) v.
State y_coeff(const Model& M, const Monomial& a, const Monomial& v, Int m, Int k);
State y_coeff(const Model& M, const State& a, const State& v, Int m, Int k);

/// [z^m zeta^k] Y(mu_{(n)}(g (x) w), z) v computed directly from the
/// regularized product of Y(g,z1) and Y(w,z2) — independent of how the
/// product state decomposes into the model's canonical basis.
State derived_coeff(const Model& M, const Monomial& g, Int n, const Monomial& w,
                    const Monomial& v, Int m, Int k);

/// a_{(n+S)} v  (zeta-degree-0 mode action).
State mode_action(const Model& M, const State& a, Int n, const State& v);

/// The (n+S)-product mu_{(n)}(a (x) b) = a_{(n+S)} b.
State n_product(const Model& M, const State& a, const State& b, Int n);

/// mu_{(n)} applied to a two-slot tensor (linear extension).
State n_product(const Model& M, const TensorState& t, Int n);

/// Y(a,z)v materialized over a window (exact below the requested hi; the
/// output window is (-inf, hi] since the support is bounded below by the
/// grading).
LogSeries1 field_eval(const Model& M, const State& a, const State& v, Int hi);

/// Raw singular-OPE data: (i, n) -> mu_{(n)}(S^i(a (x) b)) over the singular
/// index set {i = 0, n >= 0} u {i >= 1, n in [n_lo, n_hi]}: every logarithmic
/// term is singular, and the default n_lo = -1 covers the constant-in-z log
/// terms.  Display factors (-1)^i/i! log^i are rendering-only.
std::map<std::pair<Int, Int>, State> singular_ope(const Model& M, const State& a,
                                                  const State& b, Int n_lo = -1);

/// Human/machine rendering of a singular OPE table in the physics form
/// (-1)^i/i! log^i(z) / z^{n+1}.
std::string render_ope(const Model& M, const std::map<std::pair<Int, Int>, State>& ope,
                       bool human = false);

/// A logarithmic field presented by its exact coefficient function.
struct Field {
  int parity = 0;
  Rat weight = Rat(0);
  std::function<State(const State& v, Int m, Int k)> coeff;
};

Field identity_field();
Field field_of(const Model& M, const State& a);
Field dz_field(const Model& M, const Field& f);
/// Normally ordered product :a(z)b(z): with the creation/annihilation split
/// at mode index n >= 0 vs n < 0.
Field normal_order(const Model& M, const Field& a, const Field& b);

LogSeries1 eval(const Model& M, const Field& f, const State& v, Int hi);

/// Theta map: f(z)|0> at z = 0, zeta = 0.  Raises a violation error if f has
/// nonzero negative modes on the vacuum.
State theta_map(const Model& M, const Field& f);

/// S applied to a two-slot state tensor.
TensorState braid(const Model& M, const TensorState& t);
TensorState braid_pow(const Model& M, const TensorState& t, int s);

}  // namespace logva
