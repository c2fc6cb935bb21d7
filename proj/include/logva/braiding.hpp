/**
 * @file  braiding.hpp
 * @brief The braiding map S: slot embeddings with Koszul signs, nilpotent
 *        powers, exponentials e^{theta S}, and binomial operators with
 *        nilpotent shift.
 *
 * S is stored on states as a finite list of paired endomorphism rules
 * (phi_i, psi_i): S(a (x) b) = sum_i (-1)^{p(psi_i) p(a)} phi_i(a) (x) psi_i(b).
 * The field-level braiding is never materialized; all field-level uses apply
 * S to state tensors before taking fields.
 */
#pragma once

#include <utility>
#include <vector>

#include "logva/space.hpp"

namespace logva {

struct BraidingMap {
  struct Pair {
    LinOp phi, psi;  // equal parity; weight shift 0
  };
  std::vector<Pair> pairs;

  bool trivial() const { return pairs.empty(); }
};

/// Apply S to slots (i, j), 0-based with i < j, of an arity-r tensor.
inline TensorState apply_slots(const BraidingMap& S, int i, int j,
                               const TensorState& t, const ParityFn& parity) {
  TensorState out;
  for (const auto& pr : S.pairs) {
    out += tensor_apply({{i, &pr.phi}, {j, &pr.psi}}, t, parity);
  }
  return out;
}

/// Least r with S^r t = 0; raises cap_error past the configured cap.
inline int nilpotency_order(const BraidingMap& S, int i, int j, const TensorState& t,
                            const ParityFn& parity, int cap = 16) {
  TensorState cur = t;
  int r = 0;
  while (!cur.is_zero()) {
    if (r >= cap) throw cap_error("nilpotency_order: exceeded cap");
    cur = apply_slots(S, i, j, cur, parity);
    ++r;
  }
  return r;
}

/// The expansion e^{theta S} t = sum_s theta^{(s)} S^s t as a finite list of
/// (s, S^s t); the caller pairs each s with the divided power theta^{(s)}.
inline std::vector<std::pair<int, TensorState>> exp_theta(
    const BraidingMap& S, int i, int j, const TensorState& t, const ParityFn& parity,
    int cap = 16) {
  std::vector<std::pair<int, TensorState>> out;
  TensorState cur = t;
  int s = 0;
  while (!cur.is_zero()) {
    if (s > cap) throw cap_error("exp_theta: nilpotency cap exceeded");
    out.emplace_back(s, cur);
    cur = apply_slots(S, i, j, cur, parity);
    ++s;
  }
  return out;
}

/// binom(n + S, j) t = (n+S)(n-1+S)...(n-j+1+S) t / j!, truncating at
/// nilpotency automatically.
inline TensorState binom_shift(const BraidingMap& S, int i, int j, Int n, Int jj,
                               const TensorState& t, const ParityFn& parity) {
  if (jj < 0) return TensorState();
  TensorState cur = t;
  for (Int u = 0; u < jj; ++u) {
    TensorState next = Scalar(n - u) * cur;
    next += apply_slots(S, i, j, cur, parity);
    cur = std::move(next);
  }
  if (jj >= 2) {
    Scalar inv(Rat(1) / factorial(jj));
    cur = inv * cur;
  }
  return cur;
}

/// Defect of the symmetry axiom S P = P S on a two-slot probe (zero iff the
/// axiom holds on it).
inline TensorState symmetry_defect(const BraidingMap& S, const TensorState& t,
                                   const ParityFn& parity) {
  TensorState lhs = apply_slots(S, 0, 1, koszul_swap12(t, parity), parity);
  TensorState rhs = koszul_swap12(apply_slots(S, 0, 1, t, parity), parity);
  return lhs - rhs;
}

/// Defect of [S_{i1,j1}, S_{i2,j2}] = 0 on a three-slot probe.
inline TensorState slot_commutator_defect(const BraidingMap& S, int i1, int j1, int i2,
                                          int j2, const TensorState& t,
                                          const ParityFn& parity) {
  TensorState ab = apply_slots(S, i1, j1, apply_slots(S, i2, j2, t, parity), parity);
  TensorState ba = apply_slots(S, i2, j2, apply_slots(S, i1, j1, t, parity), parity);
  return ab - ba;
}

}  // namespace logva
