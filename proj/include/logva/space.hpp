/**
 * @file  space.hpp
 * @brief Graded superspaces: basis monomials, sparse states, linear operator
 *        rules, tensor products with Koszul signs, and super-commutators.
 *
 * A Monomial is a model-specific canonical basis word: a vector of letters
 * (tag, mode) plus an optional lattice point.  The empty monomial is the
 * vacuum in every model.  Canonicalization, parity and weight are owned by
 * the model; this module only provides the shared containers and the exact
 * Koszul-sign plumbing.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logva/coeff.hpp"

namespace logva {

/// One letter of a basis word, e.g. xi_3, x^i_n, or L(-2).
/// tag indexes the model's letter alphabet; mode is the integer index.
struct Letter {
  int32_t tag = 0;
  int32_t mode = 0;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.tag == b.tag && a.mode == b.mode;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    return a.tag < b.tag;
  }
};

/// Canonical basis word.  `word` is kept in the model's canonical order;
/// `lat` is the lattice point for lattice models (empty otherwise).
struct Monomial {
  std::vector<Letter> word;
  std::vector<int32_t> lat;

  bool is_vacuum() const {
    if (!word.empty()) return false;
    for (int32_t v : lat)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.word == b.word && a.lat == b.lat;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    for (size_t i = 0; i < a.word.size(); ++i) {
      if (!(a.word[i] == b.word[i])) return a.word[i] < b.word[i];
    }
    return a.lat < b.lat;
  }
};

/// Sparse linear combination of basis monomials.  Invariant: no stored zero
/// coefficients.
class State {
 public:
  using Terms = std::map<Monomial, Scalar>;

  State() = default;
  explicit State(const Monomial& m, Scalar c = Scalar(1)) { add(m, c); }

  static State zero() { return State(); }
  static State vacuum() { return State(Monomial{}); }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  size_t size() const { return t_.size(); }

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  State& operator+=(const State& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  State& operator-=(const State& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  State operator-() const {
    State r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  friend State operator*(const Scalar& c, const State& s) {
    State r;
    if (c.is_zero()) return r;
    for (const auto& [m, q] : s.t_) {
      Scalar p = c * q;
      if (!p.is_zero()) r.t_.emplace(m, p);
    }
    return r;
  }
  /// this += c * o
  void axpy(const Scalar& c, const State& o) {
    if (c.is_zero()) return;
    for (const auto& [m, q] : o.t_) add(m, c * q);
  }

  friend bool operator==(const State& a, const State& b) { return a.t_ == b.t_; }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
  friend bool operator<(const State& a, const State& b) { return a.t_ < b.t_; }

  /// Coefficient of a given monomial (zero if absent).
  Scalar coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar() : it->second;
  }

 private:
  Terms t_;
};

/// A linear operator given by its rule on basis monomials, with declared
/// parity (0 = even, 1 = odd) and weight shift.
struct LinOp {
  int parity = 0;
  Rat weight_shift = Rat(0);
  std::function<State(const Monomial&)> rule;

  State operator()(const Monomial& m) const { return rule(m); }
  State operator()(const State& v) const {
    State out;
    for (const auto& [m, c] : v.terms()) out.axpy(c, rule(m));
    return out;
  }
};

/// Super-commutator [a, b] = ab - (-1)^{p(a)p(b)} ba applied to a probe.
inline State super_commutator(const LinOp& a, const LinOp& b, const State& probe) {
  State ab = a(b(probe));
  State ba = b(a(probe));
  if ((a.parity & b.parity) != 0) return ab + ba;
  return ab - ba;
}

/// Basis element of a tensor power of V: an ordered list of monomials.
using TensorMono = std::vector<Monomial>;

/// Sparse element of a tensor power of V.
class TensorState {
 public:
  using Terms = std::map<TensorMono, Scalar>;

  TensorState() = default;
  explicit TensorState(TensorMono m, Scalar c = Scalar(1)) { add(std::move(m), c); }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }

  void add(const TensorMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  TensorState& operator+=(const TensorState& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  TensorState& operator-=(const TensorState& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  friend TensorState operator+(TensorState a, const TensorState& b) { return a += b; }
  friend TensorState operator-(TensorState a, const TensorState& b) { return a -= b; }
  friend TensorState operator*(const Scalar& c, const TensorState& s) {
    TensorState r;
    for (const auto& [m, q] : s.t_) r.add(m, c * q);
    return r;
  }
  void axpy(const Scalar& c, const TensorState& o) {
    if (c.is_zero()) return;
    for (const auto& [m, q] : o.t_) add(m, c * q);
  }
  friend bool operator==(const TensorState& a, const TensorState& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const TensorState& a, const TensorState& b) {
    return !(a == b);
  }

  /// Tensor product of plain states into an arity-r tensor.
  static TensorState product(const std::vector<const State*>& factors) {
    TensorState out;
    TensorMono m;
    Scalar c(1);
    build(factors, 0, m, c, out);
    return out;
  }

 private:
  static void build(const std::vector<const State*>& f, size_t i, TensorMono& m,
                    const Scalar& c, TensorState& out) {
    if (i == f.size()) {
      out.add(m, c);
      return;
    }
    for (const auto& [mono, q] : f[i]->terms()) {
      m.push_back(mono);
      build(f, i + 1, m, c * q, out);
      m.pop_back();
    }
  }

  Terms t_;
};

using ParityFn = std::function<int(const Monomial&)>;

/// Apply single-slot operators to a tensor with exact Koszul signs: an odd
/// operator acting in slot j picks up (-1)^{parity of slots 0..j-1}.
/// Operators are applied right-to-left (largest slot first), which together
/// with the sign rule reproduces (f (x) g)(a (x) b) = (-1)^{p(g)p(a)} f(a) (x) g(b).
inline TensorState tensor_apply(const std::vector<std::pair<int, const LinOp*>>& ops,
                                const TensorState& t, const ParityFn& parity) {
  // Sort a copy of the op list by slot descending.
  std::vector<std::pair<int, const LinOp*>> sorted = ops;
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (sorted[j].first > sorted[i].first) std::swap(sorted[i], sorted[j]);

  TensorState cur = t;
  for (const auto& [slot, op] : sorted) {
    TensorState next;
    for (const auto& [m, c] : cur.terms()) {
      int sign = 0;
      if (op->parity != 0) {
        for (int s = 0; s < slot; ++s) sign ^= parity(m[static_cast<size_t>(s)]);
      }
      State img = (*op)(m[static_cast<size_t>(slot)]);
      for (const auto& [mono, q] : img.terms()) {
        TensorMono nm = m;
        nm[static_cast<size_t>(slot)] = mono;
        Scalar v = c * q;
        next.add(nm, sign ? -v : v);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Koszul transposition P(a (x) b) = (-1)^{p(a)p(b)} b (x) a on the first two
/// slots of a tensor.
inline TensorState koszul_swap12(const TensorState& t, const ParityFn& parity) {
  TensorState out;
  for (const auto& [m, c] : t.terms()) {
    TensorMono nm = m;
    std::swap(nm[0], nm[1]);
    int sign = parity(m[0]) & parity(m[1]);
    out.add(nm, sign ? -c : c);
  }
  return out;
}

}  // namespace logva
