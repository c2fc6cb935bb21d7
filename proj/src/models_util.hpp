/**
 * @file  models_util.hpp
 * @brief Internal helpers shared by the model implementations: canonical word
 *        algebra with Koszul signs, derivation lifts, basis enumeration, and
 *        small exact matrix inversion.
 */
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "logva/model.hpp"

namespace logva {
namespace detail {

/// Parity of a single letter (0 even, 1 odd), by tag.
using LetterParity = std::function<int(const Letter&)>;

/// Left multiplication l * w, canonicalized with Koszul signs.  Zero when l
/// is odd and already present.  The lattice part of w is preserved.
inline State word_mult(const Monomial& w, const Letter& l, const LetterParity& lp) {
  size_t q = 0;
  int crossed = 0;
  while (q < w.word.size() && w.word[q] < l) {
    crossed ^= lp(w.word[q]);
    ++q;
  }
  if (lp(l) && q < w.word.size() && w.word[q] == l) return State();
  Monomial out = w;
  out.word.insert(out.word.begin() + static_cast<std::ptrdiff_t>(q), l);
  int sign = (lp(l) && crossed) ? -1 : 1;
  return State(out, Scalar(sign));
}

/// The derivation d/dl applied to w (sum over occurrences with Koszul signs).
inline State word_del(const Monomial& w, const Letter& l, const LetterParity& lp) {
  State out;
  int crossed = 0;
  for (size_t p = 0; p < w.word.size(); ++p) {
    if (w.word[p] == l) {
      Monomial m = w;
      m.word.erase(m.word.begin() + static_cast<std::ptrdiff_t>(p));
      int sign = (lp(l) && crossed) ? -1 : 1;
      out.add(m, Scalar(sign));
    }
    crossed ^= lp(w.word[p]);
  }
  return out;
}

/// LinOp form of d/dl.
inline LinOp deriv_op(const Letter& l, const LetterParity& lp) {
  LinOp op;
  op.parity = lp(l);
  op.weight_shift = Rat(-static_cast<long>(l.mode));
  op.rule = [l, lp](const Monomial& m) { return word_del(m, l, lp); };
  return op;
}

/// Even derivation determined by a letter map l -> sum_i c_i l_i (with
/// parity(l_i) = parity(l)), extended by the Leibniz rule.
inline LinOp letter_map_derivation(
    std::function<std::vector<std::pair<Letter, Rat>>(const Letter&)> img,
    const LetterParity& lp, const Rat& wshift) {
  LinOp op;
  op.parity = 0;
  op.weight_shift = wshift;
  op.rule = [img, lp](const Monomial& w) {
    State out;
    int before = 0;
    for (size_t p = 0; p < w.word.size(); ++p) {
      const Letter& l = w.word[p];
      for (const auto& [l2, c] : img(l)) {
        if (c == 0) continue;
        Monomial rest = w;
        rest.word.erase(rest.word.begin() + static_cast<std::ptrdiff_t>(p));
        int sign = (lp(l2) && before) ? -1 : 1;
        State ins = word_mult(rest, l2, lp);
        out.axpy(Scalar(sign < 0 ? Rat(-c) : c), ins);
      }
      before ^= lp(l);
    }
    return out;
  };
  return op;
}

/// All sorted words over the given alphabet with total weight <= wt_cap; odd
/// letters appear at most once, and the total count of weight-zero letters is
/// capped by logdeg_cap.
inline std::vector<Monomial> enumerate_words(
    const std::vector<std::pair<Letter, Rat>>& alphabet, const LetterParity& lp,
    const Rat& wt_cap, int logdeg_cap) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(size_t, Rat, int)> rec = [&](size_t idx, Rat left, int logleft) {
    out.push_back(cur);
    for (size_t i = idx; i < alphabet.size(); ++i) {
      const auto& [l, w] = alphabet[i];
      if (w > left) continue;
      if (w == 0 && logleft <= 0) continue;
      if (lp(l) && !cur.word.empty() && cur.word.back() == l) continue;
      cur.word.push_back(l);
      rec(lp(l) ? i + 1 : i, left - w, w == 0 ? logleft - 1 : logleft);
      cur.word.pop_back();
    }
  };
  rec(0, wt_cap, logdeg_cap);
  return out;
}

/// Exact inverse of a small nondegenerate rational matrix.
inline std::vector<std::vector<Rat>> mat_inverse(std::vector<std::vector<Rat>> a) {
  size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("mat_inverse: singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  for (auto& row : inv)
    for (auto& q : row) q.canonicalize();
  return inv;
}

}  // namespace detail
}  // namespace logva
