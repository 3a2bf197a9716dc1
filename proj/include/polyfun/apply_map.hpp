#pragma once

// Functoriality: a linear map phi: K^n -> K^m (an m x n matrix) acts on
// elements slot by slot. On Sym summands this is polynomial substitution
// x_j -> sum_i phi(i,j) y_i; on Ext it is the signed wedge pushforward; on
// Schur summands the element is pushed through the tensor embedding and
// re-expressed in the target's embedded basis (always possible, by
// equivariance of the symmetrizer).

#include <map>

#include "polyfun/element.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/schur_basis.hpp"

namespace polyfun {

// Pushes a sparse tensor-coordinate vector through phi slotwise.
template <class F>
std::map<Label, F> tensor_pushforward(const Matrix<F>& phi, const std::map<Label, F>& vec) {
  std::map<Label, F> out;
  const int m = phi.rows();
  Label target;
  for (const auto& [word, coeff] : vec) {
    target.assign(word.size(), 0);
    auto rec = [&](auto&& self, std::size_t slot, const F& acc) -> void {
      if (slot == word.size()) {
        auto it = out.find(target);
        if (it == out.end()) {
          out.emplace(target, acc);
        } else {
          it->second += acc;
          if (it->second.is_zero()) out.erase(it);
        }
        return;
      }
      int src = word[slot] - 1;
      for (int t = 0; t < m; ++t) {
        const F& entry = phi.at(t, src);
        if (entry.is_zero()) continue;
        target[slot] = t + 1;
        self(self, slot + 1, acc * entry);
      }
    };
    rec(rec, 0, coeff);
  }
  return out;
}

template <class F>
Element<F> apply_map(const Matrix<F>& phi, const Element<F>& e) {
  if (phi.cols() != e.n) throw error("NonConformable", "map source does not match element space");
  const int m = phi.rows();
  Element<F> out(e.spec, m);

  for (std::size_t s = 0; s < e.spec.summands.size(); ++s) {
    const Summand& summand = e.spec.summands[s];
    if (e.comps[s].empty()) continue;
    switch (summand.kind) {
      case Kind::Tensor: {
        for (auto& [w, c] : tensor_pushforward(phi, e.comps[s])) out.add_term(s, w, c);
        break;
      }
      case Kind::Sym: {
        for (const auto& [w, c] : tensor_pushforward(phi, e.comps[s])) {
          Label sorted = w;
          sym_normalize(sorted);
          out.add_term(s, std::move(sorted), c);
        }
        break;
      }
      case Kind::Ext: {
        for (const auto& [w, c] : tensor_pushforward(phi, e.comps[s])) {
          Label sorted = w;
          int sign = ext_normalize(sorted);
          if (sign == 0) continue;
          out.add_term(s, std::move(sorted), sign > 0 ? c : -c);
        }
        break;
      }
      case Kind::Schur: {
        F one = field_one(e.comps[s].begin()->second);
        const auto& src = schur_data(summand.lambda, e.n, one);
        std::map<int, F> coords;
        for (const auto& [l, c] : e.comps[s]) coords.emplace(l[0], c);
        auto lifted = src.lift(coords);
        std::map<Label, F> sparse;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (!lifted[i].is_zero()) sparse.emplace(src.words[i], lifted[i]);
        auto pushed = tensor_pushforward(phi, sparse);
        if (pushed.empty()) break;
        if (summand_dim(summand, m) == 0)
          throw error("Internal", "nonzero pushforward into a zero schur space");
        const auto& dst = schur_data(summand.lambda, m, one);
        for (const auto& [idx, c] : schur_coords(dst, pushed)) out.add_term(s, Label{idx}, c);
        break;
      }
    }
  }
  return out;
}

// Projection K^{big} ->> K^{small} keeping the first coordinates; the
// standard inclusion is the transpose.
template <class F>
Matrix<F> truncation_matrix(int small, int big, const F& one) {
  if (small > big) throw error("DimensionMismatch", "truncation must shrink");
  Matrix<F> m(small, big);
  for (int i = 0; i < small; ++i) m.at(i, i) = one;
  return m;
}

template <class F>
Matrix<F> inclusion_matrix(int small, int big, const F& one) {
  return truncation_matrix(small, big, one).transpose();
}

// First coefficient of the element lifted to 1; falls back to the
// default-constructed scalar (which over a prime field cannot mint a 1, so a
// field-less zero element reports FieldMismatch there — the callers below
// never reach the fallback with a nonzero element).
template <class F>
F field_one_of(const Element<F>& e) {
  for (const auto& m : e.comps)
    if (!m.empty()) return field_one(m.begin()->second);
  return field_one(F());
}

// Zero-extends an element of P(K^small) to P(K^big). Word labels are stable
// under inclusion; Schur labels index a basis that depends on the space, so
// those components are pushed through the inclusion map.
template <class F>
Element<F> zero_extend(const Element<F>& e, int big) {
  if (big < e.n) throw error("DimensionMismatch", "zero_extend must not shrink");
  if (big == e.n) return e;
  bool schurTerm = false;
  for (std::size_t s = 0; s < e.spec.summands.size(); ++s)
    schurTerm |= (e.spec.summands[s].kind == Kind::Schur && !e.comps[s].empty());
  if (!schurTerm) {
    Element<F> out(e.spec, big);
    out.comps = e.comps;
    return out;
  }
  return apply_map(inclusion_matrix(e.n, big, field_one_of(e)), e);
}

}  // namespace polyfun
