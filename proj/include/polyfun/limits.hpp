#pragma once

// Truncations of the inverse limit P_∞ = lim P(K^n) and the action of the
// substitution monoid E on them. A truncated element stores finitely many
// compatible layers; an E-element stores finitely many explicit rows (each
// with finite support) plus a tail flag saying whether the unstored rows
// continue as the identity or as zero. Queries that would need data beyond
// what the layers can support fail loudly with InsufficientData — tails make
// the matrix side total, but a layer can only be specialized from a level
// that is at least as deep as the support of the rows being used.

#include <map>
#include <vector>

#include "polyfun/apply_map.hpp"
#include "polyfun/element.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/matrix.hpp"

namespace polyfun {

template <class F>
struct TruncatedElement {
  FunctorSpec spec;
  std::vector<int> levels;          // strictly ascending
  std::vector<Element<F>> layers;   // layers[i] lives on K^{levels[i]}
  int offset = 0;                   // leading coordinates already consumed

  TruncatedElement() = default;
  TruncatedElement(FunctorSpec s, std::vector<int> lv, std::vector<Element<F>> ly, int off = 0)
      : spec(std::move(s)), levels(std::move(lv)), layers(std::move(ly)), offset(off) {
    if (levels.size() != layers.size())
      throw error("MalformedInput", "one layer per level is required");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (i && levels[i] <= levels[i - 1])
        throw error("MalformedInput", "levels must be strictly ascending");
      if (layers[i].n != levels[i])
        throw error("MalformedInput", "layer space does not match its level");
      if (!(layers[i].spec == spec))
        throw error("MalformedInput", "layer functor does not match the truncation");
    }
  }

  const Element<F>& layer_at(int level) const {
    for (std::size_t i = 0; i < levels.size(); ++i)
      if (levels[i] == level) return layers[i];
    throw error("InsufficientData", "no layer at level " + std::to_string(level));
  }
};

// Consecutive layers must project onto each other exactly.
template <class F>
bool coherence_check(const TruncatedElement<F>& t) {
  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
    const Element<F>& high = t.layers[i + 1];
    auto pi = truncation_matrix(t.levels[i], t.levels[i + 1], field_one_of<F>(high));
    if (!(apply_map(pi, high) == t.layers[i])) return false;
  }
  return true;
}

template <class F>
struct EElementTrunc {
  enum class Tail { Identity, Zero };

  std::vector<std::map<int, F>> rows;  // explicit rows, 0-based, finite support
  Tail tail = Tail::Identity;
  F one;  // field witness so identity tails can mint entries

  static EElementTrunc identity(const F& one) { return {{}, Tail::Identity, one}; }
  static EElementTrunc zero_element(const F& one) { return {{}, Tail::Zero, one}; }

  static EElementTrunc from_rows(std::vector<std::map<int, F>> r, Tail t, const F& one) {
    for (auto& row : r)
      for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    return {std::move(r), t, one};
  }

  // Block-diagonal form: the blocks tile the diagonal starting at the origin,
  // the tail continues after the last block.
  static EElementTrunc block_diagonal(const std::vector<Matrix<F>>& blocks, Tail t, const F& one) {
    std::vector<std::map<int, F>> r;
    int base = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < b.rows(); ++i) {
        std::map<int, F> row;
        for (int j = 0; j < b.cols(); ++j)
          if (!b.at(i, j).is_zero()) row.emplace(base + j, b.at(i, j));
        r.push_back(std::move(row));
      }
      base += b.cols();
    }
    return from_rows(std::move(r), t, one);
  }

  // The group embedding g ↦ diag(g, identity tail).
  static EElementTrunc gl_embed(const Matrix<F>& g, const F& one) {
    if (g.rows() != g.cols()) throw error("MalformedInput", "group elements are square");
    std::vector<std::map<int, F>> r(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j)
        if (!g.at(i, j).is_zero()) r[static_cast<std::size_t>(i)].emplace(j, g.at(i, j));
    return from_rows(std::move(r), Tail::Identity, one);
  }

  // Row i as a sparse map, tail rows included.
  std::map<int, F> row(int i) const {
    if (i < static_cast<int>(rows.size())) return rows[static_cast<std::size_t>(i)];
    if (tail == Tail::Identity) return {{i, one}};
    return {};
  }

  // Columns that the first `count` rows can touch.
  int support_bound(int count) const {
    int bound = 0;
    for (int i = 0; i < count; ++i) {
      if (i < static_cast<int>(rows.size())) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        if (!r.empty()) bound = std::max(bound, r.rbegin()->first + 1);
      } else if (tail == Tail::Identity) {
        bound = std::max(bound, i + 1);
      }
    }
    return bound;
  }

  Matrix<F> upper_left(int nrows, int ncols) const {
    Matrix<F> m(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (const auto& [j, v] : row(i))
        if (j < ncols) m.at(i, j) = v;
    return m;
  }
};

// Applies an E-element: picks the shallowest stored layer whose level covers
// the support of the first out_level rows, cuts that upper-left block, and
// pushes the layer through it. Compatibility of the layers makes the choice
// immaterial (tested, not assumed).
template <class F>
Element<F> e_apply(const EElementTrunc<F>& e, const TruncatedElement<F>& p, int out_level) {
  if (out_level < 0) throw error("MalformedInput", "negative output level");
  int need = e.support_bound(out_level);
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    if (p.levels[i] >= need) {
      auto psi = e.upper_left(out_level, p.levels[i]);
      return apply_map(psi, p.layers[i]);
    }
  }
  throw error("InsufficientData", "no stored layer covers the first " +
                                      std::to_string(out_level) + " rows (need level >= " +
                                      std::to_string(need) + ")");
}

// Row-by-row matrix composition; tails compose as
// identity∘t = t, zero∘t = zero.
template <class F>
EElementTrunc<F> compose_e(const EElementTrunc<F>& e1, const EElementTrunc<F>& e2) {
  using EE = EElementTrunc<F>;
  std::size_t explicitRows = std::max(e1.rows.size(), e2.rows.size());
  std::vector<std::map<int, F>> rows(explicitRows);
  for (std::size_t i = 0; i < explicitRows; ++i) {
    std::map<int, F> acc;
    for (const auto& [k, v] : e1.row(static_cast<int>(i)))
      for (const auto& [j, w] : e2.row(k)) {
        auto it = acc.find(j);
        if (it == acc.end()) {
          acc.emplace(j, v * w);
        } else {
          it->second += v * w;
        }
      }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    rows[i] = std::move(acc);
  }
  typename EE::Tail tail =
      (e1.tail == EE::Tail::Zero) ? EE::Tail::Zero : e2.tail;
  return EE::from_rows(std::move(rows), tail, e1.one);
}

}  // namespace polyfun
