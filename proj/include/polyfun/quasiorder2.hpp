#pragma once

// The complete picture in degree <= 2: tuples built from Sym^1, Sym^2 and
// Ext^2 summands are classified by their rank data alone, and every class is
// reachable from the universal sources (x1x2 + x3x4 + ..., respectively
// x1^x2 + x3^x4 + ...) by an explicit banded substitution whose columns
// alternate unit vectors and coefficient columns. classify_deg2 extracts the
// rank data; deg2_specializer emits the banded matrix; canonical_deg2 builds
// the interleaved source tuple for a mixed profile. Classifying a truncation
// only bounds the limit object from below, so the result carries a flag
// saying which of the two it describes.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfun/element.hpp"
#include "polyfun/error.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/strength.hpp"

namespace polyfun {

// The classification datum of a degree-<=2 tuple: the summand profile
// (a, b, c) counting Sym^1 / Sym^2 / Ext^2 components, the rank of the
// linear block, and the rank of each quadratic and alternating component.
// For a pair of linear forms (a, b, c) = (2, 0, 0) the rank data refines to
// a pencil descriptor: two independent forms sit on top, a dependent nonzero
// pair (lu, mu) remembers its point (l : m) on the projective line, and the
// zero pair sits at the bottom. Equality compares the rank data only;
// `truncation` and `level` record where the data was read, not what class it
// belongs to, because a truncation merely lower-bounds the limit ranks.
template <class F>
struct Deg2Class {
  enum class Pencil { None, Top, Point, Zero };

  int a = 0, b = 0, c = 0;     // summand counts: Sym^1, Sym^2, Ext^2
  int linear_rank = 0;         // rank of the a x n coefficient matrix
  std::vector<int> sym_ranks;  // one per Sym^2 component, in summand order
  std::vector<int> alt_ranks;  // one per Ext^2 component, in summand order
  Pencil pencil = Pencil::None;
  std::pair<F, F> point;       // set iff pencil == Point, first nonzero scaled to 1

  bool truncation = false;     // ranks were read off a truncated tuple
  int level = 0;               // variable count (or truncation level) used

  friend bool operator==(const Deg2Class& x, const Deg2Class& y) {
    if (!(x.a == y.a && x.b == y.b && x.c == y.c)) return false;
    if (x.linear_rank != y.linear_rank) return false;
    if (x.sym_ranks != y.sym_ranks || x.alt_ranks != y.alt_ranks) return false;
    if (x.pencil != y.pencil) return false;
    if (x.pencil == Pencil::Point && !(x.point == y.point)) return false;
    return true;
  }
  friend bool operator!=(const Deg2Class& x, const Deg2Class& y) { return !(x == y); }

  std::string describe() const {
    auto join = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
      return s + "]";
    };
    std::string s = "profile (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")";
    s += truncation ? " at level " + std::to_string(level) + " (truncation; ranks lower-bound the limit)"
                    : " on " + std::to_string(level) + " variables";
    if (a) s += ", linear rank " + std::to_string(linear_rank);
    if (b) s += ", sym ranks " + join(sym_ranks);
    if (c) s += ", alt ranks " + join(alt_ranks);
    switch (pencil) {
      case Pencil::None: break;
      case Pencil::Top: s += ", pencil: top"; break;
      case Pencil::Zero: s += ", pencil: zero"; break;
      case Pencil::Point:
        s += ", pencil: point (" + point.first.str() + " : " + point.second.str() + ")";
        break;
    }
    return s;
  }
};

namespace detail {

inline void check_deg2_spec(const FunctorSpec& spec) {
  for (const auto& sm : spec.summands) {
    bool ok = (sm.kind == Kind::Sym && (sm.degree == 1 || sm.degree == 2)) ||
              (sm.kind == Kind::Ext && sm.degree == 2);
    if (!ok)
      throw error("MalformedInput",
                  "degree-two classification covers Sym1, Sym2 and Ext2 summands, not " + sm.str());
  }
}

}  // namespace detail

// Reads the full rank data off one element. Alternating ranks are checked to
// be even: a skew form of odd rank cannot exist, so an odd value means the
// rank computation itself went wrong.
template <class F>
Deg2Class<F> classify_deg2(const Element<F>& e) {
  detail::check_deg2_spec(e.spec);

  Deg2Class<F> cls;
  cls.level = e.n;

  // Linear block: one coefficient row per Sym^1 summand, in summand order.
  std::vector<std::size_t> linear_summands;
  for (std::size_t s = 0; s < e.spec.summands.size(); ++s) {
    const Summand& sm = e.spec.summands[s];
    if (sm.kind == Kind::Sym && sm.degree == 1) {
      linear_summands.push_back(s);
      ++cls.a;
    } else if (sm.kind == Kind::Sym) {
      ++cls.b;
      cls.sym_ranks.push_back(sym_element_matrix(e, s).rank());
    } else {
      ++cls.c;
      int r = alt_element_matrix(e, s).rank();
      if (r % 2) throw error("Internal", "alternating component has odd rank " + std::to_string(r));
      cls.alt_ranks.push_back(r);
    }
  }
  Matrix<F> lin(cls.a, e.n);
  for (std::size_t i = 0; i < linear_summands.size(); ++i)
    for (const auto& [l, c] : e.comps[linear_summands[i]]) lin.at(static_cast<int>(i), l[0] - 1) = c;
  cls.linear_rank = lin.rank();

  // A pair of linear forms refines to its pencil position.
  if (cls.a == 2 && cls.b == 0 && cls.c == 0) {
    using P = typename Deg2Class<F>::Pencil;
    bool v_zero = e.comps[linear_summands[0]].empty();
    bool w_zero = e.comps[linear_summands[1]].empty();
    if (v_zero && w_zero) {
      cls.pencil = P::Zero;
    } else if (cls.linear_rank == 2) {
      cls.pencil = P::Top;
    } else if (v_zero) {
      F one = field_one(e.comps[linear_summands[1]].begin()->second);
      cls.pencil = P::Point;
      cls.point = {field_zero(one), one};
    } else {
      // (v, w) = (l u, m u) with u = v / v_k: the point is (v_k : w_k),
      // already normalized once we divide through by v_k.
      cls.pencil = P::Point;
      int k = e.comps[linear_summands[0]].begin()->first[0];
      F vk = e.comps[linear_summands[0]].begin()->second;
      F wk = field_zero(vk);
      auto it = e.comps[linear_summands[1]].find(Label{k});
      if (it != e.comps[linear_summands[1]].end()) wk = it->second;
      cls.point = {field_one(vk), wk / vk};
    }
  }
  return cls;
}

// Classifies the deepest stored layer of a truncation. The result describes
// the truncation itself: each rank is a lower bound for the limit object's.
template <class F>
Deg2Class<F> classify_deg2(const TruncatedElement<F>& t) {
  if (t.layers.empty()) throw error("InsufficientData", "no layers to classify");
  Deg2Class<F> cls = classify_deg2(t.layers.back());
  cls.truncation = true;
  return cls;
}

// A sparse coefficient stream a_{ij} with indices up to `level`: the target
// sum_{i<=j} a_ij x_i x_j of a quadric specialization, or sum_{i<j} of an
// alternating one.
template <class F>
struct CoeffStream {
  int level = 0;
  std::map<std::pair<int, int>, F> a;
};

enum class Deg2Kind { Quadric, Alternating };

// Targets with a mixed profile: `linear[s]` maps r to the coefficient of x_r
// in the s-th linear form, `quadric[s]` and `alternating[s]` are coefficient
// streams as above. The profile (a, b, c) is the triple of vector sizes.
template <class F>
struct MixedStream {
  int level = 0;
  std::vector<std::map<int, F>> linear;
  std::vector<std::map<std::pair<int, int>, F>> quadric;
  std::vector<std::map<std::pair<int, int>, F>> alternating;
};

// The interleaving for a mixed profile (a, b, c): after the first a
// coordinates, super-blocks of width 2b + 2c tile the remaining variables,
// each holding one fresh hyperbolic pair per quadratic component followed by
// one per alternating component. y_index(i, j) is the home of the j-th
// hyperbolic slot of super-block i on the quadratic side, z_index the same
// on the alternating side; together they enumerate a + 1, a + 2, ...
// bijectively.
inline long long mixed_y_index(int a, int b, int c, long long i, int j) {
  if (a < 0 || b < 0 || c < 0 || i < 0 || j < 1 || j > 2 * b)
    throw error("DimensionMismatch", "interleaving arguments out of range");
  return a + 2 * i * b + 2 * i * c + j;
}

inline long long mixed_z_index(int a, int b, int c, long long i, int j) {
  if (a < 0 || b < 0 || c < 0 || i < 0 || j < 1 || j > 2 * c)
    throw error("DimensionMismatch", "interleaving arguments out of range");
  return a + 2 * (i + 1) * b + 2 * i * c + j;
}

// The functor (Sym^1)^a + (Sym^2)^b + (Ext^2)^c, in that order.
inline FunctorSpec deg2_spec(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw error("MalformedInput", "profile counts must be >= 0");
  std::vector<Summand> s;
  for (int i = 0; i < a; ++i) s.push_back(Summand::sym(1));
  for (int i = 0; i < b; ++i) s.push_back(Summand::sym(2));
  for (int i = 0; i < c; ++i) s.push_back(Summand::ext(2));
  return FunctorSpec(std::move(s));
}

// The canonical dense-orbit tuple of profile (a, b, c): the first a
// variables as linear forms, then one infinite hyperbolic form per
// quadratic and alternating component, interleaved so that all components
// draw fresh variables forever. A term enters a layer as soon as both its
// variables fit, so consecutive layers project onto each other exactly.
template <class F>
TruncatedElement<F> canonical_deg2(int a, int b, int c, std::vector<int> levels, const F& one) {
  FunctorSpec spec = deg2_spec(a, b, c);
  std::vector<Element<F>> layers;
  for (int n : levels) {
    Element<F> layer(spec, n);
    for (int s = 1; s <= a; ++s)
      if (s <= n) layer.add_term(static_cast<std::size_t>(s - 1), {s}, one);
    for (int s = 1; s <= b; ++s)
      for (long long i = 0; mixed_y_index(a, b, c, i, 2 * s) <= n; ++i)
        layer.add_term(static_cast<std::size_t>(a + s - 1),
                       {static_cast<int>(mixed_y_index(a, b, c, i, 2 * s - 1)),
                        static_cast<int>(mixed_y_index(a, b, c, i, 2 * s))},
                       one);
    for (int s = 1; s <= c; ++s)
      for (long long i = 0; mixed_z_index(a, b, c, i, 2 * s) <= n; ++i)
        layer.add_term(static_cast<std::size_t>(a + b + s - 1),
                       {static_cast<int>(mixed_z_index(a, b, c, i, 2 * s - 1)),
                        static_cast<int>(mixed_z_index(a, b, c, i, 2 * s))},
                       one);
    layers.push_back(std::move(layer));
  }
  return TruncatedElement<F>(std::move(spec), std::move(levels), std::move(layers));
}

namespace detail {

template <class F>
void check_stream_indices(const std::map<std::pair<int, int>, F>& a, int level, bool strict) {
  for (const auto& [ij, v] : a) {
    (void)v;
    auto [i, j] = ij;
    if (i < 1 || j < 1 || i > level || j > level)
      throw error("MalformedInput", "coefficient index out of the stream's declared range");
    if (strict ? i >= j : i > j)
      throw error("MalformedInput", "coefficient indices must satisfy i " +
                                        std::string(strict ? "< j" : "<= j"));
  }
}

}  // namespace detail

// The target of a pure stream as an element: sum_{i<=j} a_ij x_i x_j on a
// single Sym^2 summand, or sum_{i<j} a_ij x_i ^ x_j on a single Ext^2 one.
template <class F>
Element<F> stream_element(const CoeffStream<F>& s, int n, Deg2Kind kind) {
  detail::check_stream_indices(s.a, s.level, kind == Deg2Kind::Alternating);
  Element<F> out(kind == Deg2Kind::Quadric ? deg2_spec(0, 1, 0) : deg2_spec(0, 0, 1), n);
  for (const auto& [ij, v] : s.a)
    if (ij.second <= n) out.add_term(0, {ij.first, ij.second}, v);
  return out;
}

// The target of a mixed stream as an element of (Sym^1)^a + (Sym^2)^b +
// (Ext^2)^c on n variables; coefficients beyond n are cut, matching what a
// level-n specialization can reproduce.
template <class F>
Element<F> mixed_stream_element(const MixedStream<F>& ms, int n) {
  const int a = static_cast<int>(ms.linear.size());
  const int b = static_cast<int>(ms.quadric.size());
  const int c = static_cast<int>(ms.alternating.size());
  Element<F> out(deg2_spec(a, b, c), n);
  for (int s = 0; s < a; ++s)
    for (const auto& [r, v] : ms.linear[s]) {
      if (r < 1 || r > ms.level)
        throw error("MalformedInput", "coefficient index out of the stream's declared range");
      if (r <= n) out.add_term(static_cast<std::size_t>(s), {r}, v);
    }
  for (int s = 0; s < b; ++s) {
    detail::check_stream_indices(ms.quadric[static_cast<std::size_t>(s)], ms.level, false);
    for (const auto& [ij, v] : ms.quadric[static_cast<std::size_t>(s)])
      if (ij.second <= n) out.add_term(static_cast<std::size_t>(a + s), {ij.first, ij.second}, v);
  }
  for (int s = 0; s < c; ++s) {
    detail::check_stream_indices(ms.alternating[static_cast<std::size_t>(s)], ms.level, true);
    for (const auto& [ij, v] : ms.alternating[static_cast<std::size_t>(s)])
      if (ij.second <= n) out.add_term(static_cast<std::size_t>(a + b + s), {ij.first, ij.second}, v);
  }
  return out;
}

// The banded specializer for a mixed profile. Row r of the result (1-based)
// sends y_r the coefficients it needs: column s - 1 carries the r-th
// coefficient of the s-th linear form, and for every quadratic component s
// the unit entry sits at the first slot of the r-th hyperbolic pair while
// the coefficient a_{t,r} rides the second slot of pair t <= r (t < r on the
// alternating side, where the diagonal is empty). Applying the result to
// canonical_deg2(a, b, c) reproduces the mixed target at the requested level
// exactly; the tail is zero, so surplus source variables are killed.
template <class F>
EElementTrunc<F> deg2_specializer(const MixedStream<F>& ms, int out_level, const F& one) {
  const int a = static_cast<int>(ms.linear.size());
  const int b = static_cast<int>(ms.quadric.size());
  const int c = static_cast<int>(ms.alternating.size());
  if (out_level < 0 || out_level % 2 != 0)
    throw error("MalformedInput", "the banded pattern fills whole hyperbolic pairs; the level must be even");
  if (out_level > ms.level)
    throw error("InsufficientData", "coefficients are stored up to level " +
                                        std::to_string(ms.level) + ", not " + std::to_string(out_level));

  std::vector<std::map<int, F>> rows(static_cast<std::size_t>(out_level));
  for (int s = 0; s < a; ++s)
    for (const auto& [r, v] : ms.linear[static_cast<std::size_t>(s)]) {
      if (r < 1 || r > ms.level)
        throw error("MalformedInput", "coefficient index out of the stream's declared range");
      if (r <= out_level) rows[static_cast<std::size_t>(r - 1)].emplace(s, v);
    }
  for (int s = 1; s <= b; ++s) {
    detail::check_stream_indices(ms.quadric[static_cast<std::size_t>(s - 1)], ms.level, false);
    for (int r = 1; r <= out_level; ++r)
      rows[static_cast<std::size_t>(r - 1)].emplace(
          static_cast<int>(mixed_y_index(a, b, c, r - 1, 2 * s - 1)) - 1, one);
    for (const auto& [ij, v] : ms.quadric[static_cast<std::size_t>(s - 1)]) {
      auto [t, r] = ij;
      if (r <= out_level)
        rows[static_cast<std::size_t>(r - 1)].emplace(
            static_cast<int>(mixed_y_index(a, b, c, t - 1, 2 * s)) - 1, v);
    }
  }
  for (int s = 1; s <= c; ++s) {
    detail::check_stream_indices(ms.alternating[static_cast<std::size_t>(s - 1)], ms.level, true);
    for (int r = 1; r <= out_level; ++r)
      rows[static_cast<std::size_t>(r - 1)].emplace(
          static_cast<int>(mixed_z_index(a, b, c, r - 1, 2 * s - 1)) - 1, one);
    for (const auto& [ij, v] : ms.alternating[static_cast<std::size_t>(s - 1)]) {
      auto [t, r] = ij;
      if (r <= out_level)
        rows[static_cast<std::size_t>(r - 1)].emplace(
            static_cast<int>(mixed_z_index(a, b, c, t - 1, 2 * s)) - 1, v);
    }
  }
  return EElementTrunc<F>::from_rows(std::move(rows), EElementTrunc<F>::Tail::Zero, one);
}

// The pure quadric / alternating case, profile (0, 1, 0) or (0, 0, 1): the
// columns alternate unit vectors e_1, e_2, ... with the coefficient columns
// (a_{11}, a_{12}, ...), (0, a_{22}, a_{23}, ...), ... so that applying the
// matrix to x1x2 + x3x4 + ... yields sum_{i<=j} a_ij x_i x_j (and likewise
// with an empty diagonal on the alternating side).
template <class F>
EElementTrunc<F> deg2_specializer(const CoeffStream<F>& s, int out_level, Deg2Kind kind, const F& one) {
  MixedStream<F> ms;
  ms.level = s.level;
  if (kind == Deg2Kind::Quadric)
    ms.quadric.push_back(s.a);
  else
    ms.alternating.push_back(s.a);
  return deg2_specializer(ms, out_level, one);
}

}  // namespace polyfun
