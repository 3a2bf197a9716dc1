#pragma once

// An element of P(K^n) for a functor spec P: one sparse coordinate map per
// summand. Basis labels are vectors of 1-based variable indices:
//   Sym    weakly increasing word (monomial), e.g. {1,1,3} = x1^2 x3
//   Ext    strictly increasing word,          e.g. {1,4}   = x1 ^ x4
//   Tensor arbitrary word,                    e.g. {2,1,1} = e2 (x) e1 (x) e1
//   Schur  single 0-based index into the embedded symmetrizer-image basis
// All coordinate maps of one element share a field; zero coefficients are
// never stored.

#include <algorithm>
#include <map>
#include <vector>

#include "polyfun/error.hpp"
#include "polyfun/functor_spec.hpp"

namespace polyfun {

using Label = std::vector<int>;

inline void check_label(const Summand& s, int n, const Label& l) {
  if (s.kind == Kind::Schur) {
    if (l.size() != 1 || l[0] < 0 || l[0] >= summand_dim(s, n))
      throw error("MalformedInput", "schur label must be one index below the basis dimension");
    return;
  }
  if (static_cast<int>(l.size()) != s.degree)
    throw error("MalformedInput", "label length must equal the summand degree");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1 || l[i] > n) throw error("MalformedInput", "label index out of range");
    if (s.kind == Kind::Sym && i > 0 && l[i] < l[i - 1])
      throw error("MalformedInput", "sym label must be weakly increasing");
    if (s.kind == Kind::Ext && i > 0 && l[i] <= l[i - 1])
      throw error("MalformedInput", "ext label must be strictly increasing");
  }
}

template <class F>
struct Element {
  FunctorSpec spec;
  int n = 0;
  std::vector<std::map<Label, F>> comps;

  Element() = default;
  Element(FunctorSpec s, int vars) : spec(std::move(s)), n(vars), comps(spec.summands.size()) {
    if (vars < 0) throw error("DimensionMismatch", "negative variable count");
  }

  void add_term(std::size_t summand, Label label, const F& coeff) {
    if (summand >= spec.summands.size()) throw error("DimensionMismatch", "summand index out of range");
    check_label(spec.summands[summand], n, label);
    if (coeff.is_zero()) return;
    auto& m = comps[summand];
    auto it = m.find(label);
    if (it == m.end()) {
      m.emplace(std::move(label), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  bool is_zero() const {
    for (const auto& m : comps)
      if (!m.empty()) return false;
    return true;
  }

  Element& operator+=(const Element& o) {
    require_same_shape(o);
    for (std::size_t s = 0; s < comps.size(); ++s)
      for (const auto& [l, c] : o.comps[s]) add_term(s, l, c);
    return *this;
  }

  Element& operator-=(const Element& o) {
    require_same_shape(o);
    for (std::size_t s = 0; s < comps.size(); ++s)
      for (const auto& [l, c] : o.comps[s]) add_term(s, l, -c);
    return *this;
  }

  Element scaled(const F& c) const {
    Element r(spec, n);
    if (c.is_zero()) return r;
    r.comps = comps;
    for (auto& m : r.comps)
      for (auto& [l, v] : m) v *= c;
    return r;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.spec == b.spec && a.n == b.n && a.comps == b.comps;
  }

  // Flat coordinate vector in the deterministic basis order (for rank work).
  std::vector<F> dense(const F& zero = F()) const {
    std::vector<F> out;
    for (std::size_t s = 0; s < comps.size(); ++s) {
      auto labels = enumerate_labels(spec.summands[s], n);
      for (const auto& l : labels) {
        auto it = comps[s].find(l);
        out.push_back(it == comps[s].end() ? zero : it->second);
      }
    }
    return out;
  }

  // Basis labels of one summand over n variables, lexicographic.
  static std::vector<Label> enumerate_labels(const Summand& s, int n) {
    std::vector<Label> out;
    if (s.kind == Kind::Schur) {
      long long dim = summand_dim(s, n);
      for (long long i = 0; i < dim; ++i) out.push_back({static_cast<int>(i)});
      return out;
    }
    Label cur;
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == s.degree) {
        out.push_back(cur);
        return;
      }
      int lo = 1;
      if (!cur.empty()) {
        if (s.kind == Kind::Sym) lo = cur.back();
        if (s.kind == Kind::Ext) lo = cur.back() + 1;
      }
      for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        self(self, depth + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

 private:
  void require_same_shape(const Element& o) const {
    if (!(spec == o.spec) || n != o.n)
      throw error("NonConformable", "elements live in different spaces");
  }
};

// Sorts a word into a Sym label (in place).
inline void sym_normalize(Label& l) { std::sort(l.begin(), l.end()); }

// Sorts a word into an Ext label; returns the sign, or 0 on repeats.
inline int ext_normalize(Label& l) {
  int sign = 1;
  for (std::size_t i = 1; i < l.size(); ++i)
    for (std::size_t j = i; j > 0 && l[j] < l[j - 1]; --j) {
      std::swap(l[j], l[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i] == l[i - 1]) return 0;
  return sign;
}

}  // namespace polyfun
