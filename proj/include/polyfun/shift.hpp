#pragma once

// Shift decomposition: view K^n as U + V with U the first m coordinates and
// grade P(K^n) by V-degree. The grading is read off basis labels — every
// basis vector (including each embedded Schur basis vector, whose words all
// share one letter multiset) is homogeneous for the torus scaling the last
// n - m coordinates, so no interpolation is needed.

#include <vector>

#include "polyfun/element.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/schur_basis.hpp"

namespace polyfun {

inline int word_bidegree(const Label& word, int m) {
  int j = 0;
  for (int letter : word) j += (letter > m);
  return j;
}

// V-degree of one basis label of `summand` over K^n, with U = first m coords.
template <class F>
int label_bidegree(const Summand& summand, int n, int m, const Label& label, const F& one) {
  if (summand.kind == Kind::Schur) {
    const auto& data = schur_data(summand.lambda, n, one);
    return word_bidegree(data.pivot_words.at(static_cast<std::size_t>(label.at(0))), m);
  }
  return word_bidegree(label, m);
}

// Splits e into components of V-degree 0..d; components sum to e.
template <class F>
std::vector<Element<F>> shift_decompose(const Element<F>& e, int m) {
  if (m < 0 || m > e.n) throw error("DimensionMismatch", "subspace size out of range");
  if (!e.spec.homogeneous())
    throw error("MalformedInput", "shift decomposition needs a homogeneous spec");
  int d = e.spec.max_degree();
  std::vector<Element<F>> out(static_cast<std::size_t>(d) + 1, Element<F>(e.spec, e.n));
  for (std::size_t s = 0; s < e.spec.summands.size(); ++s) {
    for (const auto& [label, c] : e.comps[s]) {
      int j = label_bidegree(e.spec.summands[s], e.n, m, label, field_one(c));
      out[static_cast<std::size_t>(j)].add_term(s, label, c);
    }
  }
  return out;
}

// dim of the V-degree-j component of P(K^{m+k}), counted off basis labels.
inline long long shift_component_dim(const FunctorSpec& spec, int m, int k, int j) {
  const int n = m + k;
  Rational one(1);
  long long total = 0;
  for (const auto& s : spec.summands) {
    if (s.kind == Kind::Schur) {
      for (const auto& w : schur_data(s.lambda, n, one).pivot_words)
        total += (word_bidegree(w, m) == j);
    } else {
      for (const auto& l : Element<Rational>::enumerate_labels(s, n))
        total += (word_bidegree(l, m) == j);
    }
  }
  return total;
}

}  // namespace polyfun
