// Specialization walkthrough: the block element q reaches a chosen target
// through an explicit substitution matrix, and a banded matrix carries q
// onto any coefficient stream, level by level, without ever leaving exact
// arithmetic.

#include <iostream>

#include "polyfun/apply_map.hpp"
#include "polyfun/dense.hpp"
#include "polyfun/element.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/quasiorder2.hpp"
#include "polyfun/rational.hpp"

using namespace polyfun;

// Renders a quadric as a sum of monomials, e.g. "1*x1x2 + 5*x2x3".
static std::string show(const Element<Rational>& e) {
  std::string out;
  for (const auto& [label, coeff] : e.comps[0]) {
    if (!out.empty()) out += " + ";
    out += coeff.str() + "*";
    for (int v : label) out += "x" + std::to_string(v);
  }
  return out.empty() ? "0" : out;
}

int main() {
  Rational one(1);

  // Two blocks of the quadric element: x1x2 + x3x4 at level 4.
  auto q = minimal_q(FunctorSpec::parse("S2"), 2, one);
  std::cout << "block element, top layer: " << show(q.layers.back()) << "\n";

  // Target: y1^2 - 2 y1 y2. One block per nonzero coefficient.
  Element<Rational> g(q.spec, 2);
  g.add_term(0, Label{1, 1}, one);
  g.add_term(0, Label{1, 2}, Rational(-2));
  Matrix<Rational> phi = specializer_to_target(q, g);
  std::cout << "target " << show(g) << " reached: "
            << (apply_map(phi, q.layers.back()) == g ? "yes" : "no") << "\n\n";

  // A coefficient stream defines a quadric sum_{i<=j} a_{ij} y_i y_j; the
  // banded matrix reproduces it from the block element at every even level.
  CoeffStream<Rational> s;
  s.level = 6;
  s.a[{1, 2}] = one;
  s.a[{2, 3}] = Rational(5);
  s.a[{1, 6}] = Rational::parse("-1/3");
  auto e = deg2_specializer(s, 6, Deg2Kind::Quadric, one);
  auto src = minimal_q(FunctorSpec::parse("S2"), 6, one);
  Element<Rational> got = e_apply(e, src, 6);
  std::cout << "banded matrix at level 6 yields: " << show(got) << "\n";
  std::cout << "matches the stream: "
            << (got == stream_element(s, 6, Deg2Kind::Quadric) ? "yes" : "no") << "\n\n";

  // Classify what we produced: one quadric coupling four of the variables.
  auto cls = classify_deg2(got);
  std::cout << "classification: " << cls.describe() << "\n";
  return 0;
}
