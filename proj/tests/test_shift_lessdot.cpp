#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "polyfun/apply_map.hpp"
#include "polyfun/derivative.hpp"
#include "polyfun/element.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/lessdot.hpp"
#include "polyfun/rng.hpp"
#include "polyfun/schur_basis.hpp"
#include "polyfun/shift.hpp"

using namespace polyfun;

TEST_CASE("derivative of the classical summands") {
  REQUIRE(derivative_spec(FunctorSpec::parse("S3")) == FunctorSpec::parse("S2"));
  REQUIRE(derivative_spec(FunctorSpec::parse("E3")) == FunctorSpec::parse("E2"));
  REQUIRE(derivative_spec(FunctorSpec::parse("(2,1)")) == FunctorSpec::parse("(1,1) + (2)"));
  REQUIRE(derivative_spec(FunctorSpec::parse("(2,2)")) == FunctorSpec::parse("(2,1)"));
  REQUIRE(derivative_spec(FunctorSpec::parse("(3,1)")) == FunctorSpec::parse("(2,1) + (3)"));
  REQUIRE(derivative_spec(FunctorSpec::parse("T3")) == FunctorSpec::parse("3*T2"));
  // Degree-1 summands differentiate to constants, which are dropped.
  REQUIRE(derivative_spec(FunctorSpec::parse("S1")).empty());
  REQUIRE(derivative_spec(FunctorSpec::parse("S1 + E2")) == FunctorSpec::parse("E1"));
}

TEST_CASE("derivative matches the degree-1 shift component dimension") {
  // This is the defining property of the derivative: the degree-1-in-V part
  // of P(U + V) is P'(U) (x) V.
  std::vector<std::string> specs = {"S2", "S3",    "S4",    "E2",    "E3",      "E4",     "T2",
                                    "T3", "(2,1)", "(2,2)", "(3,1)", "S3 + E3", "S2 + (2,1)"};
  for (const auto& text : specs) {
    FunctorSpec spec = FunctorSpec::parse(text);
    FunctorSpec deriv = derivative_spec(spec);
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k)
        REQUIRE(shift_component_dim(spec, m, k, 1) == spec_dim(deriv, m) * k);
  }
}

TEST_CASE("shift component dimensions sum to the whole space") {
  std::vector<std::string> specs = {"S3", "E3", "T3", "(2,1)", "(2,2)", "S4 + (3,1)"};
  for (const auto& text : specs) {
    FunctorSpec spec = FunctorSpec::parse(text);
    int d = spec.max_degree();
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= 2; ++k) {
        long long sum = 0;
        for (int j = 0; j <= d; ++j) sum += shift_component_dim(spec, m, k, j);
        REQUIRE(sum == spec_dim(spec, m + k));
      }
  }
}

TEST_CASE("quadratic shift split by V-degree") {
  // x1^2 + x1 x2 + x2 x3 over K^3 with U = <x1>: V-degrees 0, 1, 2.
  FunctorSpec spec = FunctorSpec::parse("S2");
  Element<Rational> e(spec, 3);
  e.add_term(0, Label{1, 1}, Rational(1));
  e.add_term(0, Label{1, 2}, Rational(1));
  e.add_term(0, Label{2, 3}, Rational(1));
  auto parts = shift_decompose(e, 1);
  REQUIRE(parts.size() == 3);
  REQUIRE(parts[0].comps[0] == (std::map<Label, Rational>{{Label{1, 1}, Rational(1)}}));
  REQUIRE(parts[1].comps[0] == (std::map<Label, Rational>{{Label{1, 2}, Rational(1)}}));
  REQUIRE(parts[2].comps[0] == (std::map<Label, Rational>{{Label{2, 3}, Rational(1)}}));
}

TEST_CASE("wedge shift split") {
  FunctorSpec spec = FunctorSpec::parse("E2");
  Element<Rational> e(spec, 2);
  e.add_term(0, Label{1, 2}, Rational(1));
  auto parts = shift_decompose(e, 1);
  REQUIRE(parts[0].is_zero());
  REQUIRE(parts[1] == e);
  REQUIRE(parts[2].is_zero());
}

TEST_CASE("shift components sum to the element and grade it") {
  std::uint64_t p = 7;
  Rng rng(0x5a17u);
  FunctorSpec spec = FunctorSpec::parse("S3 + E3 + T3 + (2,1)");
  for (int m = 0; m <= 3; ++m) {
    Element<Fp> e(spec, 3);
    for (std::size_t s = 0; s < spec.summands.size(); ++s)
      for (const auto& l : Element<Fp>::enumerate_labels(spec.summands[s], 3))
        if (rng.below(2)) e.add_term(s, l, Fp(rng.below(p), p));

    auto parts = shift_decompose(e, m);
    Element<Fp> sum(spec, 3);
    for (const auto& part : parts) sum += part;
    REQUIRE(sum == e);

    // Component 0 is the restriction to U, re-embedded.
    Matrix<Fp> proj(3, 3);
    for (int i = 0; i < m; ++i) proj.at(i, i) = Fp(1, p);
    REQUIRE(parts[0] == apply_map(proj, e));

    // Component j scales as t^j when the V coordinates are scaled by t.
    Matrix<Fp> scale = Matrix<Fp>::identity(3, Fp(1, p));
    Fp t(3, p);
    for (int i = m; i < 3; ++i) scale.at(i, i) = t;
    Fp tj(1, p);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      REQUIRE(apply_map(scale, parts[j]) == parts[j].scaled(tj));
      tj *= t;
    }
  }
}

TEST_CASE("embedded schur basis vectors are bidegree homogeneous") {
  Rational one(1);
  const auto& data = schur_data(Partition{2, 1}, 3, one);
  for (int m = 1; m <= 2; ++m) {
    for (int col = 0; col < data.embed.cols(); ++col) {
      int seen = -1;
      for (int row = 0; row < data.embed.rows(); ++row) {
        if (data.embed.at(row, col).is_zero()) continue;
        int j = word_bidegree(data.words[static_cast<std::size_t>(row)], m);
        if (seen < 0) seen = j;
        REQUIRE(j == seen);
      }
    }
  }
}

TEST_CASE("covering relation on known pairs") {
  auto spec = [](const char* s) { return FunctorSpec::parse(s); };
  // The introduction's example pair.
  REQUIRE(lessdot(spec("2*S1 + (1,1) + (3)"), spec("S2 + (3) + (2,1)")));
  REQUIRE(!lessdot(spec("S2 + (3) + (2,1)"), spec("2*S1 + (1,1) + (3)")));
  // Nothing covers itself.
  REQUIRE(!lessdot(spec("S3 + E2"), spec("S3 + E2")));
  // Dropping the top degree entirely is a quotient.
  REQUIRE(lessdot(spec("S2"), spec("S3")));
  REQUIRE(!lessdot(spec("S3"), spec("S2")));
  // A tensor square is isomorphic to S2 + E2, so neither covers the other.
  REQUIRE(!lessdot(spec("T2"), spec("S2 + E2")));
  REQUIRE(!lessdot(spec("S2 + E2"), spec("T2")));
  // Same degree, genuine sub-multiset.
  REQUIRE(lessdot(spec("S3"), spec("S3 + (2,1)")));
  // Same top degree but incomparable multisets.
  REQUIRE(!lessdot(spec("E3"), spec("S3 + (2,1)")));
  // Lower degrees may grow arbitrarily as long as the top degree shrinks.
  REQUIRE(lessdot(spec("5*S1 + S2"), spec("S3")));
}

TEST_CASE("covering relation is irreflexive and acyclic on small specs") {
  // Exhaustive enumeration: up to 3 summands drawn from degree <= 3 kinds.
  std::vector<Summand> atoms = {Summand::sym(1),          Summand::sym(2),
                                Summand::sym(3),          Summand::ext(2),
                                Summand::ext(3),          Summand::tensor(2),
                                Summand::schur({2, 1})};
  std::vector<FunctorSpec> specs;
  const int a = static_cast<int>(atoms.size());
  for (int i = 0; i < a; ++i) {
    specs.push_back(FunctorSpec({atoms[i]}));
    for (int j = i; j < a; ++j) {
      specs.push_back(FunctorSpec({atoms[i], atoms[j]}));
      for (int k = j; k < a; ++k) specs.push_back(FunctorSpec({atoms[i], atoms[j], atoms[k]}));
    }
  }

  const int nspecs = static_cast<int>(specs.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nspecs));
  for (int i = 0; i < nspecs; ++i) {
    REQUIRE(!lessdot(specs[static_cast<std::size_t>(i)], specs[static_cast<std::size_t>(i)]));
    for (int j = 0; j < nspecs; ++j)
      if (lessdot(specs[static_cast<std::size_t>(i)], specs[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        // Antisymmetry up to isomorphism.
        REQUIRE(!lessdot(specs[static_cast<std::size_t>(j)], specs[static_cast<std::size_t>(i)]));
      }
  }

  // Depth-first cycle check over the covering digraph.
  std::vector<int> state(static_cast<std::size_t>(nspecs), 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    state[static_cast<std::size_t>(v)] = 1;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (state[static_cast<std::size_t>(w)] == 1) return false;
      if (state[static_cast<std::size_t>(w)] == 0 && !self(self, w)) return false;
    }
    state[static_cast<std::size_t>(v)] = 2;
    return true;
  };
  bool acyclic = true;
  for (int v = 0; v < nspecs; ++v)
    if (state[static_cast<std::size_t>(v)] == 0 && !dfs(dfs, v)) acyclic = false;
  REQUIRE(acyclic);
}
