#pragma once

// The derivative P' of a polynomial functor: the functor with
// P(U + V)_{degree 1 in V} = P'(U) (x) V. On irreducible summands it is the
// one-box branching rule; on a tensor power it is the Leibniz rule. Degree-1
// summands contribute constants, which a pure functor drops.

#include "polyfun/functor_spec.hpp"
#include "polyfun/partition.hpp"

namespace polyfun {

inline FunctorSpec derivative_spec(const FunctorSpec& p) {
  FunctorSpec out;
  for (const auto& s : p.summands) {
    if (s.degree == 1) continue;
    switch (s.kind) {
      case Kind::Sym:
        out.summands.push_back(Summand::sym(s.degree - 1));
        break;
      case Kind::Ext:
        out.summands.push_back(Summand::ext(s.degree - 1));
        break;
      case Kind::Tensor:
        for (int i = 0; i < s.degree; ++i) out.summands.push_back(Summand::tensor(s.degree - 1));
        break;
      case Kind::Schur:
        for (auto& mu : remove_corner_results(s.lambda)) {
          if (mu.empty()) continue;  // only for lambda = (1), already excluded
          out.summands.push_back(Summand::schur(std::move(mu)));
        }
        break;
    }
  }
  return out;
}

}  // namespace polyfun
