#pragma once

// Exhaustive strength decision over a prime field: is a homogeneous degree-d
// polynomial a sum of k products of lower-degree homogeneous polynomials?
// The oracle enumerates every product and closes the k-fold sumset by
// breadth-first stages, so an answer is exact for F_p — and the enumeration
// sizes are computed up front, so a budget overrun is reported *before* any
// work is skipped, never as a wrong answer. Restricted to p > d so the
// degree-2 theory being cross-checked applies verbatim.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "polyfun/element.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/parallel.hpp"

namespace polyfun {

struct OracleOptions {
  long long budget = 20'000'000;  // upper bound on enumerated entries
  int workers = 0;                // 0: POLYFUN_WORKERS, else hardware
};

namespace detail {

// Monomial basis of the degree-d symmetric power of F_p^n, with an index.
struct SymBasis {
  int n = 0, d = 0;
  std::uint64_t p = 0;
  std::vector<Label> labels;
  std::map<Label, int> index;
};

inline SymBasis sym_basis(int n, int d, std::uint64_t p) {
  SymBasis b;
  b.n = n;
  b.d = d;
  b.p = p;
  b.labels = Element<Fp>::enumerate_labels(Summand::sym(d), n);
  for (std::size_t i = 0; i < b.labels.size(); ++i)
    b.index.emplace(b.labels[i], static_cast<int>(i));
  return b;
}

using Poly = std::vector<std::uint32_t>;  // coefficients, one per basis label

inline std::uint64_t encode(const Poly& v, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

inline Poly decode(std::uint64_t code, std::uint64_t p, std::size_t dim) {
  Poly v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// All products g·h with deg g + deg h = d, both positive, up to scale of g
// (a scalar moves across the product, so normalized g with arbitrary h
// reaches every product). Deduplicated by encoding.
inline std::vector<Poly> all_products(const SymBasis& target, const OracleOptions& opt) {
  const std::uint64_t p = target.p;
  const int n = target.n, d = target.d;
  if (static_cast<double>(target.labels.size()) * std::log2(static_cast<double>(p)) > 62.0)
    throw error("BudgetExceeded", "coefficient space too large to encode");

  // Cost check before any enumeration: sizes alone decide.
  long long cost = 0;
  for (int e = 1; 2 * e <= d; ++e) {
    auto gb = sym_basis(n, e, p);
    auto hb = sym_basis(n, d - e, p);
    double gcount = (static_cast<double>(pow_u64(p, static_cast<int>(gb.labels.size()))) - 1) /
                    static_cast<double>(p - 1);
    double hcount = static_cast<double>(pow_u64(p, static_cast<int>(hb.labels.size())));
    double stage = gcount * hcount;
    if (stage > static_cast<double>(opt.budget) - static_cast<double>(cost))
      throw error("BudgetExceeded", "product enumeration larger than the budget");
    cost += static_cast<long long>(stage);
  }

  std::unordered_set<std::uint64_t> seen;
  std::vector<Poly> out;
  for (int e = 1; 2 * e <= d; ++e) {
    auto gb = sym_basis(n, e, p);
    auto hb = sym_basis(n, d - e, p);
    const std::size_t gdim = gb.labels.size(), hdim = hb.labels.size();

    // Multiplication table: product of basis monomials, as a target index.
    std::vector<int> table(gdim * hdim);
    for (std::size_t a = 0; a < gdim; ++a)
      for (std::size_t b = 0; b < hdim; ++b) {
        Label merged = gb.labels[a];
        merged.insert(merged.end(), hb.labels[b].begin(), hb.labels[b].end());
        sym_normalize(merged);
        table[a * hdim + b] = target.index.at(merged);
      }

    const std::uint64_t hTotal = pow_u64(p, static_cast<int>(hdim));
    // Normalized g: nonzero, first nonzero coefficient equal to 1.
    std::vector<Poly> gs;
    {
      Poly g(gdim, 0);
      auto rec = [&](auto&& self, std::size_t pos, bool leading) -> void {
        if (pos == gdim) {
          if (!leading) gs.push_back(g);
          return;
        }
        for (std::uint64_t v = 0; v < (leading ? std::uint64_t{2} : p); ++v) {
          g[pos] = static_cast<std::uint32_t>(v);
          self(self, pos + 1, leading && v == 0);
        }
        g[pos] = 0;
      };
      rec(rec, 0, true);
    }

    auto worker = [&](std::size_t begin, std::size_t end, std::vector<Poly>& local) {
      Poly h(hdim), prod(target.labels.size());
      std::unordered_set<std::uint64_t> localSeen;
      for (std::size_t gi = begin; gi < end; ++gi) {
        const Poly& g = gs[gi];
        for (std::uint64_t hc = 0; hc < hTotal; ++hc) {
          std::uint64_t rem = hc;
          for (std::size_t b = 0; b < hdim; ++b) {
            h[b] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
          }
          std::fill(prod.begin(), prod.end(), 0);
          for (std::size_t a = 0; a < gdim; ++a) {
            if (!g[a]) continue;
            for (std::size_t b = 0; b < hdim; ++b) {
              if (!h[b]) continue;
              int t = table[a * hdim + b];
              prod[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(
                  (prod[static_cast<std::size_t>(t)] + static_cast<std::uint64_t>(g[a]) * h[b]) % p);
            }
          }
          if (localSeen.insert(encode(prod, p)).second) local.push_back(prod);
        }
      }
    };
    auto merge = [](std::vector<Poly>& acc, std::vector<Poly>& more) {
      for (auto& q : more) acc.push_back(std::move(q));
    };
    auto found = parallel_reduce<std::vector<Poly>>(gs.size(), opt.workers, worker, merge);
    for (auto& q : found)
      if (seen.insert(encode(q, p)).second) out.push_back(std::move(q));
  }
  return out;
}

// Dense coefficient vector of a single-summand quadratic-or-higher form.
inline Poly poly_of(const Element<Fp>& f, const SymBasis& basis) {
  Poly v(basis.labels.size(), 0);
  for (const auto& [l, c] : f.comps[0]) v[static_cast<std::size_t>(basis.index.at(l))] =
      static_cast<std::uint32_t>(c.value());
  return v;
}

inline SymBasis oracle_basis(const Element<Fp>& f) {
  if (f.spec.summands.size() != 1 || f.spec.summands[0].kind != Kind::Sym)
    throw error("MalformedInput", "the oracle takes a single symmetric-power component");
  std::uint64_t p = 0;
  for (const auto& [l, c] : f.comps[0]) p = c.modulus();
  if (p == 0) throw error("MalformedInput", "zero element carries no field; pass k = 0 directly");
  int d = f.spec.summands[0].degree;
  if (static_cast<std::uint64_t>(d) >= p)
    throw error("MalformedInput", "oracle needs the characteristic to exceed the degree");
  return sym_basis(f.n, d, p);
}

}  // namespace detail

// True iff f is a sum of at most k products of lower-degree forms over F_p.
inline bool strength_leq_oracle(const Element<Fp>& f, int k, const OracleOptions& opt = {}) {
  if (k < 0) throw error("MalformedInput", "negative strength bound");
  if (f.is_zero()) return true;
  if (k == 0) return false;
  auto basis = detail::oracle_basis(f);
  const std::uint64_t p = basis.p;
  auto target = detail::encode(detail::poly_of(f, basis), p);
  auto products = detail::all_products(basis, opt);

  std::vector<std::uint64_t> codes;
  codes.reserve(products.size());
  for (const auto& q : products) codes.push_back(detail::encode(q, p));

  std::unordered_set<std::uint64_t> frontier = {0};
  long long used = 0;
  for (int stage = 1; stage <= k; ++stage) {
    long long stageCost = static_cast<long long>(frontier.size()) *
                          static_cast<long long>(products.size());
    if (stageCost > opt.budget - used)
      throw error("BudgetExceeded", "sumset stage larger than the remaining budget");
    used += stageCost;

    std::vector<std::uint64_t> snapshot(frontier.begin(), frontier.end());
    auto worker = [&](std::size_t begin, std::size_t end, std::vector<std::uint64_t>& local) {
      for (std::size_t i = begin; i < end; ++i) {
        auto base = detail::decode(snapshot[i], p, basis.labels.size());
        detail::Poly sum(base.size());
        for (const auto& q : products) {
          for (std::size_t t = 0; t < base.size(); ++t) {
            std::uint64_t v = base[t] + q[t];
            sum[t] = static_cast<std::uint32_t>(v >= p ? v - p : v);
          }
          local.push_back(detail::encode(sum, p));
        }
      }
    };
    auto merge = [](std::vector<std::uint64_t>& acc, std::vector<std::uint64_t>& more) {
      acc.insert(acc.end(), more.begin(), more.end());
    };
    auto reached =
        parallel_reduce<std::vector<std::uint64_t>>(snapshot.size(), opt.workers, worker, merge);
    frontier.insert(reached.begin(), reached.end());
    if (frontier.count(target)) return true;
  }
  return false;
}

// Tuple variant: can k reducible forms span a space containing every listed
// component? Decided by enumerating k-subsets of the (projectively
// deduplicated) products and comparing ranks.
inline bool strength_leq_oracle_tuple(const std::vector<Element<Fp>>& fs, int k,
                                      const OracleOptions& opt = {}) {
  if (k < 0) throw error("MalformedInput", "negative strength bound");
  bool allZero = true;
  for (const auto& f : fs) allZero = allZero && f.is_zero();
  if (allZero) return true;
  if (k == 0) return false;

  std::size_t lead = 0;
  while (fs[lead].is_zero()) ++lead;
  auto basis = detail::oracle_basis(fs[lead]);
  const std::uint64_t p = basis.p;
  const int dim = static_cast<int>(basis.labels.size());

  std::vector<detail::Poly> targets;
  for (const auto& f : fs) {
    if (!(f.spec == fs[lead].spec) || f.n != fs[lead].n)
      throw error("MalformedInput", "tuple components must share one space");
    targets.push_back(detail::poly_of(f, basis));
  }

  // Projective dedup: keep one representative per scalar class.
  auto products = detail::all_products(basis, opt);
  std::unordered_set<std::uint64_t> classes;
  std::vector<detail::Poly> reps;
  for (const auto& q : products) {
    std::size_t first = 0;
    while (first < q.size() && q[first] == 0) ++first;
    if (first == q.size()) continue;
    std::uint64_t inv = Fp(q[first], p).inv().value();
    detail::Poly norm(q.size());
    for (std::size_t t = 0; t < q.size(); ++t)
      norm[t] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(q[t]) * inv) % p);
    if (classes.insert(detail::encode(norm, p)).second) reps.push_back(std::move(norm));
  }

  const std::size_t m = reps.size();
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), m);
  double comb = 1;
  for (std::size_t i = 0; i < take; ++i) comb = comb * static_cast<double>(m - i) / (i + 1);
  if (comb > static_cast<double>(opt.budget))
    throw error("BudgetExceeded", "tuple enumeration larger than the budget");

  // Rank of the targets alone: a spanning set can never be smaller.
  auto to_row = [&](const detail::Poly& q, Matrix<Fp>& mat, int row) {
    for (int t = 0; t < dim; ++t) mat.at(row, t) = Fp(q[static_cast<std::size_t>(t)], p);
  };
  Matrix<Fp> tmat(static_cast<int>(targets.size()), dim);
  for (std::size_t r = 0; r < targets.size(); ++r) to_row(targets[r], tmat, static_cast<int>(r));
  int trank = tmat.rank();
  if (trank > k) return false;

  std::vector<std::size_t> pick(take);
  auto rec = [&](auto&& self, std::size_t idx, std::size_t from) -> bool {
    if (idx == take) {
      Matrix<Fp> gmat(static_cast<int>(take), dim);
      for (std::size_t r = 0; r < take; ++r) to_row(reps[pick[r]], gmat, static_cast<int>(r));
      int grank = gmat.rank();
      Matrix<Fp> both(static_cast<int>(take + targets.size()), dim);
      for (std::size_t r = 0; r < take; ++r) to_row(reps[pick[r]], both, static_cast<int>(r));
      for (std::size_t r = 0; r < targets.size(); ++r)
        to_row(targets[r], both, static_cast<int>(take + r));
      return both.rank() == grank;
    }
    for (std::size_t c = from; c < m; ++c) {
      pick[idx] = c;
      if (self(self, idx + 1, c + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// Smallest k with strength_leq_oracle(f, k), searched up to maxk.
inline int strength_oracle_min(const Element<Fp>& f, int maxk, const OracleOptions& opt = {}) {
  for (int k = 0; k <= maxk; ++k)
    if (strength_leq_oracle(f, k, opt)) return k;
  throw error("BudgetExceeded",
              "strength exceeds the search ceiling k = " + std::to_string(maxk));
}

}  // namespace polyfun
