#pragma once

// Distinguished elements of the inverse limit and checkable specialization
// witnesses between them. minimal_q lays one fixed generator per summand in
// its own fresh variables, round after round; specializer_to_target and the
// two search operations produce explicit substitution matrices that are
// re-verified exactly before they are returned; maximal_r nests copies of
// itself through an injective index pairing so that every finite tensor is
// carried by a window of it; omega_check materializes the substitution
// derivative whose full rank drives the density argument.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polyfun/apply_map.hpp"
#include "polyfun/element.hpp"
#include "polyfun/error.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/parallel.hpp"
#include "polyfun/rng.hpp"
#include "polyfun/schur_basis.hpp"
#include "polyfun/shift.hpp"

namespace polyfun {

// A claimed specialization e . source = target, together with the levels at
// which the equality was established. Re-verification repeats exactly those
// checks; a witness that fails them is never returned by the constructors
// below.
template <class F>
struct SpecializationWitness {
  TruncatedElement<F> source;
  TruncatedElement<F> target;
  EElementTrunc<F> e;
  std::vector<int> verified_levels;
};

template <class F>
bool witness_reverify(const SpecializationWitness<F>& w) {
  for (int lv : w.verified_levels)
    if (!(e_apply(w.e, w.source, lv) == w.target.layer_at(lv))) return false;
  return true;
}

// Injective (i, j, k) -> variable index with 1 <= j <= d, everything
// 1-based: (i, k) go through the Cantor pairing and j picks a residue mod d.
// Strictly increasing in i and in k separately; the nested constructions
// rely on that monotonicity for their cutoff arguments, and on the residue
// classes mod d staying disjoint across j.
struct PairingInjection {
  int d = 1;

  long long operator()(long long i, int j, long long k) const {
    if (i < 1 || k < 1 || j < 1 || j > d)
      throw error("DimensionMismatch", "pairing arguments out of range");
    long long c = (i + k - 1) * (i + k - 2) / 2 + i;
    return (c - 1) * d + j;
  }
};

namespace detail {

// The fixed nonzero block vector for one summand, written in the `degree`
// fresh variables after `base`: the squarefree monomial for Sym (the pure
// power when pure_power is set), the full wedge for Ext, the canonical
// highest-weight vector for a Schur summand. A plain tensor power is
// rejected: no single vector generates it, so the block argument breaks.
template <class F>
void add_block_vector(Element<F>& layer, std::size_t s, int base, bool pure_power, const F& one) {
  const Summand& sm = layer.spec.summands[s];
  Label l;
  switch (sm.kind) {
    case Kind::Sym:
      for (int t = 1; t <= sm.degree; ++t) l.push_back(base + (pure_power ? 1 : t));
      layer.add_term(s, std::move(l), one);
      return;
    case Kind::Ext:
      for (int t = 1; t <= sm.degree; ++t) l.push_back(base + t);
      layer.add_term(s, std::move(l), one);
      return;
    case Kind::Schur: {
      auto hw = schur_highest_weight(sm.lambda, layer.n, base, one);
      for (const auto& [idx, c] : hw) layer.add_term(s, Label{idx}, c);
      return;
    }
    case Kind::Tensor:
      throw error("MalformedInput", "block generators need irreducible summands; split tensor powers first");
  }
}

inline std::optional<unsigned long long> checked_pow_ull(unsigned long long base, long long exp,
                                                         unsigned long long cap) {
  unsigned long long r = 1;
  for (long long t = 0; t < exp; ++t) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// Canonical flat encoding of an element over a prime field, for set
// membership during image enumeration. Labels never contain -1, so it is a
// safe separator.
inline std::vector<long long> encode_fp_element(const Element<Fp>& e) {
  std::vector<long long> out;
  for (std::size_t s = 0; s < e.comps.size(); ++s)
    for (const auto& [l, c] : e.comps[s]) {
      out.push_back(static_cast<long long>(s));
      for (int t : l) out.push_back(t);
      out.push_back(-1);
      out.push_back(static_cast<long long>(c.value()));
    }
  return out;
}

}  // namespace detail

// The universal bottom element: one fixed nonzero generator per summand,
// each in its own degree-many fresh variables, the whole row of blocks
// repeated `blocks` times. Level j*l*d holds the first j rounds, so each
// projection between consecutive levels just drops the newest round and the
// truncation is coherent by construction.
template <class F>
TruncatedElement<F> minimal_q(const FunctorSpec& spec, int blocks, const F& one, bool pure_power = false) {
  if (spec.empty() || !spec.homogeneous())
    throw error("MalformedInput", "block construction needs a nonempty homogeneous functor");
  if (blocks < 0) throw error("MalformedInput", "block count must be >= 0");
  const int d = spec.max_degree();
  const int l = static_cast<int>(spec.size());
  std::vector<int> levels;
  std::vector<Element<F>> layers;
  for (int j = 0; j <= blocks; ++j) {
    Element<F> layer(spec, j * l * d);
    for (int round = 0; round < j; ++round)
      for (int s = 0; s < l; ++s)
        detail::add_block_vector(layer, static_cast<std::size_t>(s), (round * l + s) * d, pure_power, one);
    levels.push_back(j * l * d);
    layers.push_back(std::move(layer));
  }
  return TruncatedElement<F>(spec, std::move(levels), std::move(layers));
}

// Routes each nonzero coefficient of g onto one block of q: within a block,
// the first variable carries the coefficient and the later variables the
// later letters of the target label, so the block's squarefree generator
// lands exactly on that term while surplus blocks go to zero. Exact over any
// field because the generators are squarefree: no multinomial factors occur.
template <class F>
Matrix<F> specializer_to_target(const TruncatedElement<F>& q, const Element<F>& g) {
  if (!(g.spec == q.spec)) throw error("NonConformable", "target functor differs from the source");
  if (!q.spec.homogeneous() || q.spec.empty())
    throw error("MalformedInput", "source is not a block truncation");
  for (const auto& sm : q.spec.summands)
    if (sm.kind != Kind::Sym && sm.kind != Kind::Ext)
      throw error("MalformedInput", "the constructive specializer covers Sym and Ext summands");
  const int d = q.spec.max_degree();
  const int l = static_cast<int>(q.spec.size());
  if (q.levels.empty() || q.levels.back() % (l * d) != 0)
    throw error("MalformedInput", "source is not a block truncation");
  const int blocks = q.levels.back() / (l * d);
  Matrix<F> phi(g.n, q.levels.back());
  for (std::size_t s = 0; s < g.comps.size(); ++s) {
    if (static_cast<int>(g.comps[s].size()) > blocks)
      throw error("NotEnoughBlocks", "target has " + std::to_string(g.comps[s].size()) +
                                         " terms but the source has " + std::to_string(blocks) + " blocks");
    int round = 0;
    for (const auto& [label, coeff] : g.comps[s]) {
      const int base = (round * l + static_cast<int>(s)) * d;
      phi.at(label[0] - 1, base) = coeff;
      for (int r = 1; r < d; ++r) phi.at(label[r] - 1, base + r) = field_one(coeff);
      ++round;
    }
  }
  return phi;
}

enum class OrbitMode { Exhaustive, Span };

struct OrbitOptions {
  long long budget = 20'000'000;  // maps enumerated in exhaustive mode
  int workers = 0;                // 0 = resolve from the environment
  std::uint64_t seed = 1;         // span-mode sampling stream
  int samples = 200;              // span-mode endomorphisms per summand
};

// Exhaustive mode enumerates every linear map K^n -> K^m over the prime
// field and compares the set of images of the top layer against the whole
// target space; the enumeration size is checked against the budget before
// any work starts, so the outcome is independent of the worker count. Span
// mode translates the first block generator of each summand by seeded sample
// endomorphisms and grows the exact span: reaching full dimension for every
// summand is a proof, anything less is only inconclusive and reads false.
template <class F>
bool orbit_image_full_check(const TruncatedElement<F>& q, int m, OrbitMode mode, const F& one,
                            const OrbitOptions& opt = {}) {
  if (m < 0) throw error("DimensionMismatch", "negative target dimension");
  if (q.levels.empty()) throw error("MalformedInput", "empty truncation");
  if (mode == OrbitMode::Exhaustive) {
    if constexpr (!std::is_same_v<F, Fp>) {
      throw error("MalformedInput", "exhaustive enumeration needs a finite prime field");
    } else {
      const int n = q.levels.back();
      const Element<Fp>& top = q.layers.back();
      const unsigned long long p = one.modulus();
      auto total = detail::checked_pow_ull(p, static_cast<long long>(m) * n,
                                           static_cast<unsigned long long>(opt.budget));
      if (!total) throw error("BudgetExceeded", "map enumeration exceeds the budget");
      auto want = detail::checked_pow_ull(p, spec_dim(q.spec, m), ~0ull >> 1);
      using SetT = std::set<std::vector<long long>>;
      SetT images = parallel_reduce<SetT>(
          *total, opt.workers,
          [&](std::size_t b, std::size_t e, SetT& slot) {
            for (std::size_t t = b; t < e; ++t) {
              Matrix<Fp> phi(m, n);
              std::size_t x = t;
              for (int i = m - 1; i >= 0; --i)
                for (int j = n - 1; j >= 0; --j) {
                  phi.at(i, j) = Fp(x % p, p);
                  x /= p;
                }
              slot.insert(detail::encode_fp_element(apply_map(phi, top)));
            }
          },
          [](SetT& a, SetT& b) { a.merge(b); });
      // distinct images never exceed the enumeration count, so a target
      // cardinality that overflows already decides the answer
      return want.has_value() && images.size() == *want;
    }
  }
  // Span mode.
  const int d = q.spec.max_degree();
  const int l = static_cast<int>(q.spec.size());
  if (m < d) throw error("DimensionMismatch", "span mode needs at least degree-many variables");
  const Element<F>& first = q.layer_at(l * d);
  Rng rng(opt.seed);
  bool all = true;
  for (std::size_t s = 0; s < q.spec.summands.size(); ++s) {
    const long long dim = summand_dim(q.spec.summands[s], m);
    if (dim == 0) continue;
    // extract the block-(1, s) generator and relabel it into the first
    // degree-many variables of K^m
    Element<F> blockOnly(q.spec, first.n);
    blockOnly.comps[s] = first.comps[s];
    Matrix<F> route(m, first.n);
    for (int r = 0; r < d; ++r) route.at(r, static_cast<int>(s) * d + r) = one;
    Element<F> u = apply_map(route, blockOnly);
    if (u.is_zero()) {
      all = false;
      continue;
    }
    auto labels = Element<F>::enumerate_labels(q.spec.summands[s], m);
    std::map<Label, std::size_t> pos;
    for (std::size_t t = 0; t < labels.size(); ++t) pos.emplace(labels[t], t);
    std::vector<std::vector<F>> echelon;  // reduced spanning rows found so far
    long long got = 0;
    for (int trial = 0; trial < opt.samples && got < dim; ++trial) {
      Matrix<F> g(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(i, j) = field_from_int(one, rng.range(-3, 3));
      Element<F> v = apply_map(g, u);
      std::vector<F> vec(labels.size(), F());
      for (const auto& [lab, c] : v.comps[s]) vec[pos.at(lab)] = c;
      for (const auto& row : echelon) {
        std::size_t pc = 0;
        while (row[pc].is_zero()) ++pc;
        if (!vec[pc].is_zero()) {
          F factor = vec[pc] / row[pc];
          for (std::size_t t = pc; t < vec.size(); ++t) vec[t] -= factor * row[t];
        }
      }
      bool nonzero = false;
      for (const auto& c : vec)
        if (!c.is_zero()) {
          nonzero = true;
          break;
        }
      if (nonzero) {
        echelon.push_back(std::move(vec));
        ++got;
      }
    }
    if (got < dim) all = false;
  }
  return all;
}

struct SearchOptions {
  long long budget = 5'000'000;  // candidate substitutions examined, all rounds together
  int workers = 0;
};

// Round-by-round search for a substitution carrying p onto the block
// element. In round i, a candidate map psi from the fresh source variables
// onto the i-th block row extends the rows settled in earlier rounds; the
// extended matrix must carry the whole layer onto the first i blocks of the
// target, which kills every mixed component and lands the fresh part on the
// i-th block generators in one exact element comparison. Candidates are
// enumerated in a fixed lexicographic order and the earliest hit wins, so
// the result is independent of the worker count. The assembled witness is
// block diagonal and is re-verified at every block level before returning.
inline SpecializationWitness<Fp> minimal_specializer_search(const TruncatedElement<Fp>& p,
                                                            const FunctorSpec& spec, int blocks,
                                                            const Fp& one, const SearchOptions& opt = {}) {
  if (blocks < 0) throw error("MalformedInput", "block count must be >= 0");
  if (!(p.spec == spec)) throw error("NonConformable", "input functor differs from the requested one");
  TruncatedElement<Fp> target = minimal_q(spec, blocks, one);
  const int d = spec.max_degree();
  const int W = static_cast<int>(spec.size()) * d;
  const unsigned long long pr = one.modulus();
  long long remaining = opt.budget;
  std::vector<std::map<int, Fp>> erows(static_cast<std::size_t>(blocks) * W);
  int m_prev = 0;
  std::vector<int> verified = {0};
  for (int i = 1; i <= blocks; ++i) {
    std::optional<std::pair<int, Matrix<Fp>>> hit;
    const Element<Fp>& want = target.layer_at(i * W);
    for (int m_i : p.levels) {
      if (m_i <= m_prev) continue;
      const int w = m_i - m_prev;
      const Element<Fp>& layer = p.layer_at(m_i);
      // rows settled in earlier rounds, as the fixed top of every candidate
      Matrix<Fp> base(i * W, m_i);
      for (int r = 0; r < (i - 1) * W; ++r)
        for (const auto& [c, v] : erows[static_cast<std::size_t>(r)]) base.at(r, c) = v;
      auto try_psi = [&](const Matrix<Fp>& psi) {
        Matrix<Fp> full = base;
        for (int r = 0; r < W; ++r)
          for (int c = 0; c < w; ++c) full.at((i - 1) * W + r, m_prev + c) = psi.at(r, c);
        return apply_map(full, layer) == want;
      };
      // sources already in block shape keep the identity
      if (w == W) {
        Matrix<Fp> id = Matrix<Fp>::identity(W, one);
        if (try_psi(id)) {
          hit = {m_i, std::move(id)};
          break;
        }
      }
      auto count = detail::checked_pow_ull(pr, static_cast<long long>(W) * w,
                                           static_cast<unsigned long long>(remaining));
      if (!count)
        throw error("NotFound", "search budget exhausted before level " + std::to_string(m_i) +
                                    " in round " + std::to_string(i));
      remaining -= static_cast<long long>(*count);
      auto decode = [&](std::size_t t) {
        Matrix<Fp> psi(W, w);
        for (int r = W - 1; r >= 0; --r)
          for (int c = w - 1; c >= 0; --c) {
            psi.at(r, c) = Fp(t % pr, pr);
            t /= pr;
          }
        return psi;
      };
      auto found = parallel_reduce<std::optional<std::size_t>>(
          *count, opt.workers,
          [&](std::size_t b, std::size_t e, std::optional<std::size_t>& slot) {
            for (std::size_t t = b; t < e; ++t)
              if (try_psi(decode(t))) {
                slot = t;
                return;
              }
          },
          [](std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
            if (!a) a = b;
          });
      if (found) {
        hit = {m_i, decode(*found)};
        break;
      }
    }
    if (!hit)
      throw error("NotFound", "no admissible substitution found in round " + std::to_string(i) +
                                  "; not a disproof");
    const Matrix<Fp>& psi = hit->second;
    for (int r = 0; r < W; ++r)
      for (int c = 0; c < psi.cols(); ++c)
        if (!psi.at(r, c).is_zero())
          erows[static_cast<std::size_t>(i - 1) * W + r].emplace(m_prev + c, psi.at(r, c));
    m_prev = hit->first;
    verified.push_back(i * W);
  }
  SpecializationWitness<Fp> out{p, std::move(target),
                                EElementTrunc<Fp>::from_rows(std::move(erows),
                                                             EElementTrunc<Fp>::Tail::Zero, one),
                                std::move(verified)};
  if (!witness_reverify(out))
    throw error("NotFound", "assembled substitution failed re-verification; is the input coherent?");
  return out;
}

// Inserts the degree-one factor at the given slot of every word of a tensor
// power; bilinear in both arguments.
template <class F>
Element<F> slot_insert(int j, const Element<F>& v, const Element<F>& t) {
  if (v.spec.size() != 1 || v.spec.summands[0].degree != 1 || v.spec.summands[0].kind == Kind::Schur)
    throw error("MalformedInput", "the inserted factor must be a plain degree-one element");
  if (t.spec.size() != 1 || t.spec.summands[0].kind != Kind::Tensor)
    throw error("MalformedInput", "the insertion target must be a tensor power");
  if (v.n != t.n) throw error("NonConformable", "factor and target variable counts differ");
  const int d = t.spec.summands[0].degree + 1;
  if (j < 1 || j > d) throw error("DimensionMismatch", "slot index out of range");
  Element<F> out(FunctorSpec({Summand::tensor(d)}), t.n);
  for (const auto& [lv, cv] : v.comps[0])
    for (const auto& [lt, ct] : t.comps[0]) {
      Label word = lt;
      word.insert(word.begin() + (j - 1), lv[0]);
      out.add_term(0, std::move(word), cv * ct);
    }
  return out;
}

namespace detail {

// Terms of the nested tensor element under a variable renaming, keeping a
// word exactly when all of its renamed indices stay within the cutoff. Every
// letter of a slot-j copy lies in the residue class j mod d, so distinct
// copies never produce the same word and all coefficients stay one. The
// i-loop stops once every slot-one index exceeds the cutoff, which the
// monotonicity of the pairing in i makes final.
template <class F>
std::map<Label, F> nested_terms(int d, long long cutoff, const std::function<long long(long long)>& rho,
                                const PairingInjection& iota, const F& one) {
  std::map<Label, F> out;
  if (d == 1) {
    long long v = rho(1);
    if (v <= cutoff) out.emplace(Label{static_cast<int>(v)}, one);
    return out;
  }
  for (long long i = 1;; ++i) {
    bool alive = false;
    for (int j = 1; j <= d; ++j) {
      long long s1 = rho(iota(i, j, 1));
      if (s1 > cutoff) continue;
      alive = true;
      auto inner = nested_terms(d - 1, cutoff,
                                [&rho, &iota, i, j](long long t) { return rho(iota(i, j, t + 1)); },
                                PairingInjection{d - 1}, one);
      for (const auto& [w, c] : inner) {
        Label word = w;
        word.insert(word.begin() + (j - 1), static_cast<int>(s1));
        out.emplace(std::move(word), c);
      }
    }
    if (!alive) break;
  }
  return out;
}

// Assigns the substitution columns that carry the nested element onto the
// target: each target word belongs to the copy addressed by its smallest
// letter and the first slot holding it, the copy's slot-one column takes the
// unit vector of that letter, and the rest recurses on the words with the
// slot removed. Distinct copies own disjoint column ranges, so no column is
// ever assigned twice.
template <class F>
void route_words(int d, const std::map<Label, F>& words, const std::function<long long(long long)>& rho,
                 const PairingInjection& iota, long long cutoff,
                 std::map<long long, std::map<int, F>>& cols, const F& one) {
  if (words.empty()) return;
  if (d == 1) {
    long long col = rho(1);
    if (col > cutoff) throw error("DepthExceeded", "the nested source is too shallow for this target");
    auto& entries = cols[col];
    for (const auto& [w, c] : words) entries.emplace(w[0] - 1, c);
    return;
  }
  std::map<std::pair<int, int>, std::map<Label, F>> groups;
  for (const auto& [w, c] : words) {
    int lo = *std::min_element(w.begin(), w.end());
    int j = static_cast<int>(std::find(w.begin(), w.end(), lo) - w.begin()) + 1;
    Label rest = w;
    rest.erase(rest.begin() + (j - 1));
    groups[{lo, j}].emplace(std::move(rest), c);
  }
  for (const auto& [key, sub] : groups) {
    const auto [i, j] = key;
    long long c1 = rho(iota(i, j, 1));
    if (c1 > cutoff) throw error("DepthExceeded", "the nested source is too shallow for this target");
    cols[c1].emplace(i - 1, one);
    route_words(d - 1, sub, [&rho, &iota, i, j](long long t) { return rho(iota(i, j, t + 1)); },
                PairingInjection{d - 1}, cutoff, cols, one);
  }
}

}  // namespace detail

// The nested tensor element truncated by a variable-index cutoff: a term of
// the infinite sum is kept exactly when all of its indices are at most
// `depth`. Projecting between levels just drops terms, so the truncation is
// coherent by construction, and the output is a deterministic function of
// the pairing and the cutoff.
template <class F>
TruncatedElement<F> maximal_r(int d, int depth, const PairingInjection& iota, const F& one) {
  if (d < 1) throw error("MalformedInput", "tensor degree must be >= 1");
  if (depth < 1) throw error("MalformedInput", "cutoff must be >= 1");
  if (iota.d != d) throw error("DimensionMismatch", "pairing arity differs from the degree");
  FunctorSpec spec({Summand::tensor(d)});
  std::vector<int> levels;
  if (depth / 2 >= 1 && depth / 2 < depth) levels.push_back(depth / 2);
  levels.push_back(depth);
  std::vector<Element<F>> layers;
  for (int lv : levels) {
    Element<F> layer(spec, lv);
    auto terms = detail::nested_terms(d, lv, [](long long t) { return t; }, iota, one);
    for (auto& [w, c] : terms) layer.add_term(0, w, c);
    layers.push_back(std::move(layer));
  }
  return TruncatedElement<F>(spec, std::move(levels), std::move(layers));
}

// Routes a finite tensor truncation onto the nested element via the
// (smallest letter, first slot) decomposition; a target that already is a
// window of the source keeps the identity. The witness re-verifies at the
// target's top level before it is returned.
template <class F>
SpecializationWitness<F> maximal_specializer(const TruncatedElement<F>& p, const TruncatedElement<F>& r,
                                             const PairingInjection& iota, const F& one,
                                             long long budget = 1'000'000) {
  if (p.spec.size() != 1 || p.spec.summands[0].kind != Kind::Tensor)
    throw error("MalformedInput", "the target must be a single tensor power");
  const int d = p.spec.summands[0].degree;
  if (d > 3) throw error("MalformedInput", "the shipped routing covers degree <= 3");
  if (!(r.spec == p.spec)) throw error("NonConformable", "source and target functor differ");
  if (iota.d != d) throw error("DimensionMismatch", "pairing arity differs from the degree");
  const int n = p.levels.back();
  const Element<F>& pn = p.layers.back();
  const long long cutoff = r.levels.back();

  if (cutoff >= n) {
    EElementTrunc<F> id = EElementTrunc<F>::identity(one);
    if (e_apply(id, r, n) == pn) {
      SpecializationWitness<F> out{r, p, std::move(id), {n}};
      return out;
    }
  }

  std::map<long long, std::map<int, F>> cols;
  detail::route_words(d, pn.comps[0], [](long long t) { return t; }, iota, cutoff, cols, one);
  if (static_cast<long long>(cols.size()) > budget)
    throw error("BudgetExceeded", "column assignment exceeds the budget");
  std::vector<std::map<int, F>> rows(static_cast<std::size_t>(n));
  for (const auto& [col, entries] : cols)
    for (const auto& [row, val] : entries)
      if (!val.is_zero()) rows[static_cast<std::size_t>(row)].emplace(static_cast<int>(col - 1), val);
  SpecializationWitness<F> out{
      r, p, EElementTrunc<F>::from_rows(std::move(rows), EElementTrunc<F>::Tail::Zero, one), {n}};
  if (!witness_reverify(out)) throw error("Internal", "assembled routing failed re-verification");
  return out;
}

struct OmegaPart {
  Summand summand;
  long long rank = 0;
  long long dim = 0;
};

struct OmegaReport {
  bool ok = true;
  std::vector<OmegaPart> parts;
};

// Materializes, for each summand, the substitution-derivative map whose full
// rank drives the density argument: rows run over the summand's basis in n
// variables, columns over pairs (replacement letter i, word alpha), and the
// column holds the coordinates of the summand's image of the word starting
// with i followed by alpha. Symmetric words forget their order, alternating
// words sort with a sign or vanish, Schur words go through the symmetrizer
// and back into the embedded basis.
template <class F>
OmegaReport omega_check(const FunctorSpec& spec, int n, const F& one) {
  if (n < 0) throw error("DimensionMismatch", "negative variable count");
  OmegaReport rep;
  for (const auto& sm : spec.summands) {
    const int d = sm.degree;
    if (d < 2) throw error("MalformedInput", "the substitution derivative needs degree >= 2");
    auto ncols = detail::checked_pow_ull(static_cast<unsigned long long>(n), d, 1u << 24);
    if (!ncols) throw error("BudgetExceeded", "the column window is too large");
    const long long dim = summand_dim(sm, n);
    auto labels = Element<F>::enumerate_labels(sm, n);
    std::map<Label, int> row_of;
    for (std::size_t t = 0; t < labels.size(); ++t) row_of.emplace(labels[t], static_cast<int>(t));
    Matrix<F> M(static_cast<int>(dim), static_cast<int>(*ncols));
    const SchurData<F>* data = sm.kind == Kind::Schur ? &schur_data(sm.lambda, n, one) : nullptr;
    Label word(static_cast<std::size_t>(d));
    for (unsigned long long col = 0; col < *ncols; ++col) {
      unsigned long long x = col;
      for (int t = d - 1; t >= 0; --t) {
        word[static_cast<std::size_t>(t)] = static_cast<int>(x % n) + 1;
        x /= n;
      }
      switch (sm.kind) {
        case Kind::Tensor:
          M.at(row_of.at(word), static_cast<int>(col)) = one;
          break;
        case Kind::Sym: {
          Label sorted = word;
          sym_normalize(sorted);
          M.at(row_of.at(sorted), static_cast<int>(col)) = one;
          break;
        }
        case Kind::Ext: {
          Label sorted = word;
          int sign = ext_normalize(sorted);
          if (sign != 0)
            M.at(row_of.at(sorted), static_cast<int>(col)) = sign > 0 ? one : -one;
          break;
        }
        case Kind::Schur: {
          auto img = symmetrizer_apply_word(sm.lambda, word, one);
          for (const auto& [idx, c] : schur_coords(*data, img)) M.at(idx, static_cast<int>(col)) = c;
          break;
        }
      }
    }
    const long long rank = M.rank();
    rep.parts.push_back({sm, rank, dim});
    if (rank != dim) rep.ok = false;
  }
  return rep;
}

}  // namespace polyfun
