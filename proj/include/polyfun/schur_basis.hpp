#pragma once

// Realization of the Schur summand for a partition as a subspace of the
// degree-d tensor power: the image of the Young symmetrizer of the canonical
// tableau (boxes numbered 1..d along rows, top to bottom). The symmetrizer is
// c = b * a with a = sum of row-group permutations and b = signed sum of
// column-group permutations; permutations act on tensor slots. The embedded
// basis is the set of pivot columns of [c e_w]_w under the deterministic
// elimination rule, so it is reproducible, and its size always equals the
// semistandard tableau count (checked).

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "polyfun/element.hpp"
#include "polyfun/matrix.hpp"

namespace polyfun {

namespace detail {

// All permutations of {0..d-1} preserving the given blocks, as slot maps.
inline std::vector<std::vector<int>> block_permutations(int d, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(d);
  for (int i = 0; i < d; ++i) base[i] = i;
  perms.push_back(base);
  for (const auto& block : blocks) {
    std::vector<int> idx = block;  // positions to permute among themselves
    std::sort(idx.begin(), idx.end());
    std::vector<int> arrangement = idx;
    std::vector<std::vector<int>> extended;
    do {
      for (const auto& p : perms) {
        std::vector<int> q = p;
        for (std::size_t t = 0; t < idx.size(); ++t) q[idx[t]] = p[arrangement[t]];
        extended.push_back(q);
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    perms = std::move(extended);
  }
  return perms;
}

inline int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace detail

// Applies the Young symmetrizer of lambda to a single basis word
// (1-based entries); the result is a sparse word->coefficient map.
template <class F>
std::map<Label, F> symmetrizer_apply_word(const Partition& lambda, const Label& word, const F& one) {
  check_partition(lambda);
  const int d = weight(lambda);
  if (static_cast<int>(word.size()) != d) throw error("DimensionMismatch", "word length != |lambda|");

  // Box positions of the canonical tableau.
  std::vector<std::vector<int>> rows(lambda.size()), cols(lambda.empty() ? 0 : lambda[0]);
  int box = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      rows[r].push_back(box);
      cols[c].push_back(box);
      ++box;
    }
  auto rowPerms = detail::block_permutations(d, rows);
  auto colPerms = detail::block_permutations(d, cols);

  std::map<Label, F> out;
  Label w(d);
  for (const auto& tau : colPerms) {
    int sgn = detail::perm_sign(tau);
    for (const auto& sigma : rowPerms) {
      for (int i = 0; i < d; ++i) w[i] = word[static_cast<std::size_t>(sigma[static_cast<std::size_t>(tau[i])])];
      F c = sgn > 0 ? one : -one;
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(w, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

template <class F>
std::map<Label, F> symmetrizer_apply(const Partition& lambda, const std::map<Label, F>& vec, const F& one) {
  std::map<Label, F> out;
  for (const auto& [word, coeff] : vec) {
    auto img = symmetrizer_apply_word(lambda, word, one);
    for (const auto& [w, c] : img) {
      F v = coeff * c;
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(w, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

template <class F>
struct SchurData {
  Partition lambda;
  int n = 0;
  std::vector<Label> words;     // lex-ordered basis of the degree-d tensor power
  std::map<Label, int> word_index;
  Matrix<F> embed;              // n^d x dim, full column rank
  std::vector<Label> pivot_words;  // the words whose symmetrizer images were kept
  F kappa;                      // c^2 = kappa * c on the image

  std::vector<F> lift(const std::map<int, F>& coords) const {
    std::vector<F> t(static_cast<std::size_t>(embed.rows()));
    for (const auto& [idx, c] : coords)
      for (int r = 0; r < embed.rows(); ++r)
        if (!embed.at(r, idx).is_zero()) t[static_cast<std::size_t>(r)] += embed.at(r, idx) * c;
    return t;
  }
};

// Cached per (lambda, n, field). The modulus discriminates prime fields.
template <class F>
const SchurData<F>& schur_data(const Partition& lambda, int n, const F& one) {
  static std::map<std::tuple<Partition, int, std::string>, SchurData<F>> cache;
  static std::mutex mu;
  std::string tag = one.str();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(lambda, n, tag);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SchurData<F> data;
  data.lambda = lambda;
  data.n = n;
  const int d = weight(lambda);
  data.words = Element<F>::enumerate_labels(Summand::tensor(d), n);
  for (std::size_t i = 0; i < data.words.size(); ++i)
    data.word_index.emplace(data.words[i], static_cast<int>(i));

  const int N = static_cast<int>(data.words.size());
  Matrix<F> all(N, N);
  for (int j = 0; j < N; ++j) {
    auto img = symmetrizer_apply_word(lambda, data.words[static_cast<std::size_t>(j)], one);
    for (const auto& [w, c] : img) all.at(data.word_index.at(w), j) = c;
  }
  auto pivots = all.column_space_pivots();
  long long expected = ssyt_count(lambda, n);
  if (static_cast<long long>(pivots.size()) != expected)
    throw error("Internal", "symmetrizer image dimension mismatch for " + partition_str(lambda));
  data.embed = all.columns(pivots);
  for (int p : pivots) data.pivot_words.push_back(data.words[static_cast<std::size_t>(p)]);

  if (!pivots.empty()) {
    // kappa from c(c e_w) = kappa (c e_w) on the first basis column.
    std::map<Label, F> col;
    for (int r = 0; r < N; ++r)
      if (!data.embed.at(r, 0).is_zero()) col.emplace(data.words[static_cast<std::size_t>(r)], data.embed.at(r, 0));
    auto twice = symmetrizer_apply(lambda, col, one);
    const auto& [w0, c0] = *col.begin();
    auto it2 = twice.find(w0);
    if (it2 == twice.end()) throw error("Internal", "symmetrizer is not quasi-idempotent on its image");
    data.kappa = it2->second / c0;
  }
  return cache.emplace(std::move(key), std::move(data)).first->second;
}

// Expresses a tensor-coordinate vector lying in the symmetrizer image in the
// embedded basis. Throws if the vector is outside the image.
template <class F>
std::map<int, F> schur_coords(const SchurData<F>& data, const std::map<Label, F>& vec) {
  std::vector<F> rhs(static_cast<std::size_t>(data.embed.rows()));
  for (const auto& [w, c] : vec) rhs[static_cast<std::size_t>(data.word_index.at(w))] = c;
  auto sol = data.embed.solve(rhs);
  if (!sol) throw error("Internal", "vector is not in the symmetrizer image");
  std::map<int, F> out;
  for (std::size_t i = 0; i < sol->size(); ++i)
    if (!(*sol)[i].is_zero()) out.emplace(static_cast<int>(i), (*sol)[i]);
  return out;
}

// The canonical highest-weight vector: the symmetrizer applied to the word
// sending each box to (base + its row index). Needs n >= base + #rows.
template <class F>
std::map<int, F> schur_highest_weight(const Partition& lambda, int n, int base, const F& one) {
  if (base + static_cast<int>(lambda.size()) > n)
    throw error("DimensionMismatch", "not enough variables for the highest weight vector");
  Label word;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) word.push_back(base + static_cast<int>(r) + 1);
  auto img = symmetrizer_apply_word(lambda, word, one);
  if (img.empty()) throw error("Internal", "highest weight vector vanished");
  return schur_coords(schur_data(lambda, n, one), img);
}

}  // namespace polyfun
