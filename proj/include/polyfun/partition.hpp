#pragma once

// Integer partitions and tableau counting. Partitions are weakly decreasing
// vectors of positive parts; the empty vector is the empty partition.

#include <algorithm>
#include <string>
#include <vector>

#include "polyfun/error.hpp"
#include "polyfun/rational.hpp"

namespace polyfun {

using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline void check_partition(const Partition& p) {
  if (!is_partition(p)) throw error("NotAPartition", "parts must be positive and weakly decreasing");
}

inline int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

inline Partition conjugate(const Partition& p) {
  check_partition(p);
  if (p.empty()) return {};
  Partition c(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++c[j];
  return c;
}

// mu fits inside lambda box-by-box.
inline bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.size() > lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

// Rows whose last box is removable; result keeps partitions valid.
inline std::vector<Partition> remove_corner_results(const Partition& p) {
  check_partition(p);
  std::vector<Partition> out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    bool removable = (r + 1 == p.size()) || (p[r] > p[r + 1]);
    if (!removable) continue;
    Partition q = p;
    if (--q[r] == 0) q.erase(q.begin() + static_cast<long>(r));
    out.push_back(q);
  }
  return out;
}

inline long long hook_length(const Partition& p, const Partition& conj, int i, int j) {
  return (p[i] - j) + (conj[j] - i) - 1;
}

// Number of standard tableaux of shape p (hook length formula).
inline long long standard_tableaux(const Partition& p) {
  check_partition(p);
  int d = weight(p);
  Partition conj = conjugate(p);
  long long num = 1;
  for (int t = 2; t <= d; ++t) num *= t;
  long long den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) den *= hook_length(p, conj, static_cast<int>(i), j);
  return num / den;
}

// Number of semistandard tableaux of shape p with entries in {1..n}
// (hook content formula; exact rational arithmetic, result is integral).
inline long long ssyt_count(const Partition& p, int n) {
  check_partition(p);
  if (n < 0) throw error("DimensionMismatch", "negative alphabet size");
  if (p.empty()) return 1;
  if (static_cast<int>(p.size()) > n) return 0;
  Partition conj = conjugate(p);
  Rational acc(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      acc *= Rational(n + j - static_cast<long>(i));
      acc /= Rational(hook_length(p, conj, static_cast<int>(i), j));
    }
  if (acc.raw().get_den() != 1)
    throw error("Internal", "hook content product must be integral");
  return std::stoll(acc.str());
}

// All partitions of d, reverse-lex: (d), (d-1,1), ..., (1^d).
inline std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxPart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxPart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace polyfun
