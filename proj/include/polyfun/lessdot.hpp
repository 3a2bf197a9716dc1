#pragma once

// The covering relation on polynomial functors: q is covered by p when they
// are not isomorphic and, at the highest degree where their irreducible
// decompositions disagree, q's part is a quotient of p's. By semisimplicity
// (characteristic 0 or > degree) "quotient" is simply "sub-multiset".

#include <map>
#include <vector>

#include "polyfun/functor_spec.hpp"
#include "polyfun/partition.hpp"

namespace polyfun {

// Irreducible constituents per degree, with multiplicity; a tensor power
// expands into every shape of its degree with standard-tableau multiplicity.
inline std::map<int, std::map<Partition, long long>> irreducible_profile(const FunctorSpec& p) {
  std::map<int, std::map<Partition, long long>> out;
  for (const auto& s : p.summands) {
    switch (s.kind) {
      case Kind::Sym:
        out[s.degree][Partition{s.degree}] += 1;
        break;
      case Kind::Ext:
        out[s.degree][Partition(static_cast<std::size_t>(s.degree), 1)] += 1;
        break;
      case Kind::Schur:
        out[s.degree][s.lambda] += 1;
        break;
      case Kind::Tensor:
        for (const auto& lambda : partitions_of(s.degree))
          out[s.degree][lambda] += standard_tableaux(lambda);
        break;
    }
  }
  return out;
}

namespace detail {
inline bool sub_multiset(const std::map<Partition, long long>& a,
                         const std::map<Partition, long long>& b) {
  for (const auto& [lambda, count] : a) {
    auto it = b.find(lambda);
    if (it == b.end() || it->second < count) return false;
  }
  return true;
}
}  // namespace detail

inline bool lessdot(const FunctorSpec& q, const FunctorSpec& p) {
  auto a = irreducible_profile(q);
  auto b = irreducible_profile(p);
  if (a == b) return false;
  int top = 0;
  for (const auto& [d, part] : a)
    if (!part.empty() && (b.count(d) == 0 || b.at(d) != part)) top = std::max(top, d);
  for (const auto& [d, part] : b)
    if (!part.empty() && (a.count(d) == 0 || a.at(d) != part)) top = std::max(top, d);
  static const std::map<Partition, long long> kEmpty;
  const auto& qa = a.count(top) ? a.at(top) : kEmpty;
  const auto& pb = b.count(top) ? b.at(top) : kEmpty;
  return detail::sub_multiset(qa, pb);
}

}  // namespace polyfun
