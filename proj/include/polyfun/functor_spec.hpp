#pragma once

// A functor spec is an ordered direct sum of summands: Sym^d ("S3"),
// Ext^d ("E3"), Tensor^d ("T3"), or the image of the Young symmetrizer for a
// partition ("(2,1)"). Multiplicity is spelled by repetition or a "k*" prefix:
// "2*S1+S2" == "S1+S1+S2".

#include <string>
#include <vector>

#include "polyfun/error.hpp"
#include "polyfun/partition.hpp"

namespace polyfun {

enum class Kind { Sym, Ext, Tensor, Schur };

struct Summand {
  Kind kind = Kind::Sym;
  int degree = 0;
  Partition lambda;  // Schur only

  static Summand sym(int d) { return make(Kind::Sym, d); }
  static Summand ext(int d) { return make(Kind::Ext, d); }
  static Summand tensor(int d) { return make(Kind::Tensor, d); }
  static Summand schur(Partition l) {
    check_partition(l);
    if (l.empty()) throw error("MalformedInput", "schur summand needs a nonempty partition");
    Summand s;
    s.kind = Kind::Schur;
    s.degree = weight(l);
    s.lambda = std::move(l);
    return s;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Sym: return "S" + std::to_string(degree);
      case Kind::Ext: return "E" + std::to_string(degree);
      case Kind::Tensor: return "T" + std::to_string(degree);
      case Kind::Schur: return partition_str(lambda);
    }
    return "?";
  }

  friend bool operator==(const Summand& a, const Summand& b) {
    return a.kind == b.kind && a.degree == b.degree && a.lambda == b.lambda;
  }

 private:
  static Summand make(Kind k, int d) {
    if (d < 1) throw error("MalformedInput", "summand degree must be >= 1");
    Summand s;
    s.kind = k;
    s.degree = d;
    return s;
  }
};

struct FunctorSpec {
  std::vector<Summand> summands;

  FunctorSpec() = default;
  explicit FunctorSpec(std::vector<Summand> s) : summands(std::move(s)) {}

  static FunctorSpec parse(const std::string& text) {
    FunctorSpec spec;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    while (true) {
      skip_ws();
      if (i >= text.size()) throw error("MalformedInput", "empty summand in spec: " + text);
      long mult = 1;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '*') {
          mult = std::stol(text.substr(i, j - i));
          if (mult < 1) throw error("MalformedInput", "multiplicity must be >= 1");
          i = j + 1;
          skip_ws();
        }
      }
      Summand s;
      if (i >= text.size()) throw error("MalformedInput", "dangling multiplicity in spec: " + text);
      char c = text[i];
      if (c == 'S' || c == 'E' || c == 'T') {
        std::size_t j = ++i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw error("MalformedInput", "summand needs a degree: " + text);
        int d = std::stoi(text.substr(i, j - i));
        s = (c == 'S') ? Summand::sym(d) : (c == 'E') ? Summand::ext(d) : Summand::tensor(d);
        i = j;
      } else if (c == '(') {
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw error("MalformedInput", "unclosed partition in spec: " + text);
        Partition l;
        std::size_t k = i + 1;
        while (k < close) {
          std::size_t comma = text.find(',', k);
          if (comma == std::string::npos || comma > close) comma = close;
          l.push_back(std::stoi(text.substr(k, comma - k)));
          k = comma + 1;
        }
        s = Summand::schur(l);
        i = close + 1;
      } else {
        throw error("MalformedInput", std::string("unknown summand kind '") + c + "' in spec: " + text);
      }
      for (long t = 0; t < mult; ++t) spec.summands.push_back(s);
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '+') throw error("MalformedInput", "expected '+' in spec: " + text);
      ++i;
    }
    return spec;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (i) out += "+";
      out += summands[i].str();
    }
    return out;
  }

  std::size_t size() const { return summands.size(); }
  bool empty() const { return summands.empty(); }

  int max_degree() const {
    int d = 0;
    for (const auto& s : summands) d = std::max(d, s.degree);
    return d;
  }

  bool homogeneous() const {
    if (summands.empty()) return true;
    for (const auto& s : summands)
      if (s.degree != summands[0].degree) return false;
    return true;
  }

  friend bool operator==(const FunctorSpec& a, const FunctorSpec& b) {
    return a.summands == b.summands;
  }
};

inline long long summand_dim(const Summand& s, int n) {
  switch (s.kind) {
    case Kind::Sym: return ssyt_count(Partition{s.degree}, n);
    case Kind::Ext: return ssyt_count(Partition(static_cast<std::size_t>(s.degree), 1), n);
    case Kind::Tensor: {
      long long r = 1;
      for (int i = 0; i < s.degree; ++i) r *= n;
      return r;
    }
    case Kind::Schur: return ssyt_count(s.lambda, n);
  }
  return 0;
}

inline long long spec_dim(const FunctorSpec& spec, int n) {
  long long total = 0;
  for (const auto& s : spec.summands) total += summand_dim(s, n);
  return total;
}

}  // namespace polyfun
