#pragma once

// JSON interchange for every persistent object: scalars, labels, elements,
// matrices, truncations, E-elements, witnesses, certificates and coefficient
// streams. One canonical form: keys sorted (the parser's default object is a
// sorted map), scalars as strings, counts as plain integers, never a float —
// so serialize(parse(serialize(x))) is byte-identical and golden files stay
// stable. Readers validate shape and report MalformedInput; field data is
// self-describing ("a/b" vs "r mod p"), but minting an identity tail or an
// empty object over F_p still needs a field witness, which those readers
// take explicitly.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyfun/dense.hpp"
#include "polyfun/element.hpp"
#include "polyfun/error.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/quasiorder2.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/strength.hpp"

namespace polyfun {

using Json = nlohmann::json;

// ---------------------------------------------------------------- scalars

inline Json scalar_json(const Rational& v) { return v.str(); }
inline Json scalar_json(const Fp& v) { return v.str(); }

namespace detail {

inline std::string want_string(const Json& j, const char* what) {
  if (!j.is_string()) throw error("MalformedInput", std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline std::uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw error("MalformedInput", std::string(what) + ": bad integer literal '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw error("MalformedInput", std::string(what) + ": integer literal out of range '" + s + "'");
  }
}

}  // namespace detail

template <class F>
F scalar_parse(const Json& j);

template <>
inline Rational scalar_parse<Rational>(const Json& j) {
  return Rational::parse(detail::want_string(j, "rational scalar"));
}

template <>
inline Fp scalar_parse<Fp>(const Json& j) {
  std::string s = detail::want_string(j, "prime-field scalar");
  auto at = s.find(" mod ");
  if (at == std::string::npos)
    throw error("MalformedInput", "prime-field scalar must read 'r mod p': " + s);
  std::uint64_t v = detail::parse_u64(s.substr(0, at), "prime-field scalar");
  std::uint64_t p = detail::parse_u64(s.substr(at + 5), "prime-field modulus");
  if (p == 0) {
    if (v != 0) throw error("MalformedInput", "nonzero scalar without a modulus: " + s);
    return Fp();  // the untagged zero
  }
  return Fp(v, p);
}

// ----------------------------------------------------------------- labels

// Sym labels serialize as an exponent map, Ext and Tensor as their word
// list, Schur as the bare basis index.
inline Json label_json(const Summand& s, const Label& l) {
  switch (s.kind) {
    case Kind::Sym: {
      Json m = Json::object();
      for (int v : l) {
        std::string key = std::to_string(v);
        m[key] = m.contains(key) ? m[key].get<int>() + 1 : 1;
      }
      return m;
    }
    case Kind::Ext:
    case Kind::Tensor:
      return Json(l);
    case Kind::Schur:
      return Json(l.at(0));
  }
  throw error("Internal", "unhandled summand kind");
}

inline Label label_parse(const Summand& s, const Json& j) {
  Label l;
  switch (s.kind) {
    case Kind::Sym: {
      if (!j.is_object()) throw error("MalformedInput", "sym label must be an exponent map");
      for (const auto& [key, exp] : j.items()) {
        if (!exp.is_number_integer() || exp.get<int>() < 1)
          throw error("MalformedInput", "sym exponent must be a positive integer");
        int var = static_cast<int>(detail::parse_u64(key, "sym label variable"));
        for (int t = 0; t < exp.get<int>(); ++t) l.push_back(var);
      }
      std::sort(l.begin(), l.end());
      return l;
    }
    case Kind::Ext:
    case Kind::Tensor: {
      if (!j.is_array()) throw error("MalformedInput", "label must be a list of variable indices");
      for (const auto& v : j) {
        if (!v.is_number_integer()) throw error("MalformedInput", "label entries must be integers");
        l.push_back(v.get<int>());
      }
      return l;
    }
    case Kind::Schur: {
      if (!j.is_number_integer()) throw error("MalformedInput", "schur label must be one basis index");
      return Label{j.get<int>()};
    }
  }
  throw error("Internal", "unhandled summand kind");
}

// --------------------------------------------------------------- elements

template <class F>
Json element_json(const Element<F>& e) {
  Json comps = Json::array();
  for (std::size_t s = 0; s < e.comps.size(); ++s) {
    Json terms = Json::array();
    for (const auto& [l, c] : e.comps[s])
      terms.push_back(Json{{"coeff", scalar_json(c)}, {"label", label_json(e.spec.summands[s], l)}});
    comps.push_back(std::move(terms));
  }
  return Json{{"comps", std::move(comps)}, {"n", e.n}, {"spec", e.spec.str()}};
}

template <class F>
Element<F> element_parse(const Json& j) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("n") || !j.contains("comps"))
    throw error("MalformedInput", "element needs spec, n and comps");
  FunctorSpec spec = FunctorSpec::parse(detail::want_string(j.at("spec"), "functor spec"));
  if (!j.at("n").is_number_integer()) throw error("MalformedInput", "element n must be an integer");
  Element<F> e(spec, j.at("n").get<int>());
  const Json& comps = j.at("comps");
  if (!comps.is_array() || comps.size() != spec.summands.size())
    throw error("MalformedInput", "element needs one term list per summand");
  for (std::size_t s = 0; s < spec.summands.size(); ++s) {
    if (!comps[s].is_array()) throw error("MalformedInput", "term lists must be arrays");
    for (const auto& term : comps[s]) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("label"))
        throw error("MalformedInput", "each term needs coeff and label");
      e.add_term(s, label_parse(spec.summands[s], term.at("label")),
                 scalar_parse<F>(term.at("coeff")));
    }
  }
  return e;
}

// --------------------------------------------------------------- matrices

template <class F>
Json matrix_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_parse(const Json& j) {
  if (!j.is_array()) throw error("MalformedInput", "matrix must be a list of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Matrix<F> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || static_cast<int>(j.at(i).size()) != cols)
      throw error("MalformedInput", "matrix rows must all have the same length");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_parse<F>(j.at(i).at(c));
  }
  return m;
}

// ----------------------------------------------------- truncated elements

template <class F>
Json truncated_json(const TruncatedElement<F>& t) {
  Json layers = Json::array();
  for (const auto& l : t.layers) layers.push_back(element_json(l));
  Json out{{"layers", std::move(layers)}, {"levels", Json(t.levels)}};
  if (t.offset) out["offset"] = t.offset;
  return out;
}

template <class F>
TruncatedElement<F> truncated_parse(const Json& j) {
  if (!j.is_object() || !j.contains("levels") || !j.contains("layers"))
    throw error("MalformedInput", "truncation needs levels and layers");
  std::vector<int> levels;
  for (const auto& v : j.at("levels")) {
    if (!v.is_number_integer()) throw error("MalformedInput", "levels must be integers");
    levels.push_back(v.get<int>());
  }
  std::vector<Element<F>> layers;
  for (const auto& l : j.at("layers")) layers.push_back(element_parse<F>(l));
  FunctorSpec spec = layers.empty() ? FunctorSpec() : layers.front().spec;
  int offset = 0;
  if (j.contains("offset")) {
    if (!j.at("offset").is_number_integer()) throw error("MalformedInput", "offset must be an integer");
    offset = j.at("offset").get<int>();
  }
  return TruncatedElement<F>(std::move(spec), std::move(levels), std::move(layers), offset);
}

// -------------------------------------------------------------- E-elements

template <class F>
Json e_element_json(const EElementTrunc<F>& e) {
  Json rows = Json::array();
  for (const auto& r : e.rows) {
    Json row = Json::object();
    for (const auto& [c, v] : r) row[std::to_string(c)] = scalar_json(v);
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)},
              {"tail", e.tail == EElementTrunc<F>::Tail::Identity ? "identity" : "zero"}};
}

// Accepts the explicit row form {"rows":[…],"tail":…} and the block form
// {"blocks":[matrix,…],"tail":…}; the witness scalar mints identity tails
// (and is the only field information when every stored entry is zero).
template <class F>
EElementTrunc<F> e_element_parse(const Json& j, const F& one) {
  if (!j.is_object() || !j.contains("tail"))
    throw error("MalformedInput", "E-element needs rows (or blocks) and a tail");
  std::string tail = detail::want_string(j.at("tail"), "tail");
  if (tail != "identity" && tail != "zero")
    throw error("MalformedInput", "tail must be 'identity' or 'zero'");
  auto t = tail == "identity" ? EElementTrunc<F>::Tail::Identity : EElementTrunc<F>::Tail::Zero;

  if (j.contains("blocks")) {
    std::vector<Matrix<F>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(matrix_parse<F>(b));
    return EElementTrunc<F>::block_diagonal(blocks, t, one);
  }
  if (!j.contains("rows")) throw error("MalformedInput", "E-element needs rows (or blocks) and a tail");
  std::vector<std::map<int, F>> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_object()) throw error("MalformedInput", "each E-element row must map columns to scalars");
    std::map<int, F> row;
    for (const auto& [key, v] : r.items())
      row.emplace(static_cast<int>(detail::parse_u64(key, "column index")), scalar_parse<F>(v));
    rows.push_back(std::move(row));
  }
  return EElementTrunc<F>::from_rows(std::move(rows), t, one);
}

// --------------------------------------------------------------- witnesses

template <class F>
Json witness_json(const SpecializationWitness<F>& w) {
  return Json{{"e", e_element_json(w.e)},
              {"source", truncated_json(w.source)},
              {"target", truncated_json(w.target)},
              {"verified_levels", Json(w.verified_levels)}};
}

template <class F>
SpecializationWitness<F> witness_parse(const Json& j, const F& one) {
  if (!j.is_object() || !j.contains("e") || !j.contains("source") || !j.contains("target") ||
      !j.contains("verified_levels"))
    throw error("MalformedInput", "witness needs e, source, target and verified_levels");
  SpecializationWitness<F> w;
  w.e = e_element_parse<F>(j.at("e"), one);
  w.source = truncated_parse<F>(j.at("source"));
  w.target = truncated_parse<F>(j.at("target"));
  for (const auto& v : j.at("verified_levels")) {
    if (!v.is_number_integer()) throw error("MalformedInput", "verified levels must be integers");
    w.verified_levels.push_back(v.get<int>());
  }
  return w;
}

// ------------------------------------------------------------ certificates

inline Json qe_json(const QE& v) { return Json{{"im", v.im.str()}, {"re", v.re.str()}}; }

inline QE qe_parse(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw error("MalformedInput", "extension scalar needs re and im");
  return QE(scalar_parse<Rational>(j.at("re")), scalar_parse<Rational>(j.at("im")));
}

inline Json certificate_json(const StrengthCertificate& cert) {
  Json terms = Json::array();
  for (const auto& t : cert.terms) {
    Json g = Json::array(), h = Json::array();
    for (const auto& v : t.g) g.push_back(qe_json(v));
    for (const auto& v : t.h) h.push_back(qe_json(v));
    terms.push_back(Json{{"alpha", qe_json(t.alpha)},
                         {"beta", qe_json(t.beta)},
                         {"disc", t.disc.str()},
                         {"g", std::move(g)},
                         {"h", std::move(h)}});
  }
  return Json{{"claimed", cert.claimed}, {"mode", cert.mode}, {"terms", std::move(terms)}};
}

inline StrengthCertificate certificate_parse(const Json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("claimed") || !j.contains("terms"))
    throw error("MalformedInput", "certificate needs mode, claimed and terms");
  StrengthCertificate cert;
  cert.mode = detail::want_string(j.at("mode"), "certificate mode");
  if (!j.at("claimed").is_number_integer())
    throw error("MalformedInput", "claimed value must be an integer");
  cert.claimed = j.at("claimed").get<int>();
  for (const auto& tj : j.at("terms")) {
    if (!tj.is_object() || !tj.contains("alpha") || !tj.contains("beta") || !tj.contains("disc") ||
        !tj.contains("g") || !tj.contains("h"))
      throw error("MalformedInput", "certificate term needs alpha, beta, disc, g and h");
    StrengthTerm t;
    t.disc = scalar_parse<Rational>(tj.at("disc"));
    t.alpha = qe_parse(tj.at("alpha"));
    t.beta = qe_parse(tj.at("beta"));
    for (const auto& v : tj.at("g")) t.g.push_back(qe_parse(v));
    for (const auto& v : tj.at("h")) t.h.push_back(qe_parse(v));
    cert.terms.push_back(std::move(t));
  }
  return cert;
}

// ------------------------------------------------------ coefficient streams

namespace detail {

inline std::pair<int, int> pair_key_parse(const std::string& key) {
  auto at = key.find(',');
  if (at == std::string::npos)
    throw error("MalformedInput", "coefficient keys read 'i,j': " + key);
  return {static_cast<int>(parse_u64(key.substr(0, at), "coefficient index")),
          static_cast<int>(parse_u64(key.substr(at + 1), "coefficient index"))};
}

template <class F>
Json pair_map_json(const std::map<std::pair<int, int>, F>& a) {
  Json m = Json::object();
  for (const auto& [ij, v] : a)
    m[std::to_string(ij.first) + "," + std::to_string(ij.second)] = scalar_json(v);
  return m;
}

template <class F>
std::map<std::pair<int, int>, F> pair_map_parse(const Json& j) {
  if (!j.is_object()) throw error("MalformedInput", "coefficients must map 'i,j' keys to scalars");
  std::map<std::pair<int, int>, F> a;
  for (const auto& [key, v] : j.items()) a[pair_key_parse(key)] = scalar_parse<F>(v);
  return a;
}

template <class F>
Json int_map_json(const std::map<int, F>& a) {
  Json m = Json::object();
  for (const auto& [i, v] : a) m[std::to_string(i)] = scalar_json(v);
  return m;
}

template <class F>
std::map<int, F> int_map_parse(const Json& j) {
  if (!j.is_object()) throw error("MalformedInput", "coefficients must map indices to scalars");
  std::map<int, F> a;
  for (const auto& [key, v] : j.items())
    a[static_cast<int>(parse_u64(key, "coefficient index"))] = scalar_parse<F>(v);
  return a;
}

}  // namespace detail

template <class F>
Json stream_json(const CoeffStream<F>& s) {
  return Json{{"a", detail::pair_map_json(s.a)}, {"level", s.level}};
}

template <class F>
CoeffStream<F> stream_parse(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("level"))
    throw error("MalformedInput", "coefficient stream needs a and level");
  if (!j.at("level").is_number_integer()) throw error("MalformedInput", "level must be an integer");
  CoeffStream<F> s;
  s.level = j.at("level").get<int>();
  s.a = detail::pair_map_parse<F>(j.at("a"));
  return s;
}

template <class F>
Json mixed_stream_json(const MixedStream<F>& ms) {
  Json lin = Json::array(), quad = Json::array(), alt = Json::array();
  for (const auto& m : ms.linear) lin.push_back(detail::int_map_json(m));
  for (const auto& m : ms.quadric) quad.push_back(detail::pair_map_json(m));
  for (const auto& m : ms.alternating) alt.push_back(detail::pair_map_json(m));
  return Json{{"alternating", std::move(alt)},
              {"level", ms.level},
              {"linear", std::move(lin)},
              {"quadric", std::move(quad)}};
}

template <class F>
MixedStream<F> mixed_stream_parse(const Json& j) {
  if (!j.is_object() || !j.contains("level"))
    throw error("MalformedInput", "mixed stream needs level plus linear/quadric/alternating lists");
  if (!j.at("level").is_number_integer()) throw error("MalformedInput", "level must be an integer");
  MixedStream<F> ms;
  ms.level = j.at("level").get<int>();
  if (j.contains("linear"))
    for (const auto& m : j.at("linear")) ms.linear.push_back(detail::int_map_parse<F>(m));
  if (j.contains("quadric"))
    for (const auto& m : j.at("quadric")) ms.quadric.push_back(detail::pair_map_parse<F>(m));
  if (j.contains("alternating"))
    for (const auto& m : j.at("alternating")) ms.alternating.push_back(detail::pair_map_parse<F>(m));
  return ms;
}

// ------------------------------------------------------------- class data

template <class F>
Json deg2_class_json(const Deg2Class<F>& c) {
  const char* pencil = "none";
  switch (c.pencil) {
    case Deg2Class<F>::Pencil::None: break;
    case Deg2Class<F>::Pencil::Top: pencil = "top"; break;
    case Deg2Class<F>::Pencil::Point: pencil = "point"; break;
    case Deg2Class<F>::Pencil::Zero: pencil = "zero"; break;
  }
  Json out{{"alt_ranks", Json(c.alt_ranks)},   {"level", c.level},
           {"linear_rank", c.linear_rank},     {"pencil", pencil},
           {"profile", Json{c.a, c.b, c.c}},   {"sym_ranks", Json(c.sym_ranks)},
           {"truncation", c.truncation}};
  if (c.pencil == Deg2Class<F>::Pencil::Point)
    out["point"] = Json{scalar_json(c.point.first), scalar_json(c.point.second)};
  return out;
}

// The one true rendering: two-space indent, sorted keys, trailing newline.
inline std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyfun
