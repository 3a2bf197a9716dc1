#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyfun/dense.hpp"
#include "polyfun/element.hpp"
#include "polyfun/fp.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/quasiorder2.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/rng.hpp"

using namespace polyfun;

namespace {

std::string thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return "";
}

// A pair of linear forms as an element of Sym1 + Sym1; each form maps
// variable index -> coefficient.
Element<Rational> linear_pair(int n, const std::map<int, Rational>& v, const std::map<int, Rational>& w) {
  Element<Rational> e(deg2_spec(2, 0, 0), n);
  for (const auto& [i, c] : v) e.add_term(0, {i}, c);
  for (const auto& [i, c] : w) e.add_term(1, {i}, c);
  return e;
}

// Dense random coefficient stream with entries in [-9, 9].
CoeffStream<Rational> random_stream(int level, Deg2Kind kind, std::uint64_t seed) {
  Rng rng(seed);
  CoeffStream<Rational> s;
  s.level = level;
  for (int i = 1; i <= level; ++i)
    for (int j = (kind == Deg2Kind::Quadric ? i : i + 1); j <= level; ++j)
      s.a[{i, j}] = Rational(rng.range(-9, 9));
  return s;
}

CoeffStream<Fp> random_stream_fp(int level, Deg2Kind kind, std::uint64_t p, std::uint64_t seed) {
  Rng rng(seed);
  CoeffStream<Fp> s;
  s.level = level;
  for (int i = 1; i <= level; ++i)
    for (int j = (kind == Deg2Kind::Quadric ? i : i + 1); j <= level; ++j)
      s.a[{i, j}] = Fp(rng.below(p), p);
  return s;
}

// Renders the upper-left block of an E-element the way the golden files
// store it: one row per line, entries space-separated.
std::vector<std::string> render_block(const EElementTrunc<Rational>& e, int nrows, int ncols) {
  Matrix<Rational> m = e.upper_left(nrows, ncols);
  std::vector<std::string> lines;
  for (int i = 0; i < nrows; ++i) {
    std::string line;
    for (int j = 0; j < ncols; ++j) line += (j ? " " : "") + m.at(i, j).str();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(std::string(POLYFUN_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("pairs of linear forms fall into top, point and zero classes") {
  Rational one(1);

  // Independent forms all share the top class, whatever the forms are.
  auto top1 = classify_deg2(linear_pair(2, {{1, one}}, {{2, one}}));
  auto top2 = classify_deg2(linear_pair(3, {{1, one}, {2, Rational(2)}}, {{2, one}, {3, Rational(-1)}}));
  REQUIRE(top1.pencil == Deg2Class<Rational>::Pencil::Top);
  REQUIRE(top1 == top2);
  REQUIRE(top1.linear_rank == 2);

  // Dependent nonzero pairs remember their ratio, nothing else.
  std::map<int, Rational> u = {{1, one}, {2, Rational(3)}};
  auto scale = [&](const Rational& c) {
    std::map<int, Rational> out;
    for (const auto& [i, v] : u) out[i] = c * v;
    return out;
  };
  auto pt = classify_deg2(linear_pair(2, scale(Rational(2)), scale(Rational(-5))));
  REQUIRE(pt.pencil == Deg2Class<Rational>::Pencil::Point);
  REQUIRE(pt.point.first == one);
  REQUIRE(pt.point.second == Rational(-5) / Rational(2));
  REQUIRE(pt.linear_rank == 1);
  auto pt2 = classify_deg2(linear_pair(3, {{2, Rational(-14)}}, {{2, Rational(35)}}));
  REQUIRE(pt == pt2);  // same ratio (2 : -5), different common direction
  auto pt3 = classify_deg2(linear_pair(2, scale(one), scale(Rational(3))));
  REQUIRE(pt3.pencil == Deg2Class<Rational>::Pencil::Point);
  REQUIRE(pt != pt3);  // distinct points of the pencil stay distinct

  // The two degenerate rays and the bottom.
  auto ray0 = classify_deg2(linear_pair(2, {}, {{1, one}}));
  REQUIRE(ray0.pencil == Deg2Class<Rational>::Pencil::Point);
  REQUIRE((ray0.point.first.is_zero() && ray0.point.second == one));
  auto ray1 = classify_deg2(linear_pair(2, {{1, one}}, {}));
  REQUIRE(ray1.pencil == Deg2Class<Rational>::Pencil::Point);
  REQUIRE((ray1.point.first == one && ray1.point.second.is_zero()));
  auto bot = classify_deg2(linear_pair(4, {}, {}));
  REQUIRE(bot.pencil == Deg2Class<Rational>::Pencil::Zero);
  REQUIRE(bot.linear_rank == 0);
  REQUIRE(bot.describe().find("pencil: zero") != std::string::npos);

  // The refinement only applies to pairs: a triple reports ranks alone.
  Element<Rational> triple(deg2_spec(3, 0, 0), 2);
  triple.add_term(0, {1}, one);
  triple.add_term(1, {2}, one);
  auto tr = classify_deg2(triple);
  REQUIRE(tr.pencil == Deg2Class<Rational>::Pencil::None);
  REQUIRE(tr.linear_rank == 2);
  REQUIRE(tr.a == 3);
}

TEST_CASE("ranks classify single quadratic and alternating forms") {
  Rational one(1);

  // x1x2 + x3x4 + x5^2 has Gram rank 5.
  Element<Rational> q5(deg2_spec(0, 1, 0), 5);
  q5.add_term(0, {1, 2}, one);
  q5.add_term(0, {3, 4}, one);
  q5.add_term(0, {5, 5}, one);
  auto c5 = classify_deg2(q5);
  REQUIRE(c5.b == 1);
  REQUIRE(c5.sym_ranks == std::vector<int>{5});
  REQUIRE(c5.describe().find("sym ranks [5]") != std::string::npos);
  REQUIRE_FALSE(c5.truncation);

  // Alternating forms: two wedges give rank 4, one gives 2, none gives 0.
  Element<Rational> f(deg2_spec(0, 0, 1), 4);
  f.add_term(0, {1, 2}, one);
  f.add_term(0, {3, 4}, Rational(7));
  REQUIRE(classify_deg2(f).alt_ranks == std::vector<int>{4});
  Element<Rational> f1(deg2_spec(0, 0, 1), 4);
  f1.add_term(0, {2, 4}, Rational(-3));
  REQUIRE(classify_deg2(f1).alt_ranks == std::vector<int>{2});
  REQUIRE(classify_deg2(Element<Rational>(deg2_spec(0, 0, 1), 4)).alt_ranks == std::vector<int>{0});

  // A truncation classifies its deepest layer and says so.
  auto q = minimal_q(FunctorSpec::parse("S2"), 4, one);
  auto ct = classify_deg2(q);
  REQUIRE(ct.truncation);
  REQUIRE(ct.level == 8);
  REQUIRE(ct.sym_ranks == std::vector<int>{8});
  REQUIRE(ct.describe().find("at level 8") != std::string::npos);
  REQUIRE(ct.describe().find("lower-bound") != std::string::npos);

  // Only Sym1, Sym2 and Ext2 summands are covered.
  REQUIRE(thrown_code([&] { classify_deg2(Element<Rational>(FunctorSpec::parse("S3"), 2)); }) ==
          "MalformedInput");
  REQUIRE(thrown_code([&] { classify_deg2(Element<Rational>(FunctorSpec::parse("T2"), 2)); }) ==
          "MalformedInput");
  REQUIRE(thrown_code([&] { classify_deg2(TruncatedElement<Rational>()); }) == "InsufficientData");
}

TEST_CASE("alternating ranks come out even on random forms") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_stream(6, Deg2Kind::Alternating, 0xa17e4000u + seed);
    auto cls = classify_deg2(stream_element(s, 6, Deg2Kind::Alternating));
    REQUIRE(cls.alt_ranks.size() == 1);
    REQUIRE(cls.alt_ranks[0] % 2 == 0);
  }
  // Same over F_2, where skew and symmetric coincide but the empty diagonal
  // keeps the rank even.
  Fp one2(1, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_stream_fp(6, Deg2Kind::Alternating, 2, 0xa17e4100u + seed);
    auto cls = classify_deg2(stream_element(s, 6, Deg2Kind::Alternating));
    REQUIRE(cls.alt_ranks[0] % 2 == 0);
  }
}

TEST_CASE("banded specializer reproduces its coefficient stream") {
  Rational one(1);
  auto q = minimal_q(FunctorSpec::parse("S2"), 12, one);
  auto w = minimal_q(FunctorSpec::parse("E2"), 12, one);

  // An all-zero stream kills the source outright.
  CoeffStream<Rational> zero;
  zero.level = 8;
  REQUIRE(e_apply(deg2_specializer(zero, 8, Deg2Kind::Quadric, one), q, 8).is_zero());

  // The stream of the source itself reproduces the source.
  CoeffStream<Rational> self;
  self.level = 8;
  for (int i = 1; i <= 7; i += 2) self.a[{i, i + 1}] = one;
  REQUIRE(e_apply(deg2_specializer(self, 8, Deg2Kind::Quadric, one), q, 8) == q.layer_at(8));

  // Random rational streams at level 12, both kinds.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_stream(12, Deg2Kind::Quadric, 0xba4ded00u + seed);
    auto e = deg2_specializer(s, 12, Deg2Kind::Quadric, one);
    REQUIRE(e_apply(e, q, 12) == stream_element(s, 12, Deg2Kind::Quadric));
    auto t = random_stream(12, Deg2Kind::Alternating, 0xba4ded80u + seed);
    auto d = deg2_specializer(t, 12, Deg2Kind::Alternating, one);
    REQUIRE(e_apply(d, w, 12) == stream_element(t, 12, Deg2Kind::Alternating));
  }

  // Level must be even and inside the stored coefficient range.
  auto s = random_stream(12, Deg2Kind::Quadric, 0xba4dee00u);
  REQUIRE(thrown_code([&] { deg2_specializer(s, 7, Deg2Kind::Quadric, one); }) == "MalformedInput");
  REQUIRE(thrown_code([&] { deg2_specializer(s, 14, Deg2Kind::Quadric, one); }) == "InsufficientData");
  REQUIRE(thrown_code([&] { deg2_specializer(s, -2, Deg2Kind::Quadric, one); }) == "MalformedInput");
}

TEST_CASE("banded matrix matches the pinned column layout") {
  Rational one(1);
  CoeffStream<Rational> q, f;
  q.level = f.level = 4;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      q.a[{i, j}] = Rational(10 * i + j);
      if (i < j) f.a[{i, j}] = Rational(10 * i + j);
    }

  auto eq = deg2_specializer(q, 4, Deg2Kind::Quadric, one);
  REQUIRE(render_block(eq, 4, 8) == read_lines("banded_quadric_l4.txt"));

  auto ef = deg2_specializer(f, 4, Deg2Kind::Alternating, one);
  REQUIRE(render_block(ef, 4, 8) == read_lines("banded_alternating_l4.txt"));

  // Column reading of the same layout: units interleave coefficient columns.
  Matrix<Rational> m = eq.upper_left(4, 8);
  for (int t = 1; t <= 4; ++t)
    for (int r = 1; r <= 4; ++r) {
      REQUIRE(m.at(r - 1, 2 * t - 2) == (r == t ? one : Rational(0)));
      REQUIRE(m.at(r - 1, 2 * t - 1) == (t <= r ? Rational(10 * t + r) : Rational(0)));
    }

  // Both matrices are row-finite with support inside the first 2*level
  // columns, and nothing survives past the requested rows.
  for (const auto& e : {eq, ef}) {
    REQUIRE(e.rows.size() == 4);
    REQUIRE(e.tail == EElementTrunc<Rational>::Tail::Zero);
    REQUIRE(e.support_bound(4) <= 8);
  }
}

TEST_CASE("classifying a specialization round-trips the class") {
  Rational one(1);
  auto q = minimal_q(FunctorSpec::parse("S2"), 6, one);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto s = random_stream(6, Deg2Kind::Quadric, 0x0c1a5500u + seed);
    auto p = stream_element(s, 6, Deg2Kind::Quadric);
    auto back = e_apply(deg2_specializer(s, 6, Deg2Kind::Quadric, one), q, 6);
    REQUIRE(back == p);
    REQUIRE(classify_deg2(back) == classify_deg2(p));
  }
  // Same over F_5.
  Fp one5(1, 5);
  auto q5 = minimal_q(FunctorSpec::parse("S2"), 6, one5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto s = random_stream_fp(6, Deg2Kind::Quadric, 5, 0x0c1a5580u + seed);
    auto p = stream_element(s, 6, Deg2Kind::Quadric);
    auto back = e_apply(deg2_specializer(s, 6, Deg2Kind::Quadric, one5), q5, 6);
    REQUIRE(classify_deg2(back) == classify_deg2(p));
  }
}

TEST_CASE("interleaving indices tile the variables past the linear block") {
  // For each profile, eleven super-blocks of slots must cover the range
  // right after the linear variables exactly once.
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{3, 2, 1}, {0, 1, 1}, {2, 0, 3}, {1, 3, 0}}) {
    std::set<long long> seen;
    long long count = 0;
    for (long long i = 0; i <= 10; ++i) {
      for (int j = 1; j <= 2 * b; ++j, ++count) seen.insert(mixed_y_index(a, b, c, i, j));
      for (int j = 1; j <= 2 * c; ++j, ++count) seen.insert(mixed_z_index(a, b, c, i, j));
    }
    REQUIRE(static_cast<long long>(seen.size()) == count);
    REQUIRE(*seen.begin() == a + 1);
    REQUIRE(*seen.rbegin() == a + count);
  }
  REQUIRE(thrown_code([] { mixed_y_index(1, 1, 1, 0, 0); }) == "DimensionMismatch");
  REQUIRE(thrown_code([] { mixed_y_index(1, 1, 1, 0, 3); }) == "DimensionMismatch");
  REQUIRE(thrown_code([] { mixed_z_index(1, 1, 1, -1, 1); }) == "DimensionMismatch");
}

TEST_CASE("canonical mixed tuple is coherent and unrolls by hand") {
  Rational one(1);
  auto p = canonical_deg2(1, 1, 1, {5, 11, 23}, one);
  REQUIRE(coherence_check(p));

  // At level 5 exactly one pair of each kind fits: x1, x2x3, x4 ^ x5.
  Element<Rational> want(deg2_spec(1, 1, 1), 5);
  want.add_term(0, {1}, one);
  want.add_term(1, {2, 3}, one);
  want.add_term(2, {4, 5}, one);
  REQUIRE(p.layer_at(5) == want);

  // With no linear or alternating components the canonical tuple is the
  // plain block source.
  auto q = minimal_q(FunctorSpec::parse("S2"), 4, one);
  auto cq = canonical_deg2(0, 1, 0, {8}, one);
  REQUIRE(cq.layer_at(8) == q.layer_at(8));
}

TEST_CASE("mixed specializer reproduces a full tuple") {
  Rational one(1);
  const int L = 8;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(0x3b1ed000u + seed);
    MixedStream<Rational> ms;
    ms.level = L;
    ms.linear.resize(2);
    for (auto& form : ms.linear)
      for (int r = 1; r <= L; ++r) form[r] = Rational(rng.range(-9, 9));
    ms.quadric.push_back(random_stream(L, Deg2Kind::Quadric, rng.next()).a);
    ms.alternating.push_back(random_stream(L, Deg2Kind::Alternating, rng.next()).a);

    // Source depth: the linear block plus L super-blocks of width 4.
    auto src = canonical_deg2(2, 1, 1, {2 + 2 * L, 2 + 4 * L}, one);
    auto e = deg2_specializer(ms, L, one);
    auto got = e_apply(e, src, L);
    REQUIRE(got == mixed_stream_element(ms, L));
    REQUIRE(e.support_bound(L) <= 2 + 4 * L);

    auto cls = classify_deg2(got);
    REQUIRE((cls.a == 2 && cls.b == 1 && cls.c == 1));
    REQUIRE(cls == classify_deg2(mixed_stream_element(ms, L)));
  }

  // Degenerate profiles collapse to the pure cases.
  CoeffStream<Rational> s = random_stream(6, Deg2Kind::Quadric, 0x3b1ed100u);
  MixedStream<Rational> pure;
  pure.level = 6;
  pure.quadric.push_back(s.a);
  REQUIRE(deg2_specializer(pure, 6, one).rows == deg2_specializer(s, 6, Deg2Kind::Quadric, one).rows);

  MixedStream<Rational> lin;
  lin.level = 4;
  lin.linear.resize(1);
  lin.linear[0] = {{1, Rational(2)}, {3, Rational(-1)}};
  auto got = e_apply(deg2_specializer(lin, 4, one), canonical_deg2(1, 0, 0, {1}, one), 4);
  Element<Rational> want(deg2_spec(1, 0, 0), 4);
  want.add_term(0, {1}, Rational(2));
  want.add_term(0, {3}, Rational(-1));
  REQUIRE(got == want);
}

TEST_CASE("streams with malformed indices are rejected") {
  Rational one(1);
  CoeffStream<Rational> bad;
  bad.level = 4;
  bad.a[{3, 2}] = one;
  REQUIRE(thrown_code([&] { deg2_specializer(bad, 4, Deg2Kind::Quadric, one); }) == "MalformedInput");
  CoeffStream<Rational> diag;
  diag.level = 4;
  diag.a[{2, 2}] = one;
  REQUIRE(thrown_code([&] { deg2_specializer(diag, 4, Deg2Kind::Alternating, one); }) == "MalformedInput");
  REQUIRE(thrown_code([&] { stream_element(diag, 4, Deg2Kind::Alternating); }) == "MalformedInput");
  CoeffStream<Rational> far;
  far.level = 4;
  far.a[{1, 5}] = one;
  REQUIRE(thrown_code([&] { deg2_specializer(far, 4, Deg2Kind::Quadric, one); }) == "MalformedInput");

  MixedStream<Rational> ms;
  ms.level = 4;
  ms.linear.resize(1);
  ms.linear[0][7] = one;
  REQUIRE(thrown_code([&] { deg2_specializer(ms, 4, one); }) == "MalformedInput");
}
