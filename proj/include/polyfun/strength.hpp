#pragma once

// Strength of degree-2 tensors, with self-contained certificates.
//
// A certificate writes the target as a short sum of bilinear images of pairs
// of linear forms. Over Q a definite form like x² + y² admits no two-term
// product decomposition with rational forms, so certificate coefficients live
// in a quadratic extension Q[T]/(T² − D): a pair of diagonal terms
// c₁ℓ₁² + c₂ℓ₂² factors as c₁(ℓ₁ + Tℓ₂)(ℓ₁ − Tℓ₂) with D = −c₂/c₁. The
// imaginary parts always cancel in the evaluated sum, which stays rational
// and is compared to the target exactly.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyfun/element.hpp"
#include "polyfun/functor_spec.hpp"
#include "polyfun/lessdot.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/rational.hpp"

namespace polyfun {

// An element re + T·im of Q[T]/(T² − D); the D is carried by the enclosing
// certificate term, not by every scalar.
struct QE {
  Rational re, im;

  QE() = default;
  explicit QE(Rational r) : re(std::move(r)) {}
  QE(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool rational() const { return im.is_zero(); }

  friend QE operator+(const QE& x, const QE& y) { return QE(x.re + y.re, x.im + y.im); }
  friend QE operator-(const QE& x, const QE& y) { return QE(x.re - y.re, x.im - y.im); }
  friend bool operator==(const QE& x, const QE& y) { return x.re == y.re && x.im == y.im; }
};

inline QE qe_mul(const QE& x, const QE& y, const Rational& disc) {
  return QE(x.re * y.re + disc * (x.im * y.im), x.re * y.im + x.im * y.re);
}

inline QE qe_inv(const QE& x, const Rational& disc) {
  Rational norm = x.re * x.re - disc * (x.im * x.im);
  if (norm.is_zero()) throw error("DivisionByZero", "quadratic-extension element is not invertible");
  Rational ninv = norm.inv();
  return QE(x.re * ninv, -(x.im * ninv));
}

inline QE qe_div(const QE& x, const QE& y, const Rational& disc) {
  return qe_mul(x, qe_inv(y, disc), disc);
}

// One certificate term: the bilinear image  α·g⊗h + β·h⊗g  of the pair of
// linear forms (g, h). All four ingredients share the term's extension
// Q[T]/(T² − disc); a term with disc = 0 is plain rational data.
struct StrengthTerm {
  Rational disc;
  QE alpha, beta;
  std::vector<QE> g, h;
};

struct StrengthCertificate {
  std::string mode;  // "sym", "alt", or "full"
  int claimed = 0;
  std::vector<StrengthTerm> terms;
};

// Evaluates the certificate to an n×n rational matrix. The imaginary parts
// must cancel identically; anything left over means the certificate is
// malformed, never that the answer is approximate.
inline Matrix<Rational> certificate_matrix(const StrengthCertificate& cert, int n) {
  Matrix<Rational> out(n, n);
  for (const auto& t : cert.terms) {
    if (static_cast<int>(t.g.size()) != n || static_cast<int>(t.h.size()) != n)
      throw error("DimensionMismatch", "certificate term has forms of the wrong length");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QE gh = qe_mul(t.g[static_cast<std::size_t>(i)], t.h[static_cast<std::size_t>(j)], t.disc);
        QE hg = qe_mul(t.h[static_cast<std::size_t>(i)], t.g[static_cast<std::size_t>(j)], t.disc);
        QE cell = qe_mul(t.alpha, gh, t.disc) + qe_mul(t.beta, hg, t.disc);
        if (!cell.im.is_zero())
          throw error("MalformedInput", "certificate term does not evaluate rationally");
        out.at(i, j) += cell.re;
      }
  }
  return out;
}

inline bool verify_deg2_certificate(const StrengthCertificate& cert, const Matrix<Rational>& target) {
  if (target.rows() != target.cols()) return false;
  if (static_cast<int>(cert.terms.size()) != cert.claimed) return false;
  return certificate_matrix(cert, target.rows()) == target;
}

enum class Deg2Mode { Sym, Alt, Full };

struct Deg2Result {
  int lower = 0, upper = 0;  // equal in the exact modes
  std::optional<StrengthCertificate> certificate;
};

namespace detail {

inline std::vector<QE> qe_vec(const std::vector<Rational>& re) {
  std::vector<QE> v;
  v.reserve(re.size());
  for (const auto& r : re) v.emplace_back(r);
  return v;
}

inline std::vector<QE> qe_vec(const std::vector<Rational>& re, const std::vector<Rational>& im,
                              bool negate_im) {
  std::vector<QE> v;
  v.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i)
    v.emplace_back(re[i], negate_im ? -im[i] : im[i]);
  return v;
}

// Symmetric elimination of a symmetric matrix into c·ℓ² squares and
// hyperbolic product terms. Pivots are chosen deterministically: the first
// nonzero diagonal entry, else the lexicographically first off-diagonal one.
inline std::vector<StrengthTerm> sym_terms(Matrix<Rational> a) {
  const int n = a.rows();
  std::vector<std::pair<Rational, std::vector<Rational>>> squares;
  std::vector<StrengthTerm> terms;

  auto row_of = [&](int i) {
    std::vector<Rational> r(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = a.at(i, j);
    return r;
  };

  for (;;) {
    int diag = -1;
    for (int i = 0; i < n && diag < 0; ++i)
      if (!a.at(i, i).is_zero()) diag = i;

    if (diag >= 0) {
      // c·ℓ² with ℓ = (row diag)/c; removes rank 1.
      Rational c = a.at(diag, diag);
      Rational cinv = c.inv();
      std::vector<Rational> ell = row_of(diag);
      for (auto& x : ell) x = x * cinv;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a.at(i, j) -= c * ell[static_cast<std::size_t>(i)] * ell[static_cast<std::size_t>(j)];
      squares.emplace_back(std::move(c), std::move(ell));
      continue;
    }

    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!a.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;  // residual is zero

    // Zero diagonal: the 2×2 block at (pi,pj) is hyperbolic and the extracted
    // part (1/c)(uvᵀ + vuᵀ) is a single product of rational forms; removes
    // rank 2.
    Rational c = a.at(pi, pj);
    Rational cinv = c.inv();
    std::vector<Rational> u = row_of(pi), v = row_of(pj);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a.at(i, j) -= cinv * (u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] +
                              v[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)]);
    StrengthTerm t;
    t.disc = Rational(0);
    t.alpha = QE(cinv);
    t.beta = QE(cinv);
    t.g = qe_vec(u);
    t.h = qe_vec(v);
    terms.push_back(std::move(t));
  }

  // Pair the squares: c₁ℓ₁² + c₂ℓ₂² = c₁(ℓ₁ + Tℓ₂)(ℓ₁ − Tℓ₂), T² = −c₂/c₁.
  // When the ratio is a perfect square the factors collapse to rational forms.
  for (std::size_t s = 0; s + 1 < squares.size(); s += 2) {
    const auto& [c1, l1] = squares[s];
    const auto& [c2, l2] = squares[s + 1];
    Rational d = -(c2 / c1);
    StrengthTerm t;
    t.alpha = QE(c1 / Rational(2));
    t.beta = t.alpha;
    Rational root;
    if (d.sqrt_exact(&root)) {
      t.disc = Rational(0);
      std::vector<Rational> scaled = l2;
      for (auto& x : scaled) x = x * root;
      t.g = qe_vec(l1);
      t.h = qe_vec(l1);
      for (std::size_t i = 0; i < l1.size(); ++i) {
        t.g[i].re = l1[i] + scaled[i];
        t.h[i].re = l1[i] - scaled[i];
      }
    } else {
      t.disc = d;
      t.g = qe_vec(l1, l2, false);
      t.h = qe_vec(l1, l2, true);
    }
    terms.push_back(std::move(t));
  }
  if (squares.size() % 2 == 1) {
    const auto& [c, l] = squares.back();
    StrengthTerm t;
    t.disc = Rational(0);
    t.alpha = QE(c);
    t.beta = QE(0);
    t.g = qe_vec(l);
    t.h = t.g;
    terms.push_back(std::move(t));
  }
  return terms;
}

// A = Σ (1/c)(uvᵀ − vuᵀ) over symplectic pivot pairs; rank/2 terms.
inline std::vector<StrengthTerm> alt_terms(Matrix<Rational> a) {
  const int n = a.rows();
  std::vector<StrengthTerm> terms;
  for (;;) {
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!a.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    Rational c = a.at(pi, pj);
    Rational cinv = c.inv();
    std::vector<Rational> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      u[static_cast<std::size_t>(j)] = a.at(pi, j);
      v[static_cast<std::size_t>(j)] = a.at(pj, j);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a.at(i, j) -= cinv * (u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                              v[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)]);
    StrengthTerm t;
    t.disc = Rational(0);
    t.alpha = QE(cinv);
    t.beta = QE(-cinv);
    t.g = qe_vec(u);
    t.h = qe_vec(v);
    terms.push_back(std::move(t));
  }
  return terms;
}

// A = Σ (column at pivot)·(reduced row)ᵀ — rank many rank-one terms.
inline std::vector<StrengthTerm> rank_terms(const Matrix<Rational>& a) {
  Matrix<Rational> r = a;
  auto pivots = r.rref();
  std::vector<StrengthTerm> terms;
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    StrengthTerm term;
    term.disc = Rational(0);
    term.alpha = QE(Rational(1));
    term.beta = QE(0);
    term.g.resize(static_cast<std::size_t>(a.rows()));
    term.h.resize(static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) term.g[static_cast<std::size_t>(i)] = QE(a.at(i, pivots[t]));
    for (int j = 0; j < a.cols(); ++j)
      term.h[static_cast<std::size_t>(j)] = QE(r.at(static_cast<int>(t), j));
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace detail

inline Deg2Result strength_deg2(const Matrix<Rational>& a, Deg2Mode mode) {
  if (a.rows() != a.cols()) throw error("DimensionMismatch", "degree-2 target must be square");
  const int n = a.rows();
  auto transposed = a.transpose();

  if (mode == Deg2Mode::Sym) {
    if (!(a == transposed)) throw error("MalformedInput", "sym mode needs a symmetric matrix");
    StrengthCertificate cert;
    cert.mode = "sym";
    cert.terms = detail::sym_terms(a);
    cert.claimed = static_cast<int>(cert.terms.size());
    int r = a.rank();
    if (cert.claimed != (r + 1) / 2) throw error("Internal", "symmetric elimination miscounted");
    return {cert.claimed, cert.claimed, std::move(cert)};
  }

  if (mode == Deg2Mode::Alt) {
    bool alternating = (a == transposed.scaled(Rational(-1)));
    for (int i = 0; i < n; ++i) alternating = alternating && a.at(i, i).is_zero();
    if (!alternating) throw error("MalformedInput", "alt mode needs an alternating matrix");
    StrengthCertificate cert;
    cert.mode = "alt";
    cert.terms = detail::alt_terms(a);
    cert.claimed = static_cast<int>(cert.terms.size());
    if (2 * cert.claimed != a.rank()) throw error("Internal", "symplectic elimination miscounted");
    return {cert.claimed, cert.claimed, std::move(cert)};
  }

  // Full mode: exact bounds from the three congruence-invariant ranks; a
  // certificate is attached when they pin the value.
  Matrix<Rational> s = a + transposed;
  Matrix<Rational> c = a - transposed;
  int ra = a.rank(), rs = s.rank(), rc = c.rank();
  int lower = std::max((ra + 1) / 2, std::max((rs + 1) / 2, rc / 2));
  int viaParts = (rs + 1) / 2 + rc / 2;
  int upper = std::min(ra, viaParts);

  Deg2Result out{lower, upper, std::nullopt};
  if (lower == upper) {
    StrengthCertificate cert;
    cert.mode = "full";
    if (ra <= viaParts) {
      cert.terms = detail::rank_terms(a);
    } else {
      Rational half(1, 2);
      cert.terms = detail::sym_terms(s.scaled(half));
      for (auto& t : detail::alt_terms(c.scaled(half))) cert.terms.push_back(std::move(t));
    }
    cert.claimed = static_cast<int>(cert.terms.size());
    if (cert.claimed != upper) throw error("Internal", "full-mode certificate miscounted");
    out.certificate = std::move(cert);
  }
  return out;
}

// The one-parameter family [[1, x], [0, 1]] in K²⊗K². Its strength is 1
// except at x = ±2, where the two eigen-directions collide; the rank-one
// decomposition needs the larger root μ of μ² − xμ + 1, which may live in a
// quadratic extension — returned symbolically, never approximated.
struct UnipotentResult {
  int strength = 1;
  std::optional<StrengthCertificate> certificate;
  // Coefficients (1, −x, 1) of the minimal polynomial of μ when μ is
  // irrational; the certificate then carries the extension arithmetic.
  std::optional<std::array<Rational, 3>> quadratic;
};

inline UnipotentResult strength_unipotent(const Rational& x) {
  UnipotentResult out;
  Rational disc = x * x - Rational(4);

  if (disc.is_zero()) {
    out.strength = 2;
    StrengthCertificate cert;
    cert.mode = "full";
    Matrix<Rational> a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = x;
    a.at(1, 1) = Rational(1);
    cert.terms = detail::rank_terms(a);
    cert.claimed = 2;
    out.certificate = std::move(cert);
    return out;
  }

  // a·u⊗v + b·v⊗u with u = (1, 1/μ), v = (1, μ), a = μ²/(μ²−1), b = 1−a.
  auto build = [&](const QE& mu, const Rational& d) {
    QE muinv = qe_inv(mu, d);
    QE musq = qe_mul(mu, mu, d);
    QE one(Rational(1));
    QE aCoeff = qe_div(musq, musq - one, d);
    QE bCoeff = one - aCoeff;
    StrengthTerm t;
    t.disc = d;
    t.alpha = aCoeff;
    t.beta = bCoeff;
    t.g = {one, muinv};
    t.h = {one, mu};
    StrengthCertificate cert;
    cert.mode = "full";
    cert.claimed = 1;
    cert.terms = {std::move(t)};
    return cert;
  };

  Rational root;
  if (disc.sqrt_exact(&root)) {
    Rational mu = (x + root) / Rational(2);
    out.certificate = build(QE(mu), Rational(0));
  } else {
    out.quadratic = {Rational(1), -x, Rational(1)};
    out.certificate = build(QE(x / Rational(2), Rational(1, 2)), disc);
  }
  return out;
}

// Number of ways to reach total degree d from the irreducible constituents:
// counts nonnegative solutions of Σ e_i d_i = d. Constituents of degree ≥ d
// are out of contract.
inline long long image_strength_bound(const FunctorSpec& q, int d) {
  if (d < 1) throw error("MalformedInput", "target degree must be positive");
  std::vector<int> degrees;
  for (const auto& [deg, part] : irreducible_profile(q))
    for (const auto& [lambda, count] : part)
      for (long long i = 0; i < count; ++i) degrees.push_back(deg);
  for (int deg : degrees)
    if (deg >= d) throw error("MalformedInput", "constituent degree must be below the target");
  // Small counting DP over the degree list.
  std::vector<long long> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int deg : degrees)
    for (int t = deg; t <= d; ++t)
      ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - deg)];
  return ways[static_cast<std::size_t>(d)];
}

// Conversions between small-degree elements and their matrices.

// Quadratic form Σ q_ij x_i x_j (labels i ≤ j) <-> symmetric Gram matrix.
template <class F>
Matrix<F> sym_element_matrix(const Element<F>& e, std::size_t s) {
  const Summand& summand = e.spec.summands.at(s);
  if (summand.kind != Kind::Sym || summand.degree != 2)
    throw error("MalformedInput", "expected a quadratic component");
  Matrix<F> a(e.n, e.n);
  for (const auto& [l, c] : e.comps[s]) {
    int i = l[0] - 1, j = l[1] - 1;
    if (i == j) {
      a.at(i, i) = c;
    } else {
      F half = c / field_from_int(c, 2);
      a.at(i, j) = half;
      a.at(j, i) = half;
    }
  }
  return a;
}

template <class F>
Element<F> sym_matrix_element(const Matrix<F>& a) {
  Element<F> e(FunctorSpec::parse("S2"), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.cols(); ++j) {
      F v = (i == j) ? a.at(i, i) : a.at(i, j) + a.at(j, i);
      if (!v.is_zero()) e.add_term(0, Label{i + 1, j + 1}, v);
    }
  return e;
}

template <class F>
Matrix<F> alt_element_matrix(const Element<F>& e, std::size_t s) {
  const Summand& summand = e.spec.summands.at(s);
  if (summand.kind != Kind::Ext || summand.degree != 2)
    throw error("MalformedInput", "expected a wedge component");
  Matrix<F> a(e.n, e.n);
  for (const auto& [l, c] : e.comps[s]) {
    a.at(l[0] - 1, l[1] - 1) = c;
    a.at(l[1] - 1, l[0] - 1) = -c;
  }
  return a;
}

template <class F>
Element<F> alt_matrix_element(const Matrix<F>& a) {
  Element<F> e(FunctorSpec::parse("E2"), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) e.add_term(0, Label{i + 1, j + 1}, a.at(i, j));
  return e;
}

template <class F>
Matrix<F> tensor_element_matrix(const Element<F>& e, std::size_t s) {
  const Summand& summand = e.spec.summands.at(s);
  if (summand.kind != Kind::Tensor || summand.degree != 2)
    throw error("MalformedInput", "expected a degree-2 tensor component");
  Matrix<F> a(e.n, e.n);
  for (const auto& [l, c] : e.comps[s]) a.at(l[0] - 1, l[1] - 1) = c;
  return a;
}

template <class F>
Element<F> tensor_matrix_element(const Matrix<F>& a) {
  Element<F> e(FunctorSpec::parse("T2"), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) e.add_term(0, Label{i + 1, j + 1}, a.at(i, j));
  return e;
}

}  // namespace polyfun
