// Strength of degree-2 forms, narrated. A symmetric matrix of rank r needs
// ceil(r/2) products of linear forms; the certificate lists the products and
// re-evaluates to the input exactly, including the quadratic-extension case.

#include <iostream>

#include "polyfun/matrix.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/strength.hpp"

using namespace polyfun;

int main() {
  // x1^2 + x2^2 + x3^2: full rank 3, so strength 2, and the pairing of the
  // first two squares needs the imaginary unit.
  Matrix<Rational> m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = Rational(1);

  Deg2Result res = strength_deg2(m, Deg2Mode::Sym);
  std::cout << "sum of three squares: strength " << res.upper << "\n";
  const StrengthCertificate& cert = *res.certificate;
  for (const StrengthTerm& t : cert.terms) {
    std::cout << "  product over Q(sqrt(" << t.disc.str() << ")) with weights "
              << t.alpha.re.str() << "+" << t.alpha.im.str() << "w, " << t.beta.re.str() << "+"
              << t.beta.im.str() << "w\n";
  }
  std::cout << "  certificate re-evaluates: "
            << (verify_deg2_certificate(cert, m) ? "yes" : "no") << "\n\n";

  // The unipotent family [[1,x],[0,1]]: strength 2 exactly when x = ±2,
  // because the eigenvalue equation mu^2 + 1 = x mu then has a double root.
  for (const char* x : {"2", "-2", "0", "1", "5/2", "-3"}) {
    UnipotentResult u = strength_unipotent(Rational::parse(x));
    std::cout << "unipotent x = " << x << ": strength " << u.strength;
    if (u.quadratic)
      std::cout << " (irrational eigenvalue, minimal polynomial t^2 + (" << (*u.quadratic)[1].str()
                << ")t + 1)";
    std::cout << "\n";
  }
  return 0;
}
