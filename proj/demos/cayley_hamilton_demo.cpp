// Finds the scalar Cayley-Hamilton identity of a 2x2 matrix over E^(2) and
// checks it by evaluating the polynomial at the matrix itself.

#include <iostream>

#include "ctrep/ctrep.hpp"

int main() {
  using namespace ctrep;
  const Matrix<GrassmannElement> a = Matrix<GrassmannElement>::from_rows({
      {parse_grassmann("1 + v1", 2), parse_grassmann("v2 - 3*v1*v2", 2)},
      {parse_grassmann("2*v1 + v2", 2), parse_grassmann("-1 + 1/2*v1*v2", 2)},
  });
  std::cout << "A =\n" << to_string(a);

  const CHCertificate cert = cayley_hamilton(2, a);
  std::cout << "degree " << cert.degree << ", coefficients:";
  for (const auto& c : cert.coeffs.coeffs) std::cout << ' ' << c;
  std::cout << "\nresidual in M_2(E^(2)) is " << (cert.residual_is_zero ? "zero" : "NONZERO") << '\n';
  return cert.residual_is_zero ? 0 : 1;
}
