#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "bicircle/fejer_riesz.hpp"
#include "bicircle/moment_functional.hpp"
#include "bicircle/parameter_synthesis.hpp"
#include "bicircle/polynomial.hpp"

namespace bicircle {

// Line formats. Blank lines and text after '#' are ignored. An optional first
// line `<kind> N M` fixes the window; otherwise it is the largest index seen.
//   moments  N M : i j re im    c(i,j); c(-i,-j) implied
//   params   N M : i j re im    u(i,j); u(-i,-j) implied
//   poly     n m : a b re im    coefficient of z^a w^b
//   trigpoly n m : k l re im    f(k,l); f(-k,-l) implied
// Malformed input raises ParseError with the 1-based line number.

MomentTable read_moments(std::istream& in);
ParameterGrid read_params(std::istream& in);
BivariatePolynomial read_poly(std::istream& in);
TrigPolynomial read_trigpoly(std::istream& in);

// Half-plane entries, 17 significant digits.
void write_moments(std::ostream& out, const MomentTable& moments, int n, int m);
void write_params(std::ostream& out, const ParameterGrid& params);
void write_poly(std::ostream& out, const BivariatePolynomial& p);
void write_trigpoly(std::ostream& out, const TrigPolynomial& f);
void write_matrix(std::ostream& out, const std::string& name, const ComplexMatrix& a);

std::string format_real(double x);
std::string format_complex(Complex c);

// Opens the file or throws Error("cannot open ...").
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bicircle
