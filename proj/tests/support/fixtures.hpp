#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bicircle/fejer_riesz.hpp"
#include "bicircle/parameter_synthesis.hpp"
#include "oracle.hpp"

namespace fixtures {

using bicircle::Complex;
using bicircle::ComplexMatrix;

inline constexpr std::uint64_t kSeed = 20240611;

// 1/|4+z+w|^2
double fixture_density(double theta, double phi);
bicircle::MomentTable fixture_moments(int n, int m, int grid = 256);
// 4zw + z + w: its reverse 4 + z + w has no zeros on the closed bidisk.
bicircle::BivariatePolynomial fixture_factor();

bicircle::MomentTable to_table(const oracle::Moments& mo, int n, int m);
oracle::Moments to_oracle(const bicircle::MomentTable& t, int n, int m);
oracle::Params to_oracle(const bicircle::ParameterGrid& g);
oracle::Poly to_oracle(const bicircle::BivariatePolynomial& p, int n, int m);

Complex random_disk(std::mt19937_64& rng, double radius);
// u00 in [0.5, 2], other free entries uniform in the disk.
bicircle::ParameterGrid random_params(std::mt19937_64& rng, int n, int m, double radius);
// Redraws until the synthesis succeeds.
bicircle::ParameterGrid random_admissible(std::mt19937_64& rng, int n, int m, double radius = 0.35);

// Moments of a weighted point measure with (n+1)(m+1)+extra random atoms: positive definite.
oracle::Moments random_atoms(std::mt19937_64& rng, int n, int m, int extra = 12);

// Random points with |z| = rz, |w| = rw.
std::vector<std::pair<Complex, Complex>> points(std::mt19937_64& rng, int count, double rz = 1.0, double rw = 1.0);

double max_abs(const oracle::Mat& a);

}  // namespace fixtures
