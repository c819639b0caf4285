#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bicircle/parameter_synthesis.hpp"

namespace bicircle {

enum class ExampleName { deg11, contractive_toeplitz, blocked_extension };

std::string to_string(ExampleName e);
// Throws InvalidArgument for an unknown name.
ExampleName parse_example_name(const std::string& s);

struct SweepPoint {
  std::vector<std::pair<std::pair<int, int>, Complex>> params;  // the entries that were set
  double closed_form = 0.0;  // the quantity compared against 1
  bool closed_form_admissible = false;
  bool algorithmic_admissible = false;
  double boundary_distance = 0.0;
  // blocked-extension: ||K_{1,2}|| from the closed form minus the synthesized value
  double value_error = 0.0;
  bool agree() const { return closed_form_admissible == algorithmic_admissible; }
};

struct SweepResult {
  ExampleName name = ExampleName::deg11;
  std::vector<SweepPoint> points;
  int skipped_band = 0;   // drawn points within the boundary band
  int skipped_prior = 0;  // blocked-extension draws whose levels before (1,2) failed
  int disagreements() const;
  double max_value_error() const;
};

inline constexpr double kBoundaryBand = 1e-6;
inline constexpr std::uint64_t kSweepSeed = 0x8A11;

// deg11: u00=1, u(-1,1)=0; free u10, u01, u11.
// contractive-toeplitz: u00=1, u01=0; free u10, u(-1,1), u11.
// blocked-extension: u00=1, u10=u01=u02=0; the verdict is the K gate at (1,2).
SweepPoint evaluate_example(ExampleName name, const std::vector<std::pair<std::pair<int, int>, Complex>>& params);

// Random points drawn until `count` of them lie outside the boundary band.
SweepResult run_sweep(ExampleName name, int count, std::uint64_t seed = kSweepSeed);

// Fixed sweeps: deg11 with u01 = u10 = 0 and |u11| in {0.5, 0.99, 1.01}; a
// contractive-toeplitz grid; blocked-extension points on both sides of |u(-1,1)| = sqrt(1-|u11|^2).
SweepResult fixed_sweep(ExampleName name);

}  // namespace bicircle
