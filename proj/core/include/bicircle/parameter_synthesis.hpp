#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicircle/bivariate_orthopoly.hpp"
#include "bicircle/errors.hpp"
#include "bicircle/matrix_kernel.hpp"
#include "bicircle/moment_functional.hpp"

namespace bicircle {

// Free parameters u(i,j), 0 <= i <= N, |j| <= M, with u(-i,-j) = conj(u(i,j)).
// The free entries are u(0,0) > 0, u(i,0), u(0,j) and, for n,m >= 1, u(n,m) and u(-n,m).
class ParameterGrid {
 public:
  ParameterGrid() : ParameterGrid(0, 0) {}
  ParameterGrid(int n_max, int m_max);

  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }

  Complex get(int i, int j) const;
  // Also stores conj(value) at (-i,-j). u(0,0) must be real.
  void set(int i, int j, Complex value);
  double max_difference(const ParameterGrid& o) const;

  // The free entries in a fixed order: (0,0), (i,0), (0,j), then (n,m), (-n,m) per interior level.
  std::vector<std::pair<int, int>> free_indices() const;

 private:
  int n_max_;
  int m_max_;
  ComplexMatrix u_;  // u_(i + N, j + M)
};

enum class Condition {
  none,
  u00_positive,         // u(0,0) > 0
  axis_z_contraction,   // |E_{i,0}| < 1
  axis_w_contraction,   // |E~_{0,j}| < 1
  k_contraction,        // ||K_{n,m}|| < 1
  k1_contraction,       // ||K1_{n,m}|| < 1
  h3_bound,             // e1^T H3 e1 < 1
  numerical_breakdown,  // a factorization failed although every gate passed
};

std::string to_string(Condition c);

struct LevelRecord {
  int n = 0;
  int m = 0;
  bool computed = false;
  double k_norm = 0.0;
  double k1_norm = 0.0;
  double e_norm = 0.0;  // |E_{i,0}|, |E~_{0,j}|, or ||E_{n,m}|| at interior levels (recorded, not a gate)
  double h3 = 0.0;
  // Redundant rows of the stacked E system and the first-row check of G1.
  double e_redundancy = 0.0;
  double g1_first_row = 0.0;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<LevelRecord> levels;
  std::optional<std::pair<int, int>> first_failure;
  Condition failed = Condition::none;
  double failed_value = 0.0;
  double margin = kContractionMargin;

  const LevelRecord* find(int n, int m) const;
  std::string describe() const;
};

class Inadmissible : public Error {
 public:
  explicit Inadmissible(AdmissibilityReport report);
  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

struct SynthesisState {
  ParameterGrid params;
  PolynomialFamily family;
  CoefficientTable coefficients;
  MomentTable moments;
  AdmissibilityReport report;
};

struct SynthesisOptions {
  double margin = kContractionMargin;
  double divide_guard = 1e-14;
};

// Level-by-level construction. Levels are computed in any order that has
// (n-1,m) and (n,m-1) available before (n,m).
class Synthesizer {
 public:
  explicit Synthesizer(ParameterGrid params, SynthesisOptions options = {});
  // Continue from a state (for one-step extensions); the window may be enlarged.
  Synthesizer(SynthesisState state, int n_max, int m_max, SynthesisOptions options = {});

  // False when a gate fails; the report then names the level and condition.
  bool step(int n, int m);
  // Axes first, then interior levels in lex order.
  bool run();
  bool done(int n, int m) const { return state_.family.has(n, m); }
  void set_parameter(int i, int j, Complex value);

  const SynthesisState& state() const { return state_; }
  SynthesisState take() { return std::move(state_); }

 private:
  bool fail(LevelRecord record, Condition c, double value);
  bool origin();
  bool axis_z(int i);
  bool axis_w(int j);
  bool interior(int n, int m);
  void solve_moment(int i, int j, Complex target, const std::function<Complex()>& bracket);

  SynthesisState state_;
  SynthesisOptions options_;
};

struct SynthesisOutcome {
  AdmissibilityReport report;
  std::optional<SynthesisState> state;  // present iff admissible
  MomentTable attempted_moments;        // moments fixed before the run stopped
  bool admissible() const { return report.admissible; }
};

SynthesisOutcome synthesize(const ParameterGrid& params, const SynthesisOptions& options = {});
// Throws Inadmissible.
SynthesisState synthesize_or_throw(const ParameterGrid& params, const SynthesisOptions& options = {});

// Inverse map; throws NotPositiveDefinite.
ParameterGrid extract_parameters(const MomentTable& moments, int n_max, int m_max);

// All levels (i,j) <= (n,m) except (n,m) itself.
SynthesisState synthesize_prior(const ParameterGrid& params, int n, int m, const SynthesisOptions& options = {});

struct ExtensionOutcome {
  bool admissible = false;
  LevelRecord record;
  Condition failed = Condition::none;
  std::optional<SynthesisState> state;
};

// Add level (n,m) given u(n,m) and u(-n,m); the prior must hold (n-1,m) and (n,m-1).
ExtensionOutcome one_step_extension(const SynthesisState& prior, int n, int m, Complex u_nm, Complex u_minus_nm,
                                    const SynthesisOptions& options = {});

}  // namespace bicircle
