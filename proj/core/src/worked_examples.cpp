#include "bicircle/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

using Params = std::vector<std::pair<std::pair<int, int>, Complex>>;

Complex lookup(const Params& p, int i, int j) {
  for (const auto& [ij, v] : p)
    if (ij.first == i && ij.second == j) return v;
  return 0.0;
}

int window_m(ExampleName name) { return name == ExampleName::blocked_extension ? 2 : 1; }

struct ClosedForm {
  double value;
  double distance;
  bool admissible;
};

// Strict inequalities x_k < 1; value is max x_k, distance the smallest |1 - x_k|.
ClosedForm all_below_one(std::initializer_list<double> values) {
  ClosedForm f{0.0, std::numeric_limits<double>::infinity(), true};
  for (double v : values) {
    f.distance = std::min(f.distance, std::abs(1.0 - v));
    f.admissible = f.admissible && v < 1.0;
    f.value = std::max(f.value, v);
  }
  return f;
}

ClosedForm deg11(const Params& p) {
  const Complex u10 = lookup(p, 1, 0);
  const Complex u01 = lookup(p, 0, 1);
  const Complex u11 = lookup(p, 1, 1);
  if (std::abs(u10) >= 1.0 || std::abs(u01) >= 1.0) return all_below_one({std::abs(u10), std::abs(u01)});
  const double a = (1.0 - std::norm(u01 * u10)) / (std::sqrt(1.0 - std::norm(u01)) * std::sqrt(1.0 - std::norm(u10)));
  return all_below_one({std::abs(u10), std::abs(u01), std::abs(a * u11 - std::conj(u01 * u10))});
}

ClosedForm contractive_toeplitz(const Params& p) {
  const Complex u10 = lookup(p, 1, 0);
  const Complex um11 = lookup(p, -1, 1);
  const Complex u11 = lookup(p, 1, 1);
  const double s10 = std::norm(u10);
  const double s11 = std::norm(um11);
  if (s10 >= 1.0 || s11 >= 1.0) return all_below_one({std::abs(u10), std::abs(um11)});
  const double d = s10 / ((1.0 - s10) * (1.0 - s11));
  const double d1 = s10 / ((1.0 - s11) * std::sqrt(1.0 - s10));
  const Complex phase = s10 > 0.0 ? std::conj(u10) * std::conj(u10) / s10 : Complex(0.0);
  const Complex x = (1.0 + d) * std::sqrt(1.0 - s10) * u11 + d1 * phase * um11;
  return all_below_one({std::abs(u10), std::abs(um11), std::abs(x)});
}

ClosedForm blocked_extension(const Params& p) {
  const Complex u11 = lookup(p, 1, 1);
  const Complex um11 = lookup(p, -1, 1);
  const Complex um12 = lookup(p, -1, 2);
  const double k0 = std::abs(um11) / std::sqrt(1.0 - std::norm(u11));
  const double k1 = std::abs(um12) / std::sqrt(1.0 - std::norm(um11));
  return all_below_one({std::hypot(k0, k1)});
}

ParameterGrid build_grid(ExampleName name, const Params& p) {
  ParameterGrid g(1, window_m(name));
  g.set(0, 0, 1.0);
  for (const auto& [ij, v] : p) g.set(ij.first, ij.second, v);
  return g;
}

Complex draw_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return radius * std::sqrt(u(rng)) * std::polar(1.0, 2.0 * std::numbers::pi * u(rng));
}

Params draw(ExampleName name, std::mt19937_64& rng) {
  switch (name) {
    case ExampleName::deg11:
      return {{{1, 0}, draw_disk(rng, 1.05)}, {{0, 1}, draw_disk(rng, 1.05)}, {{1, 1}, draw_disk(rng, 1.1)}};
    case ExampleName::contractive_toeplitz:
      return {{{1, 0}, draw_disk(rng, 1.05)}, {{-1, 1}, draw_disk(rng, 1.05)}, {{1, 1}, draw_disk(rng, 0.9)}};
    case ExampleName::blocked_extension:
      return {{{1, 1}, draw_disk(rng, 0.95)},
              {{-1, 1}, draw_disk(rng, 0.95)},
              {{1, 2}, draw_disk(rng, 0.5)},
              {{-1, 2}, draw_disk(rng, 0.9)}};
  }
  return {};
}

// Whether every level before (1,2) was computed.
bool prior_ok(const AdmissibilityReport& r) {
  if (r.admissible || !r.first_failure) return true;
  return *r.first_failure == std::make_pair(1, 2);
}

}  // namespace

std::string to_string(ExampleName e) {
  switch (e) {
    case ExampleName::deg11:
      return "deg11";
    case ExampleName::contractive_toeplitz:
      return "contractive-toeplitz";
    case ExampleName::blocked_extension:
      return "blocked-extension";
  }
  return "?";
}

ExampleName parse_example_name(const std::string& s) {
  for (ExampleName e : {ExampleName::deg11, ExampleName::contractive_toeplitz, ExampleName::blocked_extension})
    if (to_string(e) == s) return e;
  throw InvalidArgument("unknown example '" + s + "'");
}

int SweepResult::disagreements() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const SweepPoint& p) { return !p.agree(); }));
}

double SweepResult::max_value_error() const {
  double e = 0.0;
  for (const auto& p : points) e = std::max(e, std::abs(p.value_error));
  return e;
}

SweepPoint evaluate_example(ExampleName name, const Params& params) {
  SweepPoint pt;
  pt.params = params;
  ClosedForm cf{};
  switch (name) {
    case ExampleName::deg11:
      cf = deg11(params);
      break;
    case ExampleName::contractive_toeplitz:
      cf = contractive_toeplitz(params);
      break;
    case ExampleName::blocked_extension:
      cf = blocked_extension(params);
      break;
  }
  pt.closed_form = cf.value;
  pt.closed_form_admissible = cf.admissible;
  pt.boundary_distance = cf.distance;

  const SynthesisOutcome out = synthesize(build_grid(name, params));
  if (name != ExampleName::blocked_extension) {
    pt.algorithmic_admissible = out.admissible();
    return pt;
  }
  const bool k_failed = !out.admissible() && out.report.failed == Condition::k_contraction &&
                        out.report.first_failure == std::make_pair(1, 2);
  pt.algorithmic_admissible = prior_ok(out.report) && !k_failed;
  if (const LevelRecord* rec = out.report.find(1, 2)) pt.value_error = cf.value - rec->k_norm;
  return pt;
}

SweepResult run_sweep(ExampleName name, int count, std::uint64_t seed) {
  SweepResult res;
  res.name = name;
  std::mt19937_64 rng(seed);
  const int cap = 100 * std::max(count, 1);
  for (int tries = 0; static_cast<int>(res.points.size()) < count && tries < cap; ++tries) {
    const Params p = draw(name, rng);
    if (name == ExampleName::blocked_extension) {
      const SynthesisOutcome prior = synthesize(build_grid(name, p));
      if (!prior_ok(prior.report)) {
        ++res.skipped_prior;
        continue;
      }
    }
    SweepPoint pt = evaluate_example(name, p);
    if (pt.boundary_distance <= kBoundaryBand) {
      ++res.skipped_band;
      continue;
    }
    res.points.push_back(std::move(pt));
  }
  return res;
}

SweepResult fixed_sweep(ExampleName name) {
  SweepResult res;
  res.name = name;
  std::vector<Params> pts;
  switch (name) {
    case ExampleName::deg11:
      for (double r : {0.5, 0.99, 1.01}) pts.push_back({{{1, 0}, 0.0}, {{0, 1}, 0.0}, {{1, 1}, r}});
      break;
    case ExampleName::contractive_toeplitz:
      for (double a : {0.0, 0.3, 0.6})
        for (double b : {0.0, 0.4})
          for (double c : {0.2, 0.7, 1.2}) pts.push_back({{{1, 0}, a}, {{-1, 1}, Complex(0.0, b)}, {{1, 1}, c}});
      break;
    case ExampleName::blocked_extension:
      for (double u11 : {0.0, 0.6, 0.8})
        for (double um11 : {0.3, 0.55, 0.7}) pts.push_back({{{1, 1}, u11}, {{-1, 1}, um11}, {{-1, 2}, 0.0}});
      break;
  }
  for (const auto& p : pts) res.points.push_back(evaluate_example(name, p));
  return res;
}

}  // namespace bicircle
