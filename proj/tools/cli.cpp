#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <sstream>

#include "bicircle/errors.hpp"
#include "bicircle/fejer_riesz.hpp"
#include "bicircle/parameter_synthesis.hpp"
#include "bicircle/text_io.hpp"
#include "bicircle/worked_examples.hpp"

namespace bicircle::cli {

namespace {

// "text": [section] headers and aligned key/value lines.
// "struct": one `section.key = value` line per item.
class Report {
 public:
  explicit Report(Format f) : format_(f) {}

  void section(const std::string& name) {
    section_ = name;
    if (format_ == Format::text) s_ << (s_.tellp() > 0 ? "\n" : "") << '[' << name << "]\n";
  }
  void value(const std::string& key, const std::string& v) {
    if (format_ == Format::text)
      s_ << key << (key.size() < 24 ? std::string(24 - key.size(), ' ') : " ") << v << '\n';
    else
      s_ << section_ << '.' << key << " = " << v << '\n';
  }
  void value(const std::string& key, double v) { value(key, format_real(v)); }
  void value(const std::string& key, Complex v) { value(key, format_complex(v)); }
  void flag(const std::string& key, bool v) { value(key, std::string(v ? "true" : "false")); }
  void matrix(const std::string& key, const ComplexMatrix& a) {
    if (format_ == Format::text) {
      write_matrix(s_, key, a);
      return;
    }
    value(key + ".shape", std::to_string(a.rows()) + " " + std::to_string(a.cols()));
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        value(key + "[" + std::to_string(r) + "][" + std::to_string(c) + "]", a(r, c));
  }
  void poly(const std::string& key, const BivariatePolynomial& p) {
    for (int a = 0; a <= p.deg_z(); ++a)
      for (int b = 0; b <= p.deg_w(); ++b)
        value(key + "(" + std::to_string(a) + "," + std::to_string(b) + ")", p.coeff(a, b));
  }
  std::string str() const { return s_.str(); }

 private:
  Format format_;
  std::string section_;
  std::ostringstream s_;
};

std::string level_name(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

std::string read_input(const RunConfig& c, size_t k) {
  if (c.inputs.size() <= k) throw InvalidArgument(c.command + ": missing input file");
  return read_file(c.inputs[k]);
}

template <class F>
auto parse_text(const std::string& text, F&& reader) {
  std::istringstream in(text);
  return reader(in);
}

void write_artifact(const RunConfig& c, const std::string& text) {
  if (c.out) write_file(*c.out, text);
}

void report_levels(Report& r, const AdmissibilityReport& rep) {
  for (const LevelRecord& l : rep.levels) {
    r.section("level " + level_name(l.n, l.m));
    r.flag("computed", l.computed);
    if (l.n > 0 && l.m > 0) {
      r.value("||K|| < 1", l.k_norm);
      r.value("||K1|| < 1", l.k1_norm);
      r.value("e1^T H3 e1 < 1", l.h3);
      r.value("||E||", l.e_norm);
    } else if (l.n > 0) {
      r.value("|E(i,0)| < 1", l.e_norm);
    } else if (l.m > 0) {
      r.value("|E~(0,j)| < 1", l.e_norm);
    }
  }
}

int cmd_synth(const RunConfig& c, Report& r) {
  ParameterGrid params = parse_text(read_input(c, 0), [](std::istream& in) { return read_params(in); });
  if (c.level) {
    const auto [n, m] = *c.level;
    ParameterGrid g(n, m);
    for (const auto& [i, j] : g.free_indices())
      if (i <= params.n_max() && std::abs(j) <= params.m_max()) g.set(i, j, params.get(i, j));
    params = g;
  }
  const int n = params.n_max();
  const int m = params.m_max();
  const SynthesisOutcome outcome = synthesize(params);

  r.section("synth");
  r.value("level", level_name(n, m));
  r.flag("admissible", outcome.admissible());
  if (!outcome.admissible()) {
    r.value("failed_level", level_name(outcome.report.first_failure->first, outcome.report.first_failure->second));
    r.value("failed_condition", to_string(outcome.report.failed));
    r.value("measured", outcome.report.failed_value);
    r.value("margin", outcome.report.margin);
    report_levels(r, outcome.report);
    return kRefused;
  }
  report_levels(r, outcome.report);
  const SynthesisState& st = *outcome.state;

  r.section("moments");
  for (int j = 0; j <= m; ++j)
    for (int i = -n; i <= n; ++i)
      if (j > 0 || i >= 0) r.value("c" + level_name(i, j), st.moments.at(i, j));

  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) {
      r.section("coefficients " + level_name(a, b));
      for (const auto& [name, mat] : st.coefficients.at(a, b).entries())
        if (mat->size() > 0) r.matrix(name, *mat);
    }
  }
  r.section("polynomials " + level_name(n, m));
  r.matrix("Phi", st.family.phi(n, m).coefficients());
  r.matrix("PhiT", st.family.phi_tilde(n, m).coefficients());

  StableOptions so;
  if (c.tol) so.zero_tol = *c.tol;
  if (c.grid) so.grid = *c.grid;
  const StableOutcome stable = stable_from_functional(st.moments, n, m, so);
  r.section("factor");
  r.value("||K||", stable.k_norm);
  r.flag("applicable", stable.applicable);
  if (stable.polynomial) {
    r.poly("p", stable.polynomial->p);
    r.value("spectral_match_error", stable.match_error);
    r.flag("reverse_stable", stable.polynomial->certificate.stable);
    r.value("certificate_min_modulus", stable.polynomial->certificate.min_modulus);
  }

  std::ostringstream art;
  write_moments(art, st.moments, n, m);
  write_artifact(c, art.str());
  return kOk;
}

int cmd_analyze(const RunConfig& c, Report& r) {
  const MomentTable moments = parse_text(read_input(c, 0), [](std::istream& in) { return read_moments(in); });
  const auto [n, m] = c.level.value_or(std::make_pair(moments.n_max(), moments.m_max()));
  for (int j = -m; j <= m; ++j)
    for (int i = -n; i <= n; ++i)
      if (!moments.in_window(i, j) || !moments.has(i, j)) throw MissingMoment(i, j);
  const MomentTable window = moments.resized(n, m);

  const PositivityReport pd = is_positive_definite(window, n, m);
  r.section("analyze");
  r.value("level", level_name(n, m));
  r.flag("positive_definite", pd.positive_definite);
  r.value("min_pivot", pd.min_pivot);
  if (!pd.positive_definite) return kRefused;

  const ParameterGrid params = extract_parameters(window, n, m);
  r.section("parameters");
  for (const auto& [i, j] : params.free_indices()) r.value("u" + level_name(i, j), params.get(i, j));

  const PolynomialFamily family = gram_schmidt_levels(window, n, m);
  const CoefficientTable coeffs = coefficients_by_inner_product(window, family);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) {
      const LevelCoefficients& lc = coeffs.at(a, b);
      r.section("level " + level_name(a, b));
      r.value("||K||", lc.K.size() ? spectral_norm(lc.K) : 0.0);
      r.value("||K1||", lc.K1.size() ? spectral_norm(lc.K1) : 0.0);
      r.value("||E||", lc.E.size() ? spectral_norm(lc.E) : 0.0);
      r.value("||E~||", lc.Et.size() ? spectral_norm(lc.Et) : 0.0);
    }
  }
  std::ostringstream art;
  write_params(art, params);
  write_artifact(c, art.str());
  return kOk;
}

int cmd_factor(const RunConfig& c, Report& r) {
  const TrigPolynomial f = parse_text(read_input(c, 0), [](std::istream& in) { return read_trigpoly(in); });
  if (c.level && (c.level->first != f.n() || c.level->second != f.m()))
    throw InvalidArgument("--level does not match the trig polynomial bidegree " + level_name(f.n(), f.m()));
  FactorOptions fo;
  if (c.tol) fo.zero_tol = *c.tol;
  if (c.grid) fo.grid = *c.grid;
  const FactorizationResult res = fejer_riesz_factor(f, fo);
  r.section("factor");
  r.value("bidegree", level_name(f.n(), f.m()));
  r.value("verdict", to_string(res.verdict));
  r.value("min_sample", res.min_sample);
  r.value("grid", std::to_string(res.grid_z) + " " + std::to_string(res.grid_w));
  if (res.verdict == FactorVerdict::not_positive) return kRefused;
  r.value("||K||", res.k_norm);
  if (res.verdict != FactorVerdict::factored) return kRefused;
  r.value("reconstruction_error", res.reconstruction_error);
  r.flag("reverse_stable", res.factor->certificate.stable);
  r.poly("p", res.factor->p);
  std::ostringstream art;
  write_poly(art, res.factor->p);
  write_artifact(c, art.str());
  return kOk;
}

int cmd_match(const RunConfig& c, Report& r) {
  const MomentTable moments = parse_text(read_input(c, 0), [](std::istream& in) { return read_moments(in); });
  const BivariatePolynomial p = parse_text(read_input(c, 1), [](std::istream& in) { return read_poly(in); });
  const auto [n, m] = c.level.value_or(std::make_pair(p.deg_z(), p.deg_w()));
  const int grid = c.grid.value_or(kDefaultDensityGrid);
  const double tol = c.tol.value_or(kMatchTol);
  const MomentTable back = spectral_moments(p, n, m, grid);
  r.section("match");
  r.value("level", level_name(n, m));
  double worst = 0.0;
  for (int j = 0; j <= m; ++j) {
    for (int i = -n; i <= n; ++i) {
      if (j == 0 && i < 0) continue;
      if (!moments.in_window(i, j) || !moments.has(i, j)) throw MissingMoment(i, j);
      const double d = std::abs(back.at(i, j) - moments.at(i, j));
      worst = std::max(worst, d);
      r.value("error c" + level_name(i, j), d);
    }
  }
  r.value("max_error", worst);
  r.flag("within_tol", worst <= tol);
  return worst <= tol ? kOk : kRefused;
}

int cmd_example(const RunConfig& c, Report& r) {
  if (c.inputs.empty()) throw InvalidArgument("example: name required (deg11, contractive-toeplitz, blocked-extension)");
  const ExampleName name = parse_example_name(c.inputs[0]);
  const auto emit = [&](const std::string& title, const SweepResult& s) {
    r.section(title);
    int k = 0;
    for (const SweepPoint& p : s.points) {
      std::ostringstream line;
      for (const auto& [ij, v] : p.params) line << 'u' << level_name(ij.first, ij.second) << '=' << format_complex(v) << ' ';
      line << "closed_form=" << format_real(p.closed_form) << " closed_form_admissible=" << p.closed_form_admissible
           << " algorithm_admissible=" << p.algorithmic_admissible;
      r.value("point " + std::to_string(k++), line.str());
    }
    r.value("points", std::to_string(s.points.size()));
    r.value("disagreements", std::to_string(s.disagreements()));
    r.value("skipped_in_band", std::to_string(s.skipped_band));
  };
  const SweepResult fixed = fixed_sweep(name);
  const SweepResult random = run_sweep(name, c.points);
  emit(to_string(name) + " fixed", fixed);
  emit(to_string(name) + " random", random);
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.tol && !(*config.tol > 0.0)) throw InvalidArgument("--tol must be positive");
    if (config.grid && *config.grid < 4) throw InvalidArgument("--grid must be at least 4");
    if (config.level && (config.level->first < 0 || config.level->second < 0))
      throw InvalidArgument("--level must be nonnegative");
    Report r(config.format);
    int code = kOk;
    if (config.command == "synth")
      code = cmd_synth(config, r);
    else if (config.command == "analyze")
      code = cmd_analyze(config, r);
    else if (config.command == "factor")
      code = cmd_factor(config, r);
    else if (config.command == "match")
      code = cmd_match(config, r);
    else if (config.command == "example")
      code = cmd_example(config, r);
    else
      throw InvalidArgument("unknown command '" + config.command + "'");
    out << r.str();
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const MissingMoment& e) {
    err << "MissingMoment: " << e.what() << '\n';
    return kInputError;
  } catch (const NotPositiveDefinite& e) {
    err << "NotPositiveDefinite: " << e.what() << '\n';
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bicircle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate orthogonal polynomials on the bicircle"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<int> level;
  std::string format = "text";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--level", level, "Level N M")->expected(2);
    sub->add_option("--grid", config.grid, "Quadrature grid per axis");
    sub->add_option("--tol", config.tol, "Tolerance");
    sub->add_option("--out", config.out, "Write the data artifact to PATH");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "struct"}));
  };
  CLI::App* synth = app.add_subcommand("synth", "Parameters to moments, coefficients and polynomials");
  synth->add_option("params", config.inputs, "Parameter file")->required()->expected(1);
  CLI::App* analyze = app.add_subcommand("analyze", "Moments to parameters and level norms");
  analyze->add_option("moments", config.inputs, "Moment file")->required()->expected(1);
  CLI::App* factor = app.add_subcommand("factor", "Two-variable Fejer-Riesz factorization");
  factor->add_option("trigpoly", config.inputs, "Trig polynomial file")->required()->expected(1);
  CLI::App* match = app.add_subcommand("match", "Moments of 1/|p|^2 against a moment file");
  match->add_option("files", config.inputs, "Moment file and polynomial file")->required()->expected(2);
  CLI::App* example = app.add_subcommand("example", "Closed-form examples against the algorithm");
  example->add_option("name", config.inputs, "deg11 | contractive-toeplitz | blocked-extension")
      ->required()
      ->expected(1);
  example->add_option("--points", config.points, "Random sweep size")->check(CLI::PositiveNumber);
  for (CLI::App* sub : {synth, analyze, factor, match, example}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (level.size() == 2) config.level = std::make_pair(level[0], level[1]);
  config.format = format == "struct" ? Format::structured : Format::text;
  return run(config, out, err);
}

}  // namespace bicircle::cli
