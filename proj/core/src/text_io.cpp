#include "bicircle/text_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

struct Entry {
  int i;
  int j;
  Complex value;
  int line;
};

struct Parsed {
  std::optional<std::pair<int, int>> window;
  std::vector<Entry> entries;
  int extent_i = 0;
  int extent_j = 0;
};

std::string strip_comment(const std::string& s) {
  const auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

Parsed parse(std::istream& in, const std::string& kind) {
  Parsed p;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(strip_comment(raw));
    std::string head;
    if (!(ls >> head)) continue;
    if (first && head == kind) {
      first = false;
      int a = 0;
      int b = 0;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(line, "expected '" + kind + " N M'");
      if (a < 0 || b < 0) throw ParseError(line, "negative window");
      p.window = std::make_pair(a, b);
      continue;
    }
    first = false;
    std::istringstream full(strip_comment(raw));
    Entry e{};
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(full >> e.i >> e.j >> re)) throw ParseError(line, "expected 'i j re [im]'");
    if (!(full >> im)) {
      if (!full.eof()) throw ParseError(line, "malformed imaginary part");
      im = 0.0;
    } else if (full >> extra) {
      throw ParseError(line, "trailing text '" + extra + "'");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(line, "non-finite value");
    e.value = Complex(re, im);
    e.line = line;
    p.extent_i = std::max(p.extent_i, std::abs(e.i));
    p.extent_j = std::max(p.extent_j, std::abs(e.j));
    p.entries.push_back(e);
  }
  if (in.bad()) throw Error("read error");
  return p;
}

std::pair<int, int> window_of(const Parsed& p) {
  if (!p.window) return {p.extent_i, p.extent_j};
  for (const Entry& e : p.entries)
    if (std::abs(e.i) > p.window->first || std::abs(e.j) > p.window->second)
      throw ParseError(e.line, "index outside the declared window");
  return *p.window;
}

bool half_plane(int i, int j) { return j > 0 || (j == 0 && i >= 0); }

}  // namespace

std::string format_real(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << (x == 0.0 ? 0.0 : x);
  return s.str();
}

std::string format_complex(Complex c) { return format_real(c.real()) + " " + format_real(c.imag()); }

MomentTable read_moments(std::istream& in) {
  const Parsed p = parse(in, "moments");
  const auto [n, m] = window_of(p);
  MomentTable t(n, m);
  for (const Entry& e : p.entries) {
    if (e.i == 0 && e.j == 0 && std::abs(e.value.imag()) > 1e-12 * std::max(1.0, std::abs(e.value)))
      throw ParseError(e.line, "c(0,0) must be real");
    if (t.has(e.i, e.j)) {
      const Complex prev = t.at(e.i, e.j);
      if (std::abs(prev - e.value) > 1e-12 * std::max(1.0, std::abs(prev)))
        throw ParseError(e.line, "conflicts with an earlier entry or its conjugate");
    }
    t.set(e.i, e.j, e.value);
  }
  return t;
}

ParameterGrid read_params(std::istream& in) {
  const Parsed p = parse(in, "params");
  const auto [n, m] = window_of(p);
  ParameterGrid g(n, m);
  for (const Entry& e : p.entries) {
    if (e.i == 0 && e.j == 0 && e.value.imag() != 0.0) throw ParseError(e.line, "u(0,0) must be real");
    try {
      g.set(e.i, e.j, e.value);
    } catch (const Error& err) {
      throw ParseError(e.line, err.what());
    }
  }
  return g;
}

BivariatePolynomial read_poly(std::istream& in) {
  const Parsed p = parse(in, "poly");
  const auto [n, m] = window_of(p);
  BivariatePolynomial q(n, m);
  for (const Entry& e : p.entries) {
    if (e.i < 0 || e.j < 0) throw ParseError(e.line, "negative exponent");
    q.set_coeff(e.i, e.j, e.value);
  }
  return q;
}

TrigPolynomial read_trigpoly(std::istream& in) {
  const Parsed p = parse(in, "trigpoly");
  const auto [n, m] = window_of(p);
  TrigPolynomial f(n, m);
  for (const Entry& e : p.entries) {
    if (e.i == 0 && e.j == 0 && e.value.imag() != 0.0) throw ParseError(e.line, "f(0,0) must be real");
    f.set(e.i, e.j, e.value);
  }
  return f;
}

void write_moments(std::ostream& out, const MomentTable& moments, int n, int m) {
  out << "moments " << n << ' ' << m << '\n';
  for (int j = 0; j <= m; ++j)
    for (int i = -n; i <= n; ++i)
      if (half_plane(i, j)) out << i << ' ' << j << ' ' << format_complex(moments.at(i, j)) << '\n';
}

void write_params(std::ostream& out, const ParameterGrid& params) {
  out << "params " << params.n_max() << ' ' << params.m_max() << '\n';
  for (const auto& [i, j] : params.free_indices())
    out << i << ' ' << j << ' ' << format_complex(params.get(i, j)) << '\n';
}

void write_poly(std::ostream& out, const BivariatePolynomial& p) {
  out << "poly " << p.deg_z() << ' ' << p.deg_w() << '\n';
  for (int a = 0; a <= p.deg_z(); ++a)
    for (int b = 0; b <= p.deg_w(); ++b) out << a << ' ' << b << ' ' << format_complex(p.coeff(a, b)) << '\n';
}

void write_trigpoly(std::ostream& out, const TrigPolynomial& f) {
  out << "trigpoly " << f.n() << ' ' << f.m() << '\n';
  for (int l = 0; l <= f.m(); ++l)
    for (int k = -f.n(); k <= f.n(); ++k)
      if (half_plane(k, l)) out << k << ' ' << l << ' ' << format_complex(f.coeff(k, l)) << '\n';
}

void write_matrix(std::ostream& out, const std::string& name, const ComplexMatrix& a) {
  out << name << ' ' << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out << "  " << format_complex(a(r, c));
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw Error("cannot write '" + path + "'");
}

}  // namespace bicircle
