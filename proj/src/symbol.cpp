#include "hardy/symbol.hpp"

#include "hardy/error.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardy {

namespace {

void require_same(SymbolElement const &a, SymbolElement const &b)
{
  if (!a.contact.same_algebra(b.contact)) {
    throw Error(ErrorCode::contact_mismatch, "operands belong to different algebras (contact data differ)");
  }
}

double normalized_angle(Complex z)
{
  double a = std::arg(z);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

void require_resolution(int resolution)
{
  if (resolution < 2) { throw Error(ErrorCode::invalid_argument, "resolution must be at least 2"); }
}

Mat2 interval_matrix(Complex f, Complex g, Complex h, Complex k, Complex w_zeta, Complex w_eta)
{
  Mat2 m;
  m << w_zeta + g, h, k, w_eta + f;
  return m;
}

constexpr int refine_rounds = 3;
constexpr int refine_points = 21;

/// Three rounds of local grid refinement of argmax/argmin of `value` around x0 in [lo, hi].
template <typename F, typename Better>
std::pair<double, double> refine(F const &value, Better const &better, double x0, double best, double h, double lo,
                                 double hi)
{
  double x = x0;
  for (int round = 0; round < refine_rounds; ++round) {
    double const a = std::max(lo, x - h), b = std::min(hi, x + h);
    double const step = (b - a) / (refine_points - 1);
    for (int i = 0; i < refine_points; ++i) {
      double const xi = a + i * step;
      double const v = value(xi);
      if (better(v, best)) {
        best = v;
        x = xi;
      }
    }
    h = step;
  }
  return {best, h};
}

/// Local spacing of a sorted grid around index i.
double local_spacing(std::vector<double> const &grid, std::size_t i)
{
  double h = 0;
  if (i > 0) { h = std::max(h, grid[i] - grid[i - 1]); }
  if (i + 1 < grid.size()) { h = std::max(h, grid[i + 1] - grid[i]); }
  return h;
}

} // namespace

char const *to_string(SpectrumSource source)
{
  switch (source) {
  case SpectrumSource::circle: return "circle";
  case SpectrumSource::interval_plus: return "interval+";
  case SpectrumSource::interval_minus: return "interval-";
  }
  return "?";
}

SymbolElement zero_element(Contact const &contact) { return SymbolElement{{}, {}, {}, {}, {}, contact}; }

SymbolElement identity_element(Contact const &contact)
{
  return embed_toeplitz(TrigPolynomial::constant(1), contact);
}

SymbolElement embed_toeplitz(TrigPolynomial w, Contact const &contact)
{
  auto b = zero_element(contact);
  b.w = std::move(w);
  return b;
}

SymbolElement embed_cphi(Contact const &contact)
{
  auto b = zero_element(contact);
  b.h = HalfPolynomial::sqrt_t();
  return b;
}

SymbolElement embed_csigma(Contact const &contact)
{
  auto b = zero_element(contact);
  b.k = HalfPolynomial::sqrt_t(1.0 / contact.s);
  return b;
}

SymbolElement add(SymbolElement const &a, SymbolElement const &b)
{
  require_same(a, b);
  return {a.w + b.w, a.f + b.f, a.g + b.g, a.h + b.h, a.k + b.k, a.contact};
}

SymbolElement scalar_mul(Complex c, SymbolElement const &b)
{
  return {b.w * c, b.f * c, b.g * c, b.h * c, b.k * c, b.contact};
}

SymbolElement multiply(SymbolElement const &a, SymbolElement const &b)
{
  require_same(a, b);
  Complex const zeta = a.contact.zeta, eta = a.contact.eta;
  Complex const a_z = a.w(zeta), a_e = a.w(eta), b_z = b.w(zeta), b_e = b.w(eta);
  SymbolElement r{a.w * b.w, {}, {}, {}, {}, a.contact};
  r.f = a_e * b.f + a.f * b_e + a.f * b.f + a.k * b.h;
  r.g = a_z * b.g + a.g * b_z + a.g * b.g + a.h * b.k;
  r.h = a_z * b.h + a.h * b_e + a.g * b.h + a.h * b.f;
  r.k = a_e * b.k + a.k * b_z + a.k * b.g + a.f * b.k;
  return r;
}

SymbolElement adjoint(SymbolElement const &b) { return {b.w.conj(), b.f.conj(), b.g.conj(), b.k.conj(), b.h.conj(), b.contact}; }

Mat2 phi_lambda(SymbolElement const &b, LambdaPoint const &point)
{
  Complex const w_z = b.w(b.contact.zeta), w_e = b.w(b.contact.eta);
  if (auto const *c = std::get_if<lambda::Circle>(&point)) {
    return b.w(c->point) * Mat2::Identity();
  }
  if (std::holds_alternative<lambda::TriplePoint>(point)) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = w_z;
    m(1, 1) = w_e;
    return m;
  }
  double const t = std::get<lambda::Interval>(point).t;
  if (!(t >= 0) || t > b.s() * (1 + 1e-12)) {
    throw Error(ErrorCode::invalid_argument, "interval point outside [0, s]");
  }
  return interval_matrix(b.f(t), b.g(t), b.h(t), b.k(t), w_z, w_e);
}

std::vector<double> circle_grid(Contact const &contact, int resolution)
{
  require_resolution(resolution);
  std::vector<double> theta;
  theta.reserve(resolution + 2);
  for (int j = 0; j < resolution; ++j) { theta.push_back(2 * std::numbers::pi * j / resolution); }
  theta.push_back(normalized_angle(contact.zeta));
  theta.push_back(normalized_angle(contact.eta));
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  return theta;
}

std::vector<double> interval_grid(double s, int resolution)
{
  require_resolution(resolution);
  std::vector<double> t(resolution);
  for (int j = 0; j < resolution; ++j) {
    double const u = static_cast<double>(j) / (resolution - 1);
    t[j] = s * u * u;
  }
  t.back() = s;
  return t;
}

SampledSymbol sample(SymbolElement const &b, int resolution)
{
  SampledSymbol table;
  table.theta = circle_grid(b.contact, resolution);
  double const zeta_angle = normalized_angle(b.contact.zeta), eta_angle = normalized_angle(b.contact.eta);
  table.w.reserve(table.theta.size());
  for (double th : table.theta) {
    // contact points are evaluated at the exact stored values
    Complex const z = th == zeta_angle ? b.contact.zeta : th == eta_angle ? b.contact.eta : std::polar(1.0, th);
    table.w.push_back(b.w(z));
  }
  table.t = interval_grid(b.s(), resolution);
  for (double t : table.t) {
    table.f.push_back(b.f(t));
    table.g.push_back(b.g(t));
    table.h.push_back(b.h(t));
    table.k.push_back(b.k(t));
  }
  table.w_zeta = b.w(b.contact.zeta);
  table.w_eta = b.w(b.contact.eta);
  return table;
}

std::pair<Complex, Complex> interval_eigenvalues(Complex f, Complex g, Complex h, Complex k, Complex w_zeta,
                                                 Complex w_eta)
{
  Complex const F = f + w_eta, G = g + w_zeta;
  Complex const root = std::sqrt((F - G) * (F - G) + 4.0 * h * k);
  return {0.5 * (F + G + root), 0.5 * (F + G - root)};
}

std::vector<SpectrumPoint> essential_spectrum(SampledSymbol const &table)
{
  std::vector<SpectrumPoint> out;
  out.reserve(table.w.size() + 2 * table.t.size());
  for (auto const &w : table.w) { out.push_back({w, SpectrumSource::circle}); }
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    auto const [plus, minus] =
      interval_eigenvalues(table.f[i], table.g[i], table.h[i], table.k[i], table.w_zeta, table.w_eta);
    out.push_back({plus, SpectrumSource::interval_plus});
    out.push_back({minus, SpectrumSource::interval_minus});
  }
  return out;
}

std::vector<SpectrumPoint> essential_spectrum(SymbolElement const &b, int resolution)
{
  return essential_spectrum(sample(b, resolution));
}

double mat2_norm(Mat2 const &m)
{
  double const fro = m.squaredNorm();
  double const det = std::abs(m.determinant());
  double const disc = std::max(0.0, fro * fro - 4 * det * det);
  return std::sqrt(0.5 * (fro + std::sqrt(disc)));
}

NormEstimate essential_norm(SampledSymbol const &table)
{
  NormEstimate best{0, 0};
  for (std::size_t i = 0; i < table.w.size(); ++i) {
    double const v = std::abs(table.w[i]);
    if (v > best.value) { best = {v, local_spacing(table.theta, i)}; }
  }
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    double const v = mat2_norm(interval_matrix(table.f[i], table.g[i], table.h[i], table.k[i], table.w_zeta, table.w_eta));
    if (v > best.value) { best = {v, local_spacing(table.t, i)}; }
  }
  return best;
}

NormEstimate essential_norm(SymbolElement const &b, int resolution)
{
  auto const table = sample(b, resolution);
  Complex const w_z = table.w_zeta, w_e = table.w_eta;
  auto const circle_value = [&](double th) { return std::abs(b.w.at_angle(th)); };
  auto const interval_value = [&](double t) {
    return mat2_norm(interval_matrix(b.f(t), b.g(t), b.h(t), b.k(t), w_z, w_e));
  };
  auto const greater = [](double x, double y) { return x > y; };

  double best = -1, x0 = 0, h = 0;
  bool on_circle = true;
  for (std::size_t i = 0; i < table.w.size(); ++i) {
    double const v = std::abs(table.w[i]);
    if (v > best) { best = v, x0 = table.theta[i], h = local_spacing(table.theta, i); }
  }
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    double const v = mat2_norm(interval_matrix(table.f[i], table.g[i], table.h[i], table.k[i], w_z, w_e));
    if (v > best) { best = v, x0 = table.t[i], h = local_spacing(table.t, i), on_circle = false; }
  }
  auto const [value, spacing] =
    on_circle ? refine(circle_value, greater, x0, best, h, x0 - h, x0 + h)
              : refine(interval_value, greater, x0, best, h, 0.0, b.s());
  return {value, spacing};
}

bool is_fredholm(SymbolElement const &b, int resolution, Tolerances const &tol)
{
  auto const table = sample(b, resolution);
  Complex const w_z = table.w_zeta, w_e = table.w_eta;
  auto const less = [](double x, double y) { return x < y; };

  double best = INFINITY, x0 = 0, h = 0;
  for (std::size_t i = 0; i < table.w.size(); ++i) {
    double const v = std::abs(table.w[i]);
    if (v < best) { best = v, x0 = table.theta[i], h = local_spacing(table.theta, i); }
  }
  auto const circle_value = [&](double th) { return std::abs(b.w.at_angle(th)); };
  if (refine(circle_value, less, x0, best, h, x0 - h, x0 + h).first <= tol.fredholm) { return false; }

  best = INFINITY;
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    double const v = std::abs(interval_matrix(table.f[i], table.g[i], table.h[i], table.k[i], w_z, w_e).determinant());
    if (v < best) { best = v, x0 = table.t[i], h = local_spacing(table.t, i); }
  }
  auto const det_value = [&](double t) {
    return std::abs(interval_matrix(b.f(t), b.g(t), b.h(t), b.k(t), w_z, w_e).determinant());
  };
  return refine(det_value, less, x0, best, h, 0.0, b.s()).first > tol.fredholm;
}

bool is_central(SymbolElement const &b, Tolerances const &tol)
{
  HalfPolynomial const zero;
  return distance(b.h, zero) <= tol.coefficient && distance(b.k, zero) <= tol.coefficient &&
         distance(b.f, b.g) <= tol.coefficient &&
         std::abs(b.w(b.contact.zeta) - b.w(b.contact.eta)) <= tol.coefficient;
}

Complex gelfand_value(SymbolElement const &b, LambdaPoint const &point, Tolerances const &tol)
{
  if (!is_central(b, tol)) { throw Error(ErrorCode::not_central, "element is not in the center"); }
  if (auto const *c = std::get_if<lambda::Circle>(&point)) { return b.w(c->point); }
  Complex const w_z = b.w(b.contact.zeta);
  if (std::holds_alternative<lambda::TriplePoint>(point)) { return w_z; }
  return w_z + b.f(std::get<lambda::Interval>(point).t);
}

} // namespace hardy
