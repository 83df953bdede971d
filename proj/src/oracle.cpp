#include "hardy/oracle.hpp"

#include "hardy/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <optional>

namespace hardy {

namespace {

void require_dimension(int n)
{
  if (n < 1) { throw Error(ErrorCode::invalid_argument, "truncation dimension must be positive"); }
}

/// Truncated Cauchy product; only the first n coefficients are kept, which are exact.
Eigen::VectorXcd series_mul(Eigen::VectorXcd const &x, Eigen::VectorXcd const &y, int n)
{
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == Complex(0)) { continue; }
    for (int j = 0; i + j < n; ++j) { r[i + j] += x[i] * y[j]; }
  }
  return r;
}

} // namespace

Eigen::VectorXcd taylor_coeffs(Moebius const &m, int n)
{
  require_dimension(n);
  Complex const c = m.c(), d = m.d();
  if (d == Complex(0) || std::abs(c) >= std::abs(d)) {
    throw Error(ErrorCode::pole, "pole of the map lies in the closed unit disk");
  }
  // (az + b) / d * sum (-c/d)^k z^k
  Complex const ratio = -c / d;
  Eigen::VectorXcd out(n);
  Complex power = 1.0 / d;
  Complex previous = 0;
  for (int k = 0; k < n; ++k) {
    out[k] = m.b() * power + m.a() * previous;
    previous = power;
    power *= ratio;
  }
  return out;
}

TruncatedOperator composition_matrix(Moebius const &m, int n)
{
  Eigen::VectorXcd const series = taylor_coeffs(m, n);
  TruncatedOperator out(n, n);
  Eigen::VectorXcd column = Eigen::VectorXcd::Zero(n);
  column[0] = 1;
  for (int j = 0; j < n; ++j) {
    out.col(j) = column;
    if (j + 1 < n) { column = series_mul(column, series, n); }
  }
  return out;
}

TruncatedOperator toeplitz_matrix(TrigPolynomial const &w, int n)
{
  require_dimension(n);
  TruncatedOperator out = TruncatedOperator::Zero(n, n);
  for (auto const &[k, c] : w.coefficients()) {
    for (int j = 0; j < n; ++j) {
      int const i = j + k;
      if (i >= 0 && i < n) { out(i, j) = c; }
    }
  }
  return out;
}

namespace {

/// Evaluates an expression tree, building each composition matrix at most once.
class Truncation
{
public:
  Truncation(Moebius const &phi, int n)
    : phi_(phi)
    , n_(n)
  {
  }

  TruncatedOperator operator()(Expr const &e)
  {
    switch (e.kind) {
    case Expr::Kind::identity: return TruncatedOperator::Identity(n_, n_);
    case Expr::Kind::toeplitz: return toeplitz_matrix(e.symbol, n_);
    case Expr::Kind::cphi:
      if (!cphi_) { cphi_ = composition_matrix(phi_, n_); }
      return *cphi_;
    case Expr::Kind::csigma:
      if (!csigma_) { csigma_ = composition_matrix(krein_adjoint(phi_), n_); }
      return *csigma_;
    case Expr::Kind::compact: return TruncatedOperator::Zero(n_, n_);
    case Expr::Kind::adjoint: return (*this)(e.args.front()).adjoint();
    case Expr::Kind::scalar: return e.coefficient * (*this)(e.args.front());
    case Expr::Kind::sum: {
      TruncatedOperator acc = TruncatedOperator::Zero(n_, n_);
      for (auto const &term : e.args) { acc += (*this)(term); }
      return acc;
    }
    case Expr::Kind::product: {
      TruncatedOperator acc = (*this)(e.args.front());
      for (std::size_t i = 1; i < e.args.size(); ++i) { acc = acc * (*this)(e.args[i]); }
      return acc;
    }
    }
    throw Error(ErrorCode::invalid_argument, "unknown expression node");
  }

private:
  Moebius phi_;
  int n_;
  std::optional<TruncatedOperator> cphi_, csigma_;
};

} // namespace

TruncatedOperator truncate(Expr const &e, Moebius const &phi, int n)
{
  require_dimension(n);
  if (!e.contains(Expr::Kind::product)) { return Truncation(phi, n)(e); }
  return Truncation(phi, 2 * n)(e).topLeftCorner(n, n);
}

std::vector<double> vanishing_sequence(Expr const &e, Moebius const &phi, int n, int window)
{
  if (window < 1 || 2 * window > n) {
    throw Error(ErrorCode::window_too_large, "window must satisfy 1 <= window <= N/2");
  }
  TruncatedOperator const m = truncate(e, phi, n);
  std::vector<double> norms(window);
  for (int j = 0; j < window; ++j) { norms[j] = m.col(j).norm(); }
  return norms;
}

std::vector<double> compression_eigs(Expr const &e, Moebius const &phi, int n, Tolerances const &tol)
{
  TruncatedOperator const m = truncate(e, phi, n);
  double const scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol.self_adjoint * scale) {
    throw Error(ErrorCode::not_self_adjoint, "compression is not self-adjoint");
  }
  TruncatedOperator const hermitian = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<TruncatedOperator> solver(hermitian, Eigen::EigenvaluesOnly);
  Eigen::VectorXd const values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

double fill_distance(std::vector<double> const &predicted, std::vector<double> const &eigs)
{
  if (predicted.empty() || eigs.empty()) { throw Error(ErrorCode::empty_input, "fill_distance needs nonempty inputs"); }
  std::vector<double> sorted = eigs;
  std::sort(sorted.begin(), sorted.end());
  double worst = 0;
  for (double p : predicted) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    double d = INFINITY;
    if (it != sorted.end()) { d = std::min(d, *it - p); }
    if (it != sorted.begin()) { d = std::min(d, p - *std::prev(it)); }
    worst = std::max(worst, d);
  }
  return worst;
}

} // namespace hardy
