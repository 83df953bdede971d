#pragma once

// Finite compressions of Toeplitz and composition operators on the monomial basis
// of H^2: column j holds the coefficients of the operator applied to z^j.

#include "hardy/expression.hpp"
#include "hardy/moebius.hpp"

#include <Eigen/Core>

#include <vector>

namespace hardy {

using TruncatedOperator = Eigen::MatrixXcd;

/// First n Taylor coefficients at 0 of a map whose pole lies outside the closed disk.
Eigen::VectorXcd taylor_coeffs(Moebius const &m, int n);

/// Columns are the coefficients of m(z)^j, j = 0..n-1.
TruncatedOperator composition_matrix(Moebius const &m, int n);

/// Entry (i, j) is the Fourier coefficient of w at i - j.
TruncatedOperator toeplitz_matrix(TrigPolynomial const &w, int n);

/// Compression of an expression: adjoint = conjugate transpose, `S` = C_sigma for the
/// Krein adjoint of `phi`, `K` = 0. Products are formed at size 2n and then cut to n.
TruncatedOperator truncate(Expr const &e, Moebius const &phi, int n);

/// ||M z^j|| for j < window; tends to zero when the expression is compact.
std::vector<double> vanishing_sequence(Expr const &e, Moebius const &phi, int n, int window);

/// Ascending eigenvalues of the symmetrized compression; throws not_self_adjoint
/// when the compression is not hermitian within tolerance.
std::vector<double> compression_eigs(Expr const &e, Moebius const &phi, int n,
                                     Tolerances const &tol = default_tolerances);

/// max over predicted points of the distance to the nearest computed eigenvalue.
double fill_distance(std::vector<double> const &predicted, std::vector<double> const &eigs);

} // namespace hardy
