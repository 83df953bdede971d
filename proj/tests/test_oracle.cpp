#include "hardy/error.hpp"
#include "hardy/expression.hpp"
#include "hardy/oracle.hpp"
#include "hardy/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace hardy;

namespace {

Moebius const phi0 = reference_map();

/// Independent evaluation of the truncated Taylor series.
Complex partial_sum(Eigen::VectorXcd const &c, Complex z)
{
  Complex acc = 0;
  for (Eigen::Index i = c.size(); i-- > 0;) { acc = acc * z + c(i); }
  return acc;
}

} // namespace

TEST_SUITE("oracle")
{
  TEST_CASE("Taylor coefficients")
  {
    auto const id = taylor_coeffs(Moebius::identity(), 4);
    CHECK(id(0) == Complex(0));
    CHECK(id(1) == Complex(1));
    CHECK(id(2) == Complex(0));
    auto const p = taylor_coeffs(phi0, 4);
    CHECK(p(0) == Complex(-0.5));
    CHECK(p(1) == Complex(-0.5));
    CHECK(p(2) == Complex(0));
    auto const sigma = taylor_coeffs(krein_adjoint(phi0), 60);
    CHECK(sigma(1) == Complex(-0.5));
    CHECK(sigma(2) == Complex(0.25));
    CHECK(sigma(3) == Complex(-0.125));
    CHECK(std::abs(partial_sum(sigma, 0.3) - (-0.3 / 2.3)) < 1e-10);
    CHECK_THROWS_AS(taylor_coeffs(Moebius{1, 0, 2, 1}, 4), Error);
  }

  TEST_CASE("basic matrices")
  {
    CHECK(toeplitz_matrix(TrigPolynomial::constant(1), 6).isIdentity());
    auto const shift = toeplitz_matrix(TrigPolynomial::monomial(1), 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) { CHECK(shift(i, j) == Complex(i == j + 1 ? 1 : 0)); }
    }
    auto const half = composition_matrix(Moebius{0.5, 0, 0, 1}, 6);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) { CHECK(half(i, j) == Complex(i == j ? std::ldexp(1.0, -i) : 0)); }
    }
  }

  TEST_CASE("truncation of expressions")
  {
    CHECK(truncate(parse("I"), phi0, 7).isIdentity());
    CHECK(truncate(parse("T{z}'*T{z}"), phi0, 7).isIdentity());
    auto const c = truncate(parse("C"), phi0, 3);
    Eigen::Matrix3cd expected;
    expected << 1, -0.5, 0.25, 0, -0.5, 0.5, 0, 0, 0.25;
    CHECK((c - expected).norm() < 1e-15);
    auto const s = truncate(parse("S"), phi0, 8);
    CHECK((s - composition_matrix(krein_adjoint(phi0), 8)).norm() == 0);
    auto const k = truncate(parse("2*C + K"), phi0, 8);
    CHECK((k - 2 * composition_matrix(phi0, 8)).norm() == 0);
  }

  TEST_CASE("approximate multiplicativity of composition matrices")
  {
    int const n = 64;
    Moebius const psi{0.3, 0.2, 0.1, 1.2};
    Eigen::MatrixXcd const prod = composition_matrix(psi, n) * composition_matrix(phi0, n);
    Eigen::MatrixXcd const direct = composition_matrix(compose(phi0, psi), n);
    CHECK((prod - direct).topLeftCorner(n / 2, n / 2).cwiseAbs().maxCoeff() < 1e-8);
  }

  TEST_CASE("parabolic conjugation of tau_0 by z -> -z")
  {
    Moebius const r{-1, 0, 0, 1};
    auto const tau = compose(phi0, krein_adjoint(phi0));
    auto const conj = compose(r, compose(tau, r));
    Eigen::MatrixXcd const lhs = composition_matrix(conj, 32);
    Eigen::MatrixXcd const rhs = composition_matrix(Moebius::parabolic(1, 2), 32);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("vanishing sequences")
  {
    CHECK_THROWS_AS(vanishing_sequence(parse("C"), phi0, 64, 40), Error);
    auto const seq = vanishing_sequence(parse("T{z}*T{z^-1 + z^2} - T{1 + z^3}"), phi0, 64, 32);
    REQUIRE(seq.size() == 32);
    CHECK(seq[0] > 0.5);
    for (std::size_t i = 1; i < seq.size(); ++i) { CHECK(seq[i] == 0); }
    auto const id = vanishing_sequence(parse("I"), phi0, 16, 8);
    for (double v : id) { CHECK(v == doctest::Approx(1)); }
  }

  TEST_CASE("compression eigenvalues")
  {
    CHECK_THROWS_AS(compression_eigs(parse("C"), phi0, 16), Error);
    auto const eigs = compression_eigs(parse("C + C'"), phi0, 64);
    CHECK(std::is_sorted(eigs.begin(), eigs.end()));
    auto const id = compression_eigs(parse("T{z}'*T{z}"), phi0, 10);
    for (double e : id) { CHECK(e == doctest::Approx(1)); }
  }

  TEST_CASE("fill distance")
  {
    std::vector<double> const pts{0, 0.5, 1, 1.5, 2};
    CHECK(fill_distance(pts, pts) == 0);
    CHECK(fill_distance({0, 1, 2}, {0, 0.5, 1, 1.5, 2, 7}) == 0);
    CHECK(fill_distance({0, 3}, {1}) == 2);
    CHECK_THROWS_AS(fill_distance({}, {1}), Error);
    CHECK_THROWS_AS(fill_distance({1}, {}), Error);
  }
}
