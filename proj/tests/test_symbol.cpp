#include "hardy/error.hpp"
#include "hardy/rewriter.hpp"
#include "hardy/symbol.hpp"
#include "hardy/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace hardy;
using namespace std::complex_literals;

namespace {

Contact const phi0 = Contact::from_points(1, -1, 2);

double mat_distance(Mat2 const &a, Mat2 const &b) { return (a - b).cwiseAbs().maxCoeff(); }

SymbolElement sym(char const *text) { return normalize(parse(text), phi0); }

/// Largest singular value via the eigenvalues of M^H M.
double singular_oracle(Mat2 const &m)
{
  Eigen::Matrix2cd const g = m.adjoint() * m;
  double const tr = g.trace().real();
  double const det = std::real(g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0));
  return std::sqrt(tr / 2 + std::sqrt(std::max(0.0, tr * tr / 4 - det)));
}

} // namespace

TEST_SUITE("functions")
{
  TEST_CASE("trig polynomial arithmetic")
  {
    auto const z = TrigPolynomial::monomial(1);
    auto const zbar = TrigPolynomial::monomial(-1);
    CHECK((z * zbar) == TrigPolynomial::constant(1));
    CHECK(z.conj() == zbar);
    CHECK((z - z).is_zero());
    auto const w = TrigPolynomial::monomial(2, 3. + 1i) + TrigPolynomial::constant(-1i);
    for (double theta : {0.0, 0.7, 2.5}) {
      Complex const u = std::polar(1.0, theta);
      CHECK(std::abs(w.at_angle(theta) - ((3. + 1i) * u * u - 1i)) < 1e-14);
      CHECK(std::abs(w.conj().at_angle(theta) - std::conj(w.at_angle(theta))) < 1e-14);
    }
    CHECK(w.min_degree() == 0);
    CHECK(w.max_degree() == 2);
  }

  TEST_CASE("half polynomials close under products")
  {
    auto const r = HalfPolynomial::sqrt_t();
    CHECK((r * r) == HalfPolynomial::t_power(1));
    CHECK_THROWS_AS(HalfPolynomial({1}, {}), Error);
    auto const a = HalfPolynomial::t_power(2, 2) + HalfPolynomial::sqrt_t(1i);
    auto const b = HalfPolynomial::t_power(1, -1) + HalfPolynomial::sqrt_t(3);
    for (double t : {0.0, 0.3, 1.7}) {
      CHECK(std::abs((a * b)(t) - a(t) * b(t)) < 1e-13);
      CHECK(std::abs((a + b)(t) - (a(t) + b(t))) < 1e-14);
      CHECK(std::abs(a.conj()(t) - std::conj(a(t))) < 1e-14);
    }
    CHECK(distance(a, a) == 0);
  }
}

TEST_SUITE("symbol")
{
  TEST_CASE("embeddings")
  {
    CHECK(embed_toeplitz(TrigPolynomial::constant(1), phi0) == identity_element(phi0));
    for (double t : {0.0, 0.5, 2.0}) {
      Mat2 expected;
      expected << 0, std::sqrt(t), 0, 0;
      CHECK(mat_distance(phi_lambda(embed_cphi(phi0), lambda::Interval{t}), expected) < 1e-15);
    }
    auto const cs = embed_csigma(phi0);
    CHECK(std::abs(cs.k(1.0) - 0.5) < 1e-15);
    CHECK(std::abs(cs.k(2.0) - std::sqrt(2.0) / 2) < 1e-15);
  }

  TEST_CASE("linear structure")
  {
    auto const c = embed_cphi(phi0);
    CHECK(c + zero_element(phi0) == c);
    auto const sum = c + adjoint(c);
    CHECK(sum.h == HalfPolynomial::sqrt_t());
    CHECK(sum.k == HalfPolynomial::sqrt_t());
    CHECK(scalar_mul(2, embed_toeplitz(TrigPolynomial::monomial(1), phi0)).w == TrigPolynomial::monomial(1, 2));
  }

  TEST_CASE("product table")
  {
    auto const c = embed_cphi(phi0);
    CHECK((c * c).is_zero());
    auto const xx = adjoint(c) * c;
    CHECK(xx.f == HalfPolynomial::t_power(1));
    CHECK(xx.g.is_zero());
    auto const tc = embed_toeplitz(TrigPolynomial::monomial(1), phi0) * c;
    CHECK(tc.h == HalfPolynomial::sqrt_t());
    auto const ct = c * embed_toeplitz(TrigPolynomial::monomial(1), phi0);
    CHECK(ct.h == HalfPolynomial::sqrt_t(-1));
  }

  TEST_CASE("adjoint")
  {
    auto const ac = adjoint(embed_cphi(phi0));
    CHECK(ac.k == HalfPolynomial::sqrt_t());
    CHECK(ac.h.is_zero());
    CHECK(adjoint(embed_toeplitz(TrigPolynomial::monomial(1), phi0)).w == TrigPolynomial::monomial(-1));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      auto const b = random_element(rng, phi0);
      CHECK(adjoint(adjoint(b)) == b);
    }
  }

  TEST_CASE("mismatched contact data is rejected")
  {
    auto const other = Contact::from_points(1, 1i, 2);
    CHECK_THROWS_AS(embed_cphi(phi0) + embed_cphi(other), Error);
    CHECK_THROWS_AS(embed_cphi(phi0) * embed_cphi(other), Error);
  }

  TEST_CASE("phi_lambda at the three kinds of points")
  {
    auto const id = identity_element(phi0);
    for (LambdaPoint p : {LambdaPoint{lambda::Circle{1i}}, LambdaPoint{lambda::TriplePoint{}},
                          LambdaPoint{lambda::Interval{1.3}}}) {
      CHECK(mat_distance(phi_lambda(id, p), Mat2::Identity()) < 1e-15);
    }
    auto const w = TrigPolynomial::monomial(1, 2) + TrigPolynomial::constant(1i);
    Mat2 expected = Mat2::Zero();
    expected(0, 0) = w(1.0);
    expected(1, 1) = w(-1.0);
    CHECK(mat_distance(phi_lambda(embed_toeplitz(w, phi0), lambda::TriplePoint{}), expected) < 1e-15);
    CHECK_THROWS_AS(phi_lambda(id, lambda::Interval{2.5}), Error);
  }

  TEST_CASE("homomorphism against direct matrix products")
  {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      auto const b1 = random_element(rng, phi0);
      auto const b2 = random_element(rng, phi0);
      auto const lam = random_lambda(rng, phi0);
      Mat2 const m1 = phi_lambda(b1, lam);
      Mat2 const m2 = phi_lambda(b2, lam);
      double const scale = 1 + m1.norm() * m2.norm();
      CHECK(mat_distance(phi_lambda(b1 * b2, lam), m1 * m2) < 1e-12 * scale);
      CHECK(mat_distance(phi_lambda(b1 + b2, lam), m1 + m2) < 1e-12 * scale);
      CHECK(mat_distance(phi_lambda(adjoint(b1), lam), m1.adjoint()) < 1e-12 * scale);
    }
  }

  TEST_CASE("spectrum of C + C' fills [-sqrt 2, sqrt 2]")
  {
    auto const pts = essential_spectrum(sym("C + C'"), 1000);
    double lo = 1e9, hi = -1e9, imag = 0;
    for (auto const &p : pts) {
      lo = std::min(lo, p.z.real());
      hi = std::max(hi, p.z.real());
      imag = std::max(imag, std::abs(p.z.imag()));
    }
    CHECK(imag < 1e-10);
    CHECK(std::abs(lo + std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(hi - std::sqrt(2.0)) < 1e-9);
  }

  TEST_CASE("spectrum of C alone is {0}")
  {
    for (auto const &p : essential_spectrum(embed_cphi(phi0), 50)) { CHECK(std::abs(p.z) < 1e-15); }
  }

  TEST_CASE("spectrum grids and ordering")
  {
    auto const theta = circle_grid(phi0, 16);
    CHECK(std::is_sorted(theta.begin(), theta.end()));
    CHECK(std::find(theta.begin(), theta.end(), 0.0) != theta.end());
    auto const t = interval_grid(2, 11);
    CHECK(t.front() == 0);
    CHECK(t.back() == 2);
    auto const pts = essential_spectrum(sym("T{z} + C"), 11);
    CHECK(pts.front().source == SpectrumSource::circle);
    CHECK(pts.back().source == SpectrumSource::interval_minus);
  }

  TEST_CASE("spectrum symmetry and self-adjoint reality")
  {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      auto const b = random_element(rng, phi0);
      auto const p1 = essential_spectrum(b, 40);
      auto const p2 = essential_spectrum(adjoint(b), 40);
      REQUIRE(p1.size() == p2.size());
      // the same grid produces conjugate eigenvalue pairs; compare as unordered pairs per grid point
      for (std::size_t j = 0; j < p1.size(); ++j) {
        if (p1[j].source == SpectrumSource::circle) {
          CHECK(std::abs(p2[j].z - std::conj(p1[j].z)) < 1e-12);
        } else if (p1[j].source == SpectrumSource::interval_plus) {
          Complex const a = p1[j].z, b2 = p1[j + 1].z, c = std::conj(p2[j].z), d = std::conj(p2[j + 1].z);
          double const err = std::min(std::abs(a - c) + std::abs(b2 - d), std::abs(a - d) + std::abs(b2 - c));
          CHECK(err < 1e-9 * (1 + std::abs(a) + std::abs(b2)));
        }
      }
      auto const sa = b + adjoint(b);
      for (auto const &p : essential_spectrum(sa, 40)) { CHECK(std::abs(p.z.imag()) < 1e-10 * (1 + std::abs(p.z))); }
    }
  }

  TEST_CASE("essential norm")
  {
    auto const est = essential_norm(sym("T{z} + C + C'"), 1000);
    CHECK(std::abs(est.value - std::sqrt(3.0)) < 1e-6);
    CHECK(est.grid_spacing > 0);
    CHECK(std::abs(essential_norm(embed_cphi(phi0), 100).value - std::sqrt(2.0)) < 1e-12);
    auto const w = TrigPolynomial::monomial(1, 2) + TrigPolynomial::constant(1);
    CHECK(std::abs(essential_norm(embed_toeplitz(w, phi0), 1000).value - 3) < 1e-9);
  }

  TEST_CASE("mat2_norm agrees with an independent singular value formula")
  {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n;
    for (int i = 0; i < 200; ++i) {
      Mat2 m;
      m << Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng));
      CHECK(std::abs(mat2_norm(m) - singular_oracle(m)) < 1e-12 * (1 + singular_oracle(m)));
    }
  }

  TEST_CASE("C*-identity at symbol level")
  {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
      auto const b = random_element(rng, phi0);
      double const nb = essential_norm(b, 400).value;
      double const nbb = essential_norm(adjoint(b) * b, 400).value;
      CHECK(std::abs(nbb - nb * nb) < 1e-6 * (1 + nb * nb));
    }
  }

  TEST_CASE("Fredholm tests")
  {
    CHECK(is_fredholm(identity_element(phi0) + embed_cphi(phi0), 200));
    CHECK(is_fredholm(embed_toeplitz(TrigPolynomial::monomial(1), phi0), 200));
    CHECK_FALSE(is_fredholm(embed_cphi(phi0), 200));
  }

  TEST_CASE("center and Gelfand transform")
  {
    auto const a = sym("C*C' + C'*C");
    CHECK(is_central(a));
    for (double t : {0.25, 1.0, 2.0}) { CHECK(std::abs(gelfand_value(a, lambda::Interval{t}) - t) < 1e-15); }
    CHECK_FALSE(is_central(embed_cphi(phi0)));
    CHECK_THROWS_AS(gelfand_value(embed_cphi(phi0), lambda::TriplePoint{}), Error);

    auto const w = TrigPolynomial::monomial(2) + TrigPolynomial::monomial(1, 0.5i) + TrigPolynomial::monomial(-1, -0.5i);
    auto const tw = embed_toeplitz(w, phi0);
    CHECK(is_central(tw));
    CHECK(std::abs(gelfand_value(tw, lambda::Circle{1i}) - w(1i)) < 1e-15);
    CHECK(std::abs(gelfand_value(tw, lambda::Interval{1.0}) - w(1.0)) < 1e-15);
  }
}
