#pragma once

// Linear-fractional self-maps of the unit disk: composition, Krein adjoint,
// boundary contact, classification and parabolic translation numbers.

#include "hardy/config.hpp"
#include "hardy/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <variant>

namespace hardy {

/// z -> (az+b)/(cz+d) with ad - bc != 0. Coefficients are only meaningful up to a
/// common nonzero factor; use maps_equal for comparisons.
template <typename Real> class MoebiusMap
{
public:
  using Scalar = std::complex<Real>;

  MoebiusMap(Scalar a, Scalar b, Scalar c, Scalar d)
    : coeffs_{a, b, c, d}
  {
    Real const scale = norm_sq();
    if (!(scale > 0) || std::abs(a * d - b * c) <= 64 * std::numeric_limits<Real>::epsilon() * scale) {
      throw Error(ErrorCode::degenerate_map, "degenerate linear-fractional map (ad - bc = 0)");
    }
  }

  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  static MoebiusMap rotation(Scalar alpha) { return {alpha, 0, 0, 1}; }

  /// The map conjugate, via (eta+z)/(eta-z), to translation by t in the right half-plane.
  static MoebiusMap parabolic(Scalar eta, Scalar t)
  {
    // [[eta,-eta],[1,1]] * [[1,t],[0,1]] * [[1,eta],[-1,eta]]
    Scalar const one(1);
    return {eta * (one - t) + eta, eta * eta * (one + t) - eta * eta, (one - t) - one, eta * (one + t) + eta};
  }

  Scalar a() const { return coeffs_[0]; }
  Scalar b() const { return coeffs_[1]; }
  Scalar c() const { return coeffs_[2]; }
  Scalar d() const { return coeffs_[3]; }
  std::array<Scalar, 4> const &coefficients() const { return coeffs_; }

  Scalar determinant() const { return a() * d() - b() * c(); }
  Real norm_sq() const
  {
    Real n = 0;
    for (auto const &x : coeffs_) { n += std::norm(x); }
    return n;
  }

  Scalar operator()(Scalar z) const
  {
    Scalar const den = c() * z + d();
    if (den == Scalar(0)) { throw Error(ErrorCode::pole, "evaluation at the pole"); }
    return (a() * z + b()) / den;
  }

  /// Rescales coefficients by a power of two (exact) so the largest has modulus in [1/2, 1).
  MoebiusMap rescaled() const
  {
    Real mx = 0;
    for (auto const &x : coeffs_) { mx = std::max(mx, std::max(std::abs(x.real()), std::abs(x.imag()))); }
    int e = 0;
    std::frexp(mx, &e);
    auto sc = [e](Scalar x) { return Scalar(std::ldexp(x.real(), -e), std::ldexp(x.imag(), -e)); };
    return {sc(a()), sc(b()), sc(c()), sc(d())};
  }

private:
  std::array<Scalar, 4> coeffs_;
};

using Moebius = MoebiusMap<double>;

/// m1 o m2.
template <typename Real> MoebiusMap<Real> compose(MoebiusMap<Real> const &m1, MoebiusMap<Real> const &m2)
{
  return {m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(), m1.c() * m2.a() + m1.d() * m2.c(),
          m1.c() * m2.b() + m1.d() * m2.d()};
}

/// sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)).
template <typename Real> MoebiusMap<Real> krein_adjoint(MoebiusMap<Real> const &m)
{
  return {std::conj(m.a()), -std::conj(m.c()), -std::conj(m.b()), std::conj(m.d())};
}

template <typename Real> MoebiusMap<Real> iterate(MoebiusMap<Real> const &m, unsigned n)
{
  auto result = MoebiusMap<Real>::identity();
  for (unsigned i = 0; i < n; ++i) { result = compose(m, result).rescaled(); }
  return result;
}

template <typename Real>
std::complex<Real> derivative(MoebiusMap<Real> const &m, std::complex<Real> z)
{
  auto const den = m.c() * z + m.d();
  if (den == std::complex<Real>(0)) { throw Error(ErrorCode::pole, "derivative requested at the pole"); }
  return m.determinant() / (den * den);
}

/// Projective equality: both quadruples are normalized by the coordinate where the
/// first is largest and then compared entrywise.
template <typename Real>
bool maps_equal(MoebiusMap<Real> const &m1, MoebiusMap<Real> const &m2, Tolerances const &tol = default_tolerances)
{
  auto const &x = m1.coefficients();
  auto const &y = m2.coefficients();
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(x[i]) > std::abs(x[k])) { k = i; }
  }
  if (std::abs(y[k]) <= Real(tol.projective) * std::sqrt(m2.norm_sq())) { return false; }
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(x[i] / x[k] - y[i] / y[k]) > Real(tol.projective)) { return false; }
  }
  return true;
}

template <typename Real>
bool maps_commute(MoebiusMap<Real> const &m1, MoebiusMap<Real> const &m2, Tolerances const &tol = default_tolerances)
{
  return maps_equal(compose(m1, m2), compose(m2, m1), tol);
}

/// Boundary contact of a non-automorphism: phi(zeta) = eta with |zeta| = |eta| = 1.
template <typename Real> struct ContactData
{
  std::complex<Real> zeta;
  std::complex<Real> eta;
  std::complex<Real> dphi;
  Real s;

  /// Rebuilds dphi from (zeta, eta, s); at a contact point phi'(zeta) = |phi'(zeta)| eta conj(zeta).
  static ContactData from_points(std::complex<Real> zeta, std::complex<Real> eta, Real s)
  {
    return {zeta, eta, eta * std::conj(zeta) / s, s};
  }

  bool same_algebra(ContactData const &o) const { return zeta == o.zeta && eta == o.eta && s == o.s; }
};

using Contact = ContactData<double>;

/// (conj(c) conj(zeta) + conj(d)) / (-conj(b) eta + conj(d)): the scalar with C_phi* = s C_sigma mod compacts.
template <typename Real>
std::complex<Real> adjoint_scalar(MoebiusMap<Real> const &m, std::complex<Real> zeta, std::complex<Real> eta)
{
  return (std::conj(m.c()) * std::conj(zeta) + std::conj(m.d())) / (-std::conj(m.b()) * eta + std::conj(m.d()));
}

enum class AutomorphismKind
{
  elliptic,
  parabolic,
  hyperbolic
};

struct NotSelfMap
{
};
struct StrictContraction
{
};
template <typename Real> struct ContactClass
{
  ContactData<Real> contact;
  bool parabolic;
};
struct AutomorphismClass
{
  AutomorphismKind kind;
};

template <typename Real>
using MapClass = std::variant<NotSelfMap, StrictContraction, ContactClass<Real>, AutomorphismClass>;

namespace detail {

template <typename Real> Real circle_sup(MoebiusMap<Real> const &m, int samples, Real *arg = nullptr)
{
  Real best = -1;
  for (int j = 0; j < samples; ++j) {
    Real const theta = 2 * std::numbers::pi_v<Real> * j / samples;
    Real const v = std::abs(m(std::polar(Real(1), theta)));
    if (v > best) {
      best = v;
      if (arg) { *arg = theta; }
    }
  }
  return best;
}

/// Dense circle sampling plus golden-section refinement of argmax |phi|.
template <typename Real> std::complex<Real> sampled_contact(MoebiusMap<Real> const &m, int samples)
{
  Real theta = 0;
  circle_sup(m, samples, &theta);
  Real const h = 2 * std::numbers::pi_v<Real> / samples;
  Real lo = theta - h, hi = theta + h;
  Real const g = (std::sqrt(Real(5)) - 1) / 2;
  auto val = [&](Real x) { return std::abs(m(std::polar(Real(1), x))); };
  for (int it = 0; it < 200 && hi - lo > 64 * std::numeric_limits<Real>::epsilon(); ++it) {
    Real const x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    if (val(x1) < val(x2)) { lo = x1; } else { hi = x2; }
  }
  return std::polar(Real(1), (lo + hi) / 2);
}

template <typename Real>
ContactData<Real> make_contact(MoebiusMap<Real> const &m, std::complex<Real> zeta)
{
  auto const eta = m(zeta);
  auto const dphi = derivative(m, zeta);
  return {zeta, eta / std::abs(eta), dphi, 1 / std::abs(dphi)};
}

} // namespace detail

/// Classifies a nondegenerate map. Self-maps need the pole outside the closed disk and
/// sup |phi| <= 1 + tol on a circle grid; contact points come from the double root of
/// A z^2 + B z + conj(A) = 0, the unimodular solutions of |az+b| = |cz+d|.
template <typename Real>
MapClass<Real> classify(MoebiusMap<Real> const &m, Tolerances const &tol = default_tolerances)
{
  using Scalar = std::complex<Real>;
  Real const scale = m.norm_sq();
  if (std::abs(m.c()) > std::numeric_limits<Real>::epsilon() * std::sqrt(scale)) {
    if (std::abs(m.d() / m.c()) <= 1) { return NotSelfMap{}; }
  }
  if (detail::circle_sup(m, tol.circle_samples) > 1 + Real(tol.self_map)) { return NotSelfMap{}; }

  Scalar const A = (m.a() * std::conj(m.b()) - m.c() * std::conj(m.d())) / scale;
  Real const B = (std::norm(m.a()) + std::norm(m.b()) - std::norm(m.c()) - std::norm(m.d())) / scale;

  if (std::abs(A) <= Real(tol.discriminant) && std::abs(B) <= Real(tol.discriminant)) {
    if (maps_equal(m, MoebiusMap<Real>::identity(), tol)) { return AutomorphismClass{AutomorphismKind::elliptic}; }
    Scalar const tr = m.a() + m.d();
    Real const k = std::real(tr * tr / m.determinant());
    if (std::abs(k - 4) <= Real(tol.discriminant) * 4) { return AutomorphismClass{AutomorphismKind::parabolic}; }
    return AutomorphismClass{k < 4 ? AutomorphismKind::elliptic : AutomorphismKind::hyperbolic};
  }

  Real const disc = B * B - 4 * std::norm(A);
  if (disc > Real(tol.discriminant)) { return StrictContraction{}; }
  if (disc < -Real(tol.discriminant)) { return NotSelfMap{}; }

  Scalar zeta = -B / (Real(2) * A);
  if (std::abs(std::abs(zeta) - 1) > std::sqrt(Real(tol.discriminant))) {
    zeta = detail::sampled_contact(m, tol.circle_samples);
  }
  zeta /= std::abs(zeta);
  if (std::abs(std::abs(m(zeta)) - 1) > std::sqrt(Real(tol.unimodular))) { return StrictContraction{}; }
  auto contact = detail::make_contact(m, zeta);
  bool const parabolic = std::abs(contact.zeta - contact.eta) <= Real(tol.unimodular) &&
                         std::abs(contact.dphi - Scalar(1)) <= Real(tol.unimodular);
  return ContactClass<Real>{contact, parabolic};
}

/// Contact data of a self-map that is not an automorphism; empty when sup |phi| < 1.
template <typename Real>
std::optional<ContactData<Real>> boundary_contact(MoebiusMap<Real> const &m, Tolerances const &tol = default_tolerances)
{
  auto const cls = classify(m, tol);
  if (std::holds_alternative<NotSelfMap>(cls)) {
    throw Error(ErrorCode::not_self_map, "map is not a self-map of the disk");
  }
  if (std::holds_alternative<AutomorphismClass>(cls)) {
    throw Error(ErrorCode::automorphism, "map is an automorphism of the disk");
  }
  if (auto const *c = std::get_if<ContactClass<Real>>(&cls)) { return c->contact; }
  return std::nullopt;
}

/// Translation number t with Phi(m(z)) = Phi(z) + t, Phi(z) = (eta+z)/(eta-z), eta the
/// boundary fixed point of a parabolic map. Re t > 0 for non-automorphisms, Re t = 0 otherwise.
template <typename Real>
std::complex<Real> parabolic_translation(MoebiusMap<Real> const &m, Tolerances const &tol = default_tolerances)
{
  using Scalar = std::complex<Real>;
  auto const cls = classify(m, tol);
  Scalar eta;
  if (auto const *c = std::get_if<ContactClass<Real>>(&cls); c && c->parabolic) {
    eta = c->contact.zeta;
  } else if (auto const *a = std::get_if<AutomorphismClass>(&cls); a && a->kind == AutomorphismKind::parabolic) {
    eta = (m.a() - m.d()) / (Real(2) * m.c());
    eta /= std::abs(eta);
  } else {
    throw Error(ErrorCode::not_parabolic, "map is not parabolic");
  }
  auto const Phi = [eta](Scalar z) { return (eta + z) / (eta - z); };
  std::array<Scalar, 3> const samples{Scalar(0), Scalar(0, Real(0.5)) * eta, Scalar(Real(-0.3)) * eta};
  Scalar const t = Phi(m(samples[0])) - Phi(samples[0]);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    Scalar const ti = Phi(m(samples[i])) - Phi(samples[i]);
    if (std::abs(ti - t) > Real(tol.translation) * std::max(Real(1), std::abs(t))) {
      throw Error(ErrorCode::not_parabolic, "translation number is not constant");
    }
  }
  return t;
}

} // namespace hardy
