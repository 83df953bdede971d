#pragma once

// The quotient algebra C*(T_z, C_phi) / K. Every coset has a unique representation
//
//   b = t_w + f(x*x) + g(xx*) + u h(x*x) + u* k(xx*),   x = [C_phi] = u sqrt(x*x),
//
// and the matrix evaluations Phi_lambda(b) over the space Lambda (circle, triple
// point, interval (0, s]) form an isometric *-isomorphism onto 2x2 matrix functions.

#include "hardy/config.hpp"
#include "hardy/functions.hpp"
#include "hardy/moebius.hpp"

#include <Eigen/Core>

#include <string>
#include <variant>
#include <vector>

namespace hardy {

using Mat2 = Eigen::Matrix2cd;

struct SymbolElement
{
  TrigPolynomial w;
  HalfPolynomial f, g, h, k;
  Contact contact;

  double s() const { return contact.s; }
  bool is_zero() const { return w.is_zero() && f.is_zero() && g.is_zero() && h.is_zero() && k.is_zero(); }

  friend bool operator==(SymbolElement const &a, SymbolElement const &b)
  {
    return a.contact.same_algebra(b.contact) && a.w == b.w && a.f == b.f && a.g == b.g && a.h == b.h && a.k == b.k;
  }
};

namespace lambda {
struct Circle
{
  Complex point;
};
struct TriplePoint
{
};
struct Interval
{
  double t;
};
} // namespace lambda

using LambdaPoint = std::variant<lambda::Circle, lambda::TriplePoint, lambda::Interval>;

SymbolElement zero_element(Contact const &contact);
SymbolElement identity_element(Contact const &contact);
SymbolElement embed_toeplitz(TrigPolynomial w, Contact const &contact);
/// [C_phi] = u sqrt(x*x): h(t) = sqrt(t).
SymbolElement embed_cphi(Contact const &contact);
/// [C_sigma] = x*/s: k(t) = sqrt(t)/s.
SymbolElement embed_csigma(Contact const &contact);

SymbolElement add(SymbolElement const &a, SymbolElement const &b);
SymbolElement scalar_mul(Complex c, SymbolElement const &b);
SymbolElement multiply(SymbolElement const &a, SymbolElement const &b);
SymbolElement adjoint(SymbolElement const &b);

inline SymbolElement operator+(SymbolElement const &a, SymbolElement const &b) { return add(a, b); }
inline SymbolElement operator-(SymbolElement const &a, SymbolElement const &b) { return add(a, scalar_mul(-1, b)); }
inline SymbolElement operator*(SymbolElement const &a, SymbolElement const &b) { return multiply(a, b); }
inline SymbolElement operator*(Complex c, SymbolElement const &b) { return scalar_mul(c, b); }

Mat2 phi_lambda(SymbolElement const &b, LambdaPoint const &point);

/// The symbol tabulated on a computation grid. Lets essential_spectrum / essential_norm
/// accept continuous w, f, g, h, k that have no exact representation here.
struct SampledSymbol
{
  std::vector<double> theta;  ///< circle grid angles (ascending, includes arg zeta and arg eta)
  std::vector<Complex> w;     ///< w on the circle grid
  std::vector<double> t;      ///< interval grid on [0, s] (ascending, includes 0 and s)
  std::vector<Complex> f, g, h, k;
  Complex w_zeta, w_eta;
};

std::vector<double> circle_grid(Contact const &contact, int resolution);
std::vector<double> interval_grid(double s, int resolution);
SampledSymbol sample(SymbolElement const &b, int resolution);

enum class SpectrumSource
{
  circle,
  interval_plus,
  interval_minus
};

char const *to_string(SpectrumSource source);

struct SpectrumPoint
{
  Complex z;
  SpectrumSource source;
};

/// Both eigenvalues of the interval matrix at one t (principal square root; + then -).
std::pair<Complex, Complex> interval_eigenvalues(Complex f, Complex g, Complex h, Complex k, Complex w_zeta,
                                                 Complex w_eta);

std::vector<SpectrumPoint> essential_spectrum(SampledSymbol const &table);
std::vector<SpectrumPoint> essential_spectrum(SymbolElement const &b, int resolution);

struct NormEstimate
{
  double value;
  double grid_spacing;  ///< spacing of the final refinement grid (angle or t)
};

double mat2_norm(Mat2 const &m);

NormEstimate essential_norm(SampledSymbol const &table);
NormEstimate essential_norm(SymbolElement const &b, int resolution);

bool is_fredholm(SymbolElement const &b, int resolution, Tolerances const &tol = default_tolerances);

bool is_central(SymbolElement const &b, Tolerances const &tol = default_tolerances);
Complex gelfand_value(SymbolElement const &b, LambdaPoint const &point, Tolerances const &tol = default_tolerances);

} // namespace hardy
