#pragma once

#include "hardy/config.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace hardy {

/// w(e^{i theta}) = sum_n c_n e^{i n theta}, finitely many nonzero c_n.
/// Exact zeros are never stored, so structural equality is value equality.
class TrigPolynomial
{
public:
  TrigPolynomial() = default;
  TrigPolynomial(std::map<int, Complex> coeffs);

  static TrigPolynomial constant(Complex c) { return TrigPolynomial({{0, c}}); }
  static TrigPolynomial monomial(int n, Complex c = 1) { return TrigPolynomial({{n, c}}); }

  std::map<int, Complex> const &coefficients() const { return coeffs_; }
  Complex coefficient(int n) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;

  /// Evaluates at a point of the unit circle.
  Complex operator()(Complex z) const;
  Complex at_angle(double theta) const { return (*this)(std::polar(1.0, theta)); }

  /// Pointwise complex conjugate on the circle: c_n -> conj(c_{-n}).
  TrigPolynomial conj() const;

  TrigPolynomial &operator+=(TrigPolynomial const &o);
  friend TrigPolynomial operator+(TrigPolynomial a, TrigPolynomial const &b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial const &a, TrigPolynomial const &b) { return a + b * Complex(-1); }
  friend TrigPolynomial operator*(TrigPolynomial const &a, TrigPolynomial const &b);
  friend TrigPolynomial operator*(TrigPolynomial const &a, Complex c);
  friend TrigPolynomial operator*(Complex c, TrigPolynomial const &a) { return a * c; }
  friend bool operator==(TrigPolynomial const &, TrigPolynomial const &) = default;

private:
  void prune();
  std::map<int, Complex> coeffs_;
};

/// Functions on [0, s] of the form p(t) + sqrt(t) q(t) with p(0) = 0; the ring
/// generated by sqrt(x* x), sqrt(x x*) under the product table of the quotient algebra.
/// Coefficient vectors carry no trailing exact zeros.
class HalfPolynomial
{
public:
  HalfPolynomial() = default;
  HalfPolynomial(std::vector<Complex> p, std::vector<Complex> q);

  static HalfPolynomial sqrt_t(Complex c = 1) { return HalfPolynomial({}, {c}); }
  static HalfPolynomial t_power(int n, Complex c = 1);

  std::vector<Complex> const &p() const { return p_; }
  std::vector<Complex> const &q() const { return q_; }
  bool is_zero() const { return p_.empty() && q_.empty(); }

  Complex operator()(double t) const;

  /// Coefficientwise conjugation (t and sqrt(t) are real on [0, s]).
  HalfPolynomial conj() const;

  HalfPolynomial &operator+=(HalfPolynomial const &o);
  friend HalfPolynomial operator+(HalfPolynomial a, HalfPolynomial const &b) { return a += b; }
  friend HalfPolynomial operator-(HalfPolynomial const &a, HalfPolynomial const &b) { return a + b * Complex(-1); }
  friend HalfPolynomial operator*(HalfPolynomial const &a, HalfPolynomial const &b);
  friend HalfPolynomial operator*(HalfPolynomial const &a, Complex c);
  friend HalfPolynomial operator*(Complex c, HalfPolynomial const &a) { return a * c; }
  friend bool operator==(HalfPolynomial const &, HalfPolynomial const &) = default;

  /// Max coefficient modulus of a - b.
  friend double distance(HalfPolynomial const &a, HalfPolynomial const &b);

private:
  void trim();
  std::vector<Complex> p_;
  std::vector<Complex> q_;
};

} // namespace hardy
