#pragma once

#include "hardy/config.hpp"
#include "hardy/functions.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hardy {

/// Words in T_w, C_phi and C_sigma.
///
/// Grammar (whitespace-insensitive):
///   expr     := ['-'] term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ["'"]
///   atom     := 'I' | 'C' | 'S' | 'K' | 'T{' trigpoly '}' | number | '(' re ',' im ')' | '(' expr ')'
///   trigpoly := ['-'] mono (('+' | '-') mono)*,  mono := [coef ['*']] 'z' ['^' int] | coef
///
/// `C` is C_phi, `S` is C_sigma for the Krein adjoint sigma, `'` is the Hilbert-space
/// adjoint and `K` stands for an arbitrary compact operator.
struct Expr
{
  enum class Kind
  {
    identity,
    toeplitz,
    cphi,
    csigma,
    compact,
    adjoint,
    sum,
    product,
    scalar,
  };

  Kind kind = Kind::identity;
  Complex coefficient{1};  ///< scalar nodes
  TrigPolynomial symbol;   ///< toeplitz nodes
  std::vector<Expr> args;

  static Expr identity() { return {}; }
  static Expr toeplitz(TrigPolynomial w) { return {Kind::toeplitz, 1, std::move(w), {}}; }
  static Expr cphi() { return {Kind::cphi, 1, {}, {}}; }
  static Expr csigma() { return {Kind::csigma, 1, {}, {}}; }
  static Expr compact() { return {Kind::compact, 1, {}, {}}; }
  static Expr adjoint(Expr e) { return {Kind::adjoint, 1, {}, {std::move(e)}}; }
  static Expr sum(std::vector<Expr> terms) { return {Kind::sum, 1, {}, std::move(terms)}; }
  static Expr product(std::vector<Expr> factors) { return {Kind::product, 1, {}, std::move(factors)}; }
  static Expr scalar(Complex c, Expr e) { return {Kind::scalar, c, {}, {std::move(e)}}; }

  bool contains(Kind k) const;

  friend bool operator==(Expr const &, Expr const &) = default;
};

/// Throws ParseError carrying the 0-based offset and the expected-token set.
Expr parse(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);
/// `(re,im)` literal accepted by the parser.
std::string format_complex(Complex c);
/// Trig polynomial in the T{...} syntax, e.g. `(1,0)z^-1+(2,0)z^2`.
std::string format_trig(TrigPolynomial const &w);
/// Parser-compatible text of an expression.
std::string to_text(Expr const &e);

} // namespace hardy
