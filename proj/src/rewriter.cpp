#include "hardy/rewriter.hpp"

#include "hardy/error.hpp"

#include <cmath>

namespace hardy {

namespace {

std::string pretty(Complex c)
{
  if (c.imag() == 0) { return format_real(c.real()); }
  if (c.real() == 0) { return format_real(c.imag()) + "i"; }
  std::string im = format_real(c.imag());
  if (im.front() != '-') { im = "+" + im; }
  return "(" + format_real(c.real()) + im + "i)";
}

std::string pretty_trig(TrigPolynomial const &w)
{
  if (w.is_zero()) { return "0"; }
  std::string out;
  for (auto const &[n, c] : w.coefficients()) {
    if (!out.empty()) { out += " + "; }
    bool const unit = c == Complex(1) && n != 0;
    if (!unit) { out += pretty(c); }
    if (n == 1) {
      out += "z";
    } else if (n != 0) {
      out += "z^" + std::to_string(n);
    }
  }
  return out;
}

std::string pretty_half(HalfPolynomial const &f)
{
  std::string out;
  auto term = [&out](Complex c, std::string const &var) {
    if (c == Complex(0)) { return; }
    if (!out.empty()) { out += " + "; }
    out += pretty(c) + var;
  };
  auto const power = [](std::size_t n) { return n == 0 ? std::string() : n == 1 ? "t" : "t^" + std::to_string(n); };
  for (std::size_t n = 0; n < f.p().size(); ++n) { term(f.p()[n], power(n)); }
  for (std::size_t n = 0; n < f.q().size(); ++n) { term(f.q()[n], "sqrt(t)" + power(n)); }
  return out.empty() ? "0" : out;
}

std::string repeat_word(std::string const &head, std::string const &unit, std::size_t n)
{
  std::string out = head;
  for (std::size_t i = 0; i < n; ++i) { out += (out.empty() ? "" : "*") + unit; }
  return out;
}

std::string iterate_name(char const *map, std::size_t n)
{
  return n == 1 ? std::string(map) : "(" + std::string(map) + ")_" + std::to_string(n);
}

} // namespace

SymbolElement normalize(Expr const &e, Contact const &contact)
{
  if (contact.zeta == contact.eta) {
    throw Error(ErrorCode::invalid_argument, "symbol calculus needs zeta != eta (the map fixes its contact point)");
  }
  switch (e.kind) {
  case Expr::Kind::identity: return identity_element(contact);
  case Expr::Kind::toeplitz: return embed_toeplitz(e.symbol, contact);
  case Expr::Kind::cphi: return embed_cphi(contact);
  case Expr::Kind::csigma: return embed_csigma(contact);
  case Expr::Kind::compact: return zero_element(contact);
  case Expr::Kind::adjoint: return adjoint(normalize(e.args.front(), contact));
  case Expr::Kind::scalar: return scalar_mul(e.coefficient, normalize(e.args.front(), contact));
  case Expr::Kind::sum: {
    auto acc = zero_element(contact);
    for (auto const &term : e.args) { acc = add(acc, normalize(term, contact)); }
    return acc;
  }
  case Expr::Kind::product: {
    auto acc = normalize(e.args.front(), contact);
    for (std::size_t i = 1; i < e.args.size(); ++i) { acc = multiply(acc, normalize(e.args[i], contact)); }
    return acc;
  }
  }
  throw Error(ErrorCode::invalid_argument, "unknown expression node");
}

std::string render(SymbolElement const &b)
{
  std::string out;
  out += "w(z) = " + pretty_trig(b.w) + "\n";
  out += "f(t) = " + pretty_half(b.f) + "\n";
  out += "g(t) = " + pretty_half(b.g) + "\n";
  out += "h(t) = " + pretty_half(b.h) + "\n";
  out += "k(t) = " + pretty_half(b.k) + "\n";
  out += "s = " + format_real(b.s()) + ", zeta = " + pretty(b.contact.zeta) + ", eta = " + pretty(b.contact.eta) + "\n";
  return out;
}

CompositionSum to_composition_sum(SymbolElement const &b)
{
  if (!b.f.q().empty() || !b.g.q().empty() || !b.h.p().empty() || !b.k.p().empty()) {
    throw Error(ErrorCode::not_in_generator_ring,
                "f, g must be polynomials in t and h, k must be sqrt(t) times polynomials in t");
  }
  double const s = b.s();
  std::vector<std::string> display, expression;
  bool has_compositions = false;

  if (!b.w.is_zero()) {
    auto const &w = b.w;
    if (w == TrigPolynomial::constant(1)) {
      display.push_back("I");
    } else if (w == TrigPolynomial::monomial(1)) {
      display.push_back("T_z");
    } else {
      display.push_back("T_{" + pretty_trig(w) + "}");
    }
    expression.push_back("T{" + format_trig(w) + "}");
  }

  auto const emit = [&](Complex coefficient, std::string const &map, std::string const &word) {
    if (coefficient == Complex(0)) { return; }
    has_compositions = true;
    display.push_back((coefficient == Complex(1) ? std::string() : pretty(coefficient) + "·") + "C_" + map);
    expression.push_back(format_complex(coefficient) + "*" + word);
  };

  // f = sum a_n t^n  ->  a_n s^n C_{(phi o sigma)_n}; C_{phi o sigma} = C_sigma C_phi.
  for (std::size_t n = 1; n < b.f.p().size(); ++n) {
    emit(b.f.p()[n] * std::pow(s, n), "{" + iterate_name("φ∘σ", n) + "}", repeat_word("", "S*C", n));
  }
  for (std::size_t n = 1; n < b.g.p().size(); ++n) {
    emit(b.g.p()[n] * std::pow(s, n), "{" + iterate_name("σ∘φ", n) + "}", repeat_word("", "C*S", n));
  }
  // h = sqrt(t) sum c_n t^n  ->  c_n s^n C_{(phi o sigma)_n o phi}
  for (std::size_t n = 0; n < b.h.q().size(); ++n) {
    std::string const map = n == 0 ? "φ" : "{" + iterate_name("φ∘σ", n) + "∘φ}";
    emit(b.h.q()[n] * std::pow(s, n), map, repeat_word("C", "S*C", n));
  }
  // k = sqrt(t) sum d_n t^n  ->  d_n s^{n+1} C_{(sigma o phi)_n o sigma}
  for (std::size_t n = 0; n < b.k.q().size(); ++n) {
    std::string const map = n == 0 ? "σ" : "{" + iterate_name("σ∘φ", n) + "∘σ}";
    emit(b.k.q()[n] * std::pow(s, n + 1), map, repeat_word("S", "C*S", n));
  }

  auto const join = [](std::vector<std::string> const &parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) { out += (i ? " + " : "") + parts[i]; }
    return out;
  };

  CompositionSum result;
  result.display = display.empty() ? "0" : join(display);
  if (has_compositions || display.empty()) { result.display += " + K"; }
  result.expression = expression.empty() ? "0" : join(expression);
  return result;
}

} // namespace hardy
