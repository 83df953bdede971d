#include "hardy/error.hpp"
#include "hardy/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace hardy {

namespace {

std::string join(std::vector<std::string> const &items)
{
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) { out += ", "; }
    out += items[i];
  }
  return out;
}

class Parser
{
public:
  explicit Parser(std::string_view text)
    : text_(text)
  {
  }

  Expr parse()
  {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) { fail({"'+'", "'-'", "'*'", "'''", "end of input"}); }
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) const
  {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) { ++pos_; }
  }

  char peek()
  {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c)
  {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) { fail({std::string("'") + c + "'"}); }
  }

  static bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

  /// Unsigned or signed decimal with optional exponent.
  std::optional<double> number()
  {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    double value = 0;
    auto const *first = text_.data() + pos_;
    auto const [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) {
      pos_ = start;
      return std::nullopt;
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  double required_number()
  {
    auto v = number();
    if (!v) { fail({"number"}); }
    return *v;
  }

  /// '(' re ',' im ')' with the opening parenthesis already consumed; restores on mismatch.
  std::optional<Complex> complex_tail()
  {
    std::size_t const start = pos_;
    auto re = number();
    if (re && accept(',')) {
      double const im = required_number();
      expect(')');
      return Complex(*re, im);
    }
    pos_ = start;
    return std::nullopt;
  }

  static Expr literal(Complex c) { return Expr::scalar(c, Expr::identity()); }
  static bool is_literal(Expr const &e)
  {
    return e.kind == Expr::Kind::scalar && e.args.front().kind == Expr::Kind::identity;
  }

  Expr expr()
  {
    std::vector<Expr> terms;
    if (accept('-')) {
      terms.push_back(Expr::scalar(-1, term()));
    } else {
      terms.push_back(term());
    }
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(Expr::scalar(-1, term()));
      } else {
        break;
      }
    }
    return terms.size() == 1 ? std::move(terms.front()) : Expr::sum(std::move(terms));
  }

  Expr term()
  {
    std::vector<Expr> factors{factor()};
    while (accept('*')) { factors.push_back(factor()); }
    if (factors.size() == 1) { return std::move(factors.front()); }

    Complex coefficient = 1;
    bool any_literal = false;
    std::vector<Expr> operators;
    for (auto &f : factors) {
      if (is_literal(f)) {
        coefficient *= f.coefficient;
        any_literal = true;
      } else {
        operators.push_back(std::move(f));
      }
    }
    if (operators.empty()) { return literal(coefficient); }
    Expr body = operators.size() == 1 ? std::move(operators.front()) : Expr::product(std::move(operators));
    return any_literal ? Expr::scalar(coefficient, std::move(body)) : body;
  }

  Expr factor()
  {
    Expr e = atom();
    if (accept('\'')) { return Expr::adjoint(std::move(e)); }
    return e;
  }

  Expr atom()
  {
    char const c = peek();
    switch (c) {
    case 'I': ++pos_; return Expr::identity();
    case 'C': ++pos_; return Expr::cphi();
    case 'S': ++pos_; return Expr::csigma();
    case 'K': ++pos_; return Expr::compact();
    case 'T': {
      ++pos_;
      expect('{');
      auto w = trig_poly();
      expect('}');
      return Expr::toeplitz(std::move(w));
    }
    case '(': {
      ++pos_;
      if (auto z = complex_tail()) { return literal(*z); }
      Expr inner = expr();
      expect(')');
      return inner;
    }
    default:
      if (starts_number(c)) { return literal(required_number()); }
      fail({"'I'", "'C'", "'S'", "'K'", "'T{'", "number", "'('"});
    }
  }

  std::optional<Complex> coefficient()
  {
    char const c = peek();
    if (c == '(') {
      ++pos_;
      auto z = complex_tail();
      if (!z) { fail({"number"}); }
      return z;
    }
    if (starts_number(c)) { return Complex(required_number()); }
    return std::nullopt;
  }

  TrigPolynomial trig_poly()
  {
    TrigPolynomial w;
    double sign = accept('-') ? -1 : 1;
    for (;;) {
      auto c = coefficient();
      bool const had_coefficient = c.has_value();
      if (had_coefficient) { accept('*'); }
      int degree = 0;
      if (accept('z')) {
        degree = 1;
        if (accept('^')) {
          skip_ws();
          std::size_t const start = pos_;
          bool negative = accept('-');
          skip_ws();
          int d = 0;
          auto const *first = text_.data() + pos_;
          auto const [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), d);
          if (ec != std::errc() || ptr == first) {
            pos_ = start;
            fail({"integer exponent"});
          }
          pos_ += static_cast<std::size_t>(ptr - first);
          degree = negative ? -d : d;
        }
      } else if (!had_coefficient) {
        fail({"number", "'('", "'z'"});
      }
      w += TrigPolynomial::monomial(degree, sign * c.value_or(Complex(1)));
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        return w;
      }
    }
  }
};

} // namespace

char const *to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::degenerate_map: return "degenerate-map";
  case ErrorCode::not_self_map: return "not-self-map";
  case ErrorCode::automorphism: return "automorphism";
  case ErrorCode::no_contact: return "no-contact";
  case ErrorCode::not_parabolic: return "not-parabolic";
  case ErrorCode::pole: return "pole";
  case ErrorCode::contact_mismatch: return "contact-mismatch";
  case ErrorCode::not_in_generator_ring: return "not-in-generator-ring";
  case ErrorCode::not_central: return "not-central";
  case ErrorCode::not_self_adjoint: return "not-self-adjoint";
  case ErrorCode::window_too_large: return "window-too-large";
  case ErrorCode::empty_input: return "empty-input";
  case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string const &found)
  : std::runtime_error("syntax error at offset " + std::to_string(position) + ": expected " + join(expected) +
                       ", found " + found)
  , position_(position)
  , expected_(std::move(expected))
{
}

Expr parse(std::string_view text) { return Parser(text).parse(); }

bool Expr::contains(Kind k) const
{
  return kind == k || std::any_of(args.begin(), args.end(), [k](Expr const &e) { return e.contains(k); });
}

std::string format_real(double x)
{
  char buf[64];
  auto const [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex c) { return "(" + format_real(c.real()) + "," + format_real(c.imag()) + ")"; }

std::string format_trig(TrigPolynomial const &w)
{
  if (w.is_zero()) { return "0"; }
  std::string out;
  for (auto const &[n, c] : w.coefficients()) {
    if (!out.empty()) { out += "+"; }
    out += format_complex(c);
    if (n == 1) {
      out += "z";
    } else if (n != 0) {
      out += "z^" + std::to_string(n);
    }
  }
  return out;
}

std::string to_text(Expr const &e)
{
  auto const grouped = [](Expr const &x) {
    bool const atomic = x.kind == Expr::Kind::identity || x.kind == Expr::Kind::toeplitz ||
                        x.kind == Expr::Kind::cphi || x.kind == Expr::Kind::csigma || x.kind == Expr::Kind::compact;
    return atomic ? to_text(x) : "(" + to_text(x) + ")";
  };
  switch (e.kind) {
  case Expr::Kind::identity: return "I";
  case Expr::Kind::toeplitz: return "T{" + format_trig(e.symbol) + "}";
  case Expr::Kind::cphi: return "C";
  case Expr::Kind::csigma: return "S";
  case Expr::Kind::compact: return "K";
  case Expr::Kind::adjoint: return grouped(e.args.front()) + "'";
  case Expr::Kind::scalar: return format_complex(e.coefficient) + "*" + grouped(e.args.front());
  case Expr::Kind::sum:
  case Expr::Kind::product: {
    std::string out;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) { out += e.kind == Expr::Kind::sum ? " + " : "*"; }
      out += e.kind == Expr::Kind::sum ? to_text(e.args[i]) : grouped(e.args[i]);
    }
    return out;
  }
  }
  return {};
}

} // namespace hardy
