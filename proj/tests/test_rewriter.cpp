#include "hardy/error.hpp"
#include "hardy/expression.hpp"
#include "hardy/rewriter.hpp"
#include "hardy/verify.hpp"

#include <doctest.h>

#include <random>

using namespace hardy;
using namespace std::complex_literals;

namespace {

Contact const phi0 = Contact::from_points(1, -1, 2);

SymbolElement sym(std::string_view text) { return normalize(parse(text), phi0); }

} // namespace

TEST_SUITE("parser")
{
  TEST_CASE("grammar examples")
  {
    CHECK(parse("C' * C") == Expr::product({Expr::adjoint(Expr::cphi()), Expr::cphi()}));
    auto const three = parse("T{z} + C + C'");
    REQUIRE(three.kind == Expr::Kind::sum);
    CHECK(three.args.size() == 3);
    CHECK(three.args[0] == Expr::toeplitz(TrigPolynomial::monomial(1)));
    CHECK(parse("2*(C*S - S*C)") ==
          Expr::scalar(2, Expr::sum({Expr::product({Expr::cphi(), Expr::csigma()}),
                                     Expr::scalar(-1, Expr::product({Expr::csigma(), Expr::cphi()}))})));
  }

  TEST_CASE("whitespace, literals and trig payloads")
  {
    CHECK(parse("  I  ") == parse("I"));
    auto const lit = parse("(1.5,-2)*C");
    CHECK(lit == Expr::scalar(Complex(1.5, -2), Expr::cphi()));
    auto const t = parse("T{2z^2 - (0,1)*z^-1 + 3}");
    REQUIRE(t.kind == Expr::Kind::toeplitz);
    auto const expected =
      TrigPolynomial::monomial(2, 2) + TrigPolynomial::monomial(-1, -1i) + TrigPolynomial::constant(3);
    CHECK(t.symbol == expected);
    CHECK(parse("-C") == Expr::scalar(-1, Expr::cphi()));
    CHECK(parse("(C')'") == Expr::adjoint(Expr::adjoint(Expr::cphi())));
  }

  TEST_CASE("syntax errors carry offsets")
  {
    try {
      parse("C + ");
      FAIL("expected a syntax error");
    } catch (ParseError const &e) {
      CHECK(e.position() == 4);
      CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("C * * S"), ParseError);
    CHECK_THROWS_AS(parse("T{z"), ParseError);
    CHECK_THROWS_AS(parse("(1,2"), ParseError);
    CHECK_THROWS_AS(parse("X"), ParseError);
    CHECK_THROWS_AS(parse("C S"), ParseError);
    CHECK_THROWS_AS(parse("C''"), ParseError);
  }

  TEST_CASE("to_text reparses to the same tree")
  {
    for (char const *text : {"C' * C", "2*(C*S - S*C)", "T{(0,1)z^-2 + z} * C' + K", "(1,-1)*I - S'", "((C')')'"}) {
      auto const e = parse(text);
      CHECK(parse(to_text(e)) == e);
    }
  }
}

TEST_SUITE("rewriter")
{
  TEST_CASE("normalize examples")
  {
    CHECK(sym("C*C").is_zero());
    auto const xx = sym("C'*C");
    CHECK(xx.f == HalfPolynomial::t_power(1));
    CHECK(xx == scalar_mul(2, sym("S*C")));
    auto const comm = sym("T{z}*C - C*T{z}");
    CHECK(comm.h == HalfPolynomial::sqrt_t(2));
    CHECK(sym("C'") == scalar_mul(2, sym("S")));
    CHECK(sym("C + K") == sym("C"));
  }

  TEST_CASE("normalize rejects a fixed contact point")
  {
    CHECK_THROWS_AS(normalize(parse("C"), Contact::from_points(1, 1, 2)), Error);
  }

  TEST_CASE("normalize is linear, multiplicative and star-compatible")
  {
    std::vector<std::string> const atoms{"C", "S", "C'", "T{z}", "T{(0,1)z^-1 + 2}", "I", "S*C"};
    for (auto const &x : atoms) {
      for (auto const &y : atoms) {
        CHECK(sym(x + " + " + y) == sym(x) + sym(y));
        CHECK(sym("(" + x + ")*(" + y + ")") == sym(x) * sym(y));
      }
      CHECK(sym("(" + x + ")'") == adjoint(sym(x)));
    }
  }

  TEST_CASE("composition sums")
  {
    auto const xx = sym("C'*C");
    CHECK(to_composition_sum(xx).display == "2·C_{φ∘σ} + K");
    CHECK(to_composition_sum(embed_cphi(phi0)).display == "C_φ + K");
    CHECK(to_composition_sum(sym("C*C")).display == "0 + K");
    CHECK(to_composition_sum(sym("T{z}")).display == "T_z");
    auto outside = zero_element(phi0);
    outside.f = HalfPolynomial::sqrt_t();
    CHECK_THROWS_AS(to_composition_sum(outside), Error);
  }

  TEST_CASE("render lists every part")
  {
    auto const text = render(sym("T{z} + C"));
    CHECK(text.find("w(z) = ") != std::string::npos);
    CHECK(text.find("h(t) = ") != std::string::npos);
    CHECK(text.find("s = 2") != std::string::npos);
  }

  TEST_CASE("round trip through composition sums")
  {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
      auto const b = random_generator_element(rng, phi0);
      auto const back = normalize(parse(to_composition_sum(b).expression), phi0);
      CHECK(back == b);
    }
  }

  TEST_CASE("uniqueness: equal quintuples give equal symbols")
  {
    std::mt19937_64 rng(8);
    auto const a = sym("S*C - C*S + C");
    auto const b = sym("0.5*C'*C - C*S + C");
    CHECK(a == b);
    for (int i = 0; i < 20; ++i) {
      auto const lam = random_lambda(rng, phi0);
      CHECK((phi_lambda(a, lam) - phi_lambda(b, lam)).norm() == 0);
      CHECK(phi_lambda(sym("C*C"), lam).norm() == 0);
    }
  }
}
