#include "hardy/verify.hpp"

#include "hardy/error.hpp"
#include "hardy/oracle.hpp"
#include "hardy/rewriter.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace hardy {

namespace {

class Battery
{
public:
  Battery(Moebius const &phi, BatteryOptions const &options)
    : phi_(phi)
    , options_(options)
    , rng_(options.seed)
  {
    auto contact = boundary_contact(phi_);
    if (!contact) { throw Error(ErrorCode::no_contact, "map has no boundary contact"); }
    contact_ = *contact;
    if (std::abs(contact_.zeta - contact_.eta) <= default_tolerances.unimodular) {
      throw Error(ErrorCode::invalid_argument, "verification battery needs zeta != eta");
    }
    s_ = contact_.s;
    reference_ = maps_equal(phi_, reference_map());
  }

  std::vector<ClaimResult> run()
  {
    krein_contact();
    example_1();
    example_2();
    example_3();
    example_4();
    example_5();
    example_6_7();
    homomorphism();
    compactness();
    spectral_fill();
    round_trip();
    return std::move(results_);
  }

private:
  Moebius phi_;
  BatteryOptions options_;
  std::mt19937_64 rng_;
  Contact contact_;
  double s_ = 0;
  bool reference_ = false;
  std::vector<ClaimResult> results_;

  void below(int criterion, std::string id, std::string claim, double value, double threshold,
             std::string detail = {}, std::optional<int> n = {}, std::optional<int> window = {})
  {
    results_.push_back({criterion, std::move(id), std::move(claim), n, window, value, threshold, value < threshold,
                        std::move(detail)});
  }

  void above(int criterion, std::string id, std::string claim, double value, double threshold,
             std::string detail = {}, std::optional<int> n = {}, std::optional<int> window = {})
  {
    results_.push_back({criterion, std::move(id), std::move(claim), n, window, value, threshold, value > threshold,
                        std::move(detail)});
  }

  SymbolElement symbol_of(std::string const &text) const { return normalize(parse(text), contact_); }

  std::vector<SpectrumPoint> spectrum_of(std::string const &text) const
  {
    return essential_spectrum(symbol_of(text), options_.resolution);
  }

  double interval_spacing() const
  {
    auto const grid = interval_grid(s_, options_.resolution);
    double h = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) { h = std::max(h, grid[i] - grid[i - 1]); }
    return h;
  }

  /// Criterion 1: Krein adjoint, contact data and the parabolic map phi o sigma.
  void krein_contact()
  {
    auto const sigma = krein_adjoint(phi_);
    if (reference_) {
      double err = maps_equal(sigma, Moebius(-1, 0, 1, 2)) ? 0.0 : 1.0;
      for (Complex z : {Complex(0), Complex(0.5), Complex(0, 1)}) {
        err = std::max(err, std::abs(sigma(z) - (-z / (z + 2.0))));
      }
      below(1, "AC1.sigma", "krein adjoint of phi_0 is -z/(z+2)", err, 1e-12);
    } else {
      below(1, "AC1.sigma", "sigma(eta) = zeta", std::abs(sigma(contact_.eta) - contact_.zeta), 1e-12);
    }

    Complex const dsigma = derivative(sigma, contact_.eta);
    below(1, "AC1.derivative", "phi'(zeta) sigma'(eta) = 1", std::abs(contact_.dphi * dsigma - 1.0), 1e-12);

    Complex const quotient = adjoint_scalar(phi_, contact_.zeta, contact_.eta);
    double const s_dphi = 1 / std::abs(contact_.dphi), s_dsigma = std::abs(dsigma);
    double err = std::max({std::abs(s_dphi - s_dsigma), std::abs(quotient - Complex(s_dphi))});
    if (reference_) { err = std::max(err, std::abs(s_dphi - 2)); }
    below(1, "AC1.s", "s = 1/|phi'(zeta)| = |sigma'(eta)| = adjoint quotient", err, 1e-12,
          "s = " + format_real(s_dphi));

    auto const tau = compose(phi_, sigma);
    auto const cls = classify(tau);
    auto const *c = std::get_if<ContactClass<double>>(&cls);
    bool const parabolic = c && c->parabolic;
    double terr = 1;
    std::string detail = "tau not parabolic";
    if (parabolic) {
      Complex const t = parabolic_translation(tau);
      detail = "t = " + format_complex(t);
      terr = reference_ ? std::abs(t - 2.0) : (t.real() > 0 ? std::abs(t.imag()) : 1.0);
    }
    below(1, "AC1.tau", reference_ ? "phi o sigma parabolic with translation 2" : "phi o sigma positive parabolic",
          terr, 1e-12, detail);
  }

  /// Criterion 2: sigma_e(C + C') = [-sqrt(s), sqrt(s)].
  void example_1()
  {
    auto const pts = spectrum_of("C + C'");
    double const r = std::sqrt(s_);
    double max_im = 0, lo = INFINITY, hi = -INFINITY;
    std::vector<double> re;
    for (auto const &p : pts) {
      max_im = std::max(max_im, std::abs(p.z.imag()));
      lo = std::min(lo, p.z.real());
      hi = std::max(hi, p.z.real());
      re.push_back(p.z.real());
    }
    below(2, "AC2.real", "spectrum is real", max_im, 1e-9);
    below(2, "AC2.endpoints", "min/max = -/+ sqrt(s)", std::max(std::abs(lo + r), std::abs(hi - r)), 1e-9);
    std::vector<double> probes;
    for (int i = 0; i <= 10000; ++i) { probes.push_back(-r + 2 * r * i / 10000.0); }
    double const gap = fill_distance(probes, re);
    double const h = interval_spacing();
    below(2, "AC2.coverage", "every point of [-sqrt(s), sqrt(s)] within grid spacing of a computed point", gap, h,
          "grid spacing " + format_real(h));
  }

  void interval_check(int criterion, std::string const &id, std::string const &text, double lo, double hi)
  {
    auto const pts = spectrum_of(text);
    double max_im = 0, mn = INFINITY, mx = -INFINITY;
    for (auto const &p : pts) {
      max_im = std::max(max_im, std::abs(p.z.imag()));
      mn = std::min(mn, p.z.real());
      mx = std::max(mx, p.z.real());
    }
    below(criterion, id, text + ": real spectrum with endpoints [" + format_real(lo) + ", " + format_real(hi) + "]",
          std::max({max_im, std::abs(mn - lo), std::abs(mx - hi)}), 1e-9);
  }

  /// Criterion 3: self-commutator and anti-commutator.
  void example_2()
  {
    interval_check(3, "AC3.commutator", "C'*C - C*C'", -s_, s_);
    interval_check(3, "AC3.anticommutator", "C'*C + C*C'", 0, s_);
  }

  static bool interval_branch(SpectrumPoint const &p) { return p.source != SpectrumSource::circle; }

  /// Criterion 4: B1 = C_{phi o sigma} + C_{sigma o phi} + C_phi - C_sigma traces y^2 + iy.
  void example_3()
  {
    double residual = 0;
    for (auto const &p : spectrum_of("S*C + C*S + C - S")) {
      if (!interval_branch(p)) { continue; }
      double const y = p.z.imag();
      residual = std::max(residual, std::abs(p.z - Complex(y * y, y)));
      residual = std::max(residual, std::abs(y) - 1);
    }
    below(4, "AC4.parabola", "interval branch of sigma_e(B1) lies on z = y^2 + iy, |y| <= 1", residual, 1e-9);
  }

  /// Criterion 5: B2 traces [-1/sqrt2, 1/sqrt2] U [-i/4, i/4].
  void example_4()
  {
    double const a = 1 / std::numbers::sqrt2, b = 0.25;
    auto const segment_distance = [](Complex z, double half_length, bool imaginary) {
      double const along = imaginary ? z.imag() : z.real(), across = imaginary ? z.real() : z.imag();
      double const over = std::max(0.0, std::abs(along) - half_length);
      return std::hypot(over, across);
    };
    double residual = 0, max_re = 0, max_im = 0;
    for (auto const &p : spectrum_of("S*C - C*S + 0.5*C - S")) {
      residual = std::max(residual, std::min(segment_distance(p.z, a, false), segment_distance(p.z, b, true)));
      max_re = std::max(max_re, std::abs(p.z.real()));
      max_im = std::max(max_im, std::abs(p.z.imag()));
    }
    below(5, "AC5.segments", "sigma_e(B2) lies on the two segments", residual, 1e-9);
    double const h = interval_spacing();
    below(5, "AC5.extremes", "extreme points 1/sqrt2 and i/4 attained", std::max(std::abs(max_re - a), std::abs(max_im - b)),
          h, "grid spacing " + format_real(h));
  }

  /// Criterion 6: B3 traces |z - 1/2| = 1/2.
  void example_5()
  {
    double residual = 0;
    for (auto const &p : spectrum_of("2*S*C + C - S")) {
      if (interval_branch(p)) { residual = std::max(residual, std::abs(std::abs(p.z - 0.5) - 0.5)); }
    }
    below(6, "AC6.circle", "interval branch of sigma_e(B3) lies on |z - 1/2| = 1/2", residual, 1e-9);
  }

  /// Criterion 7: essential norm of T_z + C + C' and the deformation by T_w, w = -r(1+i)z/sqrt 2.
  void example_6_7()
  {
    double const dphi = std::abs(contact_.dphi);
    double const closed =
      std::sqrt(1 + 1 / dphi + std::sqrt(2 / dphi) * std::sqrt(1 + std::real(contact_.zeta * contact_.eta)));
    auto const est = essential_norm(symbol_of("T{z} + C + C'"), options_.resolution);
    below(7, "AC7.norm", "||T_z + C + C'||_e matches the closed form", std::abs(est.value - closed), 1e-6,
          "norm " + format_real(est.value) + ", closed form " + format_real(closed));

    auto const grid = interval_grid(s_, options_.resolution);
    for (double r : {0.0, 1.0}) {
      // degree-1 w with w(zeta) = -c, w(eta) = c, c = r(1+i)/sqrt2
      Complex const c = r * Complex(1, 1) / std::numbers::sqrt2;
      Complex const slope = 2.0 * c / (contact_.eta - contact_.zeta);
      TrigPolynomial const w = TrigPolynomial::constant(-c - slope * contact_.zeta) + TrigPolynomial::monomial(1, slope);
      auto const b = embed_toeplitz(w, contact_) + symbol_of("C + C'");
      double residual = 0;
      std::size_t i = 0;
      for (auto const &p : essential_spectrum(b, options_.resolution)) {
        if (!interval_branch(p)) { continue; }
        // interval points come as (+, -) pairs in grid order
        Complex const expected = std::sqrt(Complex(grid[i++ / 2], r * r));
        residual = std::max(residual, std::min(std::abs(p.z - expected), std::abs(p.z + expected)));
      }
      below(7, "AC7.deformation.r" + format_real(r), "interval branch equals {+-sqrt(t + r^2 i)}, r = " + format_real(r),
            residual, 1e-9);
    }
  }

  /// Criterion 8: Phi_lambda is a *-homomorphism.
  void homomorphism()
  {
    double mult = 0, star = 0;
    for (int i = 0; i < 1000; ++i) {
      auto const b1 = random_element(rng_, contact_);
      auto const b2 = random_element(rng_, contact_);
      auto const point = random_lambda(rng_, contact_);
      Mat2 const lhs = phi_lambda(b1 * b2, point);
      Mat2 const rhs = phi_lambda(b1, point) * phi_lambda(b2, point);
      mult = std::max(mult, (lhs - rhs).cwiseAbs().maxCoeff());
      star = std::max(star, (phi_lambda(adjoint(b1), point) - phi_lambda(b1, point).adjoint()).cwiseAbs().maxCoeff());
    }
    below(8, "AC8.multiplicative", "Phi(b1 b2) = Phi(b1) Phi(b2) on 1000 random triples", mult, 1e-10);
    below(8, "AC8.star", "Phi(b*) = Phi(b)^dagger on 1000 random pairs", star, 1e-10);
  }

  double floor_of(std::string const &text, Moebius const &map)
  {
    auto const seq = vanishing_sequence(parse(text), map, options_.n, options_.window);
    return *std::min_element(seq.begin(), seq.end());
  }

  /// Criterion 9: compact expressions send z^n to norm-null sequences.
  void compactness()
  {
    int const n = options_.n, window = options_.window;
    std::string const adj = "C' - " + format_real(s_) + "*S";
    below(9, "AC9.adjoint", adj + " is compact", floor_of(adj, phi_), 0.01, "floor over the window", n, window);
    std::string const toep = "T{z}*T{z^-1 + z^2} - T{1 + z^3}";
    below(9, "AC9.toeplitz", toep + " is compact", floor_of(toep, phi_), 0.01, "floor over the window", n, window);
    std::string const comm = "T{z}*C - C*T{z}";
    below(9, "AC9.commutator.fixed", comm + " on rho_0 is compact", floor_of(comm, reference_fixed_map()), 0.01,
          "floor over the window", n, window);
    above(9, "AC9.commutator.moving", comm + " is not compact when zeta != eta", floor_of(comm, phi_), 0.1,
          "floor over the window", n, window);
  }

  /// Criterion 10: compression eigenvalues fill the predicted essential spectra.
  void spectral_fill()
  {
    double const r = std::sqrt(s_);
    struct Case
    {
      std::string id, text;
      double lo, hi;
    };
    std::vector<Case> const cases{{"AC10.anticommutator", "C'*C + C*C'", 0, s_},
                                  {"AC10.real_part", "C + C'", -r, r},
                                  {"AC10.commutator", "C'*C - C*C'", -s_, s_}};
    for (auto const &c : cases) {
      std::vector<double> predicted;
      for (int i = 0; i <= 100; ++i) { predicted.push_back(c.lo + (c.hi - c.lo) * i / 100.0); }
      auto const expr = parse(c.text);
      std::vector<double> fills;
      std::vector<int> sizes;
      for (int m = options_.n / 4; m <= options_.n; m *= 2) {
        sizes.push_back(m);
        fills.push_back(fill_distance(predicted, compression_eigs(expr, phi_, m)));
      }
      std::string trail;
      double worst_ratio = 0;
      for (std::size_t i = 0; i < fills.size(); ++i) {
        trail += (i ? ", " : "") + std::string("N=") + std::to_string(sizes[i]) + ": " + format_real(fills[i]);
        if (i) { worst_ratio = std::max(worst_ratio, fills[i] / fills[i - 1]); }
      }
      below(10, c.id + ".fill", c.text + " compression eigenvalues fill the predicted interval", fills.back(), 0.05,
            trail, options_.n);
      results_.push_back({10, c.id + ".monotone", c.text + " fill distance non-increasing as N doubles (10% slack)",
                          options_.n, {}, worst_ratio, 1.1, worst_ratio <= 1.1, trail});
    }
  }

  /// Criterion 11: exact round trip through the composition-sum form; linear independence.
  void round_trip()
  {
    int frexp_exp = 0;
    bool const exact = std::frexp(s_, &frexp_exp) == 0.5;
    double worst = 0;
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      auto const b = random_generator_element(rng_, contact_);
      auto const back = normalize(parse(to_composition_sum(b).expression), contact_);
      if (!(back == b)) {
        ++mismatches;
        auto const d = back - b;
        worst = std::max({worst, distance(d.f, {}), distance(d.g, {}), distance(d.h, {}), distance(d.k, {})});
      }
    }
    if (exact) {
      below(11, "AC11.roundtrip", "normalize(parse(to_composition_sum(b))) = b exactly, 200 random b", mismatches, 1,
            std::to_string(mismatches) + " mismatches");
    } else {
      below(11, "AC11.roundtrip", "normalize(parse(to_composition_sum(b))) = b (s not a power of two: to 1e-12)",
            worst, 1e-12, std::to_string(mismatches) + " inexact");
    }

    // generator quintuples: one nonzero coefficient each, in pairwise distinct slots
    constexpr int depth = 8;
    std::vector<SymbolElement> generators;
    auto word = [](std::string head, std::string const &unit, int n) {
      for (int i = 0; i < n; ++i) { head += (head.empty() ? "" : "*") + unit; }
      return head;
    };
    for (int n = 1; n <= depth; ++n) { generators.push_back(symbol_of(word("", "S*C", n))); }
    for (int n = 1; n <= depth; ++n) { generators.push_back(symbol_of(word("", "C*S", n))); }
    for (int n = 0; n <= depth; ++n) { generators.push_back(symbol_of(word("C", "S*C", n))); }
    for (int n = 0; n <= depth; ++n) { generators.push_back(symbol_of(word("S", "C*S", n))); }

    std::map<std::pair<int, std::size_t>, int> slot_index;
    std::vector<std::vector<std::pair<int, std::size_t>>> support(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      auto const &b = generators[i];
      int slot = 0;
      for (auto const *f : {&b.f, &b.g, &b.h, &b.k}) {
        for (std::size_t d = 0; d < f->p().size(); ++d) {
          if (f->p()[d] != Complex(0)) { support[i].push_back({2 * slot, d}); }
        }
        for (std::size_t d = 0; d < f->q().size(); ++d) {
          if (f->q()[d] != Complex(0)) { support[i].push_back({2 * slot + 1, d}); }
        }
        ++slot;
      }
      if (!b.w.is_zero()) { support[i].push_back({-1, 0}); }
      for (auto const &key : support[i]) { slot_index.try_emplace(key, static_cast<int>(slot_index.size())); }
    }
    std::set<std::pair<int, std::size_t>> used;
    bool distinct = true;
    for (auto const &sup : support) {
      distinct = distinct && sup.size() == 1 && used.insert(sup.front()).second;
    }
    Eigen::MatrixXcd coefficients = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(slot_index.size()),
                                                          static_cast<Eigen::Index>(generators.size()));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      auto const &b = generators[i];
      int slot = 0;
      for (auto const *f : {&b.f, &b.g, &b.h, &b.k}) {
        for (std::size_t d = 0; d < f->p().size(); ++d) {
          if (f->p()[d] != Complex(0)) { coefficients(slot_index[{2 * slot, d}], i) = f->p()[d]; }
        }
        for (std::size_t d = 0; d < f->q().size(); ++d) {
          if (f->q()[d] != Complex(0)) { coefficients(slot_index[{2 * slot + 1, d}], i) = f->q()[d]; }
        }
        ++slot;
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(coefficients);
    auto const rank = lu.rank();
    bool const independent = distinct && rank == static_cast<Eigen::Index>(generators.size());
    results_.push_back({11, "AC11.independence", "generator quintuples are linearly independent", {}, {},
                        static_cast<double>(generators.size() - rank), 1, independent,
                        std::to_string(generators.size()) + " generators, rank " + std::to_string(rank) +
                          (distinct ? ", distinct monomial slots" : ", overlapping slots")});
  }
};

Complex random_complex(std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> u(-1, 1);
  double const re = u(rng);
  return {re, u(rng)};
}

std::vector<Complex> random_coefficients(std::mt19937_64 &rng, int length, int first)
{
  std::vector<Complex> c(length);
  for (int i = first; i < length; ++i) { c[i] = random_complex(rng); }
  return c;
}

TrigPolynomial random_trig(std::mt19937_64 &rng)
{
  std::map<int, Complex> w;
  for (int n = -2; n <= 3; ++n) { w[n] = random_complex(rng); }
  return TrigPolynomial(std::move(w));
}

} // namespace

Json to_json(ClaimResult const &r)
{
  Json j{{"id", r.id}, {"criterion", r.criterion}, {"claim", r.claim}};
  j["N"] = r.n ? Json(*r.n) : Json(nullptr);
  j["window"] = r.window ? Json(*r.window) : Json(nullptr);
  j["floor_or_fill"] = r.value;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  if (!r.detail.empty()) { j["detail"] = r.detail; }
  return j;
}

std::vector<ClaimResult> run_battery(Moebius const &phi, BatteryOptions const &options)
{
  return Battery(phi, options).run();
}

SymbolElement random_element(std::mt19937_64 &rng, Contact const &contact)
{
  std::uniform_int_distribution<int> degree(1, 4);
  auto const half = [&] {
    return HalfPolynomial(random_coefficients(rng, degree(rng), 1), random_coefficients(rng, degree(rng), 0));
  };
  SymbolElement b{random_trig(rng), {}, {}, {}, {}, contact};
  b.f = half();
  b.g = half();
  b.h = half();
  b.k = half();
  return b;
}

SymbolElement random_generator_element(std::mt19937_64 &rng, Contact const &contact)
{
  std::uniform_int_distribution<int> degree(1, 5);
  SymbolElement b{random_trig(rng), {}, {}, {}, {}, contact};
  b.f = HalfPolynomial(random_coefficients(rng, degree(rng), 1), {});
  b.g = HalfPolynomial(random_coefficients(rng, degree(rng), 1), {});
  b.h = HalfPolynomial({}, random_coefficients(rng, degree(rng), 0));
  b.k = HalfPolynomial({}, random_coefficients(rng, degree(rng), 0));
  return b;
}

LambdaPoint random_lambda(std::mt19937_64 &rng, Contact const &contact)
{
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> u(0, 1);
  switch (kind(rng)) {
  case 0: {
    for (;;) {
      Complex const z = std::polar(1.0, 2 * std::numbers::pi * u(rng));
      if (std::abs(z - contact.zeta) > 1e-6 && std::abs(z - contact.eta) > 1e-6) { return lambda::Circle{z}; }
    }
  }
  case 1: return lambda::TriplePoint{};
  default: return lambda::Interval{contact.s * (1 - u(rng))};
  }
}

} // namespace hardy
