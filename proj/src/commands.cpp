#include "hardy/commands.hpp"

#include "hardy/error.hpp"
#include "hardy/io.hpp"
#include "hardy/rewriter.hpp"
#include "hardy/verify.hpp"

namespace hardy {

namespace {

CommandOutput failure(std::string message) { return {2, {}, std::move(message) + "\n"}; }

/// Contact data for the symbol calculus, which needs a non-automorphism with zeta != eta.
std::optional<Contact> algebra_contact(Moebius const &phi, std::string &message)
{
  std::optional<Contact> contact;
  try {
    contact = boundary_contact(phi);
  } catch (Error const &e) {
    message = e.what();
    return std::nullopt;
  }
  if (!contact) {
    message = "no boundary contact";
    return std::nullopt;
  }
  if (std::abs(contact->zeta - contact->eta) <= default_tolerances.unimodular) {
    message = "symbol calculus needs a contact point that is not fixed (zeta != eta)";
    return std::nullopt;
  }
  return contact;
}

void emit(CommandOutput &result, JobConfig const &config, std::string const &content)
{
  if (config.out) {
    write_file_atomic(*config.out, content);
  } else {
    result.out += content;
  }
}

} // namespace

void JobConfig::validate() const
{
  if (resolution < 2) { throw Error(ErrorCode::invalid_argument, "--resolution must be at least 2"); }
  if (n < 1) { throw Error(ErrorCode::invalid_argument, "--N must be positive"); }
  if (window < 1 || 2 * window > n) { throw Error(ErrorCode::window_too_large, "--window must satisfy 1 <= window <= N/2"); }
}

Moebius JobConfig::load_map() const
{
  if (!map_path) { return reference_map(); }
  Json j;
  try {
    j = Json::parse(read_file(*map_path));
  } catch (Json::parse_error const &e) {
    throw Error(ErrorCode::invalid_argument, *map_path + ": " + e.what());
  }
  return map_from_json(j);
}

CommandOutput cmd_analyze(JobConfig const &config)
{
  auto const phi = config.load_map();
  auto const cls = classify(phi);
  if (std::holds_alternative<NotSelfMap>(cls)) { return failure("not a self-map of the disk"); }
  if (std::holds_alternative<AutomorphismClass>(cls)) {
    return failure("automorphisms are outside the calculus (C_phi* is not a multiple of C_sigma mod K)");
  }
  if (std::holds_alternative<StrictContraction>(cls)) { return failure("no boundary contact"); }

  auto const &[contact, parabolic] = std::get<ContactClass<double>>(cls);
  auto const sigma = krein_adjoint(phi);
  Json report;
  report["class"] = "contact";
  report["parabolic"] = parabolic;
  report["zeta"] = to_json(contact.zeta);
  report["eta"] = to_json(contact.eta);
  report["dphi"] = to_json(contact.dphi);
  report["s"] = contact.s;
  report["sigma_coeffs"] = to_json(sigma);
  report["tau_translation"] = to_json(parabolic_translation(compose(phi, sigma)));
  report["krein_commutes"] = maps_commute(phi, sigma);

  CommandOutput result;
  emit(result, config, report.dump(2) + "\n");
  return result;
}

CommandOutput cmd_normalize(JobConfig const &config)
{
  auto const phi = config.load_map();
  std::string message;
  auto const contact = algebra_contact(phi, message);
  if (!contact) { return failure(message); }
  auto const expr = parse(config.expression);

  CommandOutput result;
  if (expr.contains(Expr::Kind::compact)) { result.err += "note: explicit K terms vanish modulo compact operators\n"; }
  auto const b = normalize(expr, *contact);
  std::string text;
  try {
    text = to_composition_sum(b).display + "\n";
  } catch (Error const &) {
    text = render(b);
  }
  result.out += text;
  emit(result, config, to_json(b).dump(2) + "\n");
  return result;
}

CommandOutput cmd_spectrum(JobConfig const &config)
{
  auto const phi = config.load_map();
  std::string message;
  auto const contact = algebra_contact(phi, message);
  if (!contact) { return failure(message); }
  auto const b = normalize(parse(config.expression), *contact);
  CommandOutput result;
  emit(result, config, spectrum_csv(essential_spectrum(b, config.resolution)));
  return result;
}

CommandOutput cmd_norm(JobConfig const &config)
{
  auto const phi = config.load_map();
  std::string message;
  auto const contact = algebra_contact(phi, message);
  if (!contact) { return failure(message); }
  auto const b = normalize(parse(config.expression), *contact);
  auto const est = essential_norm(b, config.resolution);
  CommandOutput result;
  if (config.out) {
    Json j{{"norm", est.value}, {"grid_spacing", est.grid_spacing}};
    write_file_atomic(*config.out, j.dump(2) + "\n");
  }
  result.out = format_real(est.value) + "\n";
  result.err = "accuracy: final grid spacing " + format_real(est.grid_spacing) + "\n";
  return result;
}

CommandOutput cmd_verify(JobConfig const &config)
{
  auto const phi = config.load_map();
  std::string message;
  if (!algebra_contact(phi, message)) { return failure(message); }
  BatteryOptions options;
  options.resolution = config.resolution;
  options.n = config.n;
  options.window = config.window;
  auto const results = run_battery(phi, options);

  Json report = Json::array();
  bool all = true;
  CommandOutput result;
  for (auto const &r : results) {
    report.push_back(to_json(r));
    all = all && r.pass;
    if (!r.pass) { result.err += "FAIL " + r.id + ": " + r.claim + "\n"; }
  }
  emit(result, config, report.dump(2) + "\n");
  result.exit_code = all ? 0 : 1;
  return result;
}

} // namespace hardy
