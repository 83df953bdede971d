#include "hardy/commands.hpp"
#include "hardy/error.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

int main(int argc, char **argv)
{
  CLI::App app{"Essential spectra, essential norms and canonical forms in C*(T_z, C_phi)"};
  app.require_subcommand(1);

  hardy::JobConfig config;
  std::string map_path, out_path;

  using Command = std::function<hardy::CommandOutput(hardy::JobConfig const &)>;
  std::map<CLI::App *, Command> commands;

  auto add = [&](char const *name, char const *description, Command command, bool needs_expr) {
    auto *sub = app.add_subcommand(name, description);
    sub->add_option("--map", map_path, "JSON map {\"a\":[re,im],...}; default -(1+z)/2")->check(CLI::ExistingFile);
    auto *expr = sub->add_option("--expr", config.expression, "operator expression, e.g. \"T{z} + C + C'\"");
    if (needs_expr) { expr->required(); }
    sub->add_option("--resolution", config.resolution, "grid points on the circle and on [0, s]")->capture_default_str();
    sub->add_option("--N", config.n, "truncation dimension")->capture_default_str();
    sub->add_option("--window", config.window, "vanishing-sequence window")->capture_default_str();
    sub->add_option("--out", out_path, "output file (written atomically)");
    commands[sub] = std::move(command);
  };
  add("analyze", "classify the map and report contact data", hardy::cmd_analyze, false);
  add("normalize", "canonical form of an expression modulo compacts", hardy::cmd_normalize, true);
  add("spectrum", "essential spectrum as CSV (re,im,source)", hardy::cmd_spectrum, true);
  add("norm", "essential norm", hardy::cmd_norm, true);
  add("verify", "run the verification battery", hardy::cmd_verify, false);

  CLI11_PARSE(app, argc, argv);

  if (!map_path.empty()) { config.map_path = map_path; }
  if (!out_path.empty()) { config.out = out_path; }

  try {
    config.validate();
    for (auto const &[sub, command] : commands) {
      if (sub->parsed()) {
        auto const result = command(config);
        std::cout << result.out;
        std::cerr << result.err;
        return result.exit_code;
      }
    }
  } catch (hardy::ParseError const &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (hardy::Error const &e) {
    std::cerr << hardy::to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
