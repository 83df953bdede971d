#pragma once

// Built-in verification manifest. Each claim is keyed to an acceptance criterion
// (AC1..AC11) and records the measured quantity next to its pinned threshold.

#include "hardy/io.hpp"
#include "hardy/moebius.hpp"
#include "hardy/symbol.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hardy {

/// phi_0(z) = -(1+z)/2: zeta = 1, eta = -1, s = 2.
inline Moebius reference_map() { return {-1, -1, 0, 2}; }
/// rho_0(z) = (1+z)/2, fixing its contact point 1.
inline Moebius reference_fixed_map() { return {1, 1, 0, 2}; }

struct BatteryOptions
{
  int resolution = 1000;
  int n = 512;
  int window = 64;
  std::uint64_t seed = 0x5eed2024;
};

struct ClaimResult
{
  int criterion;
  std::string id;
  std::string claim;
  std::optional<int> n;
  std::optional<int> window;
  double value;      ///< floor, fill distance, residual or error, depending on the claim
  double threshold;
  bool pass;
  std::string detail;
};

Json to_json(ClaimResult const &r);

std::vector<ClaimResult> run_battery(Moebius const &phi, BatteryOptions const &options = {});

/// Random element with trig-polynomial and half-polynomial parts of low degree.
SymbolElement random_element(std::mt19937_64 &rng, Contact const &contact);
/// Random element of the generator ring: f, g in tC[t], h, k in sqrt(t)C[t].
SymbolElement random_generator_element(std::mt19937_64 &rng, Contact const &contact);
/// Random point of Lambda: circle (off zeta, eta), triple point, or interval (0, s].
LambdaPoint random_lambda(std::mt19937_64 &rng, Contact const &contact);

} // namespace hardy
