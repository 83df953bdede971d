#pragma once

#include "hardy/expression.hpp"
#include "hardy/symbol.hpp"

#include <string>

namespace hardy {

/// Canonical quintuple of the coset of `e` modulo compact operators.
/// `K` atoms normalize to zero.
SymbolElement normalize(Expr const &e, Contact const &contact);

/// Multi-line listing of w, f, g, h, k.
std::string render(SymbolElement const &b);

/// The decomposition T_w + (composition operators over iterates of phi o sigma,
/// sigma o phi) + K, in display form and as a parser-compatible expression.
struct CompositionSum
{
  std::string display;
  std::string expression;
};

/// Requires f, g in t C[t] and h, k in sqrt(t) C[t]; throws not_in_generator_ring otherwise.
CompositionSum to_composition_sum(SymbolElement const &b);

} // namespace hardy
