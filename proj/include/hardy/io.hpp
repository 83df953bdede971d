#pragma once

#include "hardy/moebius.hpp"
#include "hardy/oracle.hpp"
#include "hardy/symbol.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hardy {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(Json const &j);

/// {"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}
Json to_json(Moebius const &m);
Moebius map_from_json(Json const &j);

/// {"w":[[n,re,im],...],"f":{"p":[[re,im],...],"q":[...]},...,"s":s,"zeta":[re,im],"eta":[re,im]}
Json to_json(SymbolElement const &b);
SymbolElement symbol_from_json(Json const &j);

/// Header `re,im,source`.
std::string spectrum_csv(std::vector<SpectrumPoint> const &points);
/// Header `row,col,re,im`, one line per entry in column-major order.
std::string matrix_csv(TruncatedOperator const &m);
/// Header `n,norm`.
std::string sequence_csv(std::vector<double> const &values);

std::string read_file(std::string const &path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(std::string const &path, std::string const &content);

} // namespace hardy
