#include "hardy/io.hpp"

#include "hardy/error.hpp"
#include "hardy/expression.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardy {

namespace {

Json half_to_json(HalfPolynomial const &f)
{
  Json p = Json::array(), q = Json::array();
  for (auto const &c : f.p()) { p.push_back(to_json(c)); }
  for (auto const &c : f.q()) { q.push_back(to_json(c)); }
  return Json{{"p", p}, {"q", q}};
}

HalfPolynomial half_from_json(Json const &j)
{
  std::vector<Complex> p, q;
  for (auto const &c : j.at("p")) { p.push_back(complex_from_json(c)); }
  for (auto const &c : j.at("q")) { q.push_back(complex_from_json(c)); }
  return HalfPolynomial(std::move(p), std::move(q));
}

} // namespace

Json to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Complex complex_from_json(Json const &j)
{
  if (j.is_number()) { return {j.get<double>(), 0}; }
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::invalid_argument, "complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(Moebius const &m)
{
  return Json{{"a", to_json(m.a())}, {"b", to_json(m.b())}, {"c", to_json(m.c())}, {"d", to_json(m.d())}};
}

Moebius map_from_json(Json const &j)
{
  try {
    return Moebius(complex_from_json(j.at("a")), complex_from_json(j.at("b")), complex_from_json(j.at("c")),
                   complex_from_json(j.at("d")));
  } catch (Json::exception const &e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed map JSON: ") + e.what());
  }
}

Json to_json(SymbolElement const &b)
{
  Json w = Json::array();
  for (auto const &[n, c] : b.w.coefficients()) { w.push_back(Json::array({n, c.real(), c.imag()})); }
  return Json{{"w", w},
              {"f", half_to_json(b.f)},
              {"g", half_to_json(b.g)},
              {"h", half_to_json(b.h)},
              {"k", half_to_json(b.k)},
              {"s", b.s()},
              {"zeta", to_json(b.contact.zeta)},
              {"eta", to_json(b.contact.eta)}};
}

SymbolElement symbol_from_json(Json const &j)
{
  try {
    std::map<int, Complex> w;
    for (auto const &term : j.at("w")) { w[term.at(0).get<int>()] += Complex(term.at(1).get<double>(), term.at(2).get<double>()); }
    auto const contact =
      Contact::from_points(complex_from_json(j.at("zeta")), complex_from_json(j.at("eta")), j.at("s").get<double>());
    return SymbolElement{TrigPolynomial(std::move(w)), half_from_json(j.at("f")), half_from_json(j.at("g")),
                         half_from_json(j.at("h")),    half_from_json(j.at("k")), contact};
  } catch (Json::exception const &e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed symbol JSON: ") + e.what());
  }
}

std::string spectrum_csv(std::vector<SpectrumPoint> const &points)
{
  std::string out = "re,im,source\n";
  for (auto const &p : points) {
    out += format_real(p.z.real()) + "," + format_real(p.z.imag()) + "," + to_string(p.source) + "\n";
  }
  return out;
}

std::string matrix_csv(TruncatedOperator const &m)
{
  std::string out = "row,col,re,im\n";
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out += std::to_string(i) + "," + std::to_string(j) + "," + format_real(m(i, j).real()) + "," +
             format_real(m(i, j).imag()) + "\n";
    }
  }
  return out;
}

std::string sequence_csv(std::vector<double> const &values)
{
  std::string out = "n,norm\n";
  for (std::size_t n = 0; n < values.size(); ++n) { out += std::to_string(n) + "," + format_real(values[n]) + "\n"; }
  return out;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) { throw Error(ErrorCode::invalid_argument, "cannot open " + path); }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(std::string const &path, std::string const &content)
{
  std::string const tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) { throw Error(ErrorCode::invalid_argument, "cannot write " + tmp); }
    out << content;
    if (!out.flush()) { throw Error(ErrorCode::invalid_argument, "write failed for " + tmp); }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::invalid_argument, "cannot rename " + tmp + " to " + path);
  }
}

} // namespace hardy
