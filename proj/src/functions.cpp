#include "hardy/functions.hpp"

#include "hardy/error.hpp"

#include <algorithm>

namespace hardy {

namespace {

std::vector<Complex> poly_add(std::vector<Complex> a, std::vector<Complex> const &b)
{
  if (a.size() < b.size()) { a.resize(b.size()); }
  for (std::size_t i = 0; i < b.size(); ++i) { a[i] += b[i]; }
  return a;
}

std::vector<Complex> poly_mul(std::vector<Complex> const &a, std::vector<Complex> const &b)
{
  if (a.empty() || b.empty()) { return {}; }
  std::vector<Complex> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) { r[i + j] += a[i] * b[j]; }
  }
  return r;
}

Complex horner(std::vector<Complex> const &c, double t)
{
  Complex r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) { r = r * t + *it; }
  return r;
}

} // namespace

TrigPolynomial::TrigPolynomial(std::map<int, Complex> coeffs)
  : coeffs_(std::move(coeffs))
{
  prune();
}

void TrigPolynomial::prune()
{
  std::erase_if(coeffs_, [](auto const &kv) { return kv.second == Complex(0); });
}

Complex TrigPolynomial::coefficient(int n) const
{
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex(0) : it->second;
}

int TrigPolynomial::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int TrigPolynomial::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Complex TrigPolynomial::operator()(Complex z) const
{
  Complex r = 0;
  for (auto const &[n, c] : coeffs_) {
    r += c * (n >= 0 ? std::pow(z, n) : std::pow(std::conj(z), -n));
  }
  return r;
}

TrigPolynomial TrigPolynomial::conj() const
{
  std::map<int, Complex> out;
  for (auto const &[n, c] : coeffs_) { out[-n] = std::conj(c); }
  return TrigPolynomial(std::move(out));
}

TrigPolynomial &TrigPolynomial::operator+=(TrigPolynomial const &o)
{
  for (auto const &[n, c] : o.coeffs_) { coeffs_[n] += c; }
  prune();
  return *this;
}

TrigPolynomial operator*(TrigPolynomial const &a, TrigPolynomial const &b)
{
  std::map<int, Complex> out;
  for (auto const &[m, x] : a.coeffs_) {
    for (auto const &[n, y] : b.coeffs_) { out[m + n] += x * y; }
  }
  return TrigPolynomial(std::move(out));
}

TrigPolynomial operator*(TrigPolynomial const &a, Complex c)
{
  std::map<int, Complex> out;
  for (auto const &[n, x] : a.coeffs_) { out[n] = x * c; }
  return TrigPolynomial(std::move(out));
}

HalfPolynomial::HalfPolynomial(std::vector<Complex> p, std::vector<Complex> q)
  : p_(std::move(p))
  , q_(std::move(q))
{
  if (!p_.empty() && p_[0] != Complex(0)) {
    throw Error(ErrorCode::invalid_argument, "function part must vanish at t = 0 (p(0) != 0)");
  }
  trim();
}

HalfPolynomial HalfPolynomial::t_power(int n, Complex c)
{
  if (n < 1) { throw Error(ErrorCode::invalid_argument, "t^n needs n >= 1"); }
  std::vector<Complex> p(n + 1);
  p[n] = c;
  return HalfPolynomial(std::move(p), {});
}

void HalfPolynomial::trim()
{
  while (!p_.empty() && p_.back() == Complex(0)) { p_.pop_back(); }
  while (!q_.empty() && q_.back() == Complex(0)) { q_.pop_back(); }
}

Complex HalfPolynomial::operator()(double t) const { return horner(p_, t) + std::sqrt(t) * horner(q_, t); }

HalfPolynomial HalfPolynomial::conj() const
{
  HalfPolynomial r = *this;
  for (auto &x : r.p_) { x = std::conj(x); }
  for (auto &x : r.q_) { x = std::conj(x); }
  return r;
}

HalfPolynomial &HalfPolynomial::operator+=(HalfPolynomial const &o)
{
  p_ = poly_add(std::move(p_), o.p_);
  q_ = poly_add(std::move(q_), o.q_);
  trim();
  return *this;
}

HalfPolynomial operator*(HalfPolynomial const &a, HalfPolynomial const &b)
{
  // (p1 + r q1)(p2 + r q2) = p1 p2 + t q1 q2 + r (p1 q2 + q1 p2), r = sqrt(t)
  auto tqq = poly_mul(a.q_, b.q_);
  if (!tqq.empty()) { tqq.insert(tqq.begin(), Complex(0)); }
  HalfPolynomial r;
  r.p_ = poly_add(poly_mul(a.p_, b.p_), tqq);
  r.q_ = poly_add(poly_mul(a.p_, b.q_), poly_mul(a.q_, b.p_));
  r.trim();
  return r;
}

HalfPolynomial operator*(HalfPolynomial const &a, Complex c)
{
  HalfPolynomial r = a;
  for (auto &x : r.p_) { x *= c; }
  for (auto &x : r.q_) { x *= c; }
  r.trim();
  return r;
}

double distance(HalfPolynomial const &a, HalfPolynomial const &b)
{
  auto const d = a - b;
  double m = 0;
  for (auto const &x : d.p_) { m = std::max(m, std::abs(x)); }
  for (auto const &x : d.q_) { m = std::max(m, std::abs(x)); }
  return m;
}

} // namespace hardy
