#include "garland/polynomial.hpp"

#include <sstream>

#include "garland/error.hpp"

namespace garland {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::linear(const Rational& root) { return RatPolynomial({-root, Rational(1)}); }

RatPolynomial RatPolynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return *this;
  RatPolynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::compose_scale(const Rational& a) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (auto& c : out) {
    c *= power;
    power *= a;
  }
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const { return *this + (-o); }

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return RatPolynomial(std::move(out));
}

std::string RatPolynomial::to_exact_string() const {
  if (is_zero()) return "0/1";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ' ';
    out += garland::to_exact_string(coeffs_[k]);
  }
  return out;
}

RatPolynomial RatPolynomial::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_rational(token));
  return RatPolynomial(std::move(coeffs));
}

std::string RatPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool first = out.empty();
    Rational mag = abs(c);
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    if (first && sgn(c) < 0) out += "-";
    const bool unit = (mag == 1);
    if (!unit || k == 0) out += mag.get_str();
    if (k >= 1) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const int db = b.degree();
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational f = rem[k] / lead;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RatPolynomial lcm(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool squarefree_certify(const RatPolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

RatPolynomial expand(const std::vector<RatPolynomial>& factors) {
  RatPolynomial out = RatPolynomial::constant(1);
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace garland
