#include "realshadow/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <sstream>

#include "json.hpp"

namespace realshadow {

namespace {

bool is_tiny(Cplx c) { return std::abs(c.real()) < 1e-300 && std::abs(c.imag()) < 1e-300; }

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Polynomial::Polynomial(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && is_tiny(coeffs_.back())) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Cplx(0.0));
}

Cplx Polynomial::eval(Cplx z) const {
  Cplx acc = coeffs_.back();
  for (size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

Cplx Polynomial::derivative_at(Cplx z) const {
  const int d = degree();
  if (d == 0) return Cplx(0.0);
  Cplx acc = static_cast<double>(d) * coeffs_.back();
  for (int k = d - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs_[static_cast<size_t>(k)];
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int d = degree();
  if (d == 0) return Polynomial();
  std::vector<Cplx> out(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k) out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * coeffs_[static_cast<size_t>(k)];
  return Polynomial(std::move(out));
}

Cplx Polynomial::iterate_value(Cplx z, int n, int* escaped_at) const {
  if (escaped_at) *escaped_at = -1;
  for (int k = 0; k < n; ++k) {
    if (std::abs(z) > kOverflowGuard) {
      if (escaped_at) *escaped_at = k;
      return z;
    }
    z = eval(z);
  }
  if (escaped_at && std::abs(z) > kOverflowGuard) *escaped_at = n;
  return z;
}

std::uint64_t Polynomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const Cplx& c : coeffs_) {
    mix(c.real());
    mix(c.imag());
  }
  return h;
}

std::string Polynomial::to_json() const {
  std::string out = "[";
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ",";
    out += "[" + fmt17(coeffs_[j].real()) + "," + fmt17(coeffs_[j].imag()) + "]";
  }
  return out + "]";
}

std::string Polynomial::to_string() const {
  for (const Cplx& c : coeffs_)
    if (c.imag() != 0.0) return to_json();
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    double c = coeffs_[static_cast<size_t>(j)].real();
    if (c == 0.0 && degree() > 0) continue;
    if (out.empty()) {
      out += (c < 0 ? "-" : "");
    } else {
      out += (c < 0 ? " - " : " + ");
    }
    double mag = std::abs(c);
    if (mag != 1.0 || j == 0) out += fmt17(mag);
    if (j > 0) {
      if (mag != 1.0) out += " ";
      out += "z";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

Polynomial parse_json_pairs(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty()) throw std::invalid_argument("polynomial JSON must be a nonempty array");
  std::vector<Cplx> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_number()) {
      coeffs.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
      coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw std::invalid_argument("polynomial JSON entries must be numbers or [re,im] pairs");
    }
  }
  return Polynomial(std::move(coeffs));
}

// Grammar per term: [sign] [number] [ [*] z [^ exponent] ]
Polynomial parse_human(std::string_view text) {
  std::vector<Cplx> coeffs;
  auto bump = [&coeffs](int power, double value) {
    if (power >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(power) + 1, Cplx(0.0));
    coeffs[static_cast<size_t>(power)] += value;
  };

  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  bool any = false;
  while (i < n) {
    double sign = 1.0;
    skip_ws();
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      sign = (text[i] == '-') ? -1.0 : 1.0;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' between polynomial terms");
    }
    if (i >= n) throw std::invalid_argument("dangling sign in polynomial");

    double value = 1.0;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.') {
      size_t used = 0;
      value = std::stod(std::string(text.substr(i)), &used);
      i += used;
      saw_number = true;
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }

    int power = 0;
    if (i < n && (text[i] == 'z' || text[i] == 'Z')) {
      ++i;
      power = 1;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        size_t used = 0;
        long e = std::stol(std::string(text.substr(i)), &used, 10);
        if (used == 0 || e < 0) throw std::invalid_argument("bad exponent in polynomial");
        i += used;
        power = static_cast<int>(e);
      }
    } else if (!saw_number) {
      throw std::invalid_argument("expected coefficient or 'z' in polynomial term");
    }

    bump(power, sign * value);
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_json_pairs(text);
  return parse_human(text);
}

Polynomial conjugate(const Polynomial& p, const RealAffineMap& m) {
  if (m.a == 0.0) throw std::invalid_argument("conjugate: map scale must be nonzero");
  // Horner with linear substitution: q(z) = P((z - b)/a), then a*q + b.
  const Cplx c1 = Cplx(1.0 / m.a);
  const Cplx c0 = -m.b / m.a;
  std::vector<Cplx> acc{p.leading()};
  for (int k = p.degree() - 1; k >= 0; --k) {
    std::vector<Cplx> next(acc.size() + 1, Cplx(0.0));
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j] * c1;
      next[j] += acc[j] * c0;
    }
    next[0] += p.coeff(k);
    acc = std::move(next);
  }
  for (Cplx& c : acc) c *= m.a;
  acc[0] += m.b;
  return Polynomial(std::move(acc));
}

Normalized normalize(const Polynomial& p) {
  const int d = p.degree();
  if (d < 2) throw std::invalid_argument("normalize requires degree >= 2");
  const double a = std::pow(std::abs(p.leading()), 1.0 / (d - 1));
  const Cplx b = a * p.coeff(d - 1) / (static_cast<double>(d) * p.leading());
  RealAffineMap m{a, b};
  Polynomial q = conjugate(p, m);

  // The construction kills the z^{d-1} coefficient analytically; snap the
  // floating-point residue to exact zero so downstream coefficient tests
  // see the normal form.
  std::vector<Cplx> coeffs = q.coeffs();
  double scale = 0.0;
  for (const Cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  if (std::abs(coeffs[static_cast<size_t>(d - 1)]) <= 1e-12 * scale) coeffs[static_cast<size_t>(d - 1)] = Cplx(0.0);
  return Normalized{Polynomial(std::move(coeffs)), m};
}

}  // namespace realshadow
