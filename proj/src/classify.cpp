#include "realshadow/classify.hpp"

#include <algorithm>
#include <cmath>

namespace realshadow {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::NonExceptional: return "NonExceptional";
    case Kind::StronglyExceptional: return "StronglyExceptional";
    case Kind::WeaklyExceptional: return "WeaklyExceptional";
  }
  return "?";
}

namespace {

// i^{j-1} without trig; j >= 0 (j = 0 means i^{-1} = -i).
Cplx ipow(int e) {
  e = ((e % 4) + 4) % 4;
  switch (e) {
    case 0: return Cplx(1, 0);
    case 1: return Cplx(0, 1);
    case 2: return Cplx(-1, 0);
    default: return Cplx(0, -1);
  }
}

enum class Trilean { yes, no, ambiguous };

Trilean is_real(Cplx c, double tol) {
  const double band = tol * std::max(1.0, std::abs(c));
  const double r = std::abs(c.imag());
  if (r <= band) return Trilean::yes;
  if (r >= 2.0 * band) return Trilean::no;
  return Trilean::ambiguous;
}

}  // namespace

Classification classify(const Polynomial& p, double tol) {
  if (tol < 0) throw std::invalid_argument("classify: tol must be >= 0");
  const int d = p.degree();
  if (d < 2) throw std::invalid_argument("classify requires degree >= 2");

  Polynomial q = normalize(p).poly;

  // Roundoff from the conjugation can leave specks where coefficients are
  // exactly zero in substance; zap them before the residual tests.
  std::vector<Cplx> c = q.coeffs();
  double scale = 0.0;
  for (const Cplx& v : c) scale = std::max(scale, std::abs(v));
  for (Cplx& v : c) {
    if (std::abs(v) < 1e-14 * scale) v = Cplx(0.0);
  }

  Classification out;
  out.residuals.assign(static_cast<size_t>(d) + 1, 0.0);
  for (int j = 0; j <= d; ++j) {
    if (c[static_cast<size_t>(j)] == Cplx(0.0)) continue;
    out.residuals[static_cast<size_t>(j)] = std::abs((c[static_cast<size_t>(j)] * ipow(j - 1)).imag());
  }

  const Cplx lead = c[static_cast<size_t>(d)] * ipow(d - 1);
  switch (is_real(lead, tol)) {
    case Trilean::no:
      out.kind = Kind::NonExceptional;
      return out;
    case Trilean::ambiguous:
      fail(Errc::ambiguous_classification,
           "leading residual " + std::to_string(std::abs(lead.imag())) + " lies on the decision boundary");
    case Trilean::yes:
      break;
  }

  bool all_real = true;
  for (int j = 0; j < d; ++j) {
    if (c[static_cast<size_t>(j)] == Cplx(0.0)) continue;
    switch (is_real(c[static_cast<size_t>(j)] * ipow(j - 1), tol)) {
      case Trilean::yes:
        break;
      case Trilean::no:
        all_real = false;
        break;
      case Trilean::ambiguous:
        fail(Errc::ambiguous_classification,
             "coefficient " + std::to_string(j) + " residual lies on the decision boundary");
    }
  }
  out.kind = all_real ? Kind::StronglyExceptional : Kind::WeaklyExceptional;
  return out;
}

}  // namespace realshadow
