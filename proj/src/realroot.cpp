#include "realshadow/realroot.hpp"

#include <algorithm>
#include <cmath>

namespace realshadow {

double RealPoly::eval(double x) const {
  double acc = 0.0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

double RealPoly::magnitude_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (size_t k = c.size(); k-- > 0;) acc = acc * ax + std::abs(c[k]);
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (c.size() <= 1) return RealPoly{{0.0}};
  std::vector<double> out(c.size() - 1);
  for (size_t k = 1; k < c.size(); ++k) out[k - 1] = static_cast<double>(k) * c[k];
  return RealPoly{std::move(out)};
}

RealPoly RealPoly::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  std::vector<double> out = c;
  while (out.size() > 1 && std::abs(out.back()) <= rel_tol * scale) out.pop_back();
  return RealPoly{std::move(out)};
}

bool RealPoly::is_identically_zero(double abs_tol) const {
  for (double v : c)
    if (std::abs(v) > abs_tol) return false;
  return true;
}

double RealPoly::root_bound() const {
  const double lead = std::abs(c.back());
  if (lead == 0.0) return 1.0;
  double m = 0.0;
  for (size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]));
  return 1.0 + m / lead;
}

namespace {

double bisect(const RealPoly& g, double lo, double hi, double flo) {
  for (int it = 0; it < 120 && hi - lo > 0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = g.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_polish(const RealPoly& g, const RealPoly& dg, double x, double lo, double hi) {
  for (int it = 0; it < 8; ++it) {
    const double f = g.eval(x);
    const double df = dg.eval(x);
    if (df == 0.0) break;
    const double next = x - f / df;
    if (!(next >= lo && next <= hi)) break;
    if (next == x) break;
    x = next;
  }
  return x;
}

void roots_rec(const RealPoly& g, std::vector<double>& out, double touch_tol) {
  const RealPoly p = g.trimmed();
  const int d = p.degree();
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-p.c[0] / p.c[1]);
    return;
  }

  std::vector<double> crit;
  roots_rec(p.derivative(), crit, touch_tol);
  std::sort(crit.begin(), crit.end());

  const double bound = p.root_bound();
  std::vector<double> knots;
  knots.push_back(-bound);
  for (double x : crit)
    if (x > -bound && x < bound) knots.push_back(x);
  knots.push_back(bound);

  const RealPoly dp = p.derivative();
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    const double flo = p.eval(lo);
    const double fhi = p.eval(hi);
    if ((flo > 0) != (fhi > 0) || flo == 0.0) {
      double r = (flo == 0.0) ? lo : bisect(p, lo, hi, flo);
      r = newton_polish(p, dp, r, lo, hi);
      out.push_back(r);
    }
  }
  // Touch roots at critical points: g vanishes but does not change sign.
  for (double x : crit) {
    if (std::abs(p.eval(x)) <= touch_tol * std::max(1.0, p.magnitude_at(x))) out.push_back(x);
  }
}

int multiplicity_at(const RealPoly& g, double x) {
  RealPoly cur = g;
  for (int m = 1; m <= g.degree(); ++m) {
    cur = cur.derivative();
    if (std::abs(cur.eval(x)) > 1e-7 * std::max(1.0, cur.magnitude_at(x))) return m;
  }
  return std::max(1, g.degree());
}

}  // namespace

std::vector<RealRoot> real_roots(const RealPoly& g, double touch_tol) {
  std::vector<double> raw;
  roots_rec(g, raw, touch_tol);
  std::sort(raw.begin(), raw.end());

  const RealPoly p = g.trimmed();
  std::vector<RealRoot> out;
  for (double x : raw) {
    if (!out.empty() && std::abs(x - out.back().x) <= 1e-9 * std::max(1.0, std::abs(x))) continue;
    out.push_back(RealRoot{x, multiplicity_at(p, x)});
  }
  return out;
}

std::vector<double> real_root_locations(const RealPoly& g, double touch_tol) {
  std::vector<double> out;
  for (const RealRoot& r : real_roots(g, touch_tol)) out.push_back(r.x);
  return out;
}

}  // namespace realshadow
