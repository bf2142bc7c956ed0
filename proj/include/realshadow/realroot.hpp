#ifndef REALSHADOW_REALROOT_HPP
#define REALSHADOW_REALROOT_HPP

#include <vector>

namespace realshadow {

/// Real polynomial, ascending coefficients c_0..c_n.
struct RealPoly {
  std::vector<double> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  double eval(double x) const;
  /// Sum |c_k| |x|^k, the natural magnitude scale for residual tests at x.
  double magnitude_at(double x) const;
  RealPoly derivative() const;
  /// Drops trailing coefficients below rel_tol * max|c_k|.
  RealPoly trimmed(double rel_tol = 1e-14) const;
  bool is_identically_zero(double abs_tol) const;
  /// Cauchy bound: every real root lies in [-B, B].
  double root_bound() const;
};

struct RealRoot {
  double x;
  int multiplicity;
};

/// All real roots of g, found by recursive critical-point subdivision: the
/// roots of g' split the line into monotone intervals, each holding at most
/// one sign-change root; critical points where |g| vanishes to tolerance are
/// reported as even-order touch roots. Roots are polished by Newton and
/// returned ascending with multiplicities.
std::vector<RealRoot> real_roots(const RealPoly& g, double touch_tol = 1e-9);

/// Convenience: root abscissas only (each listed once, ascending).
std::vector<double> real_root_locations(const RealPoly& g, double touch_tol = 1e-9);

}  // namespace realshadow

#endif
