#ifndef REALSHADOW_TYPES_HPP
#define REALSHADOW_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace realshadow {

using Cplx = std::complex<double>;

/// Orbit values beyond this magnitude are treated as having escaped to
/// infinity; iterating past it would overflow doubles long before the
/// dynamics is meaningful.
inline constexpr double kOverflowGuard = 1e100;

/// Failure modes surfaced by the library. The CLI maps these onto its
/// exit-code contract.
enum class Errc {
  ambiguous_classification,
  not_non_exceptional,
  precondition_violated,
  escaped,
  not_converged,
  outside_domain,
  branch_ambiguity,
  root_solve_failed,
  root_isolation_failed,
  not_escaping,
  insufficient_sample,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Change of variable z -> a*z + b with a real and nonzero. These are the
/// only affine maps that send vertical lines to vertical lines, so they are
/// the symmetry group available to everything built on real parts.
struct RealAffineMap {
  double a = 1.0;
  Cplx b = 0.0;

  Cplx operator()(Cplx z) const { return a * z + b; }
  Cplx inverse(Cplx w) const { return (w - b) / a; }
};

}  // namespace realshadow

#endif
