#ifndef REALSHADOW_CLASSIFY_HPP
#define REALSHADOW_CLASSIFY_HPP

#include <string>
#include <vector>

#include "realshadow/poly.hpp"

namespace realshadow {

enum class Kind { NonExceptional, StronglyExceptional, WeaklyExceptional };

std::string to_string(Kind k);

/// Verdict of the exceptional/non-exceptional test, together with the
/// per-coefficient residuals |Im(c_j i^{j-1})| of the normalized polynomial
/// that the decision was based on.
struct Classification {
  Kind kind = Kind::NonExceptional;
  std::vector<double> residuals;  // index j = 0..d
};

/// Classifies P (degree >= 2). The polynomial is first brought to the
/// normal form (unit-modulus leading coefficient, no z^{d-1} term) by a
/// vertical-line-preserving conjugation; on that form:
///   - non-exceptional    <=>  c_d i^{d-1} is not real,
///   - strongly exceptional <=> c_j i^{j-1} is real for every nonzero c_j
///                              (the imaginary axis maps into itself),
///   - weakly exceptional otherwise.
/// "Real" is judged with the relative band |Im| <= tol*max(1,|c|); residuals
/// falling between one and two bands are refused as ambiguous.
Classification classify(const Polynomial& p, double tol = 1e-9);

}  // namespace realshadow

#endif
