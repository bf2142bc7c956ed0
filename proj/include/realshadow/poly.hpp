#ifndef REALSHADOW_POLY_HPP
#define REALSHADOW_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "realshadow/types.hpp"

namespace realshadow {

/// Complex polynomial stored as ascending coefficients a_0..a_d.
/// Trailing zero coefficients are trimmed at construction, so degree()
/// always reports the true degree and leading() is nonzero for any
/// non-constant input.
class Polynomial {
 public:
  Polynomial() : coeffs_{Cplx(0.0)} {}
  explicit Polynomial(std::vector<Cplx> coeffs);

  /// Accepts either the JSON pair-array form "[[re,im],...]" (ascending) or
  /// a human form with real coefficients such as "z^2 - 2" or "0.5 z^3 + z".
  static Polynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(int j) const { return (j >= 0 && j <= degree()) ? coeffs_[static_cast<size_t>(j)] : Cplx(0.0); }
  Cplx leading() const { return coeffs_.back(); }

  Cplx eval(Cplx z) const;
  Cplx derivative_at(Cplx z) const;
  Polynomial derivative() const;

  /// n-fold composition P^n(z), guarded: stops early and reports escape by
  /// returning the last finite value through `escaped_at` (set to the first
  /// index whose magnitude exceeds the overflow guard, or -1).
  Cplx iterate_value(Cplx z, int n, int* escaped_at = nullptr) const;

  std::string to_json() const;
  /// Human form; falls back to the JSON form when a coefficient has a
  /// nonzero imaginary part.
  std::string to_string() const;

  /// FNV-1a digest of the coefficient bytes, used to stamp samples.
  std::uint64_t hash() const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Cplx> coeffs_;
};

/// Coefficients of m . P . m^{-1} (conjugation by the affine change of
/// variable). Degree is preserved.
Polynomial conjugate(const Polynomial& p, const RealAffineMap& m);

struct Normalized {
  Polynomial poly;
  RealAffineMap map;
};

/// Conjugates P (degree >= 2) so that the leading coefficient has unit
/// modulus and the z^{d-1} coefficient vanishes. Only real scalings and
/// translations are used, so the leading phase is untouched.
Normalized normalize(const Polynomial& p);

}  // namespace realshadow

#endif
