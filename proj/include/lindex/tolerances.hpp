#pragma once

namespace lindex {

/// Numerical thresholds shared across modules. Defaults sit well above
/// double-precision noise for 2x2 algebra and well below physical scales.
struct Tolerances {
  double herm = 1e-10;       // Hermiticity / real Pauli coefficients
  double norm = 1e-10;       // axis normalization
  double collinear = 1e-9;   // cross-product test, relative to input norms
  double closure = 1e-9;     // singular values of the stacked span matrix
  double psd = 1e-10;        // dissipator coefficient matrix PSD check
  double deg = 1e-10;        // relative gap below which gamma1 == gamma2
  double ep = 1e-8;          // exceptional-point detection (gamma = 1 units)

  /// Same value for every structural tolerance; `ep` is left alone.
  static Tolerances uniform(double value) {
    Tolerances t;
    t.herm = t.norm = t.collinear = t.closure = t.psd = value;
    return t;
  }
};

}  // namespace lindex
