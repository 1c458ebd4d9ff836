#pragma once

#include <complex>
#include <span>
#include <vector>

#include "slitlab/params.hpp"

namespace slitlab {

using Complex = std::complex<double>;

/// Field value together with its analytic gradient.
struct FieldSample {
  Complex value;
  Complex d_dx;
  Complex d_dy;
};

enum class FieldKind {
  one_slit_1,       // psi_one^(1)(x, y) = Psi_one(x, y + a)
  one_slit_2,       // psi_one^(2)(x, y) = Psi_one(x, y - a)
  two_slit,         // Phi = psi_one^(1) + psi_one^(2)
  weighted,         // c1 psi_one^(1) + c2 psi_one^(2)
  image_neumann,    // half-plane y >= 0, mirror with zero normal derivative
  image_dirichlet,  // half-plane y >= 0, mirror with zero value
  restricted_lower, // Phi for y < 0, 0 for y > 0, Phi/2 at y = 0
  restricted_upper, // mirror convention of restricted_lower
};

/// An evaluatable stationary wave field. Pure value type: sampling is a
/// const operation with no shared state, safe to call from any number of
/// threads.
class WaveField {
 public:
  static WaveField one_slit(const PhysicsParams& params, int slit);
  static WaveField two_slit(const PhysicsParams& params);
  /// Throws DomainError when both weights vanish.
  static WaveField weighted(const PhysicsParams& params, Complex c1,
                            Complex c2);
  static WaveField image_neumann(const PhysicsParams& params);
  static WaveField image_dirichlet(const PhysicsParams& params);
  static WaveField restricted_lower(const PhysicsParams& params);
  static WaveField restricted_upper(const PhysicsParams& params);

  /// Value and analytic gradient at (x, y). Throws DomainError outside the
  /// model domain (gaussian: x >= 0; point: x >= x_min; image kinds: y >= 0).
  FieldSample sample(double x, double y) const;

  Complex value(double x, double y) const { return sample(x, y).value; }
  double intensity(double x, double y) const {
    return std::norm(sample(x, y).value);
  }

  FieldKind kind() const noexcept { return kind_; }
  const PhysicsParams& params() const noexcept { return params_; }
  Complex weight1() const noexcept { return c1_; }
  Complex weight2() const noexcept { return c2_; }

 private:
  WaveField(FieldKind kind, const PhysicsParams& params, Complex c1 = 1.0,
            Complex c2 = 1.0)
      : kind_(kind), params_(params), c1_(c1), c2_(c2) {}

  FieldKind kind_;
  PhysicsParams params_;
  Complex c1_, c2_;
};

/// Intensity and amplitude along the detection line x = L.
struct SliceSample {
  double detector_x = 0.0;  // L
  std::vector<double> y;
  std::vector<double> intensity;
  std::vector<Complex> amplitude;
};

/// Samples |field(L, y)|^2 on a strictly increasing grid.
SliceSample intensity_slice(const WaveField& field, double L,
                            std::span<const double> y_grid);

namespace detail {

/// Unshifted one-slit field Psi_one evaluated at transverse offset s,
/// with d/ds and d/dx. Used by every WaveField kind.
FieldSample base_one_slit(const PhysicsParams& params, double x, double s);

/// Transverse 1/e half-width of |Psi_one(x, .)| for the gaussian model:
/// sigma * |q(x)|, q = 1 + i x / (k sigma^2). The slice intensity is a
/// gaussian with standard deviation sigma |q| / sqrt(2).
double gaussian_amplitude_width(const PhysicsParams& params, double x);

}  // namespace detail

}  // namespace slitlab
