#include "slitlab/field.hpp"

#include <cmath>

namespace slitlab {

namespace detail {

namespace {

constexpr Complex kI{0.0, 1.0};

FieldSample gaussian_one_slit(const PhysicsParams& p, double x, double s) {
  if (x < 0.0) {
    throw DomainError("gaussian model requires x >= 0");
  }
  const double k = p.wavenumber;
  const double sigma2 = p.slit_width * p.slit_width;
  const Complex q{1.0, x / (k * sigma2)};
  const Complex dq_dx = kI / (k * sigma2);

  // Psi = q^{-1/2} exp(i k x - s^2 / (2 sigma^2 q)); exact solution of the
  // paraxial equation 2 i k dA/dx + d2A/dy2 = 0 for A = Psi exp(-i k x).
  const Complex value =
      std::exp(kI * (k * x) - s * s / (2.0 * sigma2 * q)) / std::sqrt(q);
  const Complex d_ds = value * (-s / (sigma2 * q));
  const Complex d_dx =
      value * (kI * k - dq_dx / (2.0 * q) +
               s * s * dq_dx / (2.0 * sigma2 * q * q));
  return {value, d_dx, d_ds};
}

FieldSample point_one_slit(const PhysicsParams& p, double x, double s) {
  if (x < p.x_min) {
    throw DomainError("point model requires x >= x_min");
  }
  const double k = p.wavenumber;
  // Fresnel kernel: x^{-1/2} exp(i k x + i k s^2 / (2 x)).
  const Complex value =
      std::exp(kI * (k * x + k * s * s / (2.0 * x))) / std::sqrt(x);
  const Complex d_ds = value * (kI * (k * s / x));
  const Complex d_dx =
      value * (-0.5 / x + kI * (k - k * s * s / (2.0 * x * x)));
  return {value, d_dx, d_ds};
}

}  // namespace

FieldSample base_one_slit(const PhysicsParams& p, double x, double s) {
  return p.model == FieldModel::gaussian ? gaussian_one_slit(p, x, s)
                                         : point_one_slit(p, x, s);
}

double gaussian_amplitude_width(const PhysicsParams& p, double x) {
  const double u = x / (p.wavenumber * p.slit_width * p.slit_width);
  return p.slit_width * std::sqrt(1.0 + u * u);
}

}  // namespace detail

namespace {

FieldSample operator+(const FieldSample& a, const FieldSample& b) {
  return {a.value + b.value, a.d_dx + b.d_dx, a.d_dy + b.d_dy};
}

FieldSample scale(const FieldSample& a, Complex c) {
  return {c * a.value, c * a.d_dx, c * a.d_dy};
}

}  // namespace

WaveField WaveField::one_slit(const PhysicsParams& params, int slit) {
  if (slit != 1 && slit != 2) throw DomainError("slit index must be 1 or 2");
  return WaveField(slit == 1 ? FieldKind::one_slit_1 : FieldKind::one_slit_2,
                   params);
}

WaveField WaveField::two_slit(const PhysicsParams& params) {
  return WaveField(FieldKind::two_slit, params);
}

WaveField WaveField::weighted(const PhysicsParams& params, Complex c1,
                              Complex c2) {
  if (c1 == Complex{0.0, 0.0} && c2 == Complex{0.0, 0.0}) {
    throw DomainError("weighted field requires (c1, c2) != (0, 0)");
  }
  return WaveField(FieldKind::weighted, params, c1, c2);
}

WaveField WaveField::image_neumann(const PhysicsParams& params) {
  return WaveField(FieldKind::image_neumann, params);
}

WaveField WaveField::image_dirichlet(const PhysicsParams& params) {
  return WaveField(FieldKind::image_dirichlet, params);
}

WaveField WaveField::restricted_lower(const PhysicsParams& params) {
  return WaveField(FieldKind::restricted_lower, params);
}

WaveField WaveField::restricted_upper(const PhysicsParams& params) {
  return WaveField(FieldKind::restricted_upper, params);
}

FieldSample WaveField::sample(double x, double y) const {
  const double a = params_.slit_half_separation;
  switch (kind_) {
    case FieldKind::one_slit_1:
      return detail::base_one_slit(params_, x, y + a);
    case FieldKind::one_slit_2:
      return detail::base_one_slit(params_, x, y - a);
    case FieldKind::two_slit:
      return detail::base_one_slit(params_, x, y + a) +
             detail::base_one_slit(params_, x, y - a);
    case FieldKind::weighted:
      return scale(detail::base_one_slit(params_, x, y + a), c1_) +
             scale(detail::base_one_slit(params_, x, y - a), c2_);
    case FieldKind::image_neumann:
    case FieldKind::image_dirichlet: {
      if (y < 0.0) {
        throw DomainError("image fields are defined on y >= 0");
      }
      // Physical source is slit 2; the image source sits at the mirrored
      // point -y. d/dy of the image term picks up the reflection sign.
      const FieldSample physical = detail::base_one_slit(params_, x, y - a);
      FieldSample image = detail::base_one_slit(params_, x, -y - a);
      image.d_dy = -image.d_dy;
      if (kind_ == FieldKind::image_dirichlet) {
        image = scale(image, -1.0);
      }
      return physical + image;
    }
    case FieldKind::restricted_lower:
    case FieldKind::restricted_upper: {
      const bool live_side =
          kind_ == FieldKind::restricted_lower ? (y < 0.0) : (y > 0.0);
      if (live_side) {
        return detail::base_one_slit(params_, x, y + a) +
               detail::base_one_slit(params_, x, y - a);
      }
      if (y == 0.0) {
        // Boundary convention: each substate carries Phi(x, 0)/2.
        const FieldSample phi = detail::base_one_slit(params_, x, a) +
                                detail::base_one_slit(params_, x, -a);
        return scale(phi, 0.5);
      }
      return {Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    }
  }
  throw DomainError("unknown field kind");
}

SliceSample intensity_slice(const WaveField& field, double L,
                            std::span<const double> y_grid) {
  for (std::size_t i = 1; i < y_grid.size(); ++i) {
    if (!(y_grid[i] > y_grid[i - 1])) {
      throw DomainError("slice grid must be strictly increasing");
    }
  }
  SliceSample slice;
  slice.detector_x = L;
  slice.y.assign(y_grid.begin(), y_grid.end());
  slice.amplitude.reserve(y_grid.size());
  slice.intensity.reserve(y_grid.size());
  for (double y : y_grid) {
    const Complex amp = field.sample(L, y).value;
    slice.amplitude.push_back(amp);
    slice.intensity.push_back(std::norm(amp));
  }
  return slice;
}

}  // namespace slitlab
