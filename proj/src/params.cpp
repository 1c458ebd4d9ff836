#include "slitlab/params.hpp"

#include <cmath>

namespace slitlab {

PhysicsParams make_params(double energy, double slit_half_separation,
                          double sigma, FieldModel model, double x_min) {
  if (!std::isfinite(energy) || !std::isfinite(slit_half_separation) ||
      !std::isfinite(sigma) || !std::isfinite(x_min)) {
    throw DomainError("physics parameters must be finite");
  }
  if (energy <= 0.0) throw DomainError("energy must be > 0");
  if (slit_half_separation <= 0.0) {
    throw DomainError("slit half-separation must be > 0");
  }
  if (model == FieldModel::gaussian && sigma <= 0.0) {
    throw DomainError("slit width sigma must be > 0 for the gaussian model");
  }
  if (model == FieldModel::point && x_min <= 0.0) {
    throw DomainError("x_min must be > 0 for the point model");
  }

  PhysicsParams p;
  p.energy = energy;
  p.wavenumber = std::sqrt(2.0 * energy);
  p.slit_half_separation = slit_half_separation;
  p.slit_width = sigma;
  p.model = model;
  p.x_min = x_min;
  return p;
}

}  // namespace slitlab
