#pragma once

#include "slitlab/errors.hpp"

namespace slitlab {

/// Which closed-form one-slit field backs the geometry.
enum class FieldModel { gaussian, point };

/// Physical configuration of the symmetric two-slit setup.
///
/// Units are hbar = m = 1, so the wavenumber is k = sqrt(2 E) and the
/// probability current is j = Im(psi* grad psi) with no prefactor.
/// Slits sit on the lines y = -a (slit 1) and y = +a (slit 2).
struct PhysicsParams {
  double energy = 0.5;               // E
  double wavenumber = 1.0;           // k = sqrt(2 E), derived
  double slit_half_separation = 1.0; // a
  double slit_width = 0.25;          // sigma, gaussian model only
  FieldModel model = FieldModel::gaussian;
  double x_min = 1e-2;               // evaluation floor, point model only
};

/// Validates inputs and derives k. Throws DomainError on non-positive
/// energy, separation, width (gaussian) or x_min (point).
PhysicsParams make_params(double energy, double slit_half_separation,
                          double sigma, FieldModel model,
                          double x_min = 1e-2);

}  // namespace slitlab
