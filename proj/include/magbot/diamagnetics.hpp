#pragma once

#include <functional>

#include "magbot/core.hpp"
#include "magbot/magnetostatics.hpp"

namespace magbot {

using FieldFn = std::function<Vec3(const Vec3&)>;

/// Diamagnetic force in the volume-gradient form,
///   F_i = (chi / 2 mu0) * int_V d|B|^2/di dV,
/// Gauss-Legendre quadrature over the cuboid, gradient by central
/// differences.
Vec3 dia_force_volume(const DiamagneticBody& body, const FieldFn& field, int quad_order = 8);
Vec3 dia_force_volume(const DiamagneticBody& body, const FieldSource& source, int quad_order = 8);

/// The same force through the divergence theorem,
///   F_i = (chi / 2 mu0) * surf_int |B|^2 n_i dS,
/// 2-D quadrature over the six cuboid faces. Agrees with the volume form
/// to quadrature accuracy; the pair is a built-in cross-check.
Vec3 dia_force_surface(const DiamagneticBody& body, const FieldFn& field, int quad_order = 8);
Vec3 dia_force_surface(const DiamagneticBody& body, const FieldSource& source, int quad_order = 8);

}  // namespace magbot
