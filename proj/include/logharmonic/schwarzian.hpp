#pragma once

#include "logharmonic/mappings.hpp"

namespace logharmonic {

/// P_f = (log J_f)_z = F''/F' + G'/G - omega' conj(omega) / (1 - |omega|^2),
/// with F = z h and G = g. Throws PoleError where F' or G vanishes and
/// DilatationError where |omega| >= 1.
Complex pre_schwarzian(const LogharmonicMap& map, Complex z);

/// S_f = (P_f)_z - P_f^2 / 2. Writing A = F''/F', B = G'/G and
/// C = omega' conj(omega) / (1 - |omega|^2), this is
///   (A + B)' - (A + B)^2 / 2 - omega'' conj(omega) / (1 - |omega|^2) - 3 C^2 / 2 + (A + B) C.
Complex schwarzian(const LogharmonicMap& map, Complex z);

/// f o phi with dilatation omega o phi. Evaluation throws DomainError where
/// |phi(z)| >= 1.
LogharmonicMap precompose(const LogharmonicMap& map, AnalyticFn phi);

/// |d^2 P_f / dz dzbar| estimated with the 9-point Laplacian stencil of
/// spacing `step` (fourth-order accurate). Throws DomainError when the
/// stencil leaves the disk.
double harmonicity_residual(const LogharmonicMap& map, Complex z, double step = 1e-3);

/// F''/F' and (F''/F')' - (F''/F')^2 / 2 for an analytic function given by its jet.
Complex classical_pre_schwarzian(const Jet& F);
Complex classical_schwarzian(const Jet& F);

}  // namespace logharmonic
