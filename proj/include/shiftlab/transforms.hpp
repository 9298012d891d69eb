#pragma once

#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Componentwise Aluthge transform: each weight becomes the geometric mean
/// of two consecutive weights in its own direction,
/// alpha'(k) = sqrt(alpha(k) alpha(k+e1)), beta'(k) = sqrt(beta(k) beta(k+e2)).
WeightDiagram toral(const WeightDiagram& d);

/// Joint (spherical) Aluthge transform: weights are rescaled by fourth-root
/// ratios of alpha^2 + beta^2 one step ahead over the current value,
/// alpha'(k) = alpha(k) ((alpha(k+e1)^2+beta(k+e1)^2)/(alpha(k)^2+beta(k)^2))^{1/4}.
WeightDiagram spherical(const WeightDiagram& d);

/// alpha -> a*alpha, beta -> b*beta. Rejects non-positive scalars.
WeightDiagram scale(const WeightDiagram& d, double a, double b);

/// Necessary and sufficient condition for the toral transform of a commuting
/// diagram to commute: alpha(k+e2) alpha(k+e1+e2) = alpha(k+e1) alpha(k+2e2)
/// on the window, together with the equivalent beta-form
/// beta(k+e1) beta(k+e1+e2) = beta(k+e2) beta(k+2e1).
struct ToralCommutesReport {
  ViolationReport alpha_form;
  ViolationReport beta_form;
  /// The two forms are equivalent for commuting input; a gap between them
  /// beyond tolerance indicates the input itself does not commute.
  double forms_disagreement = 0.0;
  bool holds(double rel_tol = 1e-12) const {
    return alpha_form.holds(rel_tol) && beta_form.holds(rel_tol);
  }
};
ToralCommutesReport toral_commutes(const WeightDiagram& d, const LatticeWindow& w);

/// True iff alpha(k+e1) = alpha(k+e2) and beta(k+e2) = beta(k+e1) on the
/// window; exactly the diagrams whose toral and spherical transforms agree.
/// When true, the two transforms are cross-checked pointwise on the window.
bool transforms_coincide(const WeightDiagram& d, const LatticeWindow& w,
                         double rel_tol = 1e-12);

struct FixedPointReport {
  bool fixed = false;
  double max_gap = 0.0;        // sup |spherical(d) - d| over the window
  double c_squared = 0.0;      // alpha^2 + beta^2 at the origin
  double c_max_deviation = 0.0;  // max |alpha^2+beta^2 - c_squared| over the window
};

/// Fixed points of the spherical transform; for those, alpha^2 + beta^2 is a
/// constant C^2 across the lattice, which is reported with its deviation.
FixedPointReport is_spherical_fixed_point(const WeightDiagram& d, const LatticeWindow& w,
                                          double tol = 1e-10);

}  // namespace shiftlab
