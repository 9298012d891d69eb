#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/lattice.hpp"

namespace shiftlab {

// ============================================================================
// Finitely atomic measures
// ============================================================================

struct Atom1D {
  double p = 0.0;  // position (nonnegative)
  double r = 0.0;  // mass (positive)
};

/// Finitely atomic positive measure on [0, inf).
class AtomicMeasure1D {
 public:
  AtomicMeasure1D() = default;
  explicit AtomicMeasure1D(std::vector<Atom1D> atoms);

  static AtomicMeasure1D point_mass(double p, double r = 1.0) {
    return AtomicMeasure1D({{p, r}});
  }

  const std::vector<Atom1D>& atoms() const { return atoms_; }
  double total_mass() const;
  bool is_probability(double tol = 1e-12) const;
  bool has_atom_at_zero(double tol = 1e-12) const;
  double max_position() const;

  /// n-th power moment, sum r_i p_i^n (p^0 = 1 even at p = 0).
  double power_moment(int n) const;

 private:
  std::vector<Atom1D> atoms_;
};

struct Atom2D {
  double s = 0.0;
  double t = 0.0;
  double mass = 0.0;
};

/// Finitely atomic positive measure on the closed first quadrant.
class AtomicMeasure2D {
 public:
  AtomicMeasure2D() = default;
  explicit AtomicMeasure2D(std::vector<Atom2D> atoms);

  static AtomicMeasure2D product(const AtomicMeasure1D& xi1, const AtomicMeasure1D& xi2);

  const std::vector<Atom2D>& atoms() const { return atoms_; }
  double total_mass() const;

  /// Integral of 1/t. Throws when mass sits on t = 0.
  double recip_t_norm() const;

  /// Reweighting by 1/(t * ||1/t||); drops nothing since t = 0 is rejected.
  AtomicMeasure2D extremal() const;

  /// Projection onto the first coordinate (atoms at equal s merge).
  AtomicMeasure1D marginal_x() const;

 private:
  std::vector<Atom2D> atoms_;
};

/// Moments gamma_0..gamma_n of the shift with Berger measure xi.
std::vector<double> measure_moments(const AtomicMeasure1D& xi, int n);

/// Weights omega_j = sqrt(gamma_{j+1}/gamma_j), j = 0..n-1. Computed with
/// positions normalized by the largest atom so large powers stay finite.
/// Throws when xi is the point mass at 0.
std::vector<double> weights_from_measure(const AtomicMeasure1D& xi, int n);

/// Integral of 1/s. Throws when xi has an atom at 0 (1/s not integrable).
double rho(const AtomicMeasure1D& xi);

// ============================================================================
// Backward extensions
// ============================================================================

struct Extension1DResult {
  bool subnormal = false;
  AtomicMeasure1D measure;  // valid when subnormal
  std::string message;
};

/// One-step backward extension of the shift with Berger measure xi by a new
/// zeroth weight alpha0: subnormal iff alpha0^2 <= 1/rho(xi); the extended
/// measure reweights each atom by alpha0^2/p and puts the residual mass at 0
/// (residuals below 1e-14 are dropped).
Extension1DResult backward_extension_1d(const AtomicMeasure1D& xi, double alpha0);

struct Extension2DResult {
  bool subnormal = false;
  AtomicMeasure2D measure;                // valid when subnormal
  std::optional<double> witness_position;  // atom where domination failed
  std::string message;
};

/// Backward extension in the second lattice direction: given the Berger
/// measure of the restriction, the new weight beta00 and the Berger measure
/// xi0 of the zeroth row, checks 1/t-integrability, beta00^2 <= 1/||1/t||,
/// and atomwise domination beta00^2 ||1/t|| (ext marginal) <= xi0; on success
/// assembles the extended measure.
Extension2DResult backward_extension_2d(const AtomicMeasure2D& mu_m, double beta00,
                                        const AtomicMeasure1D& xi0);

// ============================================================================
// Named diagram builders
// ============================================================================

/// Doubly commuting pair from two one-variable weight sequences; the finite
/// lists extend flatly (last entry repeats).
WeightDiagram build_tensor(std::vector<double> sigma, std::vector<double> tau);

/// alpha(k) = beta(k) = omega_{k1+k2}; the list extends flatly.
WeightDiagram build_diagonal_core(std::vector<double> omega);

/// The 2-variable shift with alpha(k) = sqrt((k1+1)/(k1+k2+1)) and the
/// symmetric beta; rows are the unweighted, Bergman and higher Agler shifts.
WeightDiagram build_drury_arveson();

/// Symmetric backward-extension family ("fig2"): zeroth row and column are
/// (x0, w0, w1, ...), all other rows and columns are (a, w0, w1, ...), where
/// w are the weights of the measure xi. The core is the tensor square of the
/// measure's shift.
WeightDiagram build_fig2_family(double x0, double a, const AtomicMeasure1D& xi);

/// General form of the family with commuting toral transform ("fig2_general"):
/// free zeroth-row prefix (x0, x1), first-row head a, zeroth-column prefix
/// (y0, y1 = tau0*x1/omega0), core tensor(omega, tau). The interior is
/// derived from commutativity; the builder validates positivity and the
/// coupling constraint.
WeightDiagram build_fig2_general(double x0, double x1, double a, double y0,
                                 std::vector<double> omega, std::vector<double> tau);

/// Spherical-isometry construction scaled by C: from a subnormal-style
/// zeroth row with sup < C, generates beta(k) = sqrt(C^2 - alpha(k)^2) and
/// the next row by commutativity. Throws when some generated alpha reaches C
/// (with the failing position in the message).
WeightDiagram build_quasinormal_from_row(std::vector<double> alpha_row, double c = 1.0);

// ============================================================================
// Closed-form verdicts for the fig2 family
// ============================================================================

enum class SubnormalityVerdict { Subnormal, NotSubnormal, HypothesesViolated };

struct Fig2Subnormality {
  SubnormalityVerdict verdict = SubnormalityVerdict::HypothesesViolated;
  double criterion_value = 0.0;  // x0^2 rho (2 - a^2 rho)
  std::string message;
};

/// Subnormality of build_fig2_family(x0, a, xi): requires x0^2 rho <= 1 and
/// a^2 rho <= 1 (else hypotheses violated); then subnormal iff
/// x0^2 rho (2 - a^2 rho) <= 1.
Fig2Subnormality fig2_subnormal(double x0, double a, const AtomicMeasure1D& xi);

/// Hyponormality of the toral transform of the fig2 diagram:
/// |a - x0| <= omega_1 - x0.
bool fig2_toral_hyponormal(double x0, double a, const AtomicMeasure1D& xi);

/// omega_1^2 * rho for the measure; the family contains subnormal members
/// with non-hyponormal toral transform exactly when this is below 2.
struct ToralWitnessMargin {
  double omega1_sq_rho = 0.0;
  bool witness_exists = false;  // omega1_sq_rho < 2
  // For 2-atomic xi = r d_1 + s d_q: the margin expression
  // (r + s q^2)/(r + s q) * (r + s/q) and the position of q relative to the
  // closed-form threshold below.
  std::optional<double> two_atomic_expression;
  std::optional<bool> q_below_threshold;
};
ToralWitnessMargin toral_witness_margin(const AtomicMeasure1D& xi);

/// q~ = 1/2 + sqrt(2) + (1/2) sqrt(5 + 4 sqrt(2)): for 2-atomic measures
/// r d_1 + s d_q with q in (1, q~], omega_1^2 rho < 2 for every mass split.
double two_atomic_threshold();

// ============================================================================
// Region curves of the one-parameter family (xi = point mass at 1)
// ============================================================================

struct RegionCurves {
  double s = 0.0;   // subnormality boundary  sqrt(1/(2 - y^2))
  double h = 0.0;   // hyponormality boundary sqrt((1 + y^2)/2)
  double ca = 0.0;  // toral-transform hyponormality boundary (1 + y)/2
  double pa = 0.0;  // spherical-transform hyponormality boundary
};

/// Closed-form x-thresholds at parameter y. Defined for y in [0, 1].
RegionCurves region_curves(double y);

struct RegionVerdicts {
  bool subnormal = false;
  bool hyponormal = false;
  bool toral_hyponormal = false;
  bool spherical_hyponormal = false;
};

/// Verdicts for the diagram with parameters x, y in (0, 1).
RegionVerdicts region_verdicts(double x, double y);

/// Parameter where the toral boundary crosses the subnormality boundary,
/// solved by bisection on (0, 1) to 1e-8.
double region_crossing();

}  // namespace shiftlab
