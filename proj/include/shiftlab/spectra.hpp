#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Radii pair encoding the joint spectra of a shift whose core is of tensor
/// form with hyponormal components: the Taylor spectrum is the product of
/// the closed disks of radii (r1, r2) and the essential spectrum is
/// (r1 circle x r2 disk) union (r1 disk x r2 circle).
struct SpectrumDescriptor {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Exact spectral radii for diagrams whose core is of tensor form.
/// Validates tensor-form of the core and componentwise hyponormality on a
/// tail-derived window; throws std::invalid_argument otherwise.
SpectrumDescriptor predicted_spectrum(const WeightDiagram& d);

struct SpectralInvarianceReport {
  SpectrumDescriptor base;
  SpectrumDescriptor toral_radii;
  SpectrumDescriptor spherical_radii;
  bool agree = false;
  double max_radius_gap = 0.0;
  // sup-norm identity gaps between the zeroth row/column shifts of the
  // transforms and of the base diagram
  double row0_gap_toral = 0.0;
  double col0_gap_toral = 0.0;
  double row0_gap_spherical = 0.0;
  double col0_gap_spherical = 0.0;
};

/// Compares the radii of d, toral(d) and spherical(d) and verifies the
/// zeroth row/column sup-norm identities directly on weight sequences.
SpectralInvarianceReport spectral_invariance_check(const WeightDiagram& d,
                                                   double tol = 1e-10);

// ============================================================================
// Drury-Arveson commutator asymptotics
// ============================================================================

/// Self- and cross-commutator data on the homogeneous subspace of degree n
/// (span of basis vectors with k1 + k2 = n).
struct DaCommutators {
  int n = 0;
  // [T1*,T1] is diagonal: coefficient at (k1, n-k1), k1 = 0..n
  std::vector<double> diagonal;
  // [T2*,T1] maps e_(k1, n-k1) to a multiple of e_(k1+1, n-k1-1), k1 = 0..n-1;
  // it annihilates e_(n, 0)
  std::vector<double> cross;
  double diagonal_norm = 0.0;
  double cross_norm = 0.0;
  double diagonal_bound = 0.0;  // 1/(n+1)
  double cross_bound = 0.0;     // 1/(2n)
  bool bounds_hold = false;
  // largest deviation between the closed forms and a brute-force application
  // of the truncated operators to basis vectors
  double max_formula_vs_direct = 0.0;
};

DaCommutators da_commutators(int n);

enum class TransformKind { Toral, Spherical };

/// Fourth-power weight gap between the Drury-Arveson shift and its transform
/// at (k1, n-k1), with the closed form, a direct evaluation through the
/// transform module, and the decay bound.
struct AluthgeGap {
  double formula = 0.0;
  double direct = 0.0;
  double bound = 0.0;
  bool bound_holds = false;
};

AluthgeGap da_aluthge_gap(int n, int k1, TransformKind kind);

// ============================================================================
// Continuity probes
// ============================================================================

struct ProbeResult {
  double input_gap = 0.0;
  double toral_gap = 0.0;
  double spherical_gap = 0.0;
};

/// Multiplies the zeroth-row alpha and zeroth-column beta weights by
/// independent factors in [1-eps, 1+eps] (seeded), regenerates the interior
/// betas from the commutativity identity, and reports sup weight gaps on the
/// window between the transforms of the original and perturbed diagrams.
ProbeResult continuity_probe(const WeightDiagram& d, double eps, const LatticeWindow& w,
                             std::uint64_t seed);

}  // namespace shiftlab
