#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Small dense symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  double max_diagonal() const;
  bool is_symmetric(double rel_tol = 1e-12) const;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(SymMatrix m);

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  std::optional<LatticePoint> failing_u;  // set by lattice sweeps
  int matrix_order = 0;
};

/// PSD test with threshold relative to the largest diagonal entry:
/// min eigenvalue >= -tol * max(diag). Boundary counts as PSD.
PsdVerdict is_psd(const SymMatrix& m, double tol = 1e-10);

/// Hankel matrix H(k;u) with entries gamma[u+i+j], 0-based, order k+1.
/// Throws if the moment sequence is too short (needs index u+2k).
SymMatrix hankel_matrix(const std::vector<double>& gamma, int k, int u);

/// Multi-index set for the order-k moment matrix: degree-major, first
/// coordinate descending within each degree. Size (k+1)(k+2)/2.
std::vector<LatticePoint> moment_index_set(int k);

/// Moment matrix M_u(k): entries gamma(u + v + w) over the index set above.
SymMatrix moment_matrix(const WeightDiagram& d, int k, LatticePoint u);

struct KHyponormalityReport {
  bool verdict = false;
  std::optional<LatticePoint> first_failing_u;
  double min_relative_eigenvalue = 0.0;  // min over u of min_eig / max_diag
  bool certifying = false;               // window determines the full-lattice verdict
  int k = 0;
  LatticeWindow window;
  // per-u minimum eigenvalues, row-major over the window
  std::vector<double> per_u_min_eigenvalues;
};

/// True iff the window suffices to decide the verdict on the whole lattice:
/// flat tail and window bounds at least (n1+1, n2+1).
bool window_is_certifying(const WeightDiagram& d, const LatticeWindow& w);

/// Sweeps M_u(k) over the window and tests positivity of each matrix.
KHyponormalityReport k_hyponormal(const WeightDiagram& d, int k, const LatticeWindow& w,
                                  double tol = 1e-10);

/// Positivity of the 3x3 moment matrix M_u(1).
PsdVerdict six_point_test(const WeightDiagram& d, LatticePoint u, double tol = 1e-10);

/// alpha nondecreasing along every row and beta nondecreasing along every
/// column of the window (hyponormality of each component shift).
bool componentwise_hyponormal(const WeightDiagram& d, const LatticeWindow& w);

}  // namespace shiftlab
