#include "shiftlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "shiftlab/families.hpp"
#include "shiftlab/positivity.hpp"
#include "shiftlab/transforms.hpp"

namespace shiftlab {

namespace {

LatticeWindow tail_window(const WeightDiagram& d) {
  const Tail t = d.tail();
  return LatticeWindow(t.n1 + 2, t.n2 + 2);
}

// Sup of a weight family over the tail window, folding in the exact tail sup
// when the descriptor provides one.
double alpha_sup(const WeightDiagram& d) {
  const Tail t = d.tail();
  double m = 0.0;
  for (int k2 = 0; k2 <= t.n2 + 2; ++k2)
    for (int k1 = 0; k1 <= t.n1 + 2; ++k1) m = std::max(m, d.alpha(k1, k2));
  if (t.alpha_sup) m = std::max(m, *t.alpha_sup);
  return m;
}

double beta_sup(const WeightDiagram& d) {
  const Tail t = d.tail();
  double m = 0.0;
  for (int k2 = 0; k2 <= t.n2 + 2; ++k2)
    for (int k1 = 0; k1 <= t.n1 + 2; ++k1) m = std::max(m, d.beta(k1, k2));
  if (t.beta_sup) m = std::max(m, *t.beta_sup);
  return m;
}

bool core_is_tensor_form(const WeightDiagram& core, const LatticeWindow& w, double rel_tol) {
  for (int k1 = 0; k1 <= w.k1_max; ++k1)
    for (int k2 = 1; k2 <= w.k2_max; ++k2) {
      const double a = core.alpha(k1, k2);
      const double a0 = core.alpha(k1, 0);
      if (std::fabs(a - a0) > rel_tol * std::max(a, a0)) return false;
    }
  for (int k2 = 0; k2 <= w.k2_max; ++k2)
    for (int k1 = 1; k1 <= w.k1_max; ++k1) {
      const double b = core.beta(k1, k2);
      const double b0 = core.beta(0, k2);
      if (std::fabs(b - b0) > rel_tol * std::max(b, b0)) return false;
    }
  return true;
}

}  // namespace

SpectrumDescriptor predicted_spectrum(const WeightDiagram& d) {
  const LatticeWindow w = tail_window(d);
  const WeightDiagram core = restrict(d, 1, 1);
  if (!core_is_tensor_form(core, w, 1e-12))
    throw std::invalid_argument("predicted_spectrum: core is not of tensor form");
  if (!componentwise_hyponormal(d, w))
    throw std::invalid_argument("predicted_spectrum: components are not hyponormal");
  // With hyponormal components, every row sup equals the core row-factor
  // norm, so the global weight sups are the spectral radii.
  return {alpha_sup(d), beta_sup(d)};
}

SpectralInvarianceReport spectral_invariance_check(const WeightDiagram& d, double tol) {
  SpectralInvarianceReport rep;
  rep.base = predicted_spectrum(d);

  const WeightDiagram t = toral(d);
  const WeightDiagram s = spherical(d);
  rep.toral_radii = {alpha_sup(t), beta_sup(t)};
  rep.spherical_radii = {alpha_sup(s), beta_sup(s)};

  rep.max_radius_gap = std::max({std::fabs(rep.base.r1 - rep.toral_radii.r1),
                                 std::fabs(rep.base.r2 - rep.toral_radii.r2),
                                 std::fabs(rep.base.r1 - rep.spherical_radii.r1),
                                 std::fabs(rep.base.r2 - rep.spherical_radii.r2)});
  rep.agree = rep.max_radius_gap <= tol;

  // Zeroth row/column sup-norm identities on the weight sequences.
  const Tail tl = d.tail();
  auto row0_sup = [&](const WeightDiagram& x) {
    double m = 0.0;
    for (int k1 = 0; k1 <= tl.n1 + 2; ++k1) m = std::max(m, x.alpha(k1, 0));
    if (x.tail().alpha_sup) m = std::max(m, *x.tail().alpha_sup);
    return m;
  };
  auto col0_sup = [&](const WeightDiagram& x) {
    double m = 0.0;
    for (int k2 = 0; k2 <= tl.n2 + 2; ++k2) m = std::max(m, x.beta(0, k2));
    if (x.tail().beta_sup) m = std::max(m, *x.tail().beta_sup);
    return m;
  };
  rep.row0_gap_toral = std::fabs(row0_sup(t) - row0_sup(d));
  rep.col0_gap_toral = std::fabs(col0_sup(t) - col0_sup(d));
  rep.row0_gap_spherical = std::fabs(row0_sup(s) - row0_sup(d));
  rep.col0_gap_spherical = std::fabs(col0_sup(s) - col0_sup(d));
  return rep;
}

// ============================================================================
// Drury-Arveson asymptotics
// ============================================================================

namespace {

// Dense vector over the basis points of total degree <= maxdeg, used to apply
// the truncated shift operators directly to basis vectors.
struct TruncatedBasis {
  int maxdeg;
  std::vector<LatticePoint> points;
  std::vector<std::vector<int>> index;  // index[k1][k2], -1 if outside

  explicit TruncatedBasis(int md) : maxdeg(md) {
    index.assign(md + 1, std::vector<int>(md + 1, -1));
    for (int d = 0; d <= md; ++d)
      for (int k1 = 0; k1 <= d; ++k1) {
        index[k1][d - k1] = static_cast<int>(points.size());
        points.push_back({k1, d - k1});
      }
  }
  int at(int k1, int k2) const {
    if (k1 < 0 || k2 < 0 || k1 + k2 > maxdeg) return -1;
    return index[k1][k2];
  }
};

std::vector<double> apply_t1(const WeightDiagram& d, const TruncatedBasis& b,
                             const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const LatticePoint k = b.points[i];
    const int j = b.at(k.k1 + 1, k.k2);
    if (j >= 0) out[static_cast<std::size_t>(j)] += d.alpha(k) * v[i];
  }
  return out;
}

std::vector<double> apply_t1_adj(const WeightDiagram& d, const TruncatedBasis& b,
                                 const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const LatticePoint k = b.points[i];
    const int j = b.at(k.k1 - 1, k.k2);
    if (j >= 0) out[static_cast<std::size_t>(j)] += d.alpha(k.k1 - 1, k.k2) * v[i];
  }
  return out;
}

std::vector<double> apply_t2_adj(const WeightDiagram& d, const TruncatedBasis& b,
                                 const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const LatticePoint k = b.points[i];
    const int j = b.at(k.k1, k.k2 - 1);
    if (j >= 0) out[static_cast<std::size_t>(j)] += d.beta(k.k1, k.k2 - 1) * v[i];
  }
  return out;
}

}  // namespace

DaCommutators da_commutators(int n) {
  if (n < 1) throw std::invalid_argument("da_commutators: n must be at least 1");
  DaCommutators res;
  res.n = n;
  res.diagonal.resize(static_cast<std::size_t>(n) + 1);
  res.cross.resize(static_cast<std::size_t>(n));

  for (int k1 = 0; k1 <= n; ++k1) {
    const int k2 = n - k1;
    res.diagonal[static_cast<std::size_t>(k1)] =
        k1 == 0 ? 1.0 / (k2 + 1)
                : double(k2) / (double(k1 + k2) * double(k1 + k2 + 1));
  }
  for (int k1 = 0; k1 < n; ++k1)
    res.cross[static_cast<std::size_t>(k1)] =
        -std::sqrt(double(k1 + 1) * double(n - k1)) / (double(n) * double(n + 1));

  for (double v : res.diagonal) res.diagonal_norm = std::max(res.diagonal_norm, std::fabs(v));
  for (double v : res.cross) res.cross_norm = std::max(res.cross_norm, std::fabs(v));
  res.diagonal_bound = 1.0 / (n + 1);
  res.cross_bound = 1.0 / (2.0 * n);
  res.bounds_hold = res.diagonal_norm <= res.diagonal_bound + 1e-15 &&
                    res.cross_norm <= res.cross_bound + 1e-15;

  // Brute-force cross-check: apply the truncated operators to each basis
  // vector of degree n and read off the commutator coefficients.
  const WeightDiagram da = build_drury_arveson();
  const TruncatedBasis basis(n + 2);
  for (int k1 = 0; k1 <= n; ++k1) {
    const int k2 = n - k1;
    std::vector<double> e(basis.points.size(), 0.0);
    e[static_cast<std::size_t>(basis.at(k1, k2))] = 1.0;

    auto sub = [](std::vector<double> a, const std::vector<double>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
      return a;
    };
    const auto c11 = sub(apply_t1_adj(da, basis, apply_t1(da, basis, e)),
                         apply_t1(da, basis, apply_t1_adj(da, basis, e)));
    const auto c21 = sub(apply_t2_adj(da, basis, apply_t1(da, basis, e)),
                         apply_t1(da, basis, apply_t2_adj(da, basis, e)));

    const double direct_diag = c11[static_cast<std::size_t>(basis.at(k1, k2))];
    res.max_formula_vs_direct =
        std::max(res.max_formula_vs_direct,
                 std::fabs(direct_diag - res.diagonal[static_cast<std::size_t>(k1)]));

    if (k2 >= 1) {
      const double direct_cross = c21[static_cast<std::size_t>(basis.at(k1 + 1, k2 - 1))];
      res.max_formula_vs_direct =
          std::max(res.max_formula_vs_direct,
                   std::fabs(direct_cross - res.cross[static_cast<std::size_t>(k1)]));
    } else {
      double norm = 0.0;
      for (double v : c21) norm += v * v;
      res.max_formula_vs_direct = std::max(res.max_formula_vs_direct, std::sqrt(norm));
    }
  }
  return res;
}

AluthgeGap da_aluthge_gap(int n, int k1, TransformKind kind) {
  if (n < 1 || k1 < 0 || k1 > n)
    throw std::invalid_argument("da_aluthge_gap: need n >= 1 and 0 <= k1 <= n");
  AluthgeGap g;
  const WeightDiagram da = build_drury_arveson();
  const int k2 = n - k1;
  const double a = da.alpha(k1, k2);
  const WeightDiagram tr = kind == TransformKind::Toral ? toral(da) : spherical(da);
  const double at = tr.alpha(k1, k2);
  g.direct = std::fabs(a * a * a * a - at * at * at * at);
  if (kind == TransformKind::Toral) {
    g.formula = double(k1 + 1) * double(n - k1) / (double(n + 1) * double(n + 1) * double(n + 2));
    g.bound = 1.0 / (4.0 * (n + 2));
  } else {
    g.formula = double(k1 + 1) * double(k1 + 1) /
                (double(n + 1) * double(n + 1) * double(n + 2) * double(n + 2));
    g.bound = (2.0 * n + 1.0) / (4.0 * double(n) * double(n));
  }
  g.bound_holds = g.formula <= g.bound + 1e-15;
  return g;
}

// ============================================================================
// Continuity probe
// ============================================================================

ProbeResult continuity_probe(const WeightDiagram& d, double eps, const LatticeWindow& w,
                             std::uint64_t seed) {
  if (eps < 0.0 || eps >= 1.0)
    throw std::invalid_argument("continuity_probe: eps must lie in [0, 1)");
  const int b1 = w.k1_max + 3;
  const int b2 = w.k2_max + 3;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> row_factor(static_cast<std::size_t>(b1) + 1);
  std::vector<double> col_factor(static_cast<std::size_t>(b2) + 1);
  for (auto& f : row_factor) f = 1.0 + eps * unit(rng);
  for (auto& f : col_factor) f = 1.0 + eps * unit(rng);

  // alpha: zeroth row perturbed, other rows unchanged
  std::vector<std::vector<double>> at(static_cast<std::size_t>(b2) + 1,
                                      std::vector<double>(static_cast<std::size_t>(b1) + 1));
  for (int k2 = 0; k2 <= b2; ++k2)
    for (int k1 = 0; k1 <= b1; ++k1)
      at[k2][k1] = d.alpha(k1, k2) * (k2 == 0 ? row_factor[static_cast<std::size_t>(k1)] : 1.0);

  // beta: zeroth column perturbed, interior regenerated from commutativity
  std::vector<std::vector<double>> bt(static_cast<std::size_t>(b2) + 1,
                                      std::vector<double>(static_cast<std::size_t>(b1) + 1));
  for (int k2 = 0; k2 <= b2; ++k2)
    bt[k2][0] = d.beta(0, k2) * col_factor[static_cast<std::size_t>(k2)];
  for (int k1 = 1; k1 <= b1; ++k1)
    for (int k2 = 0; k2 <= b2; ++k2) {
      const double a_up = k2 + 1 <= b2 ? at[k2 + 1][k1 - 1] : d.alpha(k1 - 1, k2 + 1);
      bt[k2][k1] = bt[k2][k1 - 1] * a_up / at[k2][k1 - 1];
    }
  for (const auto& row : bt)
    for (double v : row)
      if (!(v > 0.0))
        throw std::runtime_error("continuity_probe: perturbation produced a non-positive weight");

  const WeightDiagram pert = make_table_diagram(at, bt);

  ProbeResult res;
  auto sup_gap = [&](const WeightDiagram& x, const WeightDiagram& y) {
    double m = 0.0;
    for (int k2 = 0; k2 <= w.k2_max; ++k2)
      for (int k1 = 0; k1 <= w.k1_max; ++k1)
        m = std::max({m, std::fabs(x.alpha(k1, k2) - y.alpha(k1, k2)),
                      std::fabs(x.beta(k1, k2) - y.beta(k1, k2))});
    return m;
  };
  res.input_gap = sup_gap(d, pert);
  res.toral_gap = sup_gap(toral(d), toral(pert));
  res.spherical_gap = sup_gap(spherical(d), spherical(pert));
  return res;
}

}  // namespace shiftlab
