#include "shiftlab/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shiftlab {

double SymMatrix::max_diagonal() const {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, at(i, i));
  return m;
}

bool SymMatrix::is_symmetric(double rel_tol) const {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(at(i, j) - at(j, i)) > rel_tol * scale) return false;
  return true;
}

std::vector<double> jacobi_eigenvalues(SymMatrix m) {
  const int n = m.n;
  if (n == 0) return {};
  if (n == 1) return {m.at(0, 0)};

  double scale = 0.0;
  for (double v : m.a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  auto off = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += m.at(i, j) * m.at(i, j);
    return s;
  };

  const double stop = 1e-30 * scale * scale;
  for (int sweep = 0; sweep < 64 && off() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = m.at(i, p);
          const double aiq = m.at(i, q);
          m.at(i, p) = c * aip - s * aiq;
          m.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = m.at(p, i);
          const double aqi = m.at(q, i);
          m.at(p, i) = c * api - s * aqi;
          m.at(q, i) = s * api + c * aqi;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

PsdVerdict is_psd(const SymMatrix& m, double tol) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_psd: matrix is not symmetric");
  PsdVerdict v;
  v.matrix_order = m.n;
  const auto ev = jacobi_eigenvalues(m);
  v.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
  v.is_psd = v.min_eigenvalue >= -tol * std::max(m.max_diagonal(), 0.0);
  return v;
}

SymMatrix hankel_matrix(const std::vector<double>& gamma, int k, int u) {
  if (k < 0 || u < 0) throw std::invalid_argument("hankel_matrix: k and u must be nonnegative");
  if (static_cast<int>(gamma.size()) <= u + 2 * k)
    throw std::invalid_argument("hankel_matrix: insufficient moments (need index u+2k)");
  SymMatrix h(k + 1);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) h.at(i, j) = gamma[static_cast<std::size_t>(u + i + j)];
  return h;
}

std::vector<LatticePoint> moment_index_set(int k) {
  std::vector<LatticePoint> idx;
  idx.reserve(static_cast<std::size_t>((k + 1) * (k + 2) / 2));
  for (int d = 0; d <= k; ++d)
    for (int n = d; n >= 0; --n) idx.push_back({n, d - n});
  return idx;
}

SymMatrix moment_matrix(const WeightDiagram& d, int k, LatticePoint u) {
  if (k < 0) throw std::invalid_argument("moment_matrix: k must be nonnegative");
  const auto idx = moment_index_set(k);
  const int m = static_cast<int>(idx.size());
  SymMatrix mat(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const double g = moment(d, u + idx[i] + idx[j]);
      mat.at(i, j) = g;
      mat.at(j, i) = g;
    }
  return mat;
}

bool window_is_certifying(const WeightDiagram& d, const LatticeWindow& w) {
  const Tail t = d.tail();
  return t.kind == TailKind::Flat && w.k1_max >= t.n1 + 1 && w.k2_max >= t.n2 + 1;
}

KHyponormalityReport k_hyponormal(const WeightDiagram& d, int k, const LatticeWindow& w,
                                  double tol) {
  KHyponormalityReport rep;
  rep.k = k;
  rep.window = w;
  rep.verdict = true;
  rep.certifying = window_is_certifying(d, w);
  rep.min_relative_eigenvalue = std::numeric_limits<double>::infinity();
  rep.per_u_min_eigenvalues.reserve(static_cast<std::size_t>(w.size()));
  for (int u2 = 0; u2 <= w.k2_max; ++u2) {
    for (int u1 = 0; u1 <= w.k1_max; ++u1) {
      const SymMatrix m = moment_matrix(d, k, {u1, u2});
      const PsdVerdict v = is_psd(m, tol);
      rep.per_u_min_eigenvalues.push_back(v.min_eigenvalue);
      const double rel = v.min_eigenvalue / std::max(m.max_diagonal(), 1e-300);
      rep.min_relative_eigenvalue = std::min(rep.min_relative_eigenvalue, rel);
      if (!v.is_psd && rep.verdict) {
        rep.verdict = false;
        rep.first_failing_u = LatticePoint{u1, u2};
      }
    }
  }
  return rep;
}

PsdVerdict six_point_test(const WeightDiagram& d, LatticePoint u, double tol) {
  PsdVerdict v = is_psd(moment_matrix(d, 1, u), tol);
  if (!v.is_psd) v.failing_u = u;
  return v;
}

bool componentwise_hyponormal(const WeightDiagram& d, const LatticeWindow& w) {
  for (int k2 = 0; k2 <= w.k2_max; ++k2)
    for (int k1 = 0; k1 + 1 <= w.k1_max; ++k1)
      if (d.alpha(k1, k2) > d.alpha(k1 + 1, k2)) return false;
  for (int k1 = 0; k1 <= w.k1_max; ++k1)
    for (int k2 = 0; k2 + 1 <= w.k2_max; ++k2)
      if (d.beta(k1, k2) > d.beta(k1, k2 + 1)) return false;
  return true;
}

}  // namespace shiftlab
