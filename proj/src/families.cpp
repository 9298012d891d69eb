#include "shiftlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace shiftlab {

namespace {

constexpr double kPositionTol = 1e-12;
constexpr double kResidualDrop = 1e-14;

void require_positive_weights(const std::vector<double>& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty weight list");
  for (double v : w)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(what) + ": weights must be positive and finite");
}

double clamped(const std::vector<double>& w, int i) {
  if (i < 0) throw std::invalid_argument("negative sequence index");
  return w[std::min<std::size_t>(i, w.size() - 1)];
}

}  // namespace

// ============================================================================
// AtomicMeasure1D
// ============================================================================

AtomicMeasure1D::AtomicMeasure1D(std::vector<Atom1D> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!(a.r > 0.0)) throw std::invalid_argument("measure: masses must be positive");
    if (a.p < 0.0) throw std::invalid_argument("measure: positions must be nonnegative");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom1D& a, const Atom1D& b) { return a.p < b.p; });
  for (std::size_t i = 1; i < atoms_.size(); ++i)
    if (atoms_[i].p - atoms_[i - 1].p <= kPositionTol)
      throw std::invalid_argument("measure: atom positions must be distinct");
}

double AtomicMeasure1D::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.r;
  return m;
}

bool AtomicMeasure1D::is_probability(double tol) const {
  return std::fabs(total_mass() - 1.0) <= tol;
}

bool AtomicMeasure1D::has_atom_at_zero(double tol) const {
  return !atoms_.empty() && atoms_.front().p <= tol;
}

double AtomicMeasure1D::max_position() const {
  return atoms_.empty() ? 0.0 : atoms_.back().p;
}

double AtomicMeasure1D::power_moment(int n) const {
  double g = 0.0;
  for (const auto& a : atoms_) g += a.r * std::pow(a.p, n);
  return g;
}

std::vector<double> measure_moments(const AtomicMeasure1D& xi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) g[static_cast<std::size_t>(j)] = xi.power_moment(j);
  return g;
}

std::vector<double> weights_from_measure(const AtomicMeasure1D& xi, int n) {
  if (xi.atoms().empty()) throw std::invalid_argument("weights_from_measure: empty measure");
  const double pmax = xi.max_position();
  if (!(pmax > 0.0))
    throw std::invalid_argument("weights_from_measure: point mass at 0 has no weights");
  // gamma_j / pmax^j stays in [masses]; the ratio gamma_{j+1}/gamma_j is
  // pmax * (scaled j+1 moment)/(scaled j moment).
  auto scaled_moment = [&](int j) {
    double g = 0.0;
    for (const auto& a : xi.atoms()) g += a.r * std::pow(a.p / pmax, j);
    return g;
  };
  std::vector<double> w(static_cast<std::size_t>(n));
  double cur = scaled_moment(0);
  for (int j = 0; j < n; ++j) {
    const double nxt = scaled_moment(j + 1);
    w[static_cast<std::size_t>(j)] = std::sqrt(pmax * nxt / cur);
    cur = nxt;
  }
  return w;
}

double rho(const AtomicMeasure1D& xi) {
  if (xi.has_atom_at_zero())
    throw std::invalid_argument("rho: 1/s is not integrable (atom at 0)");
  double r = 0.0;
  for (const auto& a : xi.atoms()) r += a.r / a.p;
  return r;
}

// ============================================================================
// AtomicMeasure2D
// ============================================================================

AtomicMeasure2D::AtomicMeasure2D(std::vector<Atom2D> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!(a.mass > 0.0)) throw std::invalid_argument("measure: masses must be positive");
    if (a.s < 0.0 || a.t < 0.0)
      throw std::invalid_argument("measure: positions must be nonnegative");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (std::fabs(atoms_[i].s - atoms_[j].s) <= kPositionTol &&
          std::fabs(atoms_[i].t - atoms_[j].t) <= kPositionTol)
        throw std::invalid_argument("measure: atom positions must be distinct");
}

AtomicMeasure2D AtomicMeasure2D::product(const AtomicMeasure1D& xi1,
                                         const AtomicMeasure1D& xi2) {
  std::vector<Atom2D> atoms;
  atoms.reserve(xi1.atoms().size() * xi2.atoms().size());
  for (const auto& a : xi1.atoms())
    for (const auto& b : xi2.atoms()) atoms.push_back({a.p, b.p, a.r * b.r});
  return AtomicMeasure2D(std::move(atoms));
}

double AtomicMeasure2D::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.mass;
  return m;
}

double AtomicMeasure2D::recip_t_norm() const {
  double v = 0.0;
  for (const auto& a : atoms_) {
    if (a.t <= kPositionTol)
      throw std::invalid_argument("recip_t_norm: 1/t is not integrable (mass on t = 0)");
    v += a.mass / a.t;
  }
  return v;
}

AtomicMeasure2D AtomicMeasure2D::extremal() const {
  const double norm = recip_t_norm();
  std::vector<Atom2D> atoms = atoms_;
  for (auto& a : atoms) a.mass = a.mass / (a.t * norm);
  return AtomicMeasure2D(std::move(atoms));
}

AtomicMeasure1D AtomicMeasure2D::marginal_x() const {
  std::vector<Atom1D> merged;
  for (const auto& a : atoms_) {
    bool found = false;
    for (auto& m : merged)
      if (std::fabs(m.p - a.s) <= kPositionTol) {
        m.r += a.mass;
        found = true;
        break;
      }
    if (!found) merged.push_back({a.s, a.mass});
  }
  return AtomicMeasure1D(std::move(merged));
}

// ============================================================================
// Backward extensions
// ============================================================================

Extension1DResult backward_extension_1d(const AtomicMeasure1D& xi, double alpha0) {
  Extension1DResult res;
  if (!xi.is_probability())
    throw std::invalid_argument("backward_extension_1d: xi must be a probability measure");
  if (xi.has_atom_at_zero()) {
    res.message = "not subnormal: restriction measure has an atom at 0";
    return res;
  }
  const double r = rho(xi);
  if (alpha0 * alpha0 > 1.0 / r + 1e-15) {
    res.message = "not subnormal: alpha0^2 exceeds 1/rho";
    return res;
  }
  std::vector<Atom1D> atoms;
  for (const auto& a : xi.atoms()) atoms.push_back({a.p, alpha0 * alpha0 * a.r / a.p});
  const double residual = 1.0 - alpha0 * alpha0 * r;
  if (residual > kResidualDrop) atoms.push_back({0.0, residual});
  res.subnormal = true;
  res.measure = AtomicMeasure1D(std::move(atoms));
  return res;
}

namespace {

// Atomwise measure domination lhs <= rhs: every atom of lhs must match an
// atom of rhs (positions within 1e-12) with at least its mass.
std::optional<double> domination_witness(const AtomicMeasure1D& lhs,
                                         const AtomicMeasure1D& rhs) {
  for (const auto& a : lhs.atoms()) {
    double rhs_mass = 0.0;
    for (const auto& b : rhs.atoms())
      if (std::fabs(a.p - b.p) <= kPositionTol) rhs_mass = b.r;
    if (a.r > rhs_mass + 1e-12) return a.p;
  }
  return std::nullopt;
}

}  // namespace

Extension2DResult backward_extension_2d(const AtomicMeasure2D& mu_m, double beta00,
                                        const AtomicMeasure1D& xi0) {
  Extension2DResult res;
  double norm;
  try {
    norm = mu_m.recip_t_norm();
  } catch (const std::invalid_argument&) {
    res.message = "not subnormal: 1/t is not integrable";
    return res;
  }
  const double b2 = beta00 * beta00;
  if (b2 > 1.0 / norm + 1e-15) {
    res.message = "not subnormal: beta00^2 exceeds 1/||1/t||";
    return res;
  }
  const AtomicMeasure2D ext = mu_m.extremal();
  const AtomicMeasure1D ext_marginal = ext.marginal_x();
  AtomicMeasure1D scaled_marginal;
  {
    std::vector<Atom1D> atoms;
    for (const auto& a : ext_marginal.atoms()) atoms.push_back({a.p, b2 * norm * a.r});
    scaled_marginal = AtomicMeasure1D(std::move(atoms));
  }
  if (auto witness = domination_witness(scaled_marginal, xi0)) {
    res.witness_position = *witness;
    res.message = "not subnormal: marginal domination fails";
    return res;
  }
  // Extended measure: b2*norm * ext on t > 0, plus the undominated part of
  // xi0 on the slab t = 0.
  std::vector<Atom2D> atoms;
  for (const auto& a : ext.atoms()) atoms.push_back({a.s, a.t, b2 * norm * a.mass});
  for (const auto& a : xi0.atoms()) {
    double used = 0.0;
    for (const auto& m : scaled_marginal.atoms())
      if (std::fabs(m.p - a.p) <= kPositionTol) used = m.r;
    const double residual = a.r - used;
    if (residual > kResidualDrop) atoms.push_back({a.p, 0.0, residual});
  }
  res.subnormal = true;
  res.measure = AtomicMeasure2D(std::move(atoms));
  return res;
}

// ============================================================================
// Diagram impls
// ============================================================================

namespace {

using detail::DiagramImpl;

class TensorImpl final : public DiagramImpl {
 public:
  TensorImpl(std::vector<double> sigma, std::vector<double> tau)
      : sigma_(std::move(sigma)), tau_(std::move(tau)) {
    require_positive_weights(sigma_, "tensor sigma");
    require_positive_weights(tau_, "tensor tau");
  }
  double alpha(int k1, int) const override { return clamped(sigma_, k1); }
  double beta(int, int k2) const override { return clamped(tau_, k2); }
  Tail tail() const override {
    Tail t;
    t.kind = TailKind::Flat;  // finite lists clamp, so the tail is genuinely flat
    t.n1 = static_cast<int>(sigma_.size()) - 1;
    t.n2 = static_cast<int>(tau_.size()) - 1;
    return t;
  }
  std::string kind() const override { return "tensor"; }
  nlohmann::json params() const override {
    return {{"sigma", sigma_}, {"tau", tau_}};
  }

 private:
  std::vector<double> sigma_, tau_;
};

class DiagonalCoreImpl final : public DiagramImpl {
 public:
  explicit DiagonalCoreImpl(std::vector<double> omega) : omega_(std::move(omega)) {
    require_positive_weights(omega_, "diagonal core omega");
  }
  double alpha(int k1, int k2) const override { return clamped(omega_, k1 + k2); }
  double beta(int k1, int k2) const override { return clamped(omega_, k1 + k2); }
  Tail tail() const override {
    Tail t;
    t.kind = TailKind::Flat;
    t.n1 = static_cast<int>(omega_.size()) - 1;
    t.n2 = static_cast<int>(omega_.size()) - 1;
    return t;
  }
  std::string kind() const override { return "diagonal_core"; }
  nlohmann::json params() const override { return {{"omega", omega_}}; }

 private:
  std::vector<double> omega_;
};

class DruryArvesonImpl final : public DiagramImpl {
 public:
  double alpha(int k1, int k2) const override {
    return std::sqrt(double(k1 + 1) / double(k1 + k2 + 1));
  }
  double beta(int k1, int k2) const override {
    return std::sqrt(double(k2 + 1) / double(k1 + k2 + 1));
  }
  Tail tail() const override {
    Tail t;
    t.kind = TailKind::Formula;
    t.n1 = t.n2 = 1;
    t.alpha_sup = 1.0;  // attained along the zeroth row
    t.beta_sup = 1.0;
    return t;
  }
  std::string kind() const override { return "drury_arveson"; }
};

class Fig2Impl final : public DiagramImpl {
 public:
  Fig2Impl(double x0, double a, AtomicMeasure1D xi) : x0_(x0), a_(a), xi_(std::move(xi)) {
    if (!(x0_ > 0.0) || !(a_ > 0.0))
      throw std::invalid_argument("fig2: x0 and a must be positive");
    if (xi_.has_atom_at_zero())
      throw std::invalid_argument("fig2: measure must have no atom at 0");
    if (!xi_.is_probability())
      throw std::invalid_argument("fig2: measure must be a probability measure");
    omega_ = weights_from_measure(xi_, 64);
  }

  double omega(int j) const {
    if (j < static_cast<int>(omega_.size())) return omega_[static_cast<std::size_t>(j)];
    // The measure weights increase toward sqrt(max position); beyond the
    // precomputed range they are numerically indistinguishable from it.
    return std::sqrt(xi_.max_position());
  }

  double alpha(int k1, int k2) const override {
    if (k1 == 0) return k2 == 0 ? x0_ : a_;
    return omega(k1 - 1);
  }
  double beta(int k1, int k2) const override {
    if (k2 == 0) return k1 == 0 ? x0_ : a_;
    return omega(k2 - 1);
  }

  Tail tail() const override {
    Tail t;
    if (xi_.atoms().size() == 1) {
      t.kind = TailKind::Flat;  // one atom: omega is constant
      t.n1 = t.n2 = 1;
    } else {
      t.kind = TailKind::Tensor;
      t.n1 = t.n2 = 1;
      // Sup of the tail only: the measure weights climb to sqrt(max atom
      // position). Head weights are covered by any window containing the
      // thresholds, so norms of restrictions stay exact.
      const double lim = std::sqrt(xi_.max_position());
      t.alpha_sup = lim;
      t.beta_sup = lim;
    }
    return t;
  }
  std::string kind() const override { return "fig2"; }
  nlohmann::json params() const override {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& at : xi_.atoms()) atoms.push_back({{"p", at.p}, {"r", at.r}});
    return {{"x0", x0_}, {"a", a_}, {"xi", {{"atoms", atoms}}}};
  }

 private:
  double x0_, a_;
  AtomicMeasure1D xi_;
  std::vector<double> omega_;
};

class Fig2GeneralImpl final : public DiagramImpl {
 public:
  Fig2GeneralImpl(double x0, double x1, double a, double y0, std::vector<double> omega,
                  std::vector<double> tau)
      : x0_(x0), x1_(x1), a_(a), y0_(y0), omega_(std::move(omega)), tau_(std::move(tau)) {
    require_positive_weights(omega_, "fig2_general omega");
    require_positive_weights(tau_, "fig2_general tau");
    if (!(x0_ > 0.0) || !(x1_ > 0.0) || !(a_ > 0.0) || !(y0_ > 0.0))
      throw std::invalid_argument("fig2_general: head weights must be positive");
    y1_ = tau_[0] * x1_ / omega_[0];
  }

  double alpha(int k1, int k2) const override {
    if (k2 == 0) {
      if (k1 == 0) return x0_;
      if (k1 == 1) return x1_;
      return clamped(omega_, k1 - 1);
    }
    if (k1 == 0) return k2 == 1 ? a_ : a_ * omega_[0] / x1_;
    return clamped(omega_, k1 - 1);
  }
  double beta(int k1, int k2) const override {
    if (k1 == 0) {
      if (k2 == 0) return y0_;
      if (k2 == 1) return y1_;
      return clamped(tau_, k2 - 1);
    }
    if (k2 == 0) return k1 == 1 ? a_ * y0_ / x0_ : a_ * y0_ * omega_[0] / (x0_ * x1_);
    return clamped(tau_, k2 - 1);
  }

  Tail tail() const override {
    Tail t;
    t.kind = TailKind::Flat;  // finite omega/tau lists clamp
    t.n1 = std::max<int>(2, static_cast<int>(omega_.size()));
    t.n2 = std::max<int>(2, static_cast<int>(tau_.size()));
    return t;
  }
  std::string kind() const override { return "fig2_general"; }
  nlohmann::json params() const override {
    return {{"x0", x0_}, {"x1", x1_}, {"a", a_},
            {"y0", y0_}, {"omega", omega_}, {"tau", tau_}};
  }

 private:
  double x0_, x1_, a_, y0_, y1_;
  std::vector<double> omega_, tau_;
};

class QuasinormalImpl final : public DiagramImpl {
 public:
  QuasinormalImpl(std::vector<double> row, double c) : row_(std::move(row)), c_(c) {
    require_positive_weights(row_, "quasinormal row");
    if (!(c_ > 0.0)) throw std::invalid_argument("quasinormal: C must be positive");
    for (std::size_t i = 0; i < row_.size(); ++i)
      if (row_[i] >= c_)
        throw std::invalid_argument("quasinormal: row weight at index " + std::to_string(i) +
                                    " reaches C; construction fails");
    grid_.push_back(row_);  // row 0; columns extend flatly past the list end
    // Rows that are not weights of a subnormal shift make the iteration blow
    // past C at some depth; probe far enough to catch that at build time.
    try {
      ensure(2, 32);
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(e.what());
    }
  }

  double alpha(int k1, int k2) const override {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k1, k2);
    return grid_[static_cast<std::size_t>(k2)][static_cast<std::size_t>(k1)];
  }
  double beta(int k1, int k2) const override {
    const double a = alpha(k1, k2);
    return std::sqrt(c_ * c_ - a * a);
  }

  Tail tail() const override {
    Tail t;
    t.kind = TailKind::Tensor;  // flat in k1 beyond the row, but not in k2
    t.n1 = static_cast<int>(row_.size());
    t.n2 = 1;
    t.alpha_sup = *std::max_element(row_.begin(), row_.end());
    // Columns with a non-constant head have alpha decreasing to 0, so beta
    // climbs to C; with a constant row beta is flat below it.
    const bool constant_row =
        std::all_of(row_.begin(), row_.end(), [&](double v) { return v == row_.front(); });
    t.beta_sup = constant_row ? std::sqrt(c_ * c_ - row_[0] * row_[0]) : c_;
    return t;
  }
  std::string kind() const override { return "quasinormal"; }
  nlohmann::json params() const override { return {{"alpha_row", row_}, {"C", c_}}; }

 private:
  // grid_[k2][k1]; generating row j+1 consumes one extra column of row j,
  // so the grid is rebuilt with margin whenever coverage runs out.
  void ensure(int k1, int k2) const {
    const std::size_t rows = static_cast<std::size_t>(k2) + 1;
    const std::size_t cols = static_cast<std::size_t>(k1) + 1;
    if (grid_.size() >= rows && grid_[rows - 1].size() >= cols) return;

    const std::size_t width = std::max(cols + rows + 4, row_.size() + rows + 4);
    std::vector<std::vector<double>> g;
    g.reserve(rows);
    std::vector<double> r0(width);
    for (std::size_t k = 0; k < width; ++k) r0[k] = row_[std::min(k, row_.size() - 1)];
    g.push_back(std::move(r0));
    for (std::size_t j = 1; j < rows; ++j) {
      const auto& prev = g.back();
      std::vector<double> next(prev.size() - 1);
      for (std::size_t k = 0; k + 1 < prev.size(); ++k) {
        const double bk = std::sqrt(c_ * c_ - prev[k] * prev[k]);
        const double bk1 = std::sqrt(c_ * c_ - prev[k + 1] * prev[k + 1]);
        const double v = prev[k] * bk1 / bk;
        if (!(v > 0.0) || v >= c_)
          throw std::runtime_error("quasinormal: generated weight at (" + std::to_string(k) +
                                   "," + std::to_string(j) + ") reaches C");
        next[k] = v;
      }
      g.push_back(std::move(next));
    }
    grid_ = std::move(g);
  }

  std::vector<double> row_;
  double c_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<double>> grid_;
};

}  // namespace

WeightDiagram build_tensor(std::vector<double> sigma, std::vector<double> tau) {
  return WeightDiagram(std::make_shared<TensorImpl>(std::move(sigma), std::move(tau)));
}

WeightDiagram build_diagonal_core(std::vector<double> omega) {
  return WeightDiagram(std::make_shared<DiagonalCoreImpl>(std::move(omega)));
}

WeightDiagram build_drury_arveson() {
  return WeightDiagram(std::make_shared<DruryArvesonImpl>());
}

WeightDiagram build_fig2_family(double x0, double a, const AtomicMeasure1D& xi) {
  return WeightDiagram(std::make_shared<Fig2Impl>(x0, a, xi));
}

WeightDiagram build_fig2_general(double x0, double x1, double a, double y0,
                                 std::vector<double> omega, std::vector<double> tau) {
  return WeightDiagram(std::make_shared<Fig2GeneralImpl>(x0, x1, a, y0, std::move(omega),
                                                         std::move(tau)));
}

WeightDiagram build_quasinormal_from_row(std::vector<double> alpha_row, double c) {
  return WeightDiagram(std::make_shared<QuasinormalImpl>(std::move(alpha_row), c));
}

// ============================================================================
// fig2 closed-form verdicts
// ============================================================================

Fig2Subnormality fig2_subnormal(double x0, double a, const AtomicMeasure1D& xi) {
  Fig2Subnormality res;
  if (xi.has_atom_at_zero()) {
    res.message = "hypotheses violated: measure has an atom at 0";
    return res;
  }
  const double r = rho(xi);
  if (x0 * x0 * r > 1.0 + 1e-15 || a * a * r > 1.0 + 1e-15) {
    res.verdict = SubnormalityVerdict::HypothesesViolated;
    res.message = "hypotheses violated: x0^2 rho <= 1 and a^2 rho <= 1 required";
    return res;
  }
  res.criterion_value = x0 * x0 * r * (2.0 - a * a * r);
  res.verdict = res.criterion_value <= 1.0 + 1e-15 ? SubnormalityVerdict::Subnormal
                                                   : SubnormalityVerdict::NotSubnormal;
  return res;
}

bool fig2_toral_hyponormal(double x0, double a, const AtomicMeasure1D& xi) {
  const auto w = weights_from_measure(xi, 2);
  return std::fabs(a - x0) <= w[1] - x0 + 1e-15;
}

ToralWitnessMargin toral_witness_margin(const AtomicMeasure1D& xi) {
  ToralWitnessMargin m;
  const auto w = weights_from_measure(xi, 2);
  m.omega1_sq_rho = w[1] * w[1] * rho(xi);
  m.witness_exists = m.omega1_sq_rho < 2.0;
  if (xi.atoms().size() == 2 && std::fabs(xi.atoms().front().p - 1.0) <= kPositionTol) {
    const double r = xi.atoms().front().r;
    const double s = xi.atoms().back().r;
    const double q = xi.atoms().back().p;
    m.two_atomic_expression = (r + s * q * q) / (r + s * q) * (r + s / q);
    m.q_below_threshold = q <= two_atomic_threshold();
  }
  return m;
}

double two_atomic_threshold() {
  const double r2 = std::sqrt(2.0);
  return 0.5 + r2 + 0.5 * std::sqrt(5.0 + 4.0 * r2);
}

// ============================================================================
// Region curves
// ============================================================================

RegionCurves region_curves(double y) {
  if (y < 0.0 || y > 1.0)
    throw std::invalid_argument("region_curves: y must lie in [0, 1]");
  RegionCurves c;
  const double y2 = y * y;
  c.s = std::sqrt(1.0 / (2.0 - y2));
  c.h = std::sqrt((1.0 + y2) / 2.0);
  c.ca = (1.0 + y) / 2.0;
  // Boundary of positivity of the 3x3 moment matrix at the origin for the
  // spherical transform; root of its determinant in x.
  const double r2 = std::sqrt(2.0);
  c.pa = r2 * (1.0 - y2) * (2.0 * y2 + 1.0) /
         (2.0 * (1.0 + y2) * (std::sqrt(1.0 + y2) - r2 * y2));
  return c;
}

RegionVerdicts region_verdicts(double x, double y) {
  if (!(x > 0.0) || !(x < 1.0) || !(y > 0.0) || !(y < 1.0))
    throw std::invalid_argument("region_verdicts: x and y must lie in (0, 1)");
  const RegionCurves c = region_curves(y);
  return {x <= c.s, x <= c.h, x <= c.ca, x <= c.pa};
}

double region_crossing() {
  double lo = 1e-9, hi = 1.0 - 1e-9;
  auto f = [](double y) {
    const RegionCurves c = region_curves(y);
    return c.ca - c.s;
  };
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace shiftlab
