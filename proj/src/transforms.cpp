#include "shiftlab/transforms.hpp"

#include <cmath>

namespace shiftlab {

namespace {

// Both transforms preserve flat tails with the same thresholds: beyond them
// every weight entering the defining ratio is equal, so the transformed
// weights are constant there too. For non-flat tails the base sups carry
// over for the diagram families used here (weights approach their sup in the
// limit and the transformed weights interpolate below it); when the base
// provides no sups the result stays window-limited.
Tail transformed_tail(const Tail& base) { return base; }

class ToralImpl final : public detail::DiagramImpl {
 public:
  explicit ToralImpl(std::shared_ptr<const detail::DiagramImpl> base) : base_(std::move(base)) {}
  double alpha(int k1, int k2) const override {
    return std::sqrt(base_->alpha(k1, k2) * base_->alpha(k1 + 1, k2));
  }
  double beta(int k1, int k2) const override {
    return std::sqrt(base_->beta(k1, k2) * base_->beta(k1, k2 + 1));
  }
  Tail tail() const override { return transformed_tail(base_->tail()); }

 private:
  std::shared_ptr<const detail::DiagramImpl> base_;
};

class SphericalImpl final : public detail::DiagramImpl {
 public:
  explicit SphericalImpl(std::shared_ptr<const detail::DiagramImpl> base)
      : base_(std::move(base)) {}

  double alpha(int k1, int k2) const override {
    const double here = sum_sq(k1, k2);
    const double next = sum_sq(k1 + 1, k2);
    return base_->alpha(k1, k2) * std::pow(next / here, 0.25);
  }
  double beta(int k1, int k2) const override {
    const double here = sum_sq(k1, k2);
    const double next = sum_sq(k1, k2 + 1);
    return base_->beta(k1, k2) * std::pow(next / here, 0.25);
  }
  Tail tail() const override { return transformed_tail(base_->tail()); }

 private:
  double sum_sq(int k1, int k2) const {
    const double a = base_->alpha(k1, k2);
    const double b = base_->beta(k1, k2);
    return a * a + b * b;
  }
  std::shared_ptr<const detail::DiagramImpl> base_;
};

class ScaleImpl final : public detail::DiagramImpl {
 public:
  ScaleImpl(std::shared_ptr<const detail::DiagramImpl> base, double a, double b)
      : base_(std::move(base)), a_(a), b_(b) {}
  double alpha(int k1, int k2) const override { return a_ * base_->alpha(k1, k2); }
  double beta(int k1, int k2) const override { return b_ * base_->beta(k1, k2); }
  Tail tail() const override {
    Tail t = base_->tail();
    if (t.alpha_sup) t.alpha_sup = a_ * *t.alpha_sup;
    if (t.beta_sup) t.beta_sup = b_ * *t.beta_sup;
    return t;
  }

 private:
  std::shared_ptr<const detail::DiagramImpl> base_;
  double a_, b_;
};

}  // namespace

WeightDiagram toral(const WeightDiagram& d) {
  return WeightDiagram(std::make_shared<ToralImpl>(d.impl()));
}

WeightDiagram spherical(const WeightDiagram& d) {
  return WeightDiagram(std::make_shared<SphericalImpl>(d.impl()));
}

WeightDiagram scale(const WeightDiagram& d, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("scale: scalars must be strictly positive");
  return WeightDiagram(std::make_shared<ScaleImpl>(d.impl(), a, b));
}

ToralCommutesReport toral_commutes(const WeightDiagram& d, const LatticeWindow& w) {
  ToralCommutesReport rep;
  auto scan = [&](auto lhs, auto rhs, ViolationReport& out) {
    for (int k2 = 0; k2 <= w.k2_max; ++k2)
      for (int k1 = 0; k1 <= w.k1_max; ++k1) {
        const double l = lhs(k1, k2);
        const double r = rhs(k1, k2);
        const double diff = std::fabs(l - r);
        const double rel = diff / std::max({std::fabs(l), std::fabs(r), 1e-300});
        if (rel > out.max_relative) {
          out.max_relative = rel;
          out.max_abs = diff;
          out.argmax = {k1, k2};
        }
      }
  };
  scan([&](int k1, int k2) { return d.alpha(k1, k2 + 1) * d.alpha(k1 + 1, k2 + 1); },
       [&](int k1, int k2) { return d.alpha(k1 + 1, k2) * d.alpha(k1, k2 + 2); },
       rep.alpha_form);
  scan([&](int k1, int k2) { return d.beta(k1 + 1, k2) * d.beta(k1 + 1, k2 + 1); },
       [&](int k1, int k2) { return d.beta(k1, k2 + 1) * d.beta(k1 + 2, k2); },
       rep.beta_form);
  rep.forms_disagreement = std::fabs(rep.alpha_form.max_relative - rep.beta_form.max_relative);
  return rep;
}

bool transforms_coincide(const WeightDiagram& d, const LatticeWindow& w, double rel_tol) {
  for (int k2 = 0; k2 <= w.k2_max; ++k2)
    for (int k1 = 0; k1 <= w.k1_max; ++k1) {
      const double a1 = d.alpha(k1 + 1, k2);
      const double a2 = d.alpha(k1, k2 + 1);
      if (std::fabs(a1 - a2) > rel_tol * std::max(a1, a2)) return false;
      const double b1 = d.beta(k1, k2 + 1);
      const double b2 = d.beta(k1 + 1, k2);
      if (std::fabs(b1 - b2) > rel_tol * std::max(b1, b2)) return false;
    }
  // Cross-check: on this class the two transforms agree pointwise.
  const WeightDiagram t = toral(d);
  const WeightDiagram s = spherical(d);
  for (int k2 = 0; k2 <= w.k2_max; ++k2)
    for (int k1 = 0; k1 <= w.k1_max; ++k1) {
      if (std::fabs(t.alpha(k1, k2) - s.alpha(k1, k2)) > 1e-10) return false;
      if (std::fabs(t.beta(k1, k2) - s.beta(k1, k2)) > 1e-10) return false;
    }
  return true;
}

FixedPointReport is_spherical_fixed_point(const WeightDiagram& d, const LatticeWindow& w,
                                          double tol) {
  FixedPointReport rep;
  const WeightDiagram s = spherical(d);
  const double a0 = d.alpha(0, 0);
  const double b0 = d.beta(0, 0);
  rep.c_squared = a0 * a0 + b0 * b0;
  for (int k2 = 0; k2 <= w.k2_max; ++k2)
    for (int k1 = 0; k1 <= w.k1_max; ++k1) {
      rep.max_gap = std::max({rep.max_gap, std::fabs(s.alpha(k1, k2) - d.alpha(k1, k2)),
                              std::fabs(s.beta(k1, k2) - d.beta(k1, k2))});
      const double a = d.alpha(k1, k2);
      const double b = d.beta(k1, k2);
      rep.c_max_deviation =
          std::max(rep.c_max_deviation, std::fabs(a * a + b * b - rep.c_squared));
    }
  rep.fixed = rep.max_gap <= tol;
  return rep;
}

}  // namespace shiftlab
