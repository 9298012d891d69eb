#include "shiftlab/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace shiftlab {

namespace {

class TableImpl final : public detail::DiagramImpl {
 public:
  TableImpl(std::vector<std::vector<double>> a, std::vector<std::vector<double>> b,
            std::optional<Tail> tail)
      : a_(std::move(a)), b_(std::move(b)), tail_(tail) {
    if (a_.empty() || b_.empty()) throw std::invalid_argument("table diagram: empty table");
    for (const auto& row : a_)
      if (row.empty()) throw std::invalid_argument("table diagram: empty row");
    for (const auto& row : b_)
      if (row.empty()) throw std::invalid_argument("table diagram: empty row");
    for (const auto* t : {&a_, &b_})
      for (const auto& row : *t)
        for (double v : row)
          if (!(v > 0.0)) throw std::invalid_argument("table diagram: weights must be positive");
  }

  static double clamped(const std::vector<std::vector<double>>& t, int k1, int k2) {
    const auto& row = t[std::min<std::size_t>(k2, t.size() - 1)];
    return row[std::min<std::size_t>(k1, row.size() - 1)];
  }

  double alpha(int k1, int k2) const override { return clamped(a_, k1, k2); }
  double beta(int k1, int k2) const override { return clamped(b_, k1, k2); }

  Tail tail() const override {
    if (tail_) return *tail_;
    // No tail descriptor: clamping still extends the table flatly, but the
    // caller did not assert that, so norms stay window-limited.
    Tail t;
    t.kind = TailKind::Flat;
    t.n1 = static_cast<int>(a_[0].size());
    t.n2 = static_cast<int>(a_.size());
    return t;
  }

  std::string kind() const override { return "table"; }
  nlohmann::json params() const override {
    nlohmann::json j;
    j["alpha"] = a_;
    j["beta"] = b_;
    if (tail_) j["tail"] = {{"n1", tail_->n1}, {"n2", tail_->n2}};
    return j;
  }

 private:
  std::vector<std::vector<double>> a_, b_;
  std::optional<Tail> tail_;
};

class GeneratorImpl final : public detail::DiagramImpl {
 public:
  GeneratorImpl(std::function<double(int, int)> a, std::function<double(int, int)> b, Tail t)
      : a_(std::move(a)), b_(std::move(b)), tail_(t) {}
  double alpha(int k1, int k2) const override { return a_(k1, k2); }
  double beta(int k1, int k2) const override { return b_(k1, k2); }
  Tail tail() const override { return tail_; }

 private:
  std::function<double(int, int)> a_, b_;
  Tail tail_;
};

class RestrictImpl final : public detail::DiagramImpl {
 public:
  RestrictImpl(std::shared_ptr<const detail::DiagramImpl> base, int dj, int di)
      : base_(std::move(base)), dj_(dj), di_(di) {}

  double alpha(int k1, int k2) const override { return base_->alpha(k1 + dj_, k2 + di_); }
  double beta(int k1, int k2) const override { return base_->beta(k1 + dj_, k2 + di_); }

  Tail tail() const override {
    Tail t = base_->tail();
    t.n1 = std::max(t.n1 - dj_, 0);
    t.n2 = std::max(t.n2 - di_, 0);
    // Sup of a restriction can be smaller than the parent's; keep limits only
    // where they are still attained (monotone tails), which holds for the
    // formula diagrams used here. Flat tails recompute from the window anyway.
    return t;
  }

 private:
  std::shared_ptr<const detail::DiagramImpl> base_;
  int dj_, di_;
};

}  // namespace

WeightDiagram make_table_diagram(std::vector<std::vector<double>> alpha,
                                 std::vector<std::vector<double>> beta,
                                 std::optional<Tail> tail) {
  return WeightDiagram(std::make_shared<TableImpl>(std::move(alpha), std::move(beta), tail));
}

WeightDiagram make_generator_diagram(std::function<double(int, int)> alpha,
                                     std::function<double(int, int)> beta, Tail tail) {
  return WeightDiagram(
      std::make_shared<GeneratorImpl>(std::move(alpha), std::move(beta), tail));
}

double WeightDiagram::norm_bound() const {
  OperatorNorms n = operator_norms(*this);
  return std::max(n.t1, n.t2);
}

ViolationReport check_commutativity(const WeightDiagram& d, const LatticeWindow& w) {
  ViolationReport rep;
  for (int k2 = 0; k2 <= w.k2_max; ++k2) {
    for (int k1 = 0; k1 <= w.k1_max; ++k1) {
      const double lhs = d.alpha(k1, k2 + 1) * d.beta(k1, k2);
      const double rhs = d.beta(k1 + 1, k2) * d.alpha(k1, k2);
      const double diff = std::fabs(lhs - rhs);
      const double rel = diff / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
      if (rel > rep.max_relative) {
        rep.max_relative = rel;
        rep.max_abs = diff;
        rep.argmax = {k1, k2};
      }
    }
  }
  return rep;
}

double moment(const WeightDiagram& d, LatticePoint k) {
  if (k.k1 < 0 || k.k2 < 0) throw std::invalid_argument("moment: negative lattice point");
  if (k.k1 + k.k2 > 60) return std::exp(log_moment(d, k));
  double g = 1.0;
  for (int i = 0; i < k.k1; ++i) {
    const double a = d.alpha(i, 0);
    g *= a * a;
  }
  for (int j = 0; j < k.k2; ++j) {
    const double b = d.beta(k.k1, j);
    g *= b * b;
  }
  return g;
}

double log_moment(const WeightDiagram& d, LatticePoint k) {
  double s = 0.0;
  for (int i = 0; i < k.k1; ++i) s += 2.0 * std::log(d.alpha(i, 0));
  for (int j = 0; j < k.k2; ++j) s += 2.0 * std::log(d.beta(k.k1, j));
  return s;
}

MomentTable::MomentTable(const WeightDiagram& d, const LatticeWindow& w) : w_(w) {
  values_.assign(static_cast<std::size_t>(w.size()), 0.0);
  auto idx = [this](int k1, int k2) {
    return static_cast<std::size_t>(k2) * (w_.k1_max + 1) + k1;
  };
  values_[idx(0, 0)] = 1.0;
  for (int k1 = 1; k1 <= w.k1_max; ++k1) {
    const double a = d.alpha(k1 - 1, 0);
    values_[idx(k1, 0)] = values_[idx(k1 - 1, 0)] * (a * a);
  }
  for (int k1 = 0; k1 <= w.k1_max; ++k1) {
    for (int k2 = 1; k2 <= w.k2_max; ++k2) {
      const double b = d.beta(k1, k2 - 1);
      values_[idx(k1, k2)] = values_[idx(k1, k2 - 1)] * (b * b);
    }
  }
}

double MomentTable::at(int k1, int k2) const {
  if (k1 < 0 || k2 < 0 || k1 > w_.k1_max || k2 > w_.k2_max)
    throw std::out_of_range("MomentTable::at outside window");
  return values_[static_cast<std::size_t>(k2) * (w_.k1_max + 1) + k1];
}

OperatorNorms operator_norms(const WeightDiagram& d) {
  const Tail t = d.tail();
  OperatorNorms n;
  const int b1 = t.n1 + 1;
  const int b2 = t.n2 + 1;
  for (int k2 = 0; k2 <= b2; ++k2)
    for (int k1 = 0; k1 <= b1; ++k1) {
      n.t1 = std::max(n.t1, d.alpha(k1, k2));
      n.t2 = std::max(n.t2, d.beta(k1, k2));
    }
  switch (t.kind) {
    case TailKind::Flat:
      // Weights take finitely many values, all visible in the window.
      n.exact = true;
      break;
    case TailKind::Tensor:
    case TailKind::Formula:
      if (t.alpha_sup && t.beta_sup) {
        n.t1 = std::max(n.t1, *t.alpha_sup);
        n.t2 = std::max(n.t2, *t.beta_sup);
        n.exact = true;
      } else {
        n.exact = false;
      }
      break;
  }
  // Table diagrams without an asserted tail only give a window bound.
  if (d.kind() == "table" && !d.params().contains("tail")) n.exact = false;
  return n;
}

WeightDiagram restrict(const WeightDiagram& d, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("restrict: offsets must be nonnegative");
  if (i == 0 && j == 0) return d;
  return WeightDiagram(std::make_shared<RestrictImpl>(d.impl(), j, i));
}

}  // namespace shiftlab
