#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace shiftlab {

struct LatticePoint {
  int k1 = 0;
  int k2 = 0;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.k1 + b.k1, a.k2 + b.k2};
  }
  friend bool operator==(LatticePoint a, LatticePoint b) {
    return a.k1 == b.k1 && a.k2 == b.k2;
  }
};

inline constexpr LatticePoint eps1{1, 0};
inline constexpr LatticePoint eps2{0, 1};

/// Finite verification rectangle {0..k1_max} x {0..k2_max}.
struct LatticeWindow {
  int k1_max = 0;
  int k2_max = 0;

  LatticeWindow() = default;
  LatticeWindow(int a, int b) : k1_max(a), k2_max(b) {
    if (a < 0 || b < 0) throw std::invalid_argument("window bounds must be nonnegative");
  }
  int size() const { return (k1_max + 1) * (k2_max + 1); }
};

enum class TailKind {
  Flat,     // both weight families constant beyond (n1, n2) in the respective directions
  Tensor,   // beyond (n1, n2): alpha depends only on k1, beta only on k2
  Formula,  // closed form on the whole lattice
};

/// Describes how the weights behave outside any finite window. Exact
/// operator norms and certifying-window labels are derived from it.
struct Tail {
  TailKind kind = TailKind::Flat;
  int n1 = 0;
  int n2 = 0;
  // Exact sups of the weight families, when the window maximum alone is not
  // enough (non-flat tails approach their sup in the limit).
  std::optional<double> alpha_sup;
  std::optional<double> beta_sup;
};

namespace detail {

class DiagramImpl {
 public:
  virtual ~DiagramImpl() = default;
  virtual double alpha(int k1, int k2) const = 0;
  virtual double beta(int k1, int k2) const = 0;
  virtual Tail tail() const = 0;
  // Serialization metadata; empty json for derived diagrams, which are
  // written out as materialized tables.
  virtual std::string kind() const { return "derived"; }
  virtual nlohmann::json params() const { return nlohmann::json::object(); }
};

}  // namespace detail

/// A 2-variable weighted shift given by its weight diagram: alpha moves one
/// step in the first lattice direction, beta in the second. Diagrams are
/// generator-backed and immutable; evaluation is safe from concurrent
/// threads (implementations memoize idempotently or under a lock).
class WeightDiagram {
 public:
  explicit WeightDiagram(std::shared_ptr<const detail::DiagramImpl> impl)
      : impl_(std::move(impl)) {}

  double alpha(LatticePoint k) const { return impl_->alpha(k.k1, k.k2); }
  double beta(LatticePoint k) const { return impl_->beta(k.k1, k.k2); }
  double alpha(int k1, int k2) const { return impl_->alpha(k1, k2); }
  double beta(int k1, int k2) const { return impl_->beta(k1, k2); }

  Tail tail() const { return impl_->tail(); }
  std::string kind() const { return impl_->kind(); }
  nlohmann::json params() const { return impl_->params(); }

  /// Upper bound for both weight families (the exact sup when the tail
  /// provides one, otherwise a window bound).
  double norm_bound() const;

  const std::shared_ptr<const detail::DiagramImpl>& impl() const { return impl_; }

 private:
  std::shared_ptr<const detail::DiagramImpl> impl_;
};

/// Generic table-backed diagram. Indices clamp to the table edge, which is
/// exactly the flat-tail extension semantics.
WeightDiagram make_table_diagram(std::vector<std::vector<double>> alpha,  // alpha[k2][k1]
                                 std::vector<std::vector<double>> beta,
                                 std::optional<Tail> tail = std::nullopt);

/// Diagram defined by arbitrary generators (used for tests and probes).
WeightDiagram make_generator_diagram(std::function<double(int, int)> alpha,
                                     std::function<double(int, int)> beta, Tail tail);

struct ViolationReport {
  double max_abs = 0.0;       // max |lhs - rhs| over the window
  double max_relative = 0.0;  // max |lhs - rhs| / max(|lhs|, |rhs|)
  LatticePoint argmax{0, 0};

  bool holds(double rel_tol = 1e-12) const { return max_relative <= rel_tol; }
};

/// Checks the shift-commutativity identity alpha(k+e2)*beta(k) =
/// beta(k+e1)*alpha(k) at every point of the window.
ViolationReport check_commutativity(const WeightDiagram& d, const LatticeWindow& w);

/// Moment at k: product of squared weights along the staircase path that
/// goes right first, then up. Switches to log-space accumulation beyond
/// total degree 60.
double moment(const WeightDiagram& d, LatticePoint k);

/// log of the moment at k, always computed by summation of logs.
double log_moment(const WeightDiagram& d, LatticePoint k);

/// Eagerly evaluated moment table over a window. gamma(0,0) = 1, and the
/// stored values satisfy the one-step recursions along the construction
/// paths (row 0 by alpha, each column upward by beta).
class MomentTable {
 public:
  MomentTable(const WeightDiagram& d, const LatticeWindow& w);

  double at(int k1, int k2) const;
  double at(LatticePoint k) const { return at(k.k1, k.k2); }
  const LatticeWindow& window() const { return w_; }

 private:
  LatticeWindow w_;
  std::vector<double> values_;
};

struct OperatorNorms {
  double t1 = 0.0;
  double t2 = 0.0;
  bool exact = false;  // false: window sup only (lower bound)
};

/// Sup of the alpha (resp. beta) weights. Exact whenever the tail
/// descriptor pins the behavior at infinity; otherwise a flagged window sup.
OperatorNorms operator_norms(const WeightDiagram& d);

/// Restriction to the sublattice starting at (j, i): the new diagram reads
/// weights at k + (j, i). restrict(d, 1, 1) is the core.
WeightDiagram restrict(const WeightDiagram& d, int i, int j);

}  // namespace shiftlab
