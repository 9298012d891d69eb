#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"
#include "shiftlab/families.hpp"
#include "shiftlab/lattice.hpp"

using namespace shiftlab;

namespace {

// Independent moment oracle: product of squared weights along the path that
// goes up first, then right.
double moment_up_then_right(const WeightDiagram& d, LatticePoint k) {
  double g = 1.0;
  for (int j = 0; j < k.k2; ++j) {
    const double b = d.beta(0, j);
    g *= b * b;
  }
  for (int i = 0; i < k.k1; ++i) {
    const double a = d.alpha(i, k.k2);
    g *= a * a;
  }
  return g;
}

std::vector<WeightDiagram> sample_commuting_diagrams() {
  return {
      build_tensor({0.5, 0.8, 1.0}, {0.7, 1.0}),
      build_diagonal_core({0.6, 0.9, 1.1, 1.1}),
      build_drury_arveson(),
      build_fig2_family(0.8, 0.5, AtomicMeasure1D({{1.0, 0.5}, {2.0, 0.5}})),
      build_fig2_family(0.9, 0.5, AtomicMeasure1D::point_mass(1.0)),
      build_quasinormal_from_row({0.5, 0.7, 0.7}, 1.0),
  };
}

}  // namespace

TEST_CASE("commutativity: tensor and diagonal-core diagrams commute exactly") {
  const LatticeWindow w(4, 4);
  CHECK(check_commutativity(build_tensor({0.3, 1.2, 1.2}, {0.9, 1.0}), w).max_abs == 0.0);
  CHECK(check_commutativity(build_diagonal_core({1, 2, 3, 4, 5}), w).max_relative <= 1e-15);
}

TEST_CASE("commutativity: perturbing one weight breaks the identity at the origin") {
  // flat diagram with beta(1,0) bumped by +0.1
  auto alpha = [](int, int) { return 1.0; };
  auto beta = [](int k1, int k2) { return (k1 == 1 && k2 == 0) ? 1.1 : 1.0; };
  const WeightDiagram d =
      make_generator_diagram(alpha, beta, Tail{TailKind::Flat, 2, 2, {}, {}});
  const auto rep = check_commutativity(d, LatticeWindow(3, 3));
  CHECK(rep.max_abs == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rep.argmax.k1 == 0);
  CHECK(rep.argmax.k2 == 0);
  CHECK_FALSE(rep.holds());
}

TEST_CASE("moment: frozen values") {
  CHECK(moment(build_drury_arveson(), {0, 0}) == 1.0);
  CHECK(moment(build_drury_arveson(), {1, 1}) == doctest::Approx(0.5).epsilon(1e-14));
  const WeightDiagram theta = build_diagonal_core({0.5, 2.0, 0.5, 2.0, 0.5, 2.0});
  CHECK(moment(theta, {2, 0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("moment: path independence on commuting diagrams") {
  const LatticeWindow w(6, 6);
  for (const auto& d : sample_commuting_diagrams()) {
    for (int k2 = 0; k2 <= w.k2_max; ++k2)
      for (int k1 = 0; k1 <= w.k1_max; ++k1) {
        const double right_up = moment(d, {k1, k2});
        const double up_right = moment_up_then_right(d, {k1, k2});
        CHECK(std::fabs(right_up - up_right) <= 1e-12 * std::max(right_up, up_right));
      }
  }
}

TEST_CASE("moment: log-space path beyond degree 60 agrees with direct products") {
  const WeightDiagram d = build_tensor({0.5}, {0.5});
  // total degree 81 exceeds the log-space threshold; 0.25^81 is representable
  const double via_log = moment(d, {40, 41});
  const double direct = std::pow(0.25, 81);
  CHECK(std::fabs(via_log - direct) <= 1e-10 * direct);
  CHECK(log_moment(d, {40, 41}) == doctest::Approx(81 * std::log(0.25)).epsilon(1e-14));
}

TEST_CASE("MomentTable: recursions hold along the construction paths") {
  const WeightDiagram d = build_fig2_family(0.8, 0.5, AtomicMeasure1D({{1.0, 0.5}, {2.0, 0.5}}));
  const LatticeWindow w(5, 5);
  const MomentTable t(d, w);
  CHECK(t.at(0, 0) == 1.0);
  for (int k1 = 0; k1 + 1 <= w.k1_max; ++k1) {
    const double a = d.alpha(k1, 0);
    CHECK(t.at(k1 + 1, 0) == t.at(k1, 0) * (a * a));  // row 0 built by alpha
  }
  for (int k1 = 0; k1 <= w.k1_max; ++k1)
    for (int k2 = 0; k2 + 1 <= w.k2_max; ++k2) {
      const double b = d.beta(k1, k2);
      CHECK(t.at(k1, k2 + 1) == t.at(k1, k2) * (b * b));  // columns built by beta
    }
  // cross-direction recursion holds to relative tolerance
  for (int k1 = 0; k1 + 1 <= w.k1_max; ++k1)
    for (int k2 = 1; k2 <= w.k2_max; ++k2) {
      const double a = d.alpha(k1, k2);
      CHECK(t.at(k1 + 1, k2) == doctest::Approx(t.at(k1, k2) * a * a).epsilon(1e-12));
    }
}

TEST_CASE("operator_norms: exact sups from tail descriptors") {
  SUBCASE("tensor of unweighted shifts") {
    const auto n = operator_norms(build_tensor({1.0}, {1.0}));
    CHECK(n.t1 == 1.0);
    CHECK(n.t2 == 1.0);
    CHECK(n.exact);
  }
  SUBCASE("Drury-Arveson") {
    const auto n = operator_norms(build_drury_arveson());
    CHECK(n.t1 == 1.0);
    CHECK(n.t2 == 1.0);
    CHECK(n.exact);
  }
  SUBCASE("fig2 with point-mass measure") {
    const auto n = operator_norms(build_fig2_family(0.9, 0.5, AtomicMeasure1D::point_mass(1.0)));
    CHECK(n.t1 == 1.0);
    CHECK(n.t2 == 1.0);
    CHECK(n.exact);
  }
  SUBCASE("fig2 with two atoms: sup comes from the measure limit") {
    const auto n =
        operator_norms(build_fig2_family(0.8, 0.5, AtomicMeasure1D({{1.0, 0.5}, {2.0, 0.5}})));
    CHECK(n.t1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(n.exact);
  }
  SUBCASE("table without an asserted tail is flagged approximate") {
    const auto n = operator_norms(make_table_diagram({{1.0, 2.0}}, {{1.0}}));
    CHECK_FALSE(n.exact);
    CHECK(n.t1 == 2.0);
  }
}

TEST_CASE("restrict: offsets compose and (0,0) is the identity") {
  const WeightDiagram d = build_drury_arveson();
  const WeightDiagram r0 = restrict(d, 0, 0);
  const WeightDiagram r = restrict(restrict(d, 1, 2), 2, 1);
  const WeightDiagram r2 = restrict(d, 3, 3);
  for (int k2 = 0; k2 <= 4; ++k2)
    for (int k1 = 0; k1 <= 4; ++k1) {
      CHECK(r0.alpha(k1, k2) == d.alpha(k1, k2));
      CHECK(r.alpha(k1, k2) == r2.alpha(k1, k2));
      CHECK(r.beta(k1, k2) == r2.beta(k1, k2));
    }
}

TEST_CASE("restrict: core of the fig2 family is the tensor square of the measure shift") {
  const AtomicMeasure1D xi({{1.0, 0.5}, {2.0, 0.5}});
  const WeightDiagram core = restrict(build_fig2_family(0.8, 0.5, xi), 1, 1);
  const auto w = weights_from_measure(xi, 8);
  const WeightDiagram tensor = build_tensor({w.begin(), w.end()}, {w.begin(), w.end()});
  for (int k2 = 0; k2 <= 5; ++k2)
    for (int k1 = 0; k1 <= 5; ++k1) {
      CHECK(core.alpha(k1, k2) == doctest::Approx(tensor.alpha(k1, k2)).epsilon(1e-14));
      CHECK(core.beta(k1, k2) == doctest::Approx(tensor.beta(k1, k2)).epsilon(1e-14));
    }
}

TEST_CASE("restrict: core of a diagonal-core diagram shifts the sequence by two") {
  const std::vector<double> omega{0.5, 0.7, 0.9, 1.0, 1.0};
  const WeightDiagram core = restrict(build_diagonal_core(omega), 1, 1);
  for (int k2 = 0; k2 <= 4; ++k2)
    for (int k1 = 0; k1 <= 4; ++k1) {
      const double expected = omega[std::min<std::size_t>(k1 + k2 + 2, omega.size() - 1)];
      CHECK(core.alpha(k1, k2) == expected);
      CHECK(core.beta(k1, k2) == expected);
    }
}

TEST_CASE("weights must be strictly positive") {
  CHECK_THROWS_AS(build_tensor({1.0, 0.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_table_diagram({{1.0, -2.0}}, {{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_diagonal_core({}), std::invalid_argument);
}

TEST_CASE("concurrent reads of a memoizing diagram are consistent") {
  // the spherical-isometry construction memoizes rows lazily; hammer it from
  // several threads and compare against a fresh sequential evaluation
  const std::vector<double> row{0.4, 0.75, 0.75};
  const WeightDiagram shared = build_quasinormal_from_row(row, 1.0);
  const WeightDiagram reference = build_quasinormal_from_row(row, 1.0);
  std::vector<std::vector<double>> results(8);
  {
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t)
      workers.emplace_back([&, t] {
        std::mt19937_64 rng(t);
        for (int i = 0; i < 400; ++i) {
          const int k1 = static_cast<int>(rng() % 12);
          const int k2 = static_cast<int>(rng() % 12);
          results[static_cast<std::size_t>(t)].push_back(shared.alpha(k1, k2) +
                                                         shared.beta(k1, k2));
        }
      });
    for (auto& w : workers) w.join();
  }
  for (int t = 0; t < 8; ++t) {
    std::mt19937_64 rng(t);
    for (int i = 0; i < 400; ++i) {
      const int k1 = static_cast<int>(rng() % 12);
      const int k2 = static_cast<int>(rng() % 12);
      CHECK(results[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] ==
            reference.alpha(k1, k2) + reference.beta(k1, k2));
    }
  }
}
