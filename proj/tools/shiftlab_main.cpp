// shiftlab -- weight diagrams of 2-variable weighted shifts: builders, toral
// and spherical Aluthge transforms, windowed positivity checks, region
// curves, Drury-Arveson asymptotics and spherical-isometry construction.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "shiftlab/families.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/lattice.hpp"
#include "shiftlab/positivity.hpp"
#include "shiftlab/spectra.hpp"
#include "shiftlab/transforms.hpp"

namespace {

using nlohmann::json;
using namespace shiftlab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdictFalse = 2;

LatticeWindow parse_window(const std::string& spec) {
  const auto x = spec.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("window must look like K1xK2, e.g. 6x6");
  return LatticeWindow(std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1)));
}

std::vector<double> parse_number_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
  return out;
}

// "0.5@1,0.5@2" -> atoms (mass@position)
AtomicMeasure1D parse_measure_spec(const std::string& spec) {
  std::vector<Atom1D> atoms;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos)
      throw std::invalid_argument("measure atoms must look like mass@position");
    atoms.push_back({std::stod(item.substr(at + 1)), std::stod(item.substr(0, at))});
  }
  return AtomicMeasure1D(std::move(atoms));
}

struct GridSpec {
  double start, stop, step;
};

GridSpec parse_grid(const std::string& spec) {
  std::stringstream ss(spec);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
    throw std::invalid_argument("grid must look like start:stop:step");
  GridSpec g{std::stod(a), std::stod(b), std::stod(c)};
  if (!(g.step > 0.0)) throw std::invalid_argument("grid step must be positive");
  return g;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Tolerances {
  double psd = 1e-10;
  double identity = 1e-12;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-variable weighted shift laboratory"};
  app.require_subcommand(1);

  double tol_override = -1.0;
  app.add_option("--tol", tol_override,
                 "override both the PSD tolerance (default 1e-10) and the identity "
                 "tolerance (default 1e-12)");

  // ---- build ----
  auto* build = app.add_subcommand("build", "build a named diagram and write it to JSON");
  std::string family, out_path, xi_spec, sigma_spec, tau_spec, omega_spec;
  double x0 = 0.0, a_param = 0.0;
  build->add_option("--family", family, "fig2|tensor|diagonal_core|da")->required();
  build->add_option("--out", out_path, "output diagram file")->required();
  build->add_option("--x0", x0, "fig2 zeroth weight");
  build->add_option("--a", a_param, "fig2 interior head weight");
  build->add_option("--xi", xi_spec, "fig2 measure, e.g. 0.5@1,0.5@2");
  build->add_option("--sigma", sigma_spec, "tensor first-direction weights");
  build->add_option("--tau", tau_spec, "tensor second-direction weights");
  build->add_option("--omega", omega_spec, "diagonal-core weights");

  // ---- transform ----
  auto* transform = app.add_subcommand("transform", "apply a transform to a diagram");
  std::string tr_kind, in_path, tr_out, tr_window = "8x8";
  transform->add_option("--kind", tr_kind, "toral|spherical")->required();
  transform->add_option("--in", in_path, "input diagram file")->required();
  transform->add_option("--out", tr_out, "output diagram file")->required();
  transform->add_option("--window", tr_window, "materialization window K1xK2");

  // ---- check ----
  auto* check = app.add_subcommand("check", "windowed k-hyponormality verdict");
  int check_k = 1;
  std::string check_in, check_window = "6x6", check_report;
  check->add_option("--k", check_k, "positivity order k");
  check->add_option("--in", check_in, "input diagram file")->required();
  check->add_option("--window", check_window, "sweep window K1xK2");
  check->add_option("--report", check_report, "write a JSON report here");

  // ---- region ----
  auto* region = app.add_subcommand("region", "tabulate region curves to CSV");
  std::string curve = "example46", ygrid = "0:1:0.01", csv_path;
  region->add_option("--curve", curve, "curve set name (example46)");
  region->add_option("--ygrid", ygrid, "grid start:stop:step (stop exclusive)");
  region->add_option("--csv", csv_path, "output CSV file")->required();

  // ---- da-verify ----
  auto* dav = app.add_subcommand("da-verify",
                                 "Drury-Arveson commutator coefficients and transform gaps");
  int nmax = 50;
  std::string da_report;
  dav->add_option("--nmax", nmax, "largest homogeneous degree");
  dav->add_option("--report", da_report, "write a JSON report here");

  // ---- spectra ----
  auto* spect = app.add_subcommand("spectra", "spectral radii of a diagram and its transforms");
  std::string spectra_in;
  spect->add_option("--in", spectra_in, "input diagram file")->required();

  // ---- quasinormal ----
  auto* quasi = app.add_subcommand("quasinormal",
                                   "build the spherical fixed point from a zeroth row");
  std::string row_spec, quasi_out, quasi_window = "8x8";
  double c_param = 1.0;
  quasi->add_option("--row", row_spec, "zeroth-row weights, comma separated")->required();
  quasi->add_option("--C", c_param, "constant with alpha^2+beta^2 = C^2");
  quasi->add_option("--out", quasi_out, "output diagram file")->required();
  quasi->add_option("--window", quasi_window, "verification window K1xK2");

  // ---- probe ----
  auto* probe = app.add_subcommand("probe", "transform continuity probe under perturbation");
  std::string probe_in, probe_window = "6x6", probe_report;
  double probe_eps = 0.01;
  std::uint64_t probe_seed = 42;
  probe->add_option("--in", probe_in, "input diagram file")->required();
  probe->add_option("--eps", probe_eps, "relative perturbation size");
  probe->add_option("--window", probe_window, "report window K1xK2");
  probe->add_option("--seed", probe_seed, "perturbation seed (echoed in the report)");
  probe->add_option("--report", probe_report, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;  // usage problems all map to 1
  }

  Tolerances tol;
  if (tol_override > 0.0) tol.psd = tol.identity = tol_override;

  try {
    if (*build) {
      WeightDiagram d = [&] {
        if (family == "fig2") {
          if (xi_spec.empty()) throw std::invalid_argument("fig2 requires --xi");
          return build_fig2_family(x0, a_param, parse_measure_spec(xi_spec));
        }
        if (family == "tensor") {
          if (sigma_spec.empty() || tau_spec.empty())
            throw std::invalid_argument("tensor requires --sigma and --tau");
          return build_tensor(parse_number_list(sigma_spec), parse_number_list(tau_spec));
        }
        if (family == "diagonal_core") {
          if (omega_spec.empty()) throw std::invalid_argument("diagonal_core requires --omega");
          return build_diagonal_core(parse_number_list(omega_spec));
        }
        if (family == "da") return build_drury_arveson();
        throw std::invalid_argument("unknown family '" + family + "'");
      }();
      io::save_diagram(d, LatticeWindow(8, 8), out_path);
      std::cout << "wrote " << family << " diagram to " << out_path << "\n";
      return kExitOk;
    }

    if (*transform) {
      const WeightDiagram d = io::load_diagram(in_path);
      const LatticeWindow w = parse_window(tr_window);
      WeightDiagram t = [&] {
        if (tr_kind == "toral") return toral(d);
        if (tr_kind == "spherical") return spherical(d);
        throw std::invalid_argument("transform kind must be toral or spherical");
      }();
      io::save_diagram(t, w, tr_out);
      std::cout << "wrote " << tr_kind << " transform to " << tr_out << "\n";
      return kExitOk;
    }

    if (*check) {
      const WeightDiagram d = io::load_diagram(check_in);
      const LatticeWindow w = parse_window(check_window);
      const KHyponormalityReport rep = k_hyponormal(d, check_k, w, tol.psd);
      json verdicts = json::array();
      verdicts.push_back({{"name", "k_hyponormal"},
                          {"k", check_k},
                          {"verdict", rep.verdict},
                          {"scope", rep.certifying ? "certifying" : "window-limited"}});
      json diag;
      diag["min_relative_eigenvalue"] = rep.min_relative_eigenvalue;
      diag["per_u_min_eigenvalues"] = rep.per_u_min_eigenvalues;
      if (rep.first_failing_u)
        diag["first_failing_u"] = {rep.first_failing_u->k1, rep.first_failing_u->k2};
      const json report = io::make_report(
          "check",
          {{"in", check_in}, {"k", check_k}, {"window", check_window}, {"tol", tol.psd}},
          verdicts, json::array({diag}));
      if (!check_report.empty()) io::save_report(report, check_report);
      std::cout << (rep.verdict ? "k-hyponormal" : "not k-hyponormal") << " (k=" << check_k
                << ", " << (rep.certifying ? "certifying" : "window-limited") << ")\n";
      return rep.verdict ? kExitOk : kExitVerdictFalse;
    }

    if (*region) {
      if (curve != "example46") throw std::invalid_argument("unknown curve set '" + curve + "'");
      const GridSpec g = parse_grid(ygrid);
      std::ofstream csv(csv_path);
      if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
      csv << "y,s,h,CA,PA\n";
      int rows = 0;
      for (double y = g.start; y < g.stop - 1e-15; y += g.step) {
        const RegionCurves c = region_curves(y);
        csv << fmt17(y) << ',' << fmt17(c.s) << ',' << fmt17(c.h) << ',' << fmt17(c.ca) << ','
            << fmt17(c.pa) << "\n";
        ++rows;
      }
      std::cout << "wrote " << rows << " rows to " << csv_path << "\n";
      return kExitOk;
    }

    if (*dav) {
      bool ok = true;
      double worst_comm = 0.0, worst_gap = 0.0;
      for (int n = 1; n <= nmax; ++n) {
        const DaCommutators c = da_commutators(n);
        worst_comm = std::max(worst_comm, c.max_formula_vs_direct);
        ok = ok && c.bounds_hold && c.max_formula_vs_direct <= tol.identity;
        for (int k1 = 0; k1 <= n; ++k1)
          for (TransformKind kind : {TransformKind::Toral, TransformKind::Spherical}) {
            const AluthgeGap gp = da_aluthge_gap(n, k1, kind);
            worst_gap = std::max(worst_gap, std::fabs(gp.formula - gp.direct));
            ok = ok && gp.bound_holds && std::fabs(gp.formula - gp.direct) <= tol.psd;
          }
      }
      json verdicts = json::array();
      verdicts.push_back({{"name", "da_asymptotics"}, {"nmax", nmax}, {"verdict", ok}});
      const json report =
          io::make_report("da-verify", {{"nmax", nmax}}, verdicts,
                          json::array({{{"max_commutator_formula_vs_direct", worst_comm},
                                        {"max_gap_formula_vs_direct", worst_gap}}}));
      if (!da_report.empty()) io::save_report(report, da_report);
      std::cout << (ok ? "all commutator and gap identities hold" : "identity violation found")
                << " up to n=" << nmax << "\n";
      return ok ? kExitOk : kExitVerdictFalse;
    }

    if (*spect) {
      const WeightDiagram d = io::load_diagram(spectra_in);
      const SpectralInvarianceReport rep = spectral_invariance_check(d, tol.psd);
      std::cout << "radii(base)      = (" << fmt17(rep.base.r1) << ", " << fmt17(rep.base.r2)
                << ")\n"
                << "radii(toral)     = (" << fmt17(rep.toral_radii.r1) << ", "
                << fmt17(rep.toral_radii.r2) << ")\n"
                << "radii(spherical) = (" << fmt17(rep.spherical_radii.r1) << ", "
                << fmt17(rep.spherical_radii.r2) << ")\n"
                << (rep.agree ? "radii agree" : "radii disagree") << " (max gap "
                << rep.max_radius_gap << ")\n";
      return rep.agree ? kExitOk : kExitVerdictFalse;
    }

    if (*quasi) {
      const LatticeWindow w = parse_window(quasi_window);
      const WeightDiagram d = build_quasinormal_from_row(parse_number_list(row_spec), c_param);
      const FixedPointReport rep = is_spherical_fixed_point(d, w, tol.psd);
      io::save_diagram(d, w, quasi_out);
      std::cout << "fixed point: " << (rep.fixed ? "yes" : "no") << ", C^2 = " << rep.c_squared
                << ", max |alpha^2+beta^2 - C^2| = " << rep.c_max_deviation << "\n";
      return rep.fixed ? kExitOk : kExitVerdictFalse;
    }

    if (*probe) {
      const WeightDiagram d = io::load_diagram(probe_in);
      const LatticeWindow w = parse_window(probe_window);
      const ProbeResult res = continuity_probe(d, probe_eps, w, probe_seed);
      json diag = {{"seed", probe_seed},
                   {"eps", probe_eps},
                   {"input_gap", res.input_gap},
                   {"toral_gap", res.toral_gap},
                   {"spherical_gap", res.spherical_gap}};
      const json report = io::make_report(
          "probe", {{"in", probe_in}, {"eps", probe_eps}, {"seed", probe_seed}},
          json::array(), json::array({diag}));
      if (!probe_report.empty()) io::save_report(report, probe_report);
      std::cout << "input gap " << res.input_gap << ", toral gap " << res.toral_gap
                << ", spherical gap " << res.spherical_gap << "\n";
      return kExitOk;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
