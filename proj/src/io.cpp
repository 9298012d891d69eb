#include "shiftlab/io.hpp"

#include <fstream>

#include "shiftlab/families.hpp"

namespace shiftlab::io {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ParseError(path + "." + key, "missing field");
  return j.at(key);
}

double require_number(const json& j, const char* key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number()) throw ParseError(path + "." + key, "expected a number");
  return v.get<double>();
}

std::vector<double> require_number_list(const json& j, const char* key,
                                        const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_array() || v.empty()) throw ParseError(path + "." + key, "expected a nonempty array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      throw ParseError(path + "." + key + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<std::vector<double>> require_table(const json& j, const char* key,
                                               const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_array() || v.empty()) throw ParseError(path + "." + key, "expected a nonempty array");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array())
      throw ParseError(path + "." + key + "[" + std::to_string(i) + "]",
                       "expected an array of rows");
    std::vector<double> row;
    for (std::size_t k = 0; k < v[i].size(); ++k) {
      if (!v[i][k].is_number())
        throw ParseError(path + "." + key + "[" + std::to_string(i) + "][" +
                             std::to_string(k) + "]",
                         "expected a number");
      row.push_back(v[i][k].get<double>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

AtomicMeasure1D parse_measure(const json& j, const std::string& path) {
  const json& atoms = require(j, "atoms", path);
  if (!atoms.is_array() || atoms.empty())
    throw ParseError(path + ".atoms", "expected a nonempty array");
  std::vector<Atom1D> list;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string apath = path + ".atoms[" + std::to_string(i) + "]";
    list.push_back({require_number(atoms[i], "p", apath), require_number(atoms[i], "r", apath)});
  }
  try {
    return AtomicMeasure1D(std::move(list));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ".atoms", e.what());
  }
}

}  // namespace

WeightDiagram parse_diagram(const json& j) {
  if (!j.is_object()) throw ParseError("$", "expected a JSON object");
  const json& kind_j = require(j, "kind", "$");
  if (!kind_j.is_string()) throw ParseError("$.kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  const std::string p = "$.params";

  try {
    if (kind == "tensor") {
      auto sigma = require_number_list(params, "sigma", p);  // checked before tau so
      auto tau = require_number_list(params, "tau", p);      // error paths are stable
      return build_tensor(std::move(sigma), std::move(tau));
    }
    if (kind == "diagonal_core")
      return build_diagonal_core(require_number_list(params, "omega", p));
    if (kind == "drury_arveson") return build_drury_arveson();
    if (kind == "fig2") {
      const double x0 = require_number(params, "x0", p);
      const double a = require_number(params, "a", p);
      return build_fig2_family(x0, a, parse_measure(require(params, "xi", p), p + ".xi"));
    }
    if (kind == "fig2_general") {
      const double x0 = require_number(params, "x0", p);
      const double x1 = require_number(params, "x1", p);
      const double a = require_number(params, "a", p);
      const double y0 = require_number(params, "y0", p);
      auto omega = require_number_list(params, "omega", p);
      auto tau = require_number_list(params, "tau", p);
      return build_fig2_general(x0, x1, a, y0, std::move(omega), std::move(tau));
    }
    if (kind == "quasinormal")
      return build_quasinormal_from_row(
          require_number_list(params, "alpha_row", p),
          params.contains("C") ? require_number(params, "C", p) : 1.0);
    if (kind == "table") {
      auto alpha = require_table(params, "alpha", p);
      auto beta = require_table(params, "beta", p);
      std::optional<Tail> tail;
      if (params.contains("tail")) {
        Tail t;
        t.kind = TailKind::Flat;
        t.n1 = static_cast<int>(require_number(params.at("tail"), "n1", p + ".tail"));
        t.n2 = static_cast<int>(require_number(params.at("tail"), "n2", p + ".tail"));
        tail = t;
      }
      return make_table_diagram(std::move(alpha), std::move(beta), tail);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(p, e.what());
  }
  throw ParseError("$.kind", "unknown diagram kind '" + kind + "'");
}

WeightDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("$", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_diagram(j);
}

nlohmann::json diagram_to_json(const WeightDiagram& d, const LatticeWindow& window) {
  const std::string kind = d.kind();
  if (kind != "derived") {
    json j;
    j["kind"] = kind;
    j["params"] = d.params();
    return j;
  }
  // Materialize as a clamped table; cover the window plus the tail
  // thresholds so the flat extension is faithful for flat-tailed inputs.
  const Tail t = d.tail();
  const int b1 = std::max(window.k1_max + 1, t.n1 + 2);
  const int b2 = std::max(window.k2_max + 1, t.n2 + 2);
  std::vector<std::vector<double>> at, bt;
  for (int k2 = 0; k2 <= b2; ++k2) {
    std::vector<double> ra, rb;
    for (int k1 = 0; k1 <= b1; ++k1) {
      ra.push_back(d.alpha(k1, k2));
      rb.push_back(d.beta(k1, k2));
    }
    at.push_back(std::move(ra));
    bt.push_back(std::move(rb));
  }
  json j;
  j["kind"] = "table";
  j["params"]["alpha"] = at;
  j["params"]["beta"] = bt;
  if (t.kind == TailKind::Flat) j["params"]["tail"] = {{"n1", t.n1}, {"n2", t.n2}};
  return j;
}

void save_diagram(const WeightDiagram& d, const LatticeWindow& window,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << diagram_to_json(d, window).dump(2) << "\n";
}

nlohmann::json make_report(const std::string& command, json inputs, json verdicts,
                           json diagnostics) {
  json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["verdicts"] = std::move(verdicts);
  r["diagnostics"] = std::move(diagnostics);
  return r;
}

void save_report(const json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << report.dump(2) << "\n";
}

}  // namespace shiftlab::io
