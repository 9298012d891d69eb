#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "shiftlab/lattice.hpp"

namespace shiftlab::io {

/// Parse failure with the JSON path of the offending field ("$.params.x0").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(message + " (at " + path + ")"), path_(std::move(path)) {}
  const std::string& json_path() const { return path_; }

 private:
  std::string path_;
};

/// Diagram files: {"kind": "table|tensor|diagonal_core|fig2|fig2_general|
/// drury_arveson|quasinormal", "params": {...}}. Values round-trip at full
/// double precision.
WeightDiagram parse_diagram(const nlohmann::json& j);
WeightDiagram load_diagram(const std::string& path);

/// Named families serialize by kind and parameters; derived diagrams
/// (transforms, restrictions) are materialized as clamped tables covering
/// the given window.
nlohmann::json diagram_to_json(const WeightDiagram& d, const LatticeWindow& window);
void save_diagram(const WeightDiagram& d, const LatticeWindow& window,
                  const std::string& path);

/// Stable report envelope used by the command-line tool.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json verdicts, nlohmann::json diagnostics);
void save_report(const nlohmann::json& report, const std::string& path);

}  // namespace shiftlab::io
