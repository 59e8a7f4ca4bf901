#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "frieze_lab/oracle.hpp"

namespace frieze_lab::cli {

enum class Format { Text, Json, Csv };

// "all=1" or "u1=2,u3=-1/2"; both forms may be combined, explicit
// variables win over all.
struct Numeric {
  std::optional<mpq_class> all;
  std::map<Var, mpq_class> vars;

  mpq_class operator()(Var v) const;
};
Numeric parse_numeric(std::string_view text);

struct RunConfig {
  std::string command;
  std::optional<std::string> quiver_path;
  std::optional<std::string> boundary;
  std::optional<std::array<long, 4>> window;
  std::optional<std::pair<int, int>> k_range;
  int tube_depth = 2;
  std::optional<int> depth;
  std::optional<Numeric> numeric;
  Format format = Format::Text;
  std::optional<std::string> out;
  bool verify = false;
  bool modelled = false;
  bool numeric_first = false;
};

struct QuiverInput {
  Quiver quiver;
  std::optional<DTildeQuiver> dtilde;  // set when the quiver is of type D~n
  nlohmann::json source;
};
// {"vertices": [...], "arrows": [[s, t], ...]} or
// {"dtilde": {"n": 4, "arrows": "all-in" | "all-out" | "canonical"}}.
QuiverInput parse_quiver(const nlohmann::json& j);
QuiverInput load_quiver(const std::string& path);

std::vector<long> parse_int_list(std::string_view text, std::size_t expected, const char* what);

nlohmann::json catalog_json(const VariableCatalog& c);
nlohmann::json report_json(const OracleReport& r);

std::string cmd_tile(const RunConfig& cfg);
std::string cmd_frieze(const RunConfig& cfg);
// all_found receives the oracle verdict (true without --verify).
std::string cmd_variables(const RunConfig& cfg, bool* all_found = nullptr);
// Returns the report and whether every entry was found.
std::pair<std::string, bool> cmd_verify(const RunConfig& cfg);

// Exit codes: 0 success, 1 usage or input error, 2 internal inconsistency
// (including a failed oracle verification).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace frieze_lab::cli
