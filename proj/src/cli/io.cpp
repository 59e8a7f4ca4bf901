#include <charconv>
#include <fstream>
#include <sstream>

#include "frieze_lab/cli.hpp"
#include "frieze_lab/error.hpp"

namespace frieze_lab::cli {

using nlohmann::json;

namespace {

mpq_class parse_rational(std::string_view s) {
  mpq_class q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) throw Error("bad number '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
  while (!s.empty() && std::isspace((unsigned char)s.back())) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

mpq_class Numeric::operator()(Var v) const {
  if (auto it = vars.find(v); it != vars.end()) return it->second;
  if (all) return *all;
  throw Error("no numeric value for u" + std::to_string(v));
}

Numeric parse_numeric(std::string_view text) {
  Numeric n;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("numeric assignment '" + item + "' lacks '='");
    std::string name = trim(std::string_view(item).substr(0, eq));
    mpq_class value = parse_rational(trim(std::string_view(item).substr(eq + 1)));
    if (name == "all") {
      n.all = value;
    } else if (name.size() > 1 && name[0] == 'u') {
      Var v = 0;
      auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
      if (ec != std::errc() || p != name.data() + name.size()) throw Error("bad variable '" + name + "'");
      n.vars[v] = value;
    } else {
      throw Error("bad variable '" + name + "'");
    }
  }
  return n;
}

std::vector<long> parse_int_list(std::string_view text, std::size_t expected, const char* what) {
  std::vector<long> out;
  for (const auto& item : split(text, ',')) {
    long v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size())
      throw Error(std::string(what) + ": bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw Error(std::string(what) + ": expected " + std::to_string(expected) + " comma separated integers");
  return out;
}

QuiverInput parse_quiver(const json& j) {
  try {
    if (j.contains("dtilde")) {
      const json& d = j.at("dtilde");
      const int n = d.at("n").get<int>();
      const std::string kind = d.value("arrows", "all-in");
      DTildeOrientation o;
      if (kind == "all-in") o = DTildeOrientation::all_in();
      else if (kind == "all-out") o = DTildeOrientation::all_out();
      else if (kind == "canonical") o = DTildeOrientation::canonical();
      else throw Error("unknown D~n orientation '" + kind + "'");
      DTildeQuiver dq = build_d_tilde(n, o);
      return {dq.quiver, dq, j};
    }
    std::vector<Vertex> verts = j.at("vertices").get<std::vector<Vertex>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw Error("arrow must be a pair [source, target]");
      arrows.emplace_back(a[0].get<Vertex>(), a[1].get<Vertex>());
    }
    QuiverInput in{Quiver(std::move(verts), arrows), std::nullopt, j};
    try {
      in.dtilde = classify_d_tilde(in.quiver);
    } catch (const Error&) {
    }
    return in;
  } catch (const json::exception& e) {
    throw Error(std::string("quiver json: ") + e.what());
  }
}

QuiverInput load_quiver(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open quiver file '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw Error("quiver file '" + path + "': " + e.what());
  }
  return parse_quiver(j);
}

json catalog_json(const VariableCatalog& c) {
  json entries = json::array();
  for (const auto& e : c.transjective)
    entries.push_back({{"kind", "transjective"}, {"tube_rank", nullptr}, {"mouth_index", nullptr},
                       {"depth", nullptr}, {"k", e.k}, {"line", e.line}, {"part", e.part},
                       {"value", e.value.to_string()}});
  for (const auto& e : c.tubes)
    entries.push_back({{"kind", "tube"}, {"tube", e.tube}, {"tube_rank", e.tube_rank},
                       {"mouth_index", e.mouth_index}, {"depth", e.depth}, {"k", nullptr},
                       {"value", e.value.to_string()}});
  json arrows = json::array();
  for (const auto& [s, t] : c.quiver.quiver.arrow_list()) arrows.push_back({s, t});
  json meta = {{"quiver", {{"n", c.quiver.n}, {"arrows", arrows}}},
               {"boundary", c.boundary},
               {"k_range", {c.k_min, c.k_max}},
               {"tube_depth", c.tube_depth},
               {"straightened_at", c.straightened}};
  meta["window"] = c.window.empty ? json(nullptr)
                                  : json{{"c0", c.window.c0}, {"r0", c.window.r0}, {"c1", c.window.c1},
                                         {"r1", c.window.r1}};
  return {{"metadata", meta}, {"entries", entries}};
}

json report_json(const OracleReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j = {{"entry", e.value.to_string()}, {"found", e.found}};
    if (e.witness_depth) j["witness_depth"] = *e.witness_depth;
    entries.push_back(j);
  }
  return {{"pass", r.pass()}, {"entries", entries}};
}

}  // namespace frieze_lab::cli
