#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frieze_lab/cli.hpp"
#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/tiling.hpp"

namespace frieze_lab::cli {

using nlohmann::json;

namespace {

QuiverInput require_quiver(const RunConfig& cfg) {
  if (!cfg.quiver_path) throw Error(cfg.command + " needs --quiver <file>");
  return load_quiver(*cfg.quiver_path);
}

DTildeQuiver require_dtilde(const QuiverInput& in) {
  if (!in.dtilde) throw Error("quiver is not of type D~n (n >= 4) in the standard labelling");
  return *in.dtilde;
}

RationalFunction constant(const mpq_class& q) {
  return RationalFunction(Polynomial(q.get_num()), Polynomial(q.get_den()));
}

std::string show(const RationalFunction& f, const std::optional<Numeric>& num) {
  if (!num) return f.to_string();
  return f.evaluate(std::cref(*num)).get_str();
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - r[i].size(), ' ') << r[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string cmd_tile(const RunConfig& cfg) {
  if (cfg.boundary.has_value() == cfg.quiver_path.has_value())
    throw Error("tile needs exactly one of --boundary and --quiver");
  if (!cfg.window) throw Error("tile needs --window c0,r0,c1,r1");
  BoundaryWord word = cfg.boundary ? parse_boundary(*cfg.boundary) : [&] {
    DTildeQuiver d = require_dtilde(require_quiver(cfg));
    return build_dtilde_boundary(d, Seed::initial(d.quiver).x).word;
  }();
  std::optional<Numeric> late = cfg.numeric;
  if (cfg.numeric && cfg.numeric_first) {
    const Numeric& num = *cfg.numeric;
    word = word.map_values([&](const RationalFunction& f) { return constant(f.evaluate(std::cref(num))); });
    late.reset();
  }

  const auto [c0, r0, c1, r1] = *cfg.window;
  TilingSession t(word);
  Window w = t.window(c0, r0, c1, r1);
  bool any = false;
  for (const auto& row : w)
    for (const auto& cell : row) any = any || cell.has_value();
  if (!any) throw Error("window lies entirely above the boundary");

  auto cell = [&](const std::optional<RationalFunction>& f) -> std::optional<std::string> {
    if (!f) return std::nullopt;
    return show(*f, late);
  };

  std::ostringstream os;
  switch (cfg.format) {
    case Format::Json: {
      json cells = json::array();
      for (const auto& row : w) {
        json jr = json::array();
        for (const auto& f : row) {
          auto s = cell(f);
          jr.push_back(s ? json(*s) : json(nullptr));
        }
        cells.push_back(jr);
      }
      json j = {{"origin", {{"col", c0}, {"row", r0}}},
                {"columns", {c0, c1}},
                {"rows", {r0, r1}},
                {"boundary", word.to_string()},
                {"numeric", cfg.numeric.has_value()},
                {"cells", cells}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "# columns " << c0 << ".." << c1 << ", rows " << r0 << ".." << r1
         << " (rows grow downward); empty cells lie above the boundary\n";
      for (const auto& row : w) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]).value_or("");
        os << '\n';
      }
      break;
    case Format::Text: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> head{"r\\c"};
      for (long c = c0; c <= c1; ++c) head.push_back(std::to_string(c));
      rows.push_back(head);
      for (long r = r0; r <= r1; ++r) {
        std::vector<std::string> line{std::to_string(r)};
        for (const auto& f : w[r - r0]) line.push_back(cell(f).value_or("."));
        rows.push_back(line);
      }
      os << text_table(rows);
      break;
    }
  }
  return os.str();
}

std::string cmd_frieze(const RunConfig& cfg) {
  QuiverInput in = require_quiver(cfg);
  const auto [k0, k1] = cfg.k_range.value_or(std::pair{0, 2});
  if (k0 > k1) throw Error("empty k-range");
  FriezeSession f(Seed::initial(in.quiver));
  struct Row {
    const char* table;
    int k;
    Vertex index;
    std::string value;
  };
  std::vector<Row> rows;
  for (int k = k0; k <= k1; ++k)
    for (Vertex v : in.quiver.vertices()) rows.push_back({"frieze", k, v, show(f.value(k, v), cfg.numeric)});
  if (cfg.modelled) {
    DTildeQuiver d = require_dtilde(in);
    for (int k = k0; k <= k1; ++k)
      for (Vertex line : d.spine())
        rows.push_back({"modelled", k, line, show(modelled_value(f, d.n, k, line), cfg.numeric)});
  }

  std::ostringstream os;
  switch (cfg.format) {
    case Format::Json: {
      json fr = json::array(), mo = json::array();
      for (const auto& r : rows) {
        bool is_frieze = std::string_view(r.table) == "frieze";
        (is_frieze ? fr : mo).push_back({{"k", r.k}, {is_frieze ? "vertex" : "line", r.index}, {"value", r.value}});
      }
      json j = {{"quiver", in.source}, {"k_range", {k0, k1}}, {"frieze", fr}};
      if (cfg.modelled) j["modelled"] = mo;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "table,k,index,value\n";
      for (const auto& r : rows) os << r.table << ',' << r.k << ',' << r.index << ',' << r.value << '\n';
      break;
    case Format::Text:
      for (const auto& r : rows)
        os << (std::string_view(r.table) == "frieze" ? "a(" : "m(") << r.k << ", " << r.index << ") = " << r.value
           << '\n';
      break;
  }
  return os.str();
}

namespace {

struct CatalogRun {
  VariableCatalog catalog;
  std::optional<OracleResult> oracle;
  std::optional<OracleReport> report;
};

CatalogRun build_catalog(const RunConfig& cfg, bool with_oracle) {
  DTildeQuiver d = require_dtilde(require_quiver(cfg));
  CatalogRun run{all_variables(d, cfg.k_range.value_or(std::pair{-2, 2}), cfg.tube_depth), {}, {}};
  if (with_oracle) {
    run.oracle = enumerate_by_mutation(Seed::initial(d.quiver), cfg.depth.value_or(default_oracle_depth(d.n)));
    run.report = verify_catalog(run.catalog, *run.oracle);
  }
  return run;
}

json oracle_meta(const OracleResult& o) {
  return {{"depth", o.depth}, {"seeds", o.seeds}, {"variables", o.variables.size()}};
}

}  // namespace

std::string cmd_variables(const RunConfig& cfg, bool* all_found) {
  CatalogRun run = build_catalog(cfg, cfg.verify);
  if (all_found) *all_found = !run.report || run.report->pass();
  const VariableCatalog& c = run.catalog;
  std::vector<std::string> values;
  for (const auto& v : c.values()) values.push_back(show(v, cfg.numeric));
  auto verdict = [&](std::size_t i) -> std::string {
    if (!run.report) return "";
    const auto& e = run.report->entries[i];
    return e.found ? "found at depth " + std::to_string(*e.witness_depth) : "NOT FOUND";
  };

  std::ostringstream os;
  switch (cfg.format) {
    case Format::Json: {
      json j = catalog_json(c);
      if (cfg.numeric)
        for (std::size_t i = 0; i < values.size(); ++i) j["entries"][i]["numeric"] = values[i];
      if (run.report) {
        j["report"] = report_json(*run.report);
        j["report"]["oracle"] = oracle_meta(*run.oracle);
      }
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "kind,tube,tube_rank,mouth_index,depth,k,line,part,value" << (run.report ? ",found,witness_depth" : "")
         << '\n';
      std::size_t i = 0;
      auto tail = [&] {
        if (run.report) {
          const auto& e = run.report->entries[i];
          os << ',' << (e.found ? "true" : "false") << ',' << (e.witness_depth ? std::to_string(*e.witness_depth) : "");
        }
        os << '\n';
        ++i;
      };
      for (const auto& e : c.transjective) {
        os << "transjective,,,,," << e.k << ',' << e.line << ',' << e.part << ',' << values[i];
        tail();
      }
      for (const auto& e : c.tubes) {
        os << "tube," << e.tube << ',' << e.tube_rank << ',' << e.mouth_index << ',' << e.depth << ",,,,"
           << values[i];
        tail();
      }
      break;
    }
    case Format::Text: {
      os << "# D~" << c.quiver.n << ", boundary " << c.boundary << '\n';
      std::size_t i = 0;
      for (const auto& e : c.transjective) {
        os << "transjective k=" << e.k << " line=" << e.line;
        if (e.part) os << " part=" << e.part;
        os << ": " << values[i];
        if (run.report) os << "  [" << verdict(i) << ']';
        os << '\n';
        ++i;
      }
      for (const auto& e : c.tubes) {
        os << "tube " << e.tube << " rank=" << e.tube_rank << " mouth=" << e.mouth_index << " depth=" << e.depth
           << ": " << values[i];
        if (run.report) os << "  [" << verdict(i) << ']';
        os << '\n';
        ++i;
      }
      if (run.report) os << "# oracle: " << (run.report->pass() ? "all found" : "some entries missing") << '\n';
      break;
    }
  }
  return os.str();
}

std::pair<std::string, bool> cmd_verify(const RunConfig& cfg) {
  CatalogRun run = build_catalog(cfg, true);
  const OracleReport& r = *run.report;
  std::ostringstream os;
  switch (cfg.format) {
    case Format::Json: {
      json j = report_json(r);
      j["oracle"] = oracle_meta(*run.oracle);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "entry,found,witness_depth\n";
      for (const auto& e : r.entries)
        os << e.value.to_string() << ',' << (e.found ? "true" : "false") << ','
           << (e.witness_depth ? std::to_string(*e.witness_depth) : "") << '\n';
      break;
    case Format::Text:
      for (const auto& e : r.entries)
        os << (e.found ? "found   " : "MISSING ") << (e.witness_depth ? std::to_string(*e.witness_depth) : "-") << "  "
           << e.value.to_string() << '\n';
      os << "# " << r.entries.size() << " entries, oracle depth " << run.oracle->depth << ", "
         << run.oracle->seeds << " seeds: " << (r.pass() ? "PASS" : "FAIL") << '\n';
      break;
  }
  return {os.str(), r.pass()};
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster variables of D~n quivers from SL2-tilings"};
  app.name("frieze_lab");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string window, k_range, numeric, format = "text", quiver, boundary, out_path;
  int depth = -1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--quiver", quiver, "quiver JSON file");
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out_path, "write the output to this file");
    sub->add_option("--numeric", numeric, "evaluate at all=1 or u1=2,u3=1/2,...");
  };
  CLI::App* tile = app.add_subcommand("tile", "evaluate a window of the tiling");
  add_common(tile);
  tile->add_option("--boundary", boundary, "boundary word, e.g. \"^inf( x x x y )^inf\"");
  tile->add_option("--window", window, "c0,r0,c1,r1")->required();
  tile->add_flag("--numeric-first", cfg.numeric_first, "evaluate the boundary labels before tiling");

  CLI::App* frieze = app.add_subcommand("frieze", "frieze values a(k, i)");
  add_common(frieze);
  frieze->add_option("--k-range", k_range, "a,b");
  frieze->add_flag("--modelled", cfg.modelled, "also print the lines of the modelled frieze");

  CLI::App* vars = app.add_subcommand("variables", "catalog of cluster variables of a D~n quiver");
  CLI::App* verify = app.add_subcommand("verify", "check the catalog against the mutation oracle");
  for (CLI::App* sub : {vars, verify}) {
    add_common(sub);
    sub->add_option("--k-range", k_range, "a,b (default -2,2)");
    sub->add_option("--tube-depth", cfg.tube_depth, "largest tube depth (default 2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--depth", depth, "oracle depth (default 9 for n=4, 7 for n=5)")->check(CLI::NonNegativeNumber);
  }
  vars->add_flag("--verify", cfg.verify, "run the oracle and embed its report");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!quiver.empty()) cfg.quiver_path = quiver;
    if (!boundary.empty()) cfg.boundary = boundary;
    if (!out_path.empty()) cfg.out = out_path;
    if (!numeric.empty()) cfg.numeric = parse_numeric(numeric);
    if (!window.empty()) {
      auto w = parse_int_list(window, 4, "--window");
      cfg.window = std::array<long, 4>{w[0], w[1], w[2], w[3]};
    }
    if (!k_range.empty()) {
      auto k = parse_int_list(k_range, 2, "--k-range");
      cfg.k_range = std::pair{int(k[0]), int(k[1])};
    }
    if (depth >= 0) cfg.depth = depth;
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

    std::string text;
    bool ok = true;
    if (cfg.command == "tile") text = cmd_tile(cfg);
    else if (cfg.command == "frieze") text = cmd_frieze(cfg);
    else if (cfg.command == "variables") {
      text = cmd_variables(cfg, &ok);
    } else std::tie(text, ok) = cmd_verify(cfg);

    if (cfg.out) {
      std::ofstream f(*cfg.out);
      if (!f) throw Error("cannot write '" + *cfg.out + "'");
      f << text;
    } else {
      out << text;
    }
    if (!ok) {
      err << "verification failed: some catalog entries were not reached by mutation\n";
      return 2;
    }
    return 0;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace frieze_lab::cli
