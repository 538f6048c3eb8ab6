#include "finitop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "finitop/claims.hpp"
#include "finitop/dsl.hpp"
#include "finitop/error.hpp"
#include "finitop/io.hpp"

namespace finitop {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::point_out_of_range, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

int max_points_from_env() {
  if (const char* s = std::getenv("FINITOP_MAX_POINTS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return kDefaultMaxPoints;
}

std::map<std::string, int> parse_bounds(const std::string& arg) {
  std::map<std::string, int> bounds;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::unbound_variable, "bound must look like X=4: " + item);
    bounds[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return bounds;
}

std::vector<int> parse_windows(const std::string& arg) {
  std::vector<int> ws;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) ws.push_back(std::stoi(item));
  return ws;
}

PropertyReport check_property(const FinSpace& x, const std::string& name) {
  if (name == "normal") return is_normal_report(x);
  if (name == "vacnormal") return is_vacuously_normal_report(x);
  if (name == "t0") return {"t0", is_t0(x), std::nullopt};
  if (name == "t1") return {"t1", is_t1_discrete(x), std::nullopt};
  if (name == "irreducible") return {"irreducible", is_irreducible(x), std::nullopt};
  if (name == "trivcompact") return {"trivcompact", is_trivially_compact(x), std::nullopt};
  if (name == "loosecompact") return {"loosecompact", is_loosely_compact(x), std::nullopt};
  if (name == "lightcompact") return {"lightcompact", is_lightly_compact(x), std::nullopt};
  throw Error(Errc::unknown_suite, "unknown property " + name);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finitop: finite topological spaces as specialization preorders"};
  app.require_subcommand(1);
  int max_points = max_points_from_env();

  auto* cmd_enum = app.add_subcommand("enumerate", "count/list topologies on n points");
  int enum_n = 3;
  bool enum_t0 = false, enum_iso = false, enum_list = false;
  cmd_enum->add_option("--n", enum_n, "point count")->required();
  cmd_enum->add_flag("--t0", enum_t0, "posets only");
  cmd_enum->add_flag("--iso", enum_iso, "up to homeomorphism");
  cmd_enum->add_flag("--list", enum_list, "emit the spaces");

  auto* cmd_check = app.add_subcommand("check", "decide a property of a space");
  std::string check_space, check_prop;
  cmd_check->add_option("--space", check_space, "space JSON file")->required();
  cmd_check->add_option("--property", check_prop, "property name")->required();

  auto* cmd_decomp = app.add_subcommand("decompose", "retraction structure of a normal T0 space");
  std::string decomp_space, decomp_format = "json";
  cmd_decomp->add_option("--space", decomp_space)->required();
  cmd_decomp->add_option("--format", decomp_format, "json or dot");

  auto* cmd_shrink = app.add_subcommand("shrink", "shrink an open cover");
  std::string shrink_space, shrink_cover;
  cmd_shrink->add_option("--space", shrink_space)->required();
  cmd_shrink->add_option("--cover", shrink_cover)->required();

  auto* cmd_search = app.add_subcommand("search", "look for a witness of a query");
  std::string search_query, search_bounds;
  int search_workers = 1;
  cmd_search->add_option("--where", search_query)->required();
  cmd_search->add_option("--bound", search_bounds, "per-variable bounds, e.g. X=4,Y=4")->required();
  cmd_search->add_option("--workers", search_workers);

  auto* cmd_sym = app.add_subcommand("symbolic-verify", "verify the countable-space catalog");
  std::string sym_claim, sym_windows = "8,32,128";
  cmd_sym->add_option("--claim", sym_claim, "single claim name (default: all)");
  cmd_sym->add_option("--windows", sym_windows, "cross-validation windows");

  auto* cmd_suite = app.add_subcommand("suite", "run an exhaustive theorem suite");
  std::string suite_id;
  int suite_max_n = 4;
  cmd_suite->add_option("--id", suite_id)->required();
  cmd_suite->add_option("--max-n", suite_max_n);

  auto* cmd_export = app.add_subcommand("export", "export a space");
  std::string export_space, export_format = "dot";
  cmd_export->add_option("--space", export_space)->required();
  cmd_export->add_option("--format", export_format, "dot");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_enum) {
      json spaces = json::array();
      uint64_t count = 0;
      EnumerationStream es(enum_n, enum_t0, enum_iso);
      while (auto s = es.next()) {
        ++count;
        if (enum_list) spaces.push_back(space_to_json(*s));
      }
      json j = {{"n", enum_n}, {"t0", enum_t0}, {"iso", enum_iso}, {"count", count}};
      if (enum_list) j["spaces"] = spaces;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*cmd_check) {
      FinSpace x = space_from_json(load_json(check_space));
      PropertyReport r = check_property(x, check_prop);
      out << report_to_json(r).dump(2) << "\n";
      return r.verdict ? 0 : 1;
    }
    if (*cmd_decomp) {
      FinSpace x = space_from_json(load_json(decomp_space));
      try {
        Decomposition d = normal_t0_decomposition(x);
        if (decomp_format == "dot")
          out << dot_decomposition(x, d);
        else
          out << decomposition_to_json(d).dump(2) << "\n";
        return 0;
      } catch (const NotNormalError& e) {
        out << json{{"error", "NotNormal"}, {"witness", {{"a", e.witness_a}, {"b", e.witness_b}}}}
                   .dump(2)
            << "\n";
        return 1;
      }
    }
    if (*cmd_shrink) {
      FinSpace x = space_from_json(load_json(shrink_space));
      Cover u = cover_from_json(load_json(shrink_cover), x.size());
      if (!is_cover(x, u)) throw Error(Errc::point_out_of_range, "input is not an open cover");
      try {
        Cover v = shrink(x, u);
        out << cover_to_json(v).dump(2) << "\n";
        return 0;
      } catch (const NotNormalError& e) {
        out << json{{"error", "NotNormal"}, {"witness", {{"a", e.witness_a}, {"b", e.witness_b}}}}
                   .dump(2)
            << "\n";
        return 1;
      }
    }
    if (*cmd_search) {
      SearchOutcome o =
          find_counterexample(search_query, parse_bounds(search_bounds), search_workers, max_points);
      out << search_outcome_to_json(o).dump(2) << "\n";
      return o.found ? 1 : 0;
    }
    if (*cmd_sym) {
      std::vector<int> windows = parse_windows(sym_windows);
      std::vector<std::string> names =
          sym_claim.empty() ? claim_names() : std::vector<std::string>{sym_claim};
      json reports = json::array();
      bool all_pass = true;
      for (const auto& name : names) {
        ClaimReport r = run_claim(name, windows);
        all_pass = all_pass && r.pass;
        reports.push_back(claim_report_to_json(r));
      }
      out << json{{"claims", reports}, {"pass", all_pass}}.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
    if (*cmd_suite) {
      SuiteReport r = run_suite(suite_id, suite_max_n);
      out << suite_report_to_json(r).dump(2) << "\n";
      return r.pass ? 0 : 1;
    }
    if (*cmd_export) {
      FinSpace x = space_from_json(load_json(export_space));
      if (export_format != "dot") throw Error(Errc::unknown_suite, "format " + export_format);
      out << dot_hasse_t0(x);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "bad input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace finitop
