#include "finitop/io.hpp"

#include "finitop/error.hpp"

namespace finitop {

json space_to_json(const FinSpace& x) {
  json le = json::array();
  for (auto [a, b] : x.nonreflexive_pairs()) le.push_back({a, b});
  return {{"n", x.size()}, {"le", le}};
}

FinSpace space_from_json(const json& j) {
  int n = j.at("n").get<int>();
  if (n < 0) throw Error(Errc::point_out_of_range, "negative n");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("le")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return FinSpace::from_le_pairs(n, pairs);
}

json pointset_to_json(const Bits& s) {
  json a = json::array();
  for (int p : s.to_vector()) a.push_back(p);
  return a;
}

Bits pointset_from_json(const json& j, int n) {
  Bits s(n);
  for (const auto& v : j) {
    int p = v.get<int>();
    if (p < 0 || p >= n) throw Error(Errc::point_out_of_range, "point " + std::to_string(p));
    s.set(p);
  }
  return s;
}

json map_to_json(const PointMap& f) {
  return {{"dom", space_to_json(f.dom)}, {"cod", space_to_json(f.cod)}, {"values", f.values}};
}

PointMap map_from_json(const json& j) {
  PointMap f;
  f.dom = space_from_json(j.at("dom"));
  f.cod = space_from_json(j.at("cod"));
  f.values = j.at("values").get<std::vector<int>>();
  if (int(f.values.size()) != f.dom.size())
    throw Error(Errc::point_out_of_range, "values length != dom size");
  for (int v : f.values)
    if (v < 0 || v >= f.cod.size()) throw Error(Errc::point_out_of_range, "map value");
  return f;
}

json cover_to_json(const Cover& c) {
  json members = json::array();
  for (const Bits& m : c.members) members.push_back(pointset_to_json(m));
  return {{"members", members}};
}

Cover cover_from_json(const json& j, int n) {
  Cover c;
  for (const auto& m : j.at("members")) c.members.push_back(pointset_from_json(m, n));
  return c;
}

json report_to_json(const PropertyReport& r) {
  json j = {{"property", r.property}, {"verdict", r.verdict}};
  if (r.witness) {
    json w = {{"a", pointset_to_json(r.witness->a)}, {"b", pointset_to_json(r.witness->b)}};
    if (r.witness->points)
      w["points"] = {r.witness->points->first, r.witness->points->second};
    j["witness"] = w;
  }
  return j;
}

json decomposition_to_json(const Decomposition& d) {
  json fibers = json::array();
  for (const Bits& f : d.fibers) fibers.push_back(pointset_to_json(f));
  return {{"r", {{"values", d.r.values}}}, {"z", pointset_to_json(d.z)}, {"fibers", fibers}};
}

json search_outcome_to_json(const SearchOutcome& o) {
  json j = {{"query", o.query},
            {"verdict", o.found ? "counterexample" : "exhausted_none"},
            {"visited", o.visited},
            {"elapsed_ms", o.elapsed_ms}};
  if (o.found) {
    json w = json::object();
    for (const auto& [name, space] : o.witness) w[name] = space_to_json(space.canonical_form());
    j["witness"] = w;
  }
  return j;
}

json suite_report_to_json(const SuiteReport& r) {
  return {{"id", r.id},
          {"verdict", r.pass ? "pass" : "fail"},
          {"checked", r.checked},
          {"failures", r.failures},
          {"elapsed_ms", r.elapsed_ms}};
}

json claim_report_to_json(const ClaimReport& r) {
  json lines = json::array();
  for (const auto& l : r.lines)
    lines.push_back({{"what", l.what},
                     {"expected", l.expected},
                     {"computed", l.computed},
                     {"oracle_ok", l.oracle_ok}});
  return {{"claim", r.name}, {"pass", r.pass}, {"lines", lines}};
}

std::string dot_hasse_t0(const FinSpace& x) {
  auto [q, m] = t0_quotient(x);
  std::string out = "digraph t0_hasse {\n  rankdir=BT;\n";
  for (int c = 0; c < q.size(); ++c) {
    std::string label;
    for (int p = 0; p < x.size(); ++p)
      if (m.values[p] == c) label += (label.empty() ? "" : ",") + std::to_string(p);
    out += "  c" + std::to_string(c) + " [label=\"{" + label + "}\"];\n";
  }
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      if (a == b || !q.le(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < q.size(); ++c)
        if (c != a && c != b && q.le(a, c) && q.le(c, b)) {
          covering = false;
          break;
        }
      if (covering) out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
    }
  out += "}\n";
  return out;
}

std::string dot_decomposition(const FinSpace& x, const Decomposition& d) {
  std::string out = "digraph decomposition {\n  rankdir=BT;\n";
  for (size_t i = 0; i < d.fibers.size(); ++i) {
    out += "  subgraph cluster_" + std::to_string(i) + " {\n    label=\"fiber\";\n";
    for (int p : d.fibers[i].to_vector()) out += "    p" + std::to_string(p) + ";\n";
    out += "  }\n";
  }
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b) {
      if (a == b || !x.le(a, b) || x.le(b, a)) continue;
      bool covering = true;
      for (int c = 0; c < x.size(); ++c)
        if (c != a && c != b && x.le(a, c) && !x.le(c, a) && x.le(c, b) && !x.le(b, c)) {
          covering = false;
          break;
        }
      if (covering) out += "  p" + std::to_string(a) + " -> p" + std::to_string(b) + ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace finitop
