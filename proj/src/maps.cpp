#include "finitop/maps.hpp"

#include <numeric>

#include "finitop/error.hpp"
#include "finitop/props.hpp"

namespace finitop {

Bits PointMap::image(const Bits& s) const {
  Bits r(cod.size());
  for (int x = s.first(); x >= 0; x = s.next(x)) r.set(values[x]);
  return r;
}

Bits PointMap::preimage(const Bits& s) const {
  Bits r(dom.size());
  for (int x = 0; x < dom.size(); ++x)
    if (s.test(values[x])) r.set(x);
  return r;
}

PointMap identity_map(const FinSpace& x) {
  std::vector<int> v(x.size());
  std::iota(v.begin(), v.end(), 0);
  return {x, x, std::move(v)};
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (f.cod != g.dom) throw Error(Errc::domain_mismatch, "compose: cod(f) != dom(g)");
  std::vector<int> v(f.dom.size());
  for (int x = 0; x < f.dom.size(); ++x) v[x] = g.values[f.values[x]];
  return {f.dom, g.cod, std::move(v)};
}

bool is_continuous(const PointMap& f) {
  for (int x = 0; x < f.dom.size(); ++x)
    for (int y = f.dom.up(x).first(); y >= 0; y = f.dom.up(x).next(y))
      if (!f.cod.le(f.values[x], f.values[y])) return false;
  return true;
}

namespace {
void require_continuous(const PointMap& f) {
  if (!is_continuous(f)) throw Error(Errc::not_continuous, "map is not continuous");
}
}  // namespace

bool is_open_map(const PointMap& f) {
  require_continuous(f);
  for (int x = 0; x < f.dom.size(); ++x)
    if (!f.cod.is_open(f.image(f.dom.down(x)))) return false;
  return true;
}

bool is_closed_map(const PointMap& f) {
  require_continuous(f);
  for (int x = 0; x < f.dom.size(); ++x)
    if (!f.cod.is_closed(f.image(f.dom.up(x)))) return false;
  return true;
}

bool is_very_open(const PointMap& f) {
  if (!is_open_map(f)) return false;
  for (int u = 0; u < f.dom.size(); ++u)
    for (int v = u + 1; v < f.dom.size(); ++v)
      if (f.values[u] == f.values[v] && !f.dom.down(u).intersects(f.dom.down(v))) return false;
  return true;
}

bool is_retraction(const PointMap& r) {
  if (r.dom != r.cod) throw Error(Errc::domain_mismatch, "retraction needs dom == cod");
  if (!is_continuous(r)) return false;
  for (int x = 0; x < r.dom.size(); ++x)
    if (r.values[r.values[x]] != r.values[x]) return false;
  return true;
}

FinSpace fiber(const PointMap& f, int y, std::vector<int>* fiber_points) {
  if (y < 0 || y >= f.cod.size()) throw Error(Errc::point_out_of_range, "fiber point");
  Bits pts(f.dom.size());
  for (int x = 0; x < f.dom.size(); ++x)
    if (f.values[x] == y) pts.set(x);
  return f.dom.induced(pts, fiber_points);
}

RetractionReport check_retraction_clauses(const PointMap& r) {
  if (!is_retraction(r)) throw Error(Errc::not_a_retraction, "not a retraction");
  RetractionReport rep;
  rep.range_points = Bits(r.dom.size());
  for (int x = 0; x < r.dom.size(); ++x)
    if (r.values[x] == x) rep.range_points.set(x);
  std::vector<int> range_pts;
  rep.range_space = r.dom.induced(rep.range_points, &range_pts);

  // r viewed as a map onto its range: closedness lives in Z's trace topology.
  std::vector<int> z_index(r.dom.size(), -1);
  for (size_t i = 0; i < range_pts.size(); ++i) z_index[range_pts[i]] = int(i);
  std::vector<int> onto(r.dom.size());
  for (int x = 0; x < r.dom.size(); ++x) onto[x] = z_index[r.values[x]];
  PointMap r_onto{r.dom, rep.range_space, std::move(onto)};

  rep.x_normal = is_normal(r.dom);
  rep.z_normal = is_normal(rep.range_space);
  rep.z_t1 = is_t1_discrete(rep.range_space);
  rep.r_closed = is_closed_map(r_onto);

  rep.fibers_vacuously_normal = true;
  for (int z = rep.range_points.first(); z >= 0; z = rep.range_points.next(z)) {
    Bits pts(r.dom.size());
    for (int x = 0; x < r.dom.size(); ++x)
      if (r.values[x] == z) pts.set(x);
    if (!is_vacuously_normal(r.dom.induced(pts))) {
      rep.fibers_vacuously_normal = false;
      break;
    }
  }

  rep.clause_a = !rep.x_normal || rep.z_normal;
  rep.clause_b = !(rep.z_normal && rep.fibers_vacuously_normal && rep.r_closed) || rep.x_normal;
  rep.clause_c =
      !(rep.x_normal && rep.z_normal && rep.z_t1 && rep.fibers_vacuously_normal) || rep.r_closed;
  return rep;
}

std::pair<FinSpace, PointMap> t0_quotient(const FinSpace& x) {
  int n = x.size();
  std::vector<int> cls(n, -1);
  int k = 0;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = k;
    for (int b = a + 1; b < n; ++b)
      if (x.le(a, b) && x.le(b, a)) cls[b] = k;
    ++k;
  }
  std::vector<int> rep(k);
  for (int a = n - 1; a >= 0; --a) rep[cls[a]] = a;
  std::vector<Bits> rows(k, Bits(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (x.le(rep[i], rep[j])) rows[i].set(j);
  FinSpace q = FinSpace::from_rows(std::move(rows));
  return {q, PointMap{x, q, std::move(cls)}};
}

}  // namespace finitop
