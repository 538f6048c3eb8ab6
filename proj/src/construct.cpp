#include "finitop/construct.hpp"

#include "finitop/error.hpp"
#include "finitop/props.hpp"

namespace finitop {

FinSpace discrete(int n) { return FinSpace::identity(n); }

FinSpace indiscrete(int n) {
  std::vector<Bits> rows(n, Bits::full(n));
  return FinSpace::from_rows(std::move(rows));
}

FinSpace sierpinski() {
  return FinSpace::from_open_sets(2, {Bits::of(2, {0})});
}

FinSpace e_space() {
  return FinSpace::from_open_sets(3, {Bits::of(3, {0})});
}

FinSpace v_space() {
  std::pair<int, int> pairs[] = {{2, 0}, {2, 1}};
  return FinSpace::from_le_pairs(3, pairs);
}

FinSpace lambda_space() {
  std::pair<int, int> pairs[] = {{0, 2}, {1, 2}};
  return FinSpace::from_le_pairs(3, pairs);
}

FinSpace chain_lower(int k) {
  std::vector<Bits> rows(k, Bits(k));
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) rows[x].set(y);
  return FinSpace::from_rows(std::move(rows));
}

FinSpace chain_upper(int k) {
  std::vector<Bits> rows(k, Bits(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y <= x; ++y) rows[x].set(y);
  return FinSpace::from_rows(std::move(rows));
}

FinSpace divisor_space(int n) {
  if (n < 2) throw Error(Errc::point_out_of_range, "divisor_space needs n >= 2");
  int count = n - 1;  // integers 2..n, point i <-> i+2
  std::vector<Bits> subbase;
  for (int m = 2; m <= n; ++m) {
    Bits u(count);
    for (int d = 2; d <= n; ++d)
      if (m % d == 0) u.set(d - 2);
    subbase.push_back(u);
  }
  return FinSpace::from_open_sets(count, subbase);
}

FinSpace product(const FinSpace& x, const FinSpace& y, int max_points) {
  long long total = 1LL * x.size() * y.size();
  if (total > max_points)
    throw Error(Errc::size_overflow, std::to_string(total) + " points exceeds bound " +
                                         std::to_string(max_points));
  int nx = x.size(), ny = y.size(), n = int(total);
  std::vector<Bits> rows(n, Bits(n));
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      Bits& row = rows[a * ny + b];
      for (int c = x.up(a).first(); c >= 0; c = x.up(a).next(c))
        for (int d = y.up(b).first(); d >= 0; d = y.up(b).next(d)) row.set(c * ny + d);
    }
  return FinSpace::from_rows(std::move(rows));
}

FinSpace power(const FinSpace& x, int k, int max_points) {
  if (k < 0) throw Error(Errc::point_out_of_range, "negative exponent");
  FinSpace r = indiscrete(1);  // empty product: the one-point space
  for (int i = 0; i < k; ++i) r = product(r, x, max_points);
  return r;
}

FinSpace sum(const FinSpace& x, const FinSpace& y) {
  int nx = x.size(), n = nx + y.size();
  std::vector<Bits> rows(n, Bits(n));
  for (int a = 0; a < nx; ++a)
    for (int b = x.up(a).first(); b >= 0; b = x.up(a).next(b)) rows[a].set(b);
  for (int a = 0; a < y.size(); ++a)
    for (int b = y.up(a).first(); b >= 0; b = y.up(a).next(b)) rows[nx + a].set(nx + b);
  return FinSpace::from_rows(std::move(rows));
}

FinSpace subspace(const FinSpace& x, const Bits& points, std::vector<int>* point_map) {
  if (points.none()) throw Error(Errc::empty_subspace, "subspace of no points");
  return x.induced(points, point_map);
}

FinSpace star_extension(const FinSpace& x) {
  int n = x.size();
  std::vector<Bits> rows(n + 1, Bits(n + 1));
  for (int a = 0; a < n; ++a) {
    for (int b = x.up(a).first(); b >= 0; b = x.up(a).next(b)) rows[a].set(b);
    rows[a].set(n);
  }
  rows[n].set(n);
  return FinSpace::from_rows(std::move(rows));
}

FinSpace cube(CubeBase base, int k, int max_points) {
  switch (base) {
    case CubeBase::sierpinski: return power(sierpinski(), k, max_points);
    case CubeBase::discrete2: return power(discrete(2), k, max_points);
    case CubeBase::e_space: return power(e_space(), k, max_points);
  }
  throw Error(Errc::point_out_of_range, "unknown cube base");
}

EmbeddingPoints embedding_points(int k, int max_points) {
  if (k < 1) throw Error(Errc::point_out_of_range, "embedding_points needs k >= 1");
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= 2;
    if (total > max_points) throw Error(Errc::size_overflow, "cube exceeds point bound");
  }
  EmbeddingPoints e;
  auto index_of = [&](auto coord) {
    int idx = 0;
    for (int b = 0; b < k; ++b) idx = idx * 2 + coord(b);
    return idx;
  };
  for (int a = 0; a <= k; ++a) {
    int s = index_of([&](int b) { return a > b ? 1 : 0; });
    int t = index_of([&](int b) { return a <= b ? 1 : 0; });
    e.s_star.push_back(s);
    e.t_star.push_back(t);
    if (a < k) {
      e.s.push_back(s);
      e.t.push_back(t);
    }
  }
  return e;
}

EmbeddingCheck check_embedding(int k, int max_points) {
  EmbeddingPoints e = embedding_points(k, max_points);
  FinSpace a = cube(CubeBase::sierpinski, k, max_points);
  FinSpace c = cube(CubeBase::discrete2, k, max_points);
  auto pick = [&](const FinSpace& space, const std::vector<int>& pts) {
    Bits b(space.size());
    for (int p : pts) b.set(p);
    return subspace(space, b);
  };
  EmbeddingCheck r;
  r.s_in_a_is_lower_chain = pick(a, e.s).homeomorphic_to(chain_lower(k));
  r.t_in_a_is_upper_chain = pick(a, e.t).homeomorphic_to(chain_upper(k));
  r.s_star_in_a_is_lower_chain = pick(a, e.s_star).homeomorphic_to(chain_lower(k + 1));
  r.t_star_in_a_is_upper_chain = pick(a, e.t_star).homeomorphic_to(chain_upper(k + 1));
  r.s_in_c_is_discrete = pick(c, e.s).homeomorphic_to(discrete(k));
  return r;
}

Decomposition normal_t0_decomposition(const FinSpace& x) {
  if (!is_t0(x)) throw Error(Errc::not_t0, "decomposition needs a T0 space");
  int n = x.size();
  Bits maximals(n);
  for (int p = 0; p < n; ++p)
    if (x.up(p).count() == 1) maximals.set(p);

  std::vector<int> r_values(n, -1);
  for (int a = 0; a < n; ++a) {
    Bits above = x.up(a) & maximals;
    if (above.count() != 1) {
      auto rep = is_normal_report(x);
      if (rep.verdict)
        throw Error(Errc::not_normal, "maximal point above a point is not unique");
      throw NotNormalError(rep.witness->a.to_vector(), rep.witness->b.to_vector());
    }
    r_values[a] = above.first();
  }

  Decomposition d;
  d.r = PointMap{x, x, std::move(r_values)};
  d.z = maximals;
  for (int p = maximals.first(); p >= 0; p = maximals.next(p)) {
    Bits f(n);
    for (int a = 0; a < n; ++a)
      if (d.r.values[a] == p) f.set(a);
    d.fibers.push_back(f);
  }
  return d;
}

}  // namespace finitop
