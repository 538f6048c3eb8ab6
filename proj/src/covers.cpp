#include "finitop/covers.hpp"

#include "finitop/error.hpp"

namespace finitop {

bool is_cover(const FinSpace& x, const Cover& c) {
  Bits u(x.size());
  for (const Bits& m : c.members) {
    if (!x.is_open(m)) return false;
    u |= m;
  }
  return u == Bits::full(x.size());
}

bool is_refinement(const FinSpace& x, const Cover& v, const Cover& o) {
  Bits uv(x.size()), uo(x.size());
  for (const Bits& m : o.members) uo |= m;
  for (const Bits& m : v.members) {
    if (!x.is_open(m)) return false;
    uv |= m;
    bool inside = m.none();
    for (const Bits& w : o.members)
      if (w.contains(m)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return uv == uo;
}

bool is_shrinking(const FinSpace& x, const Cover& v, const Cover& u) {
  if (v.members.size() != u.members.size())
    throw Error(Errc::index_mismatch, "shrinking must be faithfully indexed");
  if (!is_cover(x, v)) return false;
  for (size_t i = 0; i < v.members.size(); ++i)
    if (!u.members[i].contains(x.closure(v.members[i]))) return false;
  return true;
}

Cover shrink(const FinSpace& x, const Cover& u) {
  int n = x.size();
  Cover current = u;
  for (size_t i = 0; i < current.members.size(); ++i) {
    Bits rest(n);
    for (size_t j = 0; j < current.members.size(); ++j)
      if (j != i) rest |= current.members[j];
    Bits f = rest.complement();          // what member i alone must cover
    Bits g = u.members[i].complement();  // the closed set to stay away from
    Bits w(n);                           // down(f), the smallest open superset of f
    for (int p = f.first(); p >= 0; p = f.next(p)) w |= x.down(p);
    Bits wg(n);
    for (int p = g.first(); p >= 0; p = g.next(p)) wg |= x.down(p);
    if (w.intersects(wg)) throw NotNormalError(f.to_vector(), g.to_vector());
    current.members[i] = w;
  }
  return current;
}

std::vector<Bits> well_index(std::span<const Bits> family) {
  std::vector<Bits> r;
  r.reserve(family.size());
  Bits acc;
  for (size_t i = 0; i < family.size(); ++i) {
    if (i == 0)
      acc = family[0];
    else
      acc |= family[i];
    r.push_back(acc);
  }
  return r;
}

bool normal_via_shrinking(const FinSpace& x) {
  auto opens = all_open_sets(x);
  Bits whole = Bits::full(x.size());
  for (const Bits& a : opens)
    for (const Bits& b : opens) {
      if ((a | b) != whole) continue;
      try {
        shrink(x, Cover{{a, b}});
      } catch (const NotNormalError&) {
        return false;
      }
    }
  return true;
}

std::vector<Bits> all_open_sets(const FinSpace& x) {
  int n = x.size();
  std::vector<Bits> r;
  if (n > 24) throw Error(Errc::bound_exceeded, "open-set enumeration capped at n=24");
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    if (x.is_open(s)) r.push_back(s);
  }
  return r;
}

}  // namespace finitop
