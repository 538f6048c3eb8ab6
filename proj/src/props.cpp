#include "finitop/props.hpp"

namespace finitop {

bool is_t0(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (x.le(a, b) && x.le(b, a)) return false;
  return true;
}

bool is_t1_discrete(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    if (x.up(a).count() != 1) return false;
  return true;
}

PropertyReport is_normal_report(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (x.down(a).intersects(x.down(b)) && !x.up(a).intersects(x.up(b)))
        return {"normal", false, Witness{x.up(a), x.up(b), std::make_pair(a, b)}};
  return {"normal", true, std::nullopt};
}

bool is_normal(const FinSpace& x) { return is_normal_report(x).verdict; }

PropertyReport is_vacuously_normal_report(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (!x.up(a).intersects(x.up(b)))
        return {"vacuously_normal", false, Witness{x.up(a), x.up(b), std::make_pair(a, b)}};
  return {"vacuously_normal", true, std::nullopt};
}

bool is_vacuously_normal(const FinSpace& x) { return is_vacuously_normal_report(x).verdict; }

bool is_vn_point(const FinSpace& x, int p) {
  for (int b = 0; b < x.size(); ++b)
    if (!x.up(p).intersects(x.up(b))) return false;
  return true;
}

bool is_irreducible(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (!x.down(a).intersects(x.down(b))) return false;
  return true;
}

bool is_trivially_compact(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    if (x.down(a).count() == x.size()) return true;
  return false;
}

bool is_loosely_compact(const FinSpace& x) {
  // The largest candidate family (all nonempty closed sets) has at most 2^n
  // members, so every discrete family of nonempty closed sets is finite.
  (void)x;
  return true;
}

bool is_lightly_compact(const FinSpace& x) {
  (void)x;
  return true;
}

bool is_locally_finite(const FinSpace& x, std::span<const Bits> family) {
  for (int p = 0; p < x.size(); ++p) {
    size_t hits = 0;
    for (const Bits& m : family)
      if (x.down(p).intersects(m)) ++hits;
    if (hits > family.size()) return false;  // unreachable on a finite carrier
  }
  return true;
}

bool is_discrete_family(const FinSpace& x, std::span<const Bits> family) {
  for (int p = 0; p < x.size(); ++p) {
    int hits = 0;
    for (const Bits& m : family)
      if (x.down(p).intersects(m) && ++hits > 1) return false;
  }
  return true;
}

}  // namespace finitop
