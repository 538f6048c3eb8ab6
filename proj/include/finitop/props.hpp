#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "finitop/fin_space.hpp"

namespace finitop {

struct Witness {
  Bits a;
  Bits b;
  std::optional<std::pair<int, int>> points;
};

struct PropertyReport {
  std::string property;
  bool verdict = false;
  std::optional<Witness> witness;  // present iff verdict is false
};

bool is_t0(const FinSpace& x);

/// For finite spaces T1 = Hausdorff = discrete; exposed under this name so
/// callers cannot mistake it for a separate Hausdorff check.
bool is_t1_discrete(const FinSpace& x);

/// Normal iff every pair of points with a common lower bound has a common
/// upper bound. Witness on failure: the disjoint closed pair (up(x), up(y)).
PropertyReport is_normal_report(const FinSpace& x);
bool is_normal(const FinSpace& x);

/// No two nonempty closed sets are disjoint; equivalently every point is a
/// vn-point.
PropertyReport is_vacuously_normal_report(const FinSpace& x);
bool is_vacuously_normal(const FinSpace& x);

/// up(x) meets up(y) for every y.
bool is_vn_point(const FinSpace& x, int p);

/// Every two nonempty open sets meet (the opens form a filter base).
bool is_irreducible(const FinSpace& x);

/// Some point's minimal open set is the whole space, so every open cover
/// contains the space itself.
bool is_trivially_compact(const FinSpace& x);

// Literal evaluations of the compactness-flavored family definitions. Over a
// finite space every family of subsets is finite, so both hold identically;
// they exist for definitional fidelity and reuse by the symbolic oracles.
bool is_loosely_compact(const FinSpace& x);
bool is_lightly_compact(const FinSpace& x);

/// Every point's minimal open set meets finitely many members.
bool is_locally_finite(const FinSpace& x, std::span<const Bits> family);

/// Every point's minimal open set meets at most one member.
bool is_discrete_family(const FinSpace& x, std::span<const Bits> family);

}  // namespace finitop
