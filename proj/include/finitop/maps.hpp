#pragma once

#include <utility>
#include <vector>

#include "finitop/fin_space.hpp"

namespace finitop {

/// Total function between two finite spaces.
struct PointMap {
  FinSpace dom;
  FinSpace cod;
  std::vector<int> values;  // values[x] < cod.size()

  int operator()(int x) const { return values[x]; }
  Bits image(const Bits& s) const;
  Bits preimage(const Bits& s) const;
};

PointMap identity_map(const FinSpace& x);
PointMap compose(const PointMap& g, const PointMap& f);  // g after f

/// Monotone w.r.t. the specialization orders.
bool is_continuous(const PointMap& f);

/// Images of minimal opens are open. Throws NotContinuous.
bool is_open_map(const PointMap& f);

/// Images of point closures are closed. Throws NotContinuous.
bool is_closed_map(const PointMap& f);

/// Maps disjoint open sets to disjoint open sets. Fast route: open map and no
/// two same-fiber points have disjoint minimal opens. Throws NotContinuous.
bool is_very_open(const PointMap& f);

/// Continuous idempotent self-map. Throws DomainMismatch if dom != cod.
bool is_retraction(const PointMap& r);

/// Subspace on f^{-1}(y); new-index -> old-point returned via fiber_points.
FinSpace fiber(const PointMap& f, int y, std::vector<int>* fiber_points = nullptr);

/// Facts and clause verdicts for a retraction r : X -> Z.
///   (a) X normal implies Z normal
///   (b) Z normal, fibers vacuously normal, r closed imply X normal
///   (c) X, Z normal, Z T1, fibers vacuously normal imply r closed
struct RetractionReport {
  Bits range_points;
  FinSpace range_space;
  bool x_normal = false;
  bool z_normal = false;
  bool z_t1 = false;
  bool fibers_vacuously_normal = false;
  bool r_closed = false;
  bool clause_a = false;
  bool clause_b = false;
  bool clause_c = false;
};

RetractionReport check_retraction_clauses(const PointMap& r);  // throws NotARetraction

/// Quotient by the indistinguishability equivalence. The returned map is
/// continuous, very open and surjective; the quotient is T0.
std::pair<FinSpace, PointMap> t0_quotient(const FinSpace& x);

}  // namespace finitop
