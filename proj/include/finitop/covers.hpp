#pragma once

#include <span>
#include <vector>

#include "finitop/fin_space.hpp"

namespace finitop {

/// Indexed open cover. Empty members and repetitions are allowed.
struct Cover {
  std::vector<Bits> members;
};

/// Each member open and the union is the whole space.
bool is_cover(const FinSpace& x, const Cover& c);

/// Each member of v is contained in some member of o, and the unions agree.
bool is_refinement(const FinSpace& x, const Cover& v, const Cover& o);

/// v covers, is faithfully indexed against u, and cl(v[i]) is contained in
/// u[i] for every i. Throws IndexMismatch on unequal lengths.
bool is_shrinking(const FinSpace& x, const Cover& v, const Cover& u);

/// Member-by-member shrinking of a finite open cover: member i is replaced by
/// the smallest open set around the closed part it alone must cover. Succeeds
/// exactly on normal spaces; throws NotNormal with the obstructing disjoint
/// closed pair.
Cover shrink(const FinSpace& x, const Cover& u);

/// Inclusive prefix unions: result[i] = family[0] | ... | family[i].
std::vector<Bits> well_index(std::span<const Bits> family);

/// Every 2-fold open cover has a shrinking (exhausts all ordered pairs of
/// open sets covering the space).
bool normal_via_shrinking(const FinSpace& x);

/// All open sets (down-sets) of the space, in increasing mask order.
/// Exponential in general; intended for enumeration workloads at small n.
std::vector<Bits> all_open_sets(const FinSpace& x);

}  // namespace finitop
