#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "finitop/bits.hpp"

namespace finitop {

/// A finite topological space, stored as its specialization preorder.
///
/// Convention (fixed once, inherited by every module): x <= y iff y lies in
/// the closure of {x}. Closed sets are up-sets, open sets are down-sets,
/// cl({x}) = up(x), and the minimal open neighborhood of x is down(x).
class FinSpace {
public:
  FinSpace() = default;

  /// Preorder with only the reflexive pairs (the discrete relation).
  static FinSpace identity(int n);

  /// Build from the complete up-rows; validates reflexivity and transitivity.
  static FinSpace from_rows(std::vector<Bits> up_rows);

  /// Build from non-reflexive le pairs. Reflexivity is added; non-transitive
  /// input is rejected (TransitivityViolation). This is the JSON reader path.
  static FinSpace from_le_pairs(int n, std::span<const std::pair<int, int>> pairs);

  /// Space whose specialization order is that of the topology generated by
  /// the subbase: x <= y iff every subbase member containing y contains x.
  static FinSpace from_open_sets(int n, const std::vector<Bits>& subbase);

  int size() const { return n_; }
  bool le(int x, int y) const { return up_[x].test(y); }

  const Bits& up(int x) const { return up_[x]; }
  const Bits& down(int x) const { return down_[x]; }
  const Bits& point_closure(int x) const { return up_[x]; }
  const Bits& min_open(int x) const { return down_[x]; }

  Bits closure(const Bits& s) const;
  Bits interior(const Bits& s) const;
  bool is_open(const Bits& s) const;
  bool is_closed(const Bits& s) const;

  /// All pairs x < y (as indices) with le(x,y) and le(y,x).
  std::vector<std::pair<int, int>> indistinguishable_pairs() const;

  /// Induced sub-preorder on the given points, relabeled in increasing order.
  /// If point_map is non-null it receives new-index -> old-point.
  FinSpace induced(const Bits& points, std::vector<int>* point_map = nullptr) const;

  /// Isomorphism-invariant relabeling: identical for homeomorphic inputs.
  FinSpace canonical_form() const;

  /// Total-order key for canonical forms: [n, packed relation bits...].
  std::vector<uint64_t> canonical_encoding() const;

  bool homeomorphic_to(const FinSpace& other) const;

  bool operator==(const FinSpace& o) const { return n_ == o.n_ && up_ == o.up_; }
  bool operator!=(const FinSpace& o) const { return !(*this == o); }

  std::vector<std::pair<int, int>> nonreflexive_pairs() const;

private:
  explicit FinSpace(int n);
  void rebuild_down();
  std::vector<uint64_t> encoding_under(const std::vector<int>& perm) const;

  int n_ = 0;
  std::vector<Bits> up_;    // up_[x] = {y : x <= y}
  std::vector<Bits> down_;  // down_[x] = {z : z <= x}
};

}  // namespace finitop
