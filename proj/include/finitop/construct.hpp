#pragma once

#include <vector>

#include "finitop/fin_space.hpp"
#include "finitop/maps.hpp"

namespace finitop {

inline constexpr int kDefaultMaxPoints = 4096;

// Elementary spaces.
FinSpace discrete(int n);
FinSpace indiscrete(int n);
FinSpace sierpinski();    // {0,1}, only nontrivial open {0}; 0 <= 1
FinSpace e_space();       // {0,1,2}, opens {}, X, {0}; points 1,2 indistinguishable
FinSpace v_space();       // 2 <= 0, 2 <= 1: minimal non-normal space
FinSpace lambda_space();  // 0 <= 2, 1 <= 2

/// Opens are initial segments of 0..k-1 (le = the usual order).
FinSpace chain_lower(int k);
/// Opens are final segments of 0..k-1 (le = the reversed order).
FinSpace chain_upper(int k);

/// Points {2..n} relabeled 0..n-2, topology generated by the divisor sets
/// U_m = {d : d divides m}.
FinSpace divisor_space(int n);

/// Componentwise order on pairs; point (x,y) gets index x*|Y|+y (row-major,
/// first coordinate most significant). For finite spaces this is exactly the
/// product topology; the identification fails for infinite products.
FinSpace product(const FinSpace& x, const FinSpace& y, int max_points = kDefaultMaxPoints);
FinSpace power(const FinSpace& x, int k, int max_points = kDefaultMaxPoints);

/// Disjoint union, no cross relations; Y's points are offset by |X|.
FinSpace sum(const FinSpace& x, const FinSpace& y);

/// Induced sub-preorder (trace topology). Throws EmptySubspace.
FinSpace subspace(const FinSpace& x, const Bits& points, std::vector<int>* point_map = nullptr);

/// X plus a new maximum point p (index |X|): the only open set containing p
/// is the whole space. Trivially compact and vacuously normal; X sits as a
/// dense open subspace.
FinSpace star_extension(const FinSpace& x);

enum class CubeBase { sierpinski, discrete2, e_space };

/// k-fold power of the base: sierpinski -> A(k), discrete2 -> C(k),
/// e_space -> E(k).
FinSpace cube(CubeBase base, int k, int max_points = kDefaultMaxPoints);

/// Coordinate vectors s_a (s_ab = [a > b]) and t_a (t_ab = [a <= b]) for
/// a in 0..k (coordinates b in 0..k-1), as point indices of a k-cube.
/// s/t hold the first k of them, s_star/t_star all k+1.
struct EmbeddingPoints {
  std::vector<int> s, s_star, t, t_star;
};
EmbeddingPoints embedding_points(int k, int max_points = kDefaultMaxPoints);

/// Verifies the subspace identifications of the embedding: S in A(k) is the
/// lower k-chain, T the upper k-chain, S* and T* the (k+1)-chains, and S in
/// C(k) is discrete.
struct EmbeddingCheck {
  bool s_in_a_is_lower_chain = false;
  bool t_in_a_is_upper_chain = false;
  bool s_star_in_a_is_lower_chain = false;
  bool t_star_in_a_is_upper_chain = false;
  bool s_in_c_is_discrete = false;
  bool all() const {
    return s_in_a_is_lower_chain && t_in_a_is_upper_chain && s_star_in_a_is_lower_chain &&
           t_star_in_a_is_upper_chain && s_in_c_is_discrete;
  }
};
EmbeddingCheck check_embedding(int k, int max_points = kDefaultMaxPoints);

/// The compact-normal structure of a normal T0 space: r(x) is the unique
/// maximal point above x, Z the discrete set of maximal points, and the
/// fibers are the sets down(p), p in Z, each with a top and upward directed.
struct Decomposition {
  PointMap r;
  Bits z;
  std::vector<Bits> fibers;  // indexed in increasing order of the points of z
};

/// Throws NotT0, and NotNormal (with witness pair) when some point has two
/// maximal points above it.
Decomposition normal_t0_decomposition(const FinSpace& x);

}  // namespace finitop
