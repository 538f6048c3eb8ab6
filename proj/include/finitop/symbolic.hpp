#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finitop/bits.hpp"
#include "finitop/fin_space.hpp"

namespace finitop::symbolic {

/// The named countable test spaces. Open families:
///   discrete_omega   all subsets of [0,w)
///   lower_omega      {[0,a): a < w} and [0,w) itself
///   upper_omega      {}, [0,w), and the final segments (a,w)
///   omega_bar        [0,w] with the order topology (one-point
///                    compactification of discrete w; not Alexandroff at inf)
///   lower_omega_bar  {[0,a): a <= w} and [0,w] (so {inf} is closed)
///   upper_omega_bar  {}, [0,w], and the final segments (a,w]
enum class SpaceTag {
  discrete_omega,
  lower_omega,
  upper_omega,
  omega_bar,
  lower_omega_bar,
  upper_omega_bar,
};

const char* tag_name(SpaceTag t);
bool has_infinity(SpaceTag t);

/// A natural number, or the point inf of a bar space.
struct ExtNat {
  bool inf = false;
  uint32_t v = 0;
  static ExtNat infinity() { return {true, 0}; }
  static ExtNat of(uint32_t n) { return {false, n}; }
  bool operator==(const ExtNat&) const = default;
};

struct Point {
  ExtNat x;
  ExtNat y;  // ignored for single carriers
};

/// One named space, or an ordered product of two.
struct Carrier {
  std::vector<SpaceTag> factors;
  int arity() const { return int(factors.size()); }
  bool operator==(const Carrier&) const = default;
};

Carrier single_carrier(SpaceTag t);
Carrier product_carrier(SpaceTag first, SpaceTag second);

/// One conjunct of a cell, in the user-facing constraint language.
struct Constraint {
  enum Kind {
    x_le,         // x <= c
    x_ge,         // x >= c
    x_is_inf,     // x = inf
    x_not_inf,    // x != inf
    y_le,
    y_ge,
    y_is_inf,
    y_not_inf,
    y_le_x_plus,  // y <= x + c
    y_ge_x_plus,  // y >= x + c
  } kind;
  uint32_t c = 0;
};

inline constexpr int64_t kNegInf = INT64_MIN / 4;
inline constexpr int64_t kPosInf = INT64_MAX / 4;

/// Normalized cell: the infinity status of each coordinate is definite, the
/// finite parts are intervals, and the difference bound applies only when
/// both coordinates are finite.
struct Cell {
  bool x_inf = false;
  bool y_inf = false;
  int64_t xlo = 0, xhi = kPosInf;
  int64_t ylo = 0, yhi = kPosInf;
  int64_t dlo = kNegInf, dhi = kPosInf;  // y - x window
};

/// A constraint-defined subset of a carrier: a finite union of cells.
class SymbolicSet {
public:
  static SymbolicSet empty(Carrier c);
  static SymbolicSet whole(Carrier c);
  /// Union of conjunctions in the constraint language.
  static SymbolicSet from_constraints(Carrier c,
                                      const std::vector<std::vector<Constraint>>& cells);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool member(const Point& p) const;
  SymbolicSet complement() const;
  SymbolicSet intersect(const SymbolicSet& o) const;  // CarrierMismatch
  SymbolicSet unite(const SymbolicSet& o) const;
  SymbolicSet difference(const SymbolicSet& o) const;
  bool is_empty() const;
  bool equals(const SymbolicSet& o) const;

  /// Largest finite constant in any cell bound.
  int64_t max_constant() const;

  /// A member of the set; deterministic. Requires nonempty.
  Point pick_point() const;

  std::string describe() const;

  // Internal: cells must already be normalized.
  static SymbolicSet from_cells(Carrier c, std::vector<Cell> cells);

private:
  Carrier carrier_;
  std::vector<Cell> cells_;
};

// Topological operations under the carrier's per-space closure rules.
SymbolicSet closure(const SymbolicSet& s);
bool is_closed(const SymbolicSet& s);
bool is_open(const SymbolicSet& s);

/// Existential elimination of the other coordinate. axis 0 keeps x, 1 keeps y.
/// Throws UnsupportedCarrier on single carriers.
SymbolicSet projection(const SymbolicSet& s, int axis);

struct EnvelopeResult {
  SymbolicSet envelope;  // intersection of all open supersets
  bool open;             // whether that intersection is itself open
};
EnvelopeResult open_envelope(const SymbolicSet& s);

/// {(m,k): k <= m, both finite}. First factor must be one of lower_omega,
/// upper_omega, discrete_omega; second one of the bar spaces.
SymbolicSet staircase(const Carrier& c);
/// {(m,k): k = inf}.
SymbolicSet lid(const Carrier& c);

struct SeparationVerdict {
  bool separable = false;
  // On success, disjoint open supersets of F and H.
  std::optional<SymbolicSet> open_f, open_h;
  // On failure, a point of one set inside the closure of the other's
  // envelope (every open pair must meet near it).
  std::optional<Point> obstruction;
};

/// Decides whether two disjoint closed sets have disjoint open supersets.
/// Throws NotDisjoint / NotClosed; throws UnsupportedCarrier in the corner
/// where neither envelope is open and the envelopes are disjoint.
SeparationVerdict separation_verdict(const SymbolicSet& f, const SymbolicSet& h);

/// Finite subspace of the named space on [0,W] (plus inf for bar spaces).
/// For omega_bar the honest trace is discrete plus an isolated point: the
/// infinite limit structure is not Alexandroff and lives in WindowModel.
FinSpace trace_space(SpaceTag t, int w);

struct WindowResult {
  int w = 0;
  /// S restricted to the window, indexed like the product of trace spaces
  /// (row-major; the inf slot, when present, is the last index of its axis).
  Bits points;
  bool tail_x = false;  // members with finite x beyond W
  bool tail_y = false;
  bool inf_x = false;  // members with x = inf
  bool inf_y = false;
};

/// Throws WindowTooSmall unless w > max_constant + 2.
WindowResult window_oracle(const SymbolicSet& s, int w);

/// Explicit-basis finite model of a carrier on the grid [0,extent] (plus inf
/// slots). Neighborhoods are represented as lists of basis rectangles, so the
/// non-Alexandroff point of omega_bar / upper_omega_bar keeps its cofinal
/// filter instead of a fake minimal neighborhood. Computations quantify over
/// the basis; nothing here shares code with the symbolic closure rules, which
/// is the point: restricted to [0,W] with extent >= 4W > 4(B+2), the model
/// agrees with the true space on every set whose constants are at most B.
class WindowModel {
public:
  WindowModel(Carrier carrier, int extent);

  int axis_points(int axis) const;
  int grid_size() const;
  int index(const Point& p) const;
  bool in_grid(const Point& p) const;
  Point point_at(int index) const;

  Bits rasterize(const SymbolicSet& s) const;
  /// Keep only points with every finite coordinate <= small_w (inf kept).
  Bits restrict_to(const Bits& t, int small_w) const;

  Bits closure(const Bits& t) const;
  Bits envelope(const Bits& t) const;
  /// Interior-point check quantified over the points with finite coordinates
  /// at most within_w (inf slots included); pass extent to test every point.
  bool is_open(const Bits& t, int within_w) const;
  bool is_closed(const Bits& t, int within_w) const;
  Bits project(const Bits& t, int axis) const;
  bool separable(const Bits& f, const Bits& h) const;

private:
  struct AxisRange {
    int lo = 0, hi = -1;  // grid indices, empty if lo > hi
    bool inf = false;     // include the inf slot
  };
  struct Rect {
    AxisRange x, y;
  };

  bool axis_has_inf(int axis) const;
  int axis_inf_index(int axis) const;
  std::vector<Rect> basis_of(const Point& p) const;
  Rect min_rect(const Point& p) const;

  Carrier carrier_;
  int extent_;
};

/// Engine-vs-model cross validation of one symbolic computation at a window.
struct OracleCheck {
  int w = 0;
  bool ok = false;
  std::string detail;
};

OracleCheck check_closure_against_model(const SymbolicSet& s, int w);
OracleCheck check_envelope_against_model(const SymbolicSet& s, int w);
OracleCheck check_is_closed_against_model(const SymbolicSet& s, int w);
OracleCheck check_is_open_against_model(const SymbolicSet& s, int w);
OracleCheck check_projection_against_model(const SymbolicSet& s, int axis, int w);
OracleCheck check_separation_against_model(const SymbolicSet& f, const SymbolicSet& h,
                                            bool engine_separable, int w);

}  // namespace finitop::symbolic
