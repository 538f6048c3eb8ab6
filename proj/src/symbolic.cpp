#include "finitop/symbolic.hpp"

#include <algorithm>
#include <cassert>

#include "finitop/construct.hpp"
#include "finitop/error.hpp"

namespace finitop::symbolic {

const char* tag_name(SpaceTag t) {
  switch (t) {
    case SpaceTag::discrete_omega: return "discrete_omega";
    case SpaceTag::lower_omega: return "lower_omega";
    case SpaceTag::upper_omega: return "upper_omega";
    case SpaceTag::omega_bar: return "omega_bar";
    case SpaceTag::lower_omega_bar: return "lower_omega_bar";
    case SpaceTag::upper_omega_bar: return "upper_omega_bar";
  }
  return "?";
}

bool has_infinity(SpaceTag t) {
  return t == SpaceTag::omega_bar || t == SpaceTag::lower_omega_bar ||
         t == SpaceTag::upper_omega_bar;
}

Carrier single_carrier(SpaceTag t) { return Carrier{{t}}; }
Carrier product_carrier(SpaceTag first, SpaceTag second) { return Carrier{{first, second}}; }

namespace {

// Saturating arithmetic on the extended line.
int64_t eadd(int64_t a, int64_t b) {
  if (a >= kPosInf || b >= kPosInf) {
    assert(a > kNegInf && b > kNegInf);
    return kPosInf;
  }
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  return a + b;
}
int64_t esub(int64_t a, int64_t b) { return eadd(a, b >= kPosInf ? kNegInf : (b <= kNegInf ? kPosInf : -b)); }

// Minimal-neighborhood structure of a factor.
struct FactorInfo {
  bool has_inf = false;
  bool inf_min_whole = false;  // inf has minimal neighborhood = whole space
  enum Shape { pt, down, up } fin_shape = pt;
  bool fin_inc_inf = false;  // minimal neighborhood of a finite point contains inf
};

FactorInfo info(SpaceTag t) {
  switch (t) {
    case SpaceTag::discrete_omega: return {false, false, FactorInfo::pt, false};
    case SpaceTag::lower_omega: return {false, false, FactorInfo::down, false};
    case SpaceTag::upper_omega: return {false, false, FactorInfo::up, false};
    case SpaceTag::omega_bar: return {true, false, FactorInfo::pt, false};
    case SpaceTag::lower_omega_bar: return {true, true, FactorInfo::down, false};
    case SpaceTag::upper_omega_bar: return {true, false, FactorInfo::up, true};
  }
  return {};
}

bool cell_nonempty(const Cell& c, int arity) {
  if (!c.x_inf && c.xlo > c.xhi) return false;
  if (arity == 2) {
    if (!c.y_inf && c.ylo > c.yhi) return false;
    if (!c.x_inf && !c.y_inf) {
      if (std::max(c.dlo, esub(c.ylo, c.xhi)) > std::min(c.dhi, esub(c.yhi, c.xlo)))
        return false;
    }
  }
  return true;
}

Cell universe_cell(bool x_inf, bool y_inf) {
  Cell c;
  c.x_inf = x_inf;
  c.y_inf = y_inf;
  return c;
}

std::vector<Cell> universe_cells(const Carrier& car) {
  std::vector<Cell> out;
  bool xs[2] = {false, true};
  for (int xi = 0; xi < (has_infinity(car.factors[0]) ? 2 : 1); ++xi) {
    if (car.arity() == 1) {
      out.push_back(universe_cell(xs[xi], false));
      continue;
    }
    for (int yi = 0; yi < (has_infinity(car.factors[1]) ? 2 : 1); ++yi)
      out.push_back(universe_cell(xs[xi], xs[yi]));
  }
  return out;
}

std::vector<Cell> cell_subtract(const Cell& r, const Cell& c, int arity) {
  if (r.x_inf != c.x_inf || (arity == 2 && r.y_inf != c.y_inf)) return {r};
  std::vector<Cell> out;
  auto emit = [&](const Cell& p) {
    if (cell_nonempty(p, arity)) out.push_back(p);
  };
  Cell rem = r;
  if (!r.x_inf) {
    if (c.xlo > rem.xlo) {
      Cell p = rem;
      p.xhi = std::min(p.xhi, c.xlo - 1);
      emit(p);
      rem.xlo = c.xlo;
    }
    if (c.xhi < rem.xhi) {
      Cell p = rem;
      p.xlo = std::max(p.xlo, eadd(c.xhi, 1));
      emit(p);
      rem.xhi = c.xhi;
    }
  }
  if (arity == 2 && !r.y_inf) {
    if (c.ylo > rem.ylo) {
      Cell p = rem;
      p.yhi = std::min(p.yhi, c.ylo - 1);
      emit(p);
      rem.ylo = c.ylo;
    }
    if (c.yhi < rem.yhi) {
      Cell p = rem;
      p.ylo = std::max(p.ylo, eadd(c.yhi, 1));
      emit(p);
      rem.yhi = c.yhi;
    }
  }
  if (arity == 2 && !r.x_inf && !r.y_inf) {
    if (c.dlo > rem.dlo) {
      Cell p = rem;
      p.dhi = std::min(p.dhi, esub(c.dlo, 1));
      emit(p);
      rem.dlo = c.dlo;
    }
    if (c.dhi < rem.dhi) {
      Cell p = rem;
      p.dlo = std::max(p.dlo, eadd(c.dhi, 1));
      emit(p);
      rem.dhi = c.dhi;
    }
  }
  return out;  // what is left of rem lies inside c
}

Cell cell_intersect(const Cell& a, const Cell& b) {
  Cell c = a;
  c.xlo = std::max(a.xlo, b.xlo);
  c.xhi = std::min(a.xhi, b.xhi);
  c.ylo = std::max(a.ylo, b.ylo);
  c.yhi = std::min(a.yhi, b.yhi);
  c.dlo = std::max(a.dlo, b.dlo);
  c.dhi = std::min(a.dhi, b.dhi);
  return c;
}

}  // namespace

SymbolicSet SymbolicSet::from_cells(Carrier c, std::vector<Cell> cells) {
  SymbolicSet s;
  s.carrier_ = std::move(c);
  int ar = s.carrier_.arity();
  for (Cell& cell : cells) {
    if (cell.x_inf && !has_infinity(s.carrier_.factors[0])) continue;
    if (ar == 2 && cell.y_inf && !has_infinity(s.carrier_.factors[1])) continue;
    if (cell_nonempty(cell, ar)) s.cells_.push_back(cell);
  }
  return s;
}

SymbolicSet SymbolicSet::empty(Carrier c) { return from_cells(std::move(c), {}); }

SymbolicSet SymbolicSet::whole(Carrier c) {
  auto u = universe_cells(c);
  return from_cells(std::move(c), std::move(u));
}

SymbolicSet SymbolicSet::from_constraints(Carrier car,
                                          const std::vector<std::vector<Constraint>>& conjs) {
  int ar = car.arity();
  std::vector<Cell> out;
  for (const auto& conj : conjs) {
    std::vector<Cell> cand = universe_cells(car);
    for (const Constraint& k : conj) {
      if (ar == 1 && k.kind >= Constraint::y_le)
        throw Error(Errc::unsupported_carrier, "y constraint on a single carrier");
      std::vector<Cell> next;
      for (Cell c : cand) {
        bool keep = true;
        switch (k.kind) {
          case Constraint::x_le:
            if (c.x_inf) keep = false;
            else c.xhi = std::min<int64_t>(c.xhi, k.c);
            break;
          case Constraint::x_ge:
            if (!c.x_inf) c.xlo = std::max<int64_t>(c.xlo, k.c);
            break;
          case Constraint::x_is_inf: keep = c.x_inf; break;
          case Constraint::x_not_inf: keep = !c.x_inf; break;
          case Constraint::y_le:
            if (c.y_inf) keep = false;
            else c.yhi = std::min<int64_t>(c.yhi, k.c);
            break;
          case Constraint::y_ge:
            if (!c.y_inf) c.ylo = std::max<int64_t>(c.ylo, k.c);
            break;
          case Constraint::y_is_inf: keep = c.y_inf; break;
          case Constraint::y_not_inf: keep = !c.y_inf; break;
          case Constraint::y_le_x_plus:
            if (!c.x_inf && !c.y_inf) c.dhi = std::min<int64_t>(c.dhi, k.c);
            else if (c.y_inf && !c.x_inf) keep = false;  // inf <= finite + c fails
            break;
          case Constraint::y_ge_x_plus:
            if (!c.x_inf && !c.y_inf) c.dlo = std::max<int64_t>(c.dlo, k.c);
            else if (!c.y_inf && c.x_inf) keep = false;  // finite >= inf + c fails
            break;
        }
        if (keep && cell_nonempty(c, ar)) next.push_back(c);
      }
      cand = std::move(next);
    }
    for (auto& c : cand) out.push_back(c);
  }
  return from_cells(std::move(car), std::move(out));
}

bool SymbolicSet::member(const Point& p) const {
  int ar = carrier_.arity();
  for (const Cell& c : cells_) {
    if (c.x_inf != p.x.inf) continue;
    if (!p.x.inf && (p.x.v < c.xlo || p.x.v > c.xhi)) continue;
    if (ar == 2) {
      if (c.y_inf != p.y.inf) continue;
      if (!p.y.inf && (p.y.v < c.ylo || p.y.v > c.yhi)) continue;
      if (!p.x.inf && !p.y.inf) {
        int64_t d = int64_t(p.y.v) - int64_t(p.x.v);
        if (d < c.dlo || d > c.dhi) continue;
      }
    }
    return true;
  }
  return false;
}

SymbolicSet SymbolicSet::complement() const {
  int ar = carrier_.arity();
  std::vector<Cell> result = universe_cells(carrier_);
  for (const Cell& c : cells_) {
    std::vector<Cell> next;
    for (const Cell& r : result)
      for (const Cell& piece : cell_subtract(r, c, ar)) next.push_back(piece);
    result = std::move(next);
  }
  return from_cells(carrier_, std::move(result));
}

SymbolicSet SymbolicSet::intersect(const SymbolicSet& o) const {
  if (!(carrier_ == o.carrier_)) throw Error(Errc::carrier_mismatch, "intersect");
  int ar = carrier_.arity();
  std::vector<Cell> out;
  for (const Cell& a : cells_)
    for (const Cell& b : o.cells_) {
      if (a.x_inf != b.x_inf || (ar == 2 && a.y_inf != b.y_inf)) continue;
      Cell c = cell_intersect(a, b);
      if (cell_nonempty(c, ar)) out.push_back(c);
    }
  return from_cells(carrier_, std::move(out));
}

SymbolicSet SymbolicSet::unite(const SymbolicSet& o) const {
  if (!(carrier_ == o.carrier_)) throw Error(Errc::carrier_mismatch, "unite");
  std::vector<Cell> out = cells_;
  out.insert(out.end(), o.cells_.begin(), o.cells_.end());
  return from_cells(carrier_, std::move(out));
}

SymbolicSet SymbolicSet::difference(const SymbolicSet& o) const {
  return intersect(o.complement());
}

bool SymbolicSet::is_empty() const { return cells_.empty(); }

bool SymbolicSet::equals(const SymbolicSet& o) const {
  return difference(o).is_empty() && o.difference(*this).is_empty();
}

int64_t SymbolicSet::max_constant() const {
  int64_t b = 0;
  auto upd = [&](int64_t v) {
    if (v > kNegInf && v < kPosInf) b = std::max(b, v < 0 ? -v : v);
  };
  for (const Cell& c : cells_) {
    upd(c.xlo);
    upd(c.xhi);
    upd(c.ylo);
    upd(c.yhi);
    upd(c.dlo);
    upd(c.dhi);
    if (carrier_.arity() == 2 && !c.x_inf && !c.y_inf) {
      // interval bounds combined with the difference window: every member
      // extremum and derived-cell boundary sits within these pairings
      for (int64_t xb : {c.xlo, c.xhi})
        for (int64_t db : {c.dlo, c.dhi}) {
          if (xb < kPosInf && db > kNegInf && db < kPosInf) upd(eadd(xb, db));
        }
      for (int64_t yb : {c.ylo, c.yhi})
        for (int64_t db : {c.dlo, c.dhi}) {
          if (yb < kPosInf && db > kNegInf && db < kPosInf) upd(esub(yb, db));
        }
    }
  }
  return b;
}

Point SymbolicSet::pick_point() const {
  if (cells_.empty()) throw Error(Errc::point_out_of_range, "pick_point of empty set");
  const Cell& c = cells_.front();
  Point p;
  if (c.x_inf) {
    p.x = ExtNat::infinity();
  } else {
    int64_t x0 = std::max(c.xlo, esub(c.ylo, c.dhi));
    if (carrier_.arity() == 1 || c.y_inf) x0 = c.xlo;
    p.x = ExtNat::of(uint32_t(x0));
  }
  if (carrier_.arity() == 2) {
    if (c.y_inf)
      p.y = ExtNat::infinity();
    else if (c.x_inf)
      p.y = ExtNat::of(uint32_t(c.ylo));
    else
      p.y = ExtNat::of(uint32_t(std::max(c.ylo, eadd(int64_t(p.x.v), c.dlo))));
  }
  assert(member(p));
  return p;
}

std::string SymbolicSet::describe() const {
  if (cells_.empty()) return "{}";
  std::string out;
  auto bound = [&](int64_t v) { return std::to_string(v); };
  for (const Cell& c : cells_) {
    if (!out.empty()) out += " | ";
    std::string conj;
    auto add = [&](const std::string& s) {
      if (!conj.empty()) conj += ", ";
      conj += s;
    };
    if (c.x_inf)
      add("x=inf");
    else {
      if (c.xlo > 0) add("x>=" + bound(c.xlo));
      if (c.xhi < kPosInf) add("x<=" + bound(c.xhi));
      add("x!=inf");
    }
    if (carrier_.arity() == 2) {
      if (c.y_inf)
        add("y=inf");
      else {
        if (c.ylo > 0) add("y>=" + bound(c.ylo));
        if (c.yhi < kPosInf) add("y<=" + bound(c.yhi));
        add("y!=inf");
        if (!c.x_inf && c.dlo > kNegInf) add("y>=x+" + bound(c.dlo));
        if (!c.x_inf && c.dhi < kPosInf) add("y<=x+" + bound(c.dhi));
      }
    }
    out += "{" + conj + "}";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closure / envelope machinery.
//
// Both reduce to the same parametric question: for which target points (u,v)
// does a parametric rectangle meet a cell? The rectangle's per-axis interval
// is one of {u,u}, [0,u], [u,inf), [0,inf), so every condition expands into
// conjunctive atoms of the shapes u<=c, u>=c, v<=c, v>=c, v-u<=c, v-u>=c.

namespace {

enum class PS { pt, down, up, all };

struct ShapeDesc {
  PS ps = PS::all;
  bool incl_inf = false;  // the rectangle's axis part contains inf
};

ShapeDesc fin_min_shape(const FactorInfo& f) {
  switch (f.fin_shape) {
    case FactorInfo::pt: return {PS::pt, false};
    case FactorInfo::down: return {PS::down, false};
    case FactorInfo::up: return {PS::up, f.fin_inc_inf};
  }
  return {};
}

ShapeDesc inverse_shape(const FactorInfo& f) {
  switch (f.fin_shape) {
    case FactorInfo::pt: return {PS::pt, false};
    case FactorInfo::down: return {PS::up, false};
    case FactorInfo::up: return {PS::down, false};
  }
  return {};
}

// Accumulates conjunctive conditions on the target point (u,v).
struct Target {
  bool ok = true;
  Cell cell;  // target kind + accumulated (u,v) constraints

  void fail() { ok = false; }
  void u_ge(int64_t c) { cell.xlo = std::max(cell.xlo, c); }
  void u_le(int64_t c) { cell.xhi = std::min(cell.xhi, c); }
  void v_ge(int64_t c) { cell.ylo = std::max(cell.ylo, c); }
  void v_le(int64_t c) { cell.yhi = std::min(cell.yhi, c); }
  void d_ge(int64_t c) { cell.dlo = std::max(cell.dlo, c); }
  void d_le(int64_t c) { cell.dhi = std::min(cell.dhi, c); }
};

struct Lin {
  int which;  // 0 const, 1 u, 2 v
  int64_t off;
};

// Adds the atom A <= B.
void le_atom(Target& t, Lin a, Lin b) {
  if (!t.ok) return;
  if (a.which != 0 && a.off <= kNegInf) return;      // u + (-inf) <= anything
  if (b.which != 0 && b.off >= kPosInf) return;      // anything <= u + inf
  if (a.which != 0 && a.off >= kPosInf) {            // u + inf <= b
    t.fail();
    return;
  }
  if (b.which != 0 && b.off <= kNegInf) {
    t.fail();
    return;
  }
  if (a.which == b.which) {
    if (a.off > b.off) t.fail();
    return;
  }
  if (a.which == 0) {
    if (b.which == 1)
      t.u_ge(esub(a.off, b.off));
    else
      t.v_ge(esub(a.off, b.off));
    return;
  }
  if (b.which == 0) {
    if (a.which == 1)
      t.u_le(esub(b.off, a.off));
    else
      t.v_le(esub(b.off, a.off));
    return;
  }
  if (a.which == 2 && b.which == 1)
    t.d_le(esub(b.off, a.off));  // v - u <= b.off - a.off
  else
    t.d_ge(esub(a.off, b.off));  // v - u >= a.off - b.off
}

// Conditions for shape_x(u) x shape_y(v) to meet the finite rectangle part
// (and difference window) of an FF cell.
void overlap_ff(Target& t, const Cell& c, ShapeDesc sx, ShapeDesc sy, int arity) {
  // x side
  switch (sx.ps) {
    case PS::pt: t.u_ge(c.xlo); t.u_le(c.xhi); break;
    case PS::down: t.u_ge(c.xlo); break;
    case PS::up: t.u_le(c.xhi); break;
    case PS::all: break;
  }
  if (arity == 1 || !t.ok) return;
  switch (sy.ps) {
    case PS::pt: t.v_ge(c.ylo); t.v_le(c.yhi); break;
    case PS::down: t.v_ge(c.ylo); break;
    case PS::up: t.v_le(c.yhi); break;
    case PS::all: break;
  }
  if (!t.ok) return;

  Lin ix_lo = (sx.ps == PS::pt || sx.ps == PS::up) ? Lin{1, 0} : Lin{0, 0};
  Lin ix_hi = (sx.ps == PS::pt || sx.ps == PS::down) ? Lin{1, 0} : Lin{0, kPosInf};
  Lin iy_lo = (sy.ps == PS::pt || sy.ps == PS::up) ? Lin{2, 0} : Lin{0, 0};
  Lin iy_hi = (sy.ps == PS::pt || sy.ps == PS::down) ? Lin{2, 0} : Lin{0, kPosInf};

  if (c.dlo > kNegInf) {
    // dlo + max(c.xlo, ix_lo) <= min(c.yhi, iy_hi)
    for (Lin lo : {Lin{0, c.xlo}, ix_lo})
      for (Lin hi : {Lin{0, c.yhi}, iy_hi})
        le_atom(t, Lin{lo.which, eadd(lo.off, c.dlo)}, hi);
  }
  if (c.dhi < kPosInf) {
    // max(c.ylo, iy_lo) <= dhi + min(c.xhi, ix_hi)
    for (Lin lo : {Lin{0, c.ylo}, iy_lo})
      for (Lin hi : {Lin{0, c.xhi}, ix_hi})
        le_atom(t, lo, Lin{hi.which, eadd(hi.off, c.dhi)});
  }
}

void emit(std::vector<Cell>& out, const Target& t, int arity) {
  if (t.ok && cell_nonempty(t.cell, arity)) out.push_back(t.cell);
}

// Closure attraction of cell c onto target points of kind (px_inf, py_inf).
void attract(std::vector<Cell>& out, const Cell& c, const Carrier& car, bool px_inf,
             bool py_inf) {
  int ar = car.arity();
  FactorInfo fx = info(car.factors[0]);
  FactorInfo fy = ar == 2 ? info(car.factors[1]) : FactorInfo{};
  bool x_cof = px_inf && !fx.inf_min_whole;
  bool y_cof = ar == 2 && py_inf && !fy.inf_min_whole;

  Target t;
  t.cell.x_inf = px_inf;
  t.cell.y_inf = py_inf;

  if (ar == 1) {
    if (!px_inf) {
      ShapeDesc sx = fin_min_shape(fx);
      if (c.x_inf) {
        if (!sx.incl_inf) return;
      } else {
        Cell cc = c;
        overlap_ff(t, cc, sx, {}, 1);
      }
    } else if (!x_cof) {
      // inf with a whole-space minimal neighborhood meets every nonempty set
    } else {
      if (!c.x_inf && c.xhi < kPosInf) return;  // needs an unbounded tail
    }
    emit(out, t, 1);
    return;
  }

  // Shapes for the regular coordinates.
  ShapeDesc sx = px_inf ? ShapeDesc{PS::all, true} : fin_min_shape(fx);
  ShapeDesc sy = py_inf ? ShapeDesc{PS::all, true} : fin_min_shape(fy);

  if (!x_cof && !y_cof) {
    // Both coordinates have minimal neighborhoods; pure rectangle overlap.
    if (c.x_inf && !sx.incl_inf) return;
    if (c.y_inf && !sy.incl_inf) return;
    if (!c.x_inf && !c.y_inf) {
      overlap_ff(t, c, sx, sy, 2);
    } else if (!c.x_inf) {
      Cell cx = c;  // y pinned to inf: only the x interval constrains
      switch (sx.ps) {
        case PS::pt: t.u_ge(cx.xlo); t.u_le(cx.xhi); break;
        case PS::down: t.u_ge(cx.xlo); break;
        case PS::up: t.u_le(cx.xhi); break;
        case PS::all: break;
      }
    } else if (!c.y_inf) {
      switch (sy.ps) {
        case PS::pt: t.v_ge(c.ylo); t.v_le(c.yhi); break;
        case PS::down: t.v_ge(c.ylo); break;
        case PS::up: t.v_le(c.yhi); break;
        case PS::all: break;
      }
    }
    emit(out, t, 2);
    return;
  }

  if (x_cof && y_cof) {
    bool ok;
    if (!c.x_inf && !c.y_inf)
      ok = c.xhi >= kPosInf && c.yhi >= kPosInf;
    else if (!c.x_inf)
      ok = c.xhi >= kPosInf;
    else if (!c.y_inf)
      ok = c.yhi >= kPosInf;
    else
      ok = true;
    if (ok) emit(out, t, 2);
    return;
  }

  if (y_cof) {
    // Target (u, inf) where inf is a cofinal limit: the cell must reach
    // arbitrarily large y inside the x-neighborhood of u.
    if (c.y_inf) {
      if (c.x_inf) {
        if (!sx.incl_inf) return;
        emit(out, t, 2);
      } else {
        switch (sx.ps) {
          case PS::pt: t.u_ge(c.xlo); t.u_le(c.xhi); break;
          case PS::down: t.u_ge(c.xlo); break;
          case PS::up: t.u_le(c.xhi); break;
          case PS::all: break;
        }
        emit(out, t, 2);
      }
      return;
    }
    if (c.x_inf) {
      if (!sx.incl_inf || c.yhi < kPosInf) return;
      emit(out, t, 2);
      return;
    }
    if (c.yhi < kPosInf) return;
    bool x_window_unbounded =
        (sx.ps == PS::up || sx.ps == PS::all) && c.xhi >= kPosInf;
    if (c.dhi < kPosInf && !x_window_unbounded) return;
    switch (sx.ps) {
      case PS::pt: t.u_ge(c.xlo); t.u_le(c.xhi); break;
      case PS::down: t.u_ge(c.xlo); break;
      case PS::up: t.u_le(c.xhi); break;
      case PS::all: break;
    }
    emit(out, t, 2);
    return;
  }

  // x_cof: mirror image.
  if (c.x_inf) {
    if (c.y_inf) {
      // cofinal x-neighborhoods contain inf; the cell's inf y-coordinate
      // must lie in the target's y-neighborhood
      if (sy.incl_inf) emit(out, t, 2);
    } else {
      switch (sy.ps) {
        case PS::pt: t.v_ge(c.ylo); t.v_le(c.yhi); break;
        case PS::down: t.v_ge(c.ylo); break;
        case PS::up: t.v_le(c.yhi); break;
        case PS::all: break;
      }
      emit(out, t, 2);
    }
    return;
  }
  if (c.y_inf) {
    if (!sy.incl_inf || c.xhi < kPosInf) return;
    emit(out, t, 2);
    return;
  }
  if (c.xhi < kPosInf) return;
  bool y_window_unbounded = (sy.ps == PS::up || sy.ps == PS::all) && c.yhi >= kPosInf;
  if (c.dlo > kNegInf && !y_window_unbounded) return;
  switch (sy.ps) {
    case PS::pt: t.v_ge(c.ylo); t.v_le(c.yhi); break;
    case PS::down: t.v_ge(c.ylo); break;
    case PS::up: t.v_le(c.yhi); break;
    case PS::all: break;
  }
  emit(out, t, 2);
}

// Envelope: target p lies in the intersection of all neighborhoods of some
// point of the cell.
void envelop(std::vector<Cell>& out, const Cell& c, const Carrier& car, bool px_inf,
             bool py_inf) {
  int ar = car.arity();
  FactorInfo fx = info(car.factors[0]);
  FactorInfo fy = ar == 2 ? info(car.factors[1]) : FactorInfo{};

  // Per axis: the relation between target coordinate and source coordinate.
  // Returns: 0 impossible, 1 free (any source coordinate works),
  // 2 parametric (overlap against the inverse shape).
  auto axis_case = [](bool target_inf, bool cell_inf, const FactorInfo& f) {
    if (!target_inf && !cell_inf) return 2;
    if (!target_inf && cell_inf) return f.inf_min_whole ? 1 : 0;
    if (target_inf && !cell_inf) return f.fin_inc_inf ? 1 : 0;
    return 1;  // both inf: the intersection of neighborhoods contains inf
  };

  Target t;
  t.cell.x_inf = px_inf;
  t.cell.y_inf = py_inf;

  int cx = axis_case(px_inf, c.x_inf, fx);
  if (cx == 0) return;
  if (ar == 1) {
    if (cx == 2) {
      Cell cc = c;
      overlap_ff(t, cc, inverse_shape(fx), {}, 1);
    }
    emit(out, t, 1);
    return;
  }
  int cy = axis_case(py_inf, c.y_inf, fy);
  if (cy == 0) return;

  if (!c.x_inf && !c.y_inf) {
    ShapeDesc sx = cx == 2 ? inverse_shape(fx) : ShapeDesc{PS::all, false};
    ShapeDesc sy = cy == 2 ? inverse_shape(fy) : ShapeDesc{PS::all, false};
    overlap_ff(t, c, sx, sy, 2);
  } else if (!c.x_inf) {
    if (cx == 2) {
      switch (inverse_shape(fx).ps) {
        case PS::pt: t.u_ge(c.xlo); t.u_le(c.xhi); break;
        case PS::down: t.u_ge(c.xlo); break;
        case PS::up: t.u_le(c.xhi); break;
        case PS::all: break;
      }
    }
  } else if (!c.y_inf) {
    if (cy == 2) {
      switch (inverse_shape(fy).ps) {
        case PS::pt: t.v_ge(c.ylo); t.v_le(c.yhi); break;
        case PS::down: t.v_ge(c.ylo); break;
        case PS::up: t.v_le(c.yhi); break;
        case PS::all: break;
      }
    }
  }
  emit(out, t, 2);
}

}  // namespace

SymbolicSet closure(const SymbolicSet& s) {
  const Carrier& car = s.carrier();
  int ar = car.arity();
  std::vector<Cell> out = s.cells();
  bool x_has_inf = has_infinity(car.factors[0]);
  bool y_has_inf = ar == 2 && has_infinity(car.factors[1]);
  for (const Cell& c : s.cells())
    for (int xi = 0; xi <= (x_has_inf ? 1 : 0); ++xi)
      for (int yi = 0; yi <= (y_has_inf ? 1 : 0); ++yi)
        attract(out, c, car, xi == 1, yi == 1);
  return SymbolicSet::from_cells(car, std::move(out));
}

bool is_closed(const SymbolicSet& s) { return closure(s).difference(s).is_empty(); }

bool is_open(const SymbolicSet& s) { return is_closed(s.complement()); }

SymbolicSet projection(const SymbolicSet& s, int axis) {
  if (s.carrier().arity() != 2)
    throw Error(Errc::unsupported_carrier, "projection needs a product carrier");
  if (axis != 0 && axis != 1) throw Error(Errc::point_out_of_range, "axis");
  Carrier out_car = single_carrier(s.carrier().factors[axis]);
  std::vector<Cell> out;
  for (const Cell& c : s.cells()) {
    Cell p;
    if (axis == 0) {
      p.x_inf = c.x_inf;
      p.xlo = c.xlo;
      p.xhi = c.xhi;
      if (!c.x_inf && !c.y_inf) {
        p.xlo = std::max(p.xlo, esub(c.ylo, c.dhi));
        p.xhi = std::min(p.xhi, esub(c.yhi, c.dlo));
      }
    } else {
      p.x_inf = c.y_inf;
      p.xlo = c.ylo;
      p.xhi = c.yhi;
      if (!c.x_inf && !c.y_inf) {
        p.xlo = std::max(p.xlo, eadd(c.xlo, c.dlo));
        p.xhi = std::min(p.xhi, eadd(c.xhi, c.dhi));
      }
    }
    out.push_back(p);
  }
  return SymbolicSet::from_cells(std::move(out_car), std::move(out));
}

EnvelopeResult open_envelope(const SymbolicSet& s) {
  const Carrier& car = s.carrier();
  int ar = car.arity();
  std::vector<Cell> out = s.cells();
  bool x_has_inf = has_infinity(car.factors[0]);
  bool y_has_inf = ar == 2 && has_infinity(car.factors[1]);
  for (const Cell& c : s.cells())
    for (int xi = 0; xi <= (x_has_inf ? 1 : 0); ++xi)
      for (int yi = 0; yi <= (y_has_inf ? 1 : 0); ++yi)
        envelop(out, c, car, xi == 1, yi == 1);
  SymbolicSet env = SymbolicSet::from_cells(car, std::move(out));
  return {env, is_open(env)};
}

SymbolicSet staircase(const Carrier& c) {
  if (c.arity() != 2) throw Error(Errc::unsupported_carrier, "staircase needs a product");
  SpaceTag f = c.factors[0], g = c.factors[1];
  bool first_ok = f == SpaceTag::lower_omega || f == SpaceTag::upper_omega ||
                  f == SpaceTag::discrete_omega;
  bool second_ok = g == SpaceTag::lower_omega_bar || g == SpaceTag::upper_omega_bar ||
                   g == SpaceTag::omega_bar;
  if (!first_ok || !second_ok)
    throw Error(Errc::unsupported_carrier, "staircase carrier must be {lower, upper, "
                                           "discrete} x {lower_bar, upper_bar, bar}");
  return SymbolicSet::from_constraints(
      c, {{{Constraint::y_le_x_plus, 0}, {Constraint::y_not_inf}, {Constraint::x_not_inf}}});
}

SymbolicSet lid(const Carrier& c) {
  if (c.arity() != 2 || !has_infinity(c.factors[1]))
    throw Error(Errc::unsupported_carrier, "lid needs a product with a bar second factor");
  return SymbolicSet::from_constraints(c, {{{Constraint::y_is_inf, 0}}});
}

SeparationVerdict separation_verdict(const SymbolicSet& f, const SymbolicSet& h) {
  if (!(f.carrier() == h.carrier())) throw Error(Errc::carrier_mismatch, "separation_verdict");
  if (!f.intersect(h).is_empty()) throw Error(Errc::not_disjoint, "sets meet");
  if (!is_closed(f) || !is_closed(h)) throw Error(Errc::not_closed, "both sets must be closed");

  auto ef = open_envelope(f);
  auto eh = open_envelope(h);

  auto decide = [&](const EnvelopeResult& e, const SymbolicSet& other) {
    SeparationVerdict v;
    SymbolicSet cl = closure(e.envelope);
    SymbolicSet hit = cl.intersect(other);
    if (hit.is_empty()) {
      v.separable = true;
      v.open_f = e.envelope;
      v.open_h = cl.complement();
    } else {
      v.separable = false;
      v.obstruction = hit.pick_point();
    }
    return v;
  };

  if (ef.open) return decide(ef, h);
  if (eh.open) {
    SeparationVerdict v = decide(eh, f);
    std::swap(v.open_f, v.open_h);
    return v;
  }
  SymbolicSet common = ef.envelope.intersect(eh.envelope);
  if (!common.is_empty()) {
    SeparationVerdict v;
    v.separable = false;
    v.obstruction = common.pick_point();
    return v;
  }
  throw Error(Errc::unsupported_carrier,
              "separation undecided: neither envelope is open and the envelopes are disjoint");
}

FinSpace trace_space(SpaceTag t, int w) {
  if (w < 1) throw Error(Errc::window_too_small, "window must be positive");
  switch (t) {
    case SpaceTag::discrete_omega: return discrete(w + 1);
    case SpaceTag::lower_omega: return chain_lower(w + 1);
    case SpaceTag::upper_omega: return chain_upper(w + 1);
    case SpaceTag::lower_omega_bar: return chain_lower(w + 2);
    case SpaceTag::upper_omega_bar: return chain_upper(w + 2);
    case SpaceTag::omega_bar: return discrete(w + 2);
  }
  throw Error(Errc::unsupported_carrier, "trace_space");
}

WindowResult window_oracle(const SymbolicSet& s, int w) {
  int64_t b = s.max_constant();
  if (w <= b + 2)
    throw Error(Errc::window_too_small,
                "window " + std::to_string(w) + " <= max constant + 2 = " + std::to_string(b + 2));
  WindowModel m(s.carrier(), w);
  WindowResult r;
  r.w = w;
  r.points = m.rasterize(s);
  auto nonempty = [&](std::vector<Constraint> conj) {
    return !s.intersect(SymbolicSet::from_constraints(s.carrier(), {std::move(conj)})).is_empty();
  };
  r.tail_x = nonempty({{Constraint::x_ge, uint32_t(w + 1)}, {Constraint::x_not_inf, 0}});
  if (has_infinity(s.carrier().factors[0])) r.inf_x = nonempty({{Constraint::x_is_inf, 0}});
  if (s.carrier().arity() == 2) {
    r.tail_y = nonempty({{Constraint::y_ge, uint32_t(w + 1)}, {Constraint::y_not_inf, 0}});
    if (has_infinity(s.carrier().factors[1])) r.inf_y = nonempty({{Constraint::y_is_inf, 0}});
  }
  return r;
}

// ---------------------------------------------------------------------------
// WindowModel

WindowModel::WindowModel(Carrier carrier, int extent)
    : carrier_(std::move(carrier)), extent_(extent) {
  if (extent < 2) throw Error(Errc::window_too_small, "model extent");
}

bool WindowModel::axis_has_inf(int axis) const { return has_infinity(carrier_.factors[axis]); }
int WindowModel::axis_inf_index(int axis) const { return axis_has_inf(axis) ? extent_ + 1 : -1; }
int WindowModel::axis_points(int axis) const { return extent_ + 1 + (axis_has_inf(axis) ? 1 : 0); }

int WindowModel::grid_size() const {
  int g = axis_points(0);
  if (carrier_.arity() == 2) g *= axis_points(1);
  return g;
}

bool WindowModel::in_grid(const Point& p) const {
  auto ok = [&](const ExtNat& c, int axis) {
    if (c.inf) return axis_has_inf(axis);
    return int(c.v) <= extent_;
  };
  if (!ok(p.x, 0)) return false;
  if (carrier_.arity() == 2 && !ok(p.y, 1)) return false;
  return true;
}

int WindowModel::index(const Point& p) const {
  int xi = p.x.inf ? axis_inf_index(0) : int(p.x.v);
  if (carrier_.arity() == 1) return xi;
  int yi = p.y.inf ? axis_inf_index(1) : int(p.y.v);
  return xi * axis_points(1) + yi;
}

Point WindowModel::point_at(int index) const {
  Point p;
  int xi = index, yi = 0;
  if (carrier_.arity() == 2) {
    xi = index / axis_points(1);
    yi = index % axis_points(1);
  }
  p.x = xi == axis_inf_index(0) ? ExtNat::infinity() : ExtNat::of(uint32_t(xi));
  if (carrier_.arity() == 2)
    p.y = yi == axis_inf_index(1) ? ExtNat::infinity() : ExtNat::of(uint32_t(yi));
  return p;
}

Bits WindowModel::rasterize(const SymbolicSet& s) const {
  Bits out(grid_size());
  for (int g = 0; g < grid_size(); ++g)
    if (s.member(point_at(g))) out.set(g);
  return out;
}

Bits WindowModel::restrict_to(const Bits& t, int small_w) const {
  Bits out(grid_size());
  for (int g = t.first(); g >= 0; g = t.next(g)) {
    Point p = point_at(g);
    if (!p.x.inf && int(p.x.v) > small_w) continue;
    if (carrier_.arity() == 2 && !p.y.inf && int(p.y.v) > small_w) continue;
    out.set(g);
  }
  return out;
}

namespace {
// 2D prefix counts over the grid; arity 1 uses ny = 1.
struct Prefix {
  int nx, ny;
  std::vector<int> c;
  Prefix(const Bits& t, int nx, int ny) : nx(nx), ny(ny), c((nx + 1) * (ny + 1), 0) {
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        int v = t.test(i * ny + j) ? 1 : 0;
        c[(i + 1) * (ny + 1) + (j + 1)] =
            v + c[i * (ny + 1) + (j + 1)] + c[(i + 1) * (ny + 1) + j] - c[i * (ny + 1) + j];
      }
  }
  int count(int xlo, int xhi, int ylo, int yhi) const {  // inclusive, clamped
    xlo = std::max(xlo, 0);
    ylo = std::max(ylo, 0);
    xhi = std::min(xhi, nx - 1);
    yhi = std::min(yhi, ny - 1);
    if (xlo > xhi || ylo > yhi) return 0;
    return c[(xhi + 1) * (ny + 1) + (yhi + 1)] - c[xlo * (ny + 1) + (yhi + 1)] -
           c[(xhi + 1) * (ny + 1) + ylo] + c[xlo * (ny + 1) + ylo];
  }
};
}  // namespace

std::vector<WindowModel::Rect> WindowModel::basis_of(const Point& p) const {
  auto axis_options = [&](const ExtNat& c, int axis) {
    std::vector<AxisRange> opts;
    SpaceTag t = carrier_.factors[axis];
    if (!c.inf) {
      int u = int(c.v);
      switch (t) {
        case SpaceTag::discrete_omega:
        case SpaceTag::omega_bar: opts.push_back({u, u, false}); break;
        case SpaceTag::lower_omega:
        case SpaceTag::lower_omega_bar: opts.push_back({0, u, false}); break;
        case SpaceTag::upper_omega: opts.push_back({u, extent_, false}); break;
        case SpaceTag::upper_omega_bar: opts.push_back({u, extent_, true}); break;
      }
    } else {
      if (t == SpaceTag::lower_omega_bar) {
        opts.push_back({0, extent_, true});
      } else {
        // The cofinal filter at inf, truncated at half extent: beyond that a
        // witness of a translation-stable set may need the other coordinate
        // past the grid (diagonal tails), which would fake isolation.
        for (int n = 0; n <= extent_ / 2; ++n) opts.push_back({n + 1, extent_, true});
      }
    }
    return opts;
  };
  std::vector<Rect> rects;
  auto xs = axis_options(p.x, 0);
  if (carrier_.arity() == 1) {
    for (const auto& x : xs) rects.push_back({x, {0, 0, false}});
    return rects;
  }
  auto ys = axis_options(p.y, 1);
  for (const auto& x : xs)
    for (const auto& y : ys) rects.push_back({x, y});
  return rects;
}

WindowModel::Rect WindowModel::min_rect(const Point& p) const {
  auto axis_min = [&](const ExtNat& c, int axis) -> AxisRange {
    SpaceTag t = carrier_.factors[axis];
    if (!c.inf) {
      int u = int(c.v);
      switch (t) {
        case SpaceTag::discrete_omega:
        case SpaceTag::omega_bar: return {u, u, false};
        case SpaceTag::lower_omega:
        case SpaceTag::lower_omega_bar: return {0, u, false};
        case SpaceTag::upper_omega: return {u, extent_, false};
        case SpaceTag::upper_omega_bar: return {u, extent_, true};
      }
    }
    if (t == SpaceTag::lower_omega_bar) return {0, extent_, true};
    // intersection of the truncated cofinal filter: the upper margin band
    return {extent_ / 2 + 1, extent_, true};
  };
  Rect r;
  r.x = axis_min(p.x, 0);
  if (carrier_.arity() == 2) r.y = axis_min(p.y, 1);
  else r.y = {0, 0, false};
  return r;
}

Bits WindowModel::closure(const Bits& t) const {
  int ny = carrier_.arity() == 2 ? axis_points(1) : 1;
  Prefix pre(t, axis_points(0), ny);
  auto meets = [&](const Rect& r) {
    int xlo = r.x.lo, xhi = r.x.hi;
    if (r.x.inf && axis_inf_index(0) >= 0) xhi = axis_inf_index(0);
    int ylo = carrier_.arity() == 2 ? r.y.lo : 0;
    int yhi = carrier_.arity() == 2 ? r.y.hi : 0;
    if (carrier_.arity() == 2 && r.y.inf && axis_inf_index(1) >= 0) yhi = axis_inf_index(1);
    return pre.count(xlo, xhi, ylo, yhi) > 0;
  };
  Bits out(grid_size());
  for (int g = 0; g < grid_size(); ++g) {
    bool in = true;
    for (const Rect& r : basis_of(point_at(g)))
      if (!meets(r)) {
        in = false;
        break;
      }
    if (in) out.set(g);
  }
  return out;
}

Bits WindowModel::envelope(const Bits& t) const {
  int ny = carrier_.arity() == 2 ? axis_points(1) : 1;
  std::vector<int> diff((axis_points(0) + 1) * (ny + 1), 0);
  auto add_rect = [&](int xlo, int xhi, int ylo, int yhi) {
    diff[xlo * (ny + 1) + ylo] += 1;
    diff[(xhi + 1) * (ny + 1) + ylo] -= 1;
    diff[xlo * (ny + 1) + (yhi + 1)] -= 1;
    diff[(xhi + 1) * (ny + 1) + (yhi + 1)] += 1;
  };
  for (int g = t.first(); g >= 0; g = t.next(g)) {
    Rect r = min_rect(point_at(g));
    int xlo = r.x.lo, xhi = r.x.hi;
    if (r.x.inf && axis_inf_index(0) >= 0) xhi = axis_inf_index(0);
    int ylo = carrier_.arity() == 2 ? r.y.lo : 0;
    int yhi = carrier_.arity() == 2 ? r.y.hi : 0;
    if (carrier_.arity() == 2 && r.y.inf && axis_inf_index(1) >= 0) yhi = axis_inf_index(1);
    add_rect(xlo, xhi, ylo, yhi);
  }
  Bits out(grid_size());
  for (int i = 0; i <= axis_points(0); ++i)
    for (int j = 1; j <= ny; ++j) diff[i * (ny + 1) + j] += diff[i * (ny + 1) + (j - 1)];
  for (int i = 1; i <= axis_points(0); ++i)
    for (int j = 0; j <= ny; ++j) diff[i * (ny + 1) + j] += diff[(i - 1) * (ny + 1) + j];
  for (int i = 0; i < axis_points(0); ++i)
    for (int j = 0; j < ny; ++j)
      if (diff[i * (ny + 1) + j] > 0) out.set(carrier_.arity() == 2 ? i * ny + j : i);
  return out;
}

bool WindowModel::is_open(const Bits& t, int within_w) const {
  int ny = carrier_.arity() == 2 ? axis_points(1) : 1;
  Prefix pre(t, axis_points(0), ny);
  auto full = [&](const Rect& r) {
    int xlo = r.x.lo, xhi = r.x.hi;
    if (r.x.inf && axis_inf_index(0) >= 0) xhi = axis_inf_index(0);
    int ylo = carrier_.arity() == 2 ? r.y.lo : 0;
    int yhi = carrier_.arity() == 2 ? r.y.hi : 0;
    if (carrier_.arity() == 2 && r.y.inf && axis_inf_index(1) >= 0) yhi = axis_inf_index(1);
    int area = (xhi - xlo + 1) * (yhi - ylo + 1);
    return pre.count(xlo, xhi, ylo, yhi) == area;
  };
  Bits probe = restrict_to(t, within_w);
  for (int g = probe.first(); g >= 0; g = probe.next(g)) {
    bool has_inside = false;
    for (const Rect& r : basis_of(point_at(g)))
      if (full(r)) {
        has_inside = true;
        break;
      }
    if (!has_inside) return false;
  }
  return true;
}

bool WindowModel::is_closed(const Bits& t, int within_w) const {
  return is_open(Bits::full(grid_size()) - t, within_w);
}

Bits WindowModel::project(const Bits& t, int axis) const {
  Bits out(axis_points(axis));
  for (int g = t.first(); g >= 0; g = t.next(g)) {
    if (carrier_.arity() == 1) {
      out.set(g);
      continue;
    }
    int xi = g / axis_points(1), yi = g % axis_points(1);
    out.set(axis == 0 ? xi : yi);
  }
  return out;
}

bool WindowModel::separable(const Bits& f, const Bits& h) const {
  return !envelope(f).intersects(envelope(h));
}

// ---------------------------------------------------------------------------
// Engine-vs-model checks

namespace {
int model_extent(int w) { return 4 * w; }

// Witnesses of a disagreement between an engine result and the true space
// live on boundaries whose constants combine interval endpoints with up to
// two difference offsets (complements and closure differences shift each by
// one). The probe window is widened to that reach so a boolean comparison at
// any requested w cannot miss them; comparing on a larger window only
// strengthens the check.
int probe_window(const SymbolicSet& s, int w) {
  int64_t intervals = 0, diffs = 0;
  auto upd = [](int64_t& acc, int64_t v) {
    if (v > kNegInf && v < kPosInf) acc = std::max(acc, v < 0 ? -v : v);
  };
  for (const Cell& c : s.cells()) {
    upd(intervals, c.xlo);
    upd(intervals, c.xhi);
    upd(intervals, c.ylo);
    upd(intervals, c.yhi);
    upd(diffs, c.dlo);
    upd(diffs, c.dhi);
  }
  return std::max<int64_t>(w, intervals + 2 * diffs + 8);
}
}  // namespace

OracleCheck check_closure_against_model(const SymbolicSet& s, int w) {
  int p = probe_window(s, w);
  WindowModel m(s.carrier(), model_extent(p));
  Bits engine = m.restrict_to(m.rasterize(closure(s)), p);
  Bits model = m.restrict_to(m.closure(m.rasterize(s)), p);
  return {w, engine == model, engine == model ? "" : "closure mismatch in window"};
}

OracleCheck check_envelope_against_model(const SymbolicSet& s, int w) {
  int p = probe_window(s, w);
  WindowModel m(s.carrier(), model_extent(p));
  Bits engine = m.restrict_to(m.rasterize(open_envelope(s).envelope), p);
  Bits model = m.restrict_to(m.envelope(m.rasterize(s)), p);
  return {w, engine == model, engine == model ? "" : "envelope mismatch in window"};
}

OracleCheck check_is_closed_against_model(const SymbolicSet& s, int w) {
  int p = probe_window(s, w);
  WindowModel m(s.carrier(), model_extent(p));
  Bits t = m.rasterize(s);
  bool model = m.restrict_to(m.closure(t), p) == m.restrict_to(t, p);
  bool engine = is_closed(s);
  return {w, engine == model, engine == model ? "" : "is_closed mismatch"};
}

OracleCheck check_is_open_against_model(const SymbolicSet& s, int w) {
  int p = probe_window(s, w);
  WindowModel m(s.carrier(), model_extent(p));
  bool model = m.is_open(m.rasterize(s), p);
  bool engine = is_open(s);
  return {w, engine == model, engine == model ? "" : "is_open mismatch"};
}

OracleCheck check_projection_against_model(const SymbolicSet& s, int axis, int w) {
  int p = probe_window(s, w);
  WindowModel m(s.carrier(), model_extent(p));
  WindowModel ma(single_carrier(s.carrier().factors[axis]), model_extent(p));
  Bits engine = ma.restrict_to(ma.rasterize(projection(s, axis)), p);
  Bits model = ma.restrict_to(m.project(m.rasterize(s), axis), p);
  return {w, engine == model, engine == model ? "" : "projection mismatch in window"};
}

OracleCheck check_separation_against_model(const SymbolicSet& f, const SymbolicSet& h,
                                            bool engine_separable, int w) {
  int p = std::max(probe_window(f, w), probe_window(h, w));
  WindowModel m(f.carrier(), model_extent(p));
  bool model = m.separable(m.rasterize(f), m.rasterize(h));
  return {w, engine_separable == model, engine_separable == model ? "" : "separability mismatch"};
}

}  // namespace finitop::symbolic
