#include "finitop/claims.hpp"

#include "finitop/error.hpp"
#include "finitop/symbolic.hpp"

namespace finitop {

namespace sym = symbolic;
using sym::Constraint;
using sym::SpaceTag;
using sym::SymbolicSet;

namespace {

bool all_windows(const std::vector<int>& windows, auto&& check) {
  for (int w : windows)
    if (!check(w).ok) return false;
  return true;
}

// The X x upper-bar staircases. Closed exactly when every point of the first
// factor has a bounded neighborhood: true for lower_omega and discrete_omega
// (the genuine increasing-open-cover instances), false for upper_omega, which
// is trivially compact and admits no such cover; there the whole inf-row lies
// in the closure.
ClaimReport claim_staircase_closedness(const std::vector<int>& windows) {
  ClaimReport rep{"staircase_closedness", {}, false};
  struct Case {
    SpaceTag first;
    bool expected_closed;
  } cases[] = {
      {SpaceTag::lower_omega, true},
      {SpaceTag::discrete_omega, true},
      {SpaceTag::upper_omega, false},
  };
  for (const auto& c : cases) {
    auto carrier = sym::product_carrier(c.first, SpaceTag::upper_omega_bar);
    SymbolicSet f = sym::staircase(carrier);
    ClaimLine line;
    line.what = std::string("staircase closed in ") + sym::tag_name(c.first) + " x upper_omega_bar";
    line.expected = c.expected_closed;
    line.computed = sym::is_closed(f);
    line.oracle_ok =
        all_windows(windows, [&](int w) { return sym::check_is_closed_against_model(f, w); }) &&
        all_windows(windows, [&](int w) { return sym::check_closure_against_model(f, w); });
    rep.lines.push_back(line);
  }
  return rep;
}

// A retraction (the projection of lower_omega x upper_omega_bar onto its
// second factor) that is not a closed map, although domain, range and all
// fibers are vacuously normal: the staircase is closed but its projection
// [0,w) is not.
ClaimReport claim_retract_not_closed(const std::vector<int>& windows) {
  ClaimReport rep{"retract_not_closed", {}, false};
  auto carrier = sym::product_carrier(SpaceTag::lower_omega, SpaceTag::upper_omega_bar);
  SymbolicSet f = sym::staircase(carrier);

  ClaimLine closed;
  closed.what = "staircase closed in lower_omega x upper_omega_bar";
  closed.expected = true;
  closed.computed = sym::is_closed(f);
  closed.oracle_ok =
      all_windows(windows, [&](int w) { return sym::check_is_closed_against_model(f, w); });
  rep.lines.push_back(closed);

  SymbolicSet proj = sym::projection(f, 1);
  SymbolicSet finite_part = SymbolicSet::from_constraints(
      sym::single_carrier(SpaceTag::upper_omega_bar), {{{Constraint::x_not_inf, 0}}});

  ClaimLine image;
  image.what = "projection to the second axis equals the finite part [0,w)";
  image.expected = true;
  image.computed = proj.equals(finite_part);
  image.oracle_ok =
      all_windows(windows, [&](int w) { return sym::check_projection_against_model(f, 1, w); });
  rep.lines.push_back(image);

  ClaimLine not_closed;
  not_closed.what = "projection is not closed in upper_omega_bar";
  not_closed.expected = true;
  not_closed.computed = !sym::is_closed(proj);
  not_closed.oracle_ok =
      all_windows(windows, [&](int w) { return sym::check_is_closed_against_model(proj, w); });
  rep.lines.push_back(not_closed);
  return rep;
}

// In lower_omega x omega_bar the staircase and the lid are disjoint closed
// sets that cannot be separated: the smallest open set containing the
// staircase is the whole finite quadrant.
ClaimReport claim_staircase_lid_inseparable(const std::vector<int>& windows) {
  ClaimReport rep{"staircase_lid_inseparable", {}, false};
  auto carrier = sym::product_carrier(SpaceTag::lower_omega, SpaceTag::omega_bar);
  SymbolicSet f = sym::staircase(carrier);
  SymbolicSet h = sym::lid(carrier);

  ClaimLine closed;
  closed.what = "staircase and lid are closed and disjoint";
  closed.expected = true;
  closed.computed = sym::is_closed(f) && sym::is_closed(h) && f.intersect(h).is_empty();
  closed.oracle_ok =
      all_windows(windows, [&](int w) { return sym::check_is_closed_against_model(f, w); }) &&
      all_windows(windows, [&](int w) { return sym::check_is_closed_against_model(h, w); });
  rep.lines.push_back(closed);

  auto env = sym::open_envelope(f);
  SymbolicSet quadrant = SymbolicSet::from_constraints(
      carrier, {{{Constraint::x_not_inf, 0}, {Constraint::y_not_inf, 0}}});

  ClaimLine envelope;
  envelope.what = "smallest open superset of the staircase is the finite quadrant";
  envelope.expected = true;
  envelope.computed = env.open && env.envelope.equals(quadrant);
  envelope.oracle_ok =
      all_windows(windows, [&](int w) { return sym::check_envelope_against_model(f, w); }) &&
      all_windows(windows, [&](int w) { return sym::check_is_open_against_model(env.envelope, w); });
  rep.lines.push_back(envelope);

  auto verdict = sym::separation_verdict(f, h);
  ClaimLine sep;
  sep.what = "staircase and lid are not separable";
  sep.expected = true;
  sep.computed = !verdict.separable;
  sep.oracle_ok = all_windows(windows, [&](int w) {
    return sym::check_separation_against_model(f, h, verdict.separable, w);
  });
  rep.lines.push_back(sep);
  return rep;
}

// lower_omega is vacuously normal (closures are final segments, so any two
// nonempty closed sets meet) but not countably compact: the decreasing chain
// of nonempty closed sets {x >= n} has empty intersection.
ClaimReport claim_lower_omega_witnesses(const std::vector<int>& windows) {
  ClaimReport rep{"lower_omega_witnesses", {}, false};
  auto carrier = sym::single_carrier(SpaceTag::lower_omega);
  auto tail = [&](uint32_t n) {
    return SymbolicSet::from_constraints(carrier, {{{Constraint::x_ge, n}}});
  };
  auto point = [&](uint32_t n) {
    return SymbolicSet::from_constraints(carrier, {{{Constraint::x_ge, n}, {Constraint::x_le, n}}});
  };

  constexpr int kProbe = 5;
  ClaimLine vac;
  vac.what = "vacuously normal: point closures are final segments and all meet";
  vac.expected = true;
  vac.computed = true;
  for (uint32_t a = 0; a <= kProbe && vac.computed; ++a) {
    if (!sym::closure(point(a)).equals(tail(a))) vac.computed = false;
    for (uint32_t b = 0; b <= kProbe && vac.computed; ++b)
      if (sym::closure(point(a)).intersect(sym::closure(point(b))).is_empty())
        vac.computed = false;
  }
  vac.oracle_ok = all_windows(windows, [&](int w) {
    for (uint32_t a = 0; a <= kProbe; ++a) {
      auto c = sym::check_closure_against_model(point(a), w);
      if (!c.ok) return c;
    }
    return sym::OracleCheck{w, true, ""};
  });
  rep.lines.push_back(vac);

  ClaimLine chain;
  chain.what = "decreasing closed chain {x >= n} is nonempty at every stage with empty intersection";
  chain.expected = true;
  chain.computed = true;
  SymbolicSet inter = tail(0);
  for (uint32_t n = 0; n <= kProbe && chain.computed; ++n) {
    SymbolicSet t = tail(n);
    if (!sym::is_closed(t) || t.is_empty()) chain.computed = false;
    if (n > 0 && !t.difference(tail(n - 1)).is_empty()) chain.computed = false;  // decreasing
    inter = inter.intersect(t);
  }
  if (inter.is_empty()) chain.computed = false;  // every finite stage stays nonempty
  // No point survives the whole chain: p fails {x >= p+1}; the carrier has
  // no infinite point to survive instead.
  for (uint32_t p = 0; p <= kProbe && chain.computed; ++p)
    if (tail(p + 1).member({sym::ExtNat::of(p), {}})) chain.computed = false;
  chain.oracle_ok = all_windows(windows, [&](int w) {
    for (uint32_t n = 0; n <= kProbe; ++n) {
      auto c = sym::check_is_closed_against_model(tail(n), w);
      if (!c.ok) return c;
    }
    return sym::OracleCheck{w, true, ""};
  });
  rep.lines.push_back(chain);
  return rep;
}

}  // namespace

std::vector<std::string> claim_names() {
  return {"staircase_closedness", "retract_not_closed", "staircase_lid_inseparable",
          "lower_omega_witnesses"};
}

ClaimReport run_claim(const std::string& name, const std::vector<int>& windows) {
  ClaimReport rep;
  if (name == "staircase_closedness")
    rep = claim_staircase_closedness(windows);
  else if (name == "retract_not_closed")
    rep = claim_retract_not_closed(windows);
  else if (name == "staircase_lid_inseparable")
    rep = claim_staircase_lid_inseparable(windows);
  else if (name == "lower_omega_witnesses")
    rep = claim_lower_omega_witnesses(windows);
  else
    throw Error(Errc::unknown_suite, "unknown claim " + name);
  rep.pass = true;
  for (const auto& l : rep.lines)
    if (!l.ok()) rep.pass = false;
  return rep;
}

}  // namespace finitop
