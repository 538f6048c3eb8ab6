#include "finitop/fin_space.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "finitop/error.hpp"

namespace finitop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::point_out_of_range: return "PointOutOfRange";
    case Errc::transitivity_violation: return "TransitivityViolation";
    case Errc::not_continuous: return "NotContinuous";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::not_a_retraction: return "NotARetraction";
    case Errc::not_t0: return "NotT0";
    case Errc::not_normal: return "NotNormal";
    case Errc::size_overflow: return "SizeOverflow";
    case Errc::empty_subspace: return "EmptySubspace";
    case Errc::index_mismatch: return "IndexMismatch";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::unbound_variable: return "UnboundVariable";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::unsupported_carrier: return "UnsupportedCarrier";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::not_closed: return "NotClosed";
    case Errc::window_too_small: return "WindowTooSmall";
  }
  return "Error";
}

FinSpace::FinSpace(int n) : n_(n), up_(n, Bits(n)), down_(n, Bits(n)) {
  for (int x = 0; x < n; ++x) {
    up_[x].set(x);
    down_[x].set(x);
  }
}

FinSpace FinSpace::identity(int n) { return FinSpace(n); }

void FinSpace::rebuild_down() {
  down_.assign(n_, Bits(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = up_[x].first(); y >= 0; y = up_[x].next(y)) down_[y].set(x);
}

FinSpace FinSpace::from_rows(std::vector<Bits> up_rows) {
  FinSpace s;
  s.n_ = int(up_rows.size());
  s.up_ = std::move(up_rows);
  for (int x = 0; x < s.n_; ++x) {
    if (!s.up_[x].test(x))
      throw Error(Errc::transitivity_violation, "relation is not reflexive");
    for (int y = s.up_[x].first(); y >= 0; y = s.up_[x].next(y))
      if (!s.up_[x].contains(s.up_[y]))
        throw Error(Errc::transitivity_violation, "relation is not transitive");
  }
  s.rebuild_down();
  return s;
}

FinSpace FinSpace::from_le_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Bits> rows(n, Bits(n));
  for (int x = 0; x < n; ++x) rows[x].set(x);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(Errc::point_out_of_range,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) + ") with n=" +
                      std::to_string(n));
    rows[x].set(y);
  }
  return from_rows(std::move(rows));
}

FinSpace FinSpace::from_open_sets(int n, const std::vector<Bits>& subbase) {
  for (const Bits& m : subbase)
    if (m.universe() != n)
      throw Error(Errc::point_out_of_range, "subbase member over wrong universe");
  FinSpace s(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool le = true;
      for (const Bits& m : subbase)
        if (m.test(y) && !m.test(x)) {
          le = false;
          break;
        }
      if (le) s.up_[x].set(y);
    }
  s.rebuild_down();
  return s;
}

Bits FinSpace::closure(const Bits& s) const {
  Bits r(n_);
  for (int x = s.first(); x >= 0; x = s.next(x)) r |= up_[x];
  return r;
}

Bits FinSpace::interior(const Bits& s) const { return closure(s.complement()).complement(); }

bool FinSpace::is_open(const Bits& s) const {
  for (int x = s.first(); x >= 0; x = s.next(x))
    if (!s.contains(down_[x])) return false;
  return true;
}

bool FinSpace::is_closed(const Bits& s) const {
  for (int x = s.first(); x >= 0; x = s.next(x))
    if (!s.contains(up_[x])) return false;
  return true;
}

std::vector<std::pair<int, int>> FinSpace::indistinguishable_pairs() const {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (le(x, y) && le(y, x)) r.emplace_back(x, y);
  return r;
}

FinSpace FinSpace::induced(const Bits& points, std::vector<int>* point_map) const {
  std::vector<int> pts = points.to_vector();
  int m = int(pts.size());
  FinSpace s(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (le(pts[i], pts[j])) s.up_[i].set(j);
  s.rebuild_down();
  if (point_map) *point_map = std::move(pts);
  return s;
}

std::vector<uint64_t> FinSpace::encoding_under(const std::vector<int>& perm) const {
  std::vector<uint64_t> enc(1 + (size_t(n_) * n_ + 63) / 64, 0);
  enc[0] = uint64_t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (le(perm[i], perm[j])) {
        size_t k = size_t(i) * n_ + j;
        enc[1 + (k >> 6)] |= uint64_t{1} << (63 - (k & 63));
      }
  return enc;
}

namespace {

// Iterated signature refinement: colors stabilize to an isomorphism-invariant
// partition; points enumerated class by class in signature order.
std::vector<int> refine_colors(const FinSpace& s) {
  int n = s.size();
  std::vector<int> color(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> v;
      v.push_back(color[x]);
      std::vector<int> a, b;
      for (int y = s.up(x).first(); y >= 0; y = s.up(x).next(y))
        if (y != x) a.push_back(color[y]);
      for (int y = s.down(x).first(); y >= 0; y = s.down(x).next(y))
        if (y != x) b.push_back(color[y]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      v.push_back(int(a.size()));
      v.insert(v.end(), a.begin(), a.end());
      v.push_back(-1);
      v.insert(v.end(), b.begin(), b.end());
      sig[x] = {std::move(v), x};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
      next[sorted[i].second] = rank;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

FinSpace FinSpace::canonical_form() const {
  if (n_ <= 1) return *this;
  std::vector<int> color = refine_colors(*this);
  int nclasses = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> classes(nclasses);
  for (int x = 0; x < n_; ++x) classes[color[x]].push_back(x);

  std::vector<int> perm(n_);
  std::optional<std::vector<uint64_t>> best;
  std::vector<int> best_perm;

  // Smallest adjacency encoding over all class-respecting labelings wins.
  auto rec = [&](auto&& self, int ci, int offset) -> void {
    if (ci == nclasses) {
      auto enc = encoding_under(perm);
      if (!best || enc < *best) {
        best = std::move(enc);
        best_perm = perm;
      }
      return;
    }
    std::vector<int> cls = classes[ci];
    do {
      std::copy(cls.begin(), cls.end(), perm.begin() + offset);
      self(self, ci + 1, offset + int(cls.size()));
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(rec, 0, 0);

  FinSpace c(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (le(best_perm[i], best_perm[j])) c.up_[i].set(j);
  c.rebuild_down();
  return c;
}

std::vector<uint64_t> FinSpace::canonical_encoding() const {
  FinSpace c = canonical_form();
  std::vector<int> id(c.n_);
  std::iota(id.begin(), id.end(), 0);
  return c.encoding_under(id);
}

bool FinSpace::homeomorphic_to(const FinSpace& other) const {
  if (n_ != other.n_) return false;
  return canonical_form() == other.canonical_form();
}

std::vector<std::pair<int, int>> FinSpace::nonreflexive_pairs() const {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n_; ++x)
    for (int y = up_[x].first(); y >= 0; y = up_[x].next(y))
      if (x != y) r.emplace_back(x, y);
  return r;
}

}  // namespace finitop
