#include "finitop/search.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "finitop/construct.hpp"
#include "finitop/covers.hpp"
#include "finitop/dsl.hpp"
#include "finitop/error.hpp"
#include "finitop/maps.hpp"
#include "finitop/props.hpp"

namespace finitop {

namespace {
uint64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}
}  // namespace

EnumerationStream::EnumerationStream(int n, bool t0_only, bool up_to_iso, int max_n)
    : n_(n), t0_(t0_only), iso_(up_to_iso) {
  if (n < 1 || n > max_n)
    throw Error(Errc::bound_exceeded,
                "n=" + std::to_string(n) + " outside 1.." + std::to_string(max_n));
  rows_.assign(n_, 0);
  cand_.assign(n_ + 1, 0);
  cand_[0] = 1u << 0;
}

bool EnumerationStream::row_ok(uint32_t m) const {
  int i = depth_;
  for (int j = 0; j < i; ++j) {
    bool i_le_j = (m >> j) & 1;
    bool j_le_i = (rows_[j] >> i) & 1;
    if (t0_ && i_le_j && j_le_i) return false;
    if (i_le_j && (rows_[j] & ~m)) return false;  // rows of larger points nest inside
    if (j_le_i && (m & ~rows_[j])) return false;
  }
  return true;
}

FinSpace EnumerationStream::build() const {
  std::vector<Bits> rows(n_, Bits(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((rows_[i] >> j) & 1) rows[i].set(j);
  return FinSpace::from_rows(std::move(rows));
}

std::optional<FinSpace> EnumerationStream::next() {
  const uint32_t limit = n_ >= 32 ? 0 : (1u << n_);
  while (!done_) {
    if (depth_ == n_) {
      FinSpace s = build();
      --depth_;
      if (iso_) {
        s = s.canonical_form();
        auto enc = s.canonical_encoding();
        if (!seen_.insert(std::move(enc)).second) continue;
      }
      return s;
    }
    uint32_t m = std::max(cand_[depth_], 1u << depth_);
    bool advanced = false;
    for (; m < limit; ++m) {
      if (!((m >> depth_) & 1)) continue;
      if (!row_ok(m)) continue;
      rows_[depth_] = m;
      cand_[depth_] = m + 1;
      ++depth_;
      cand_[depth_] = depth_ < n_ ? (1u << depth_) : 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (depth_ == 0)
        done_ = true;
      else
        --depth_;
    }
  }
  return std::nullopt;
}

uint64_t count_spaces(int n, bool t0_only, bool up_to_iso) {
  EnumerationStream es(n, t0_only, up_to_iso);
  uint64_t c = 0;
  while (es.next()) ++c;
  return c;
}

std::vector<FinSpace> all_spaces_labeled(int n, bool t0_only) {
  EnumerationStream es(n, t0_only, false);
  std::vector<FinSpace> v;
  while (auto s = es.next()) v.push_back(std::move(*s));
  return v;
}

std::vector<FinSpace> all_spaces_up_to_iso(int n, bool t0_only) {
  EnumerationStream es(n, t0_only, true);
  std::vector<FinSpace> v;
  while (auto s = es.next()) v.push_back(std::move(*s));
  return v;
}

std::vector<FinSpace> space_catalog(int max_n, bool t0_only) {
  std::vector<FinSpace> all;
  for (int n = 1; n <= max_n; ++n) {
    auto v = all_spaces_up_to_iso(n, t0_only);
    std::sort(v.begin(), v.end(), [](const FinSpace& a, const FinSpace& b) {
      return a.canonical_encoding() < b.canonical_encoding();
    });
    for (auto& s : v) all.push_back(std::move(s));
  }
  return all;
}

SearchOutcome find_counterexample(const std::string& query,
                                  const std::map<std::string, int>& bounds, int workers,
                                  int max_points) {
  uint64_t t0 = now_ms();
  auto ast = parse_query(query);
  std::vector<std::string> vars;
  for (const auto& v : free_vars(*ast)) {
    if (!bounds.count(v)) throw Error(Errc::unbound_variable, "no bound for " + v);
    vars.push_back(v);
  }
  for (const auto& [name, bound] : bounds)
    if (bound < 1 || bound > kMaxEnumPoints)
      throw Error(Errc::bound_exceeded,
                  "bound for " + name + " must be in 1.." + std::to_string(kMaxEnumPoints));
  SearchOutcome out;
  out.query = query;
  if (vars.empty()) {
    out.found = eval_query(*ast, {}, max_points);
    out.visited = 1;
    out.elapsed_ms = now_ms() - t0;
    return out;
  }

  int k = int(vars.size());
  int max_bound = 0;
  for (const auto& v : vars) max_bound = std::max(max_bound, bounds.at(v));
  std::vector<std::vector<FinSpace>> by_size(max_bound + 1);
  for (int n = 1; n <= max_bound; ++n) {
    by_size[n] = all_spaces_up_to_iso(n);
    std::sort(by_size[n].begin(), by_size[n].end(), [](const FinSpace& a, const FinSpace& b) {
      return a.canonical_encoding() < b.canonical_encoding();
    });
  }

  // Size compositions in lexicographic order for each ascending total.
  std::vector<std::vector<int>> comps;
  int total_max = 0;
  for (const auto& v : vars) total_max += bounds.at(v);
  for (int total = k; total <= total_max; ++total) {
    std::vector<int> sizes(k, 1);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
      if (i == k - 1) {
        if (remaining >= 1 && remaining <= bounds.at(vars[i])) {
          sizes[i] = remaining;
          comps.push_back(sizes);
        }
        return;
      }
      for (int s = 1; s <= std::min(bounds.at(vars[i]), remaining - (k - 1 - i)); ++s) {
        sizes[i] = s;
        self(self, i + 1, remaining - s);
      }
    };
    rec(rec, 0, total);
  }

  struct Hit {
    size_t comp;
    uint64_t pos;
    std::map<std::string, FinSpace> witness;
  };

  workers = std::max(1, workers);
  std::vector<std::optional<Hit>> hits(workers);
  std::vector<uint64_t> visits(workers, 0);

  auto work = [&](int w) {
    auto local_ast = parse_query(query);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      const auto& sizes = comps[ci];
      const auto& first_list = by_size[sizes[0]];
      uint64_t inner_span = 1;
      for (int i = 1; i < k; ++i) inner_span *= by_size[sizes[i]].size();
      for (size_t f = w; f < first_list.size(); f += workers) {
        Binding binding;
        binding[vars[0]] = first_list[f];
        std::vector<size_t> idx(k, 0);
        for (uint64_t inner = 0; inner < inner_span; ++inner) {
          uint64_t rest = inner;
          for (int i = k - 1; i >= 1; --i) {
            size_t sz = by_size[sizes[i]].size();
            idx[i] = rest % sz;
            rest /= sz;
          }
          for (int i = 1; i < k; ++i) binding[vars[i]] = by_size[sizes[i]][idx[i]];
          ++visits[w];
          bool sat;
          try {
            sat = eval_query(*local_ast, binding, max_points);
          } catch (const Error& e) {
            if (e.code() == Errc::size_overflow) continue;
            throw;
          }
          if (sat) {
            hits[w] = Hit{ci, f * inner_span + inner, binding};
            return;
          }
        }
      }
      if (hits[w]) return;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::optional<Hit> best;
  for (auto& h : hits)
    if (h && (!best || h->comp < best->comp || (h->comp == best->comp && h->pos < best->pos)))
      best = h;
  for (auto v : visits) out.visited += v;
  if (best) {
    out.found = true;
    out.witness = best->witness;
  }
  out.elapsed_ms = now_ms() - t0;
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using SuiteFn = void (*)(int max_n, SuiteReport& rep);

void note_failure(SuiteReport& rep, const std::string& what) {
  if (rep.failures.size() < 5) rep.failures.push_back(what);
}

std::string enc_str(const FinSpace& s) {
  std::string r = "n=" + std::to_string(s.size()) + " le={";
  for (auto [a, b] : s.nonreflexive_pairs()) r += std::to_string(a) + "<=" + std::to_string(b) + " ";
  r += "}";
  return r;
}

void for_all_maps(const FinSpace& dom, const FinSpace& cod, auto&& fn) {
  if (cod.size() == 0) return;
  std::vector<int> values(dom.size(), 0);
  while (true) {
    fn(PointMap{dom, cod, values});
    int i = 0;
    while (i < dom.size() && ++values[i] == cod.size()) values[i++] = 0;
    if (i == dom.size()) break;
  }
}

void suite_product_vacuously_normal(int max_n, SuiteReport& rep) {
  auto catalog = space_catalog(max_n);
  for (const auto& x : catalog)
    for (const auto& y : catalog) {
      ++rep.checked;
      bool lhs = is_vacuously_normal(product(x, y));
      bool rhs = is_vacuously_normal(x) && is_vacuously_normal(y);
      if (lhs != rhs)
        note_failure(rep, "factors " + enc_str(x) + " ; " + enc_str(y));
    }
}

void suite_product_normal_pairs(int max_n, SuiteReport& rep) {
  auto catalog = space_catalog(max_n);
  for (const auto& x : catalog)
    for (const auto& y : catalog) {
      bool xn = is_normal(x), yn = is_normal(y);
      if (is_vacuously_normal(x) && yn) {
        ++rep.checked;
        FinSpace p = product(x, y);
        std::vector<int> proj(p.size());
        for (int a = 0; a < x.size(); ++a)
          for (int b = 0; b < y.size(); ++b) proj[a * y.size() + b] = b;
        PointMap pi{p, y, proj};
        if (!is_normal(p)) note_failure(rep, "vn x normal product not normal: " + enc_str(x) + " ; " + enc_str(y));
        if (!is_closed_map(pi)) note_failure(rep, "projection not closed: " + enc_str(x) + " ; " + enc_str(y));
      }
      if (xn && yn) {
        ++rep.checked;
        FinSpace p = product(x, y);
        if (!is_normal(p))
          note_failure(rep, "normal x normal product not normal: " + enc_str(x) + " ; " + enc_str(y));
        if (is_t0(x) && is_t0(y)) {
          auto dx = normal_t0_decomposition(x);
          auto dy = normal_t0_decomposition(y);
          auto dp = normal_t0_decomposition(p);
          Bits zexp(p.size());
          for (int a = dx.z.first(); a >= 0; a = dx.z.next(a))
            for (int b = dy.z.first(); b >= 0; b = dy.z.next(b)) zexp.set(a * y.size() + b);
          bool ok = dp.z == zexp;
          for (int a = 0; ok && a < x.size(); ++a)
            for (int b = 0; ok && b < y.size(); ++b)
              ok = dp.r.values[a * y.size() + b] == dx.r.values[a] * y.size() + dy.r.values[b];
          if (!ok)
            note_failure(rep, "product decomposition mismatch: " + enc_str(x) + " ; " + enc_str(y));
        }
      }
    }
}

void suite_shrink_iff_normal(int max_n, SuiteReport& rep) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& x : all_spaces_labeled(n)) {
      ++rep.checked;
      if (normal_via_shrinking(x) != is_normal(x)) note_failure(rep, enc_str(x));
    }
}

void suite_decomposition_normal_t0(int max_n, SuiteReport& rep) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& x : all_spaces_up_to_iso(n, /*t0=*/true)) {
      ++rep.checked;
      bool normal = is_normal(x);
      bool succeeded = false;
      try {
        auto d = normal_t0_decomposition(x);
        succeeded = true;
        bool ok = is_retraction(d.r) && is_closed_map(d.r);
        FinSpace z = x.induced(d.z);
        ok = ok && is_t1_discrete(z);
        // round trip: the retraction clause report must recover normality
        // from (Z normal, fibers vacuously normal, r closed)
        auto clauses = check_retraction_clauses(d.r);
        ok = ok && clauses.z_normal && clauses.fibers_vacuously_normal && clauses.r_closed &&
             clauses.clause_b && clauses.x_normal;
        Bits seen(x.size());
        size_t fi = 0;
        for (int p = d.z.first(); p >= 0; p = d.z.next(p), ++fi) {
          const Bits& f = d.fibers[fi];
          if (f != x.down(p)) ok = false;
          if (f.intersects(seen)) ok = false;
          seen |= f;
          FinSpace fs = x.induced(f);
          if (!is_trivially_compact(fs) || !is_vacuously_normal(fs)) ok = false;
        }
        if (seen != Bits::full(x.size())) ok = false;
        if (!ok) note_failure(rep, "bad decomposition: " + enc_str(x));
      } catch (const Error& e) {
        if (e.code() != Errc::not_normal) throw;
      }
      if (succeeded != normal)
        note_failure(rep, "decomposition success != normal: " + enc_str(x));
    }
}

void suite_very_open_laws(int max_n, SuiteReport& rep) {
  auto small = space_catalog(std::min(max_n, 3));
  for (const auto& x : small)
    for (const auto& y : small)
      for_all_maps(x, y, [&](const PointMap& f) {
        if (!is_continuous(f)) return;
        ++rep.checked;
        if (is_open_map(f)) {
          bool fibers_irreducible = true;
          for (int q = 0; q < y.size(); ++q) {
            Bits pts(x.size());
            for (int a = 0; a < x.size(); ++a)
              if (f.values[a] == q) pts.set(a);
            if (pts.any() && !is_irreducible(x.induced(pts))) fibers_irreducible = false;
          }
          if (fibers_irreducible && !is_very_open(f))
            note_failure(rep, "open + irreducible fibers but not very open: " + enc_str(x));
        }
        Bits img(y.size());
        for (int v : f.values) img.set(v);
        if (img.count() == y.size() && is_very_open(f) && is_normal(x) && !is_normal(y))
          note_failure(rep, "very open surjection lost normality: " + enc_str(x) + " -> " + enc_str(y));
      });
  // t0 quotients are very open and preserve the normality verdict.
  for (int n = 1; n <= std::min(max_n, 5); ++n)
    for (const auto& x : all_spaces_up_to_iso(n)) {
      ++rep.checked;
      auto [q, m] = t0_quotient(x);
      if (!is_very_open(m)) note_failure(rep, "t0 quotient not very open: " + enc_str(x));
      if (is_normal(x) != is_normal(q))
        note_failure(rep, "t0 quotient changed normality: " + enc_str(x));
    }
}

void suite_retraction_preserves_normal(int max_n, SuiteReport& rep) {
  for (int n = 1; n <= std::min(max_n, 4); ++n)
    for (const auto& x : all_spaces_up_to_iso(n))
      for_all_maps(x, x, [&](const PointMap& r) {
        try {
          if (!is_retraction(r)) return;
        } catch (const Error&) {
          return;
        }
        ++rep.checked;
        auto c = check_retraction_clauses(r);
        if (!c.clause_a || !c.clause_b || !c.clause_c)
          note_failure(rep, "retraction clause failed on " + enc_str(x));
      });
}

void suite_irreducible_normal_collapse(int max_n, SuiteReport& rep) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& x : all_spaces_up_to_iso(n)) {
      ++rep.checked;
      if (is_irreducible(x) && is_normal(x) &&
          !(is_trivially_compact(x) && is_vacuously_normal(x)))
        note_failure(rep, enc_str(x));
    }
}

void suite_cube_chain_embeddings(int max_n, SuiteReport& rep) {
  for (int k = 1; k <= max_n; ++k) {
    ++rep.checked;
    if (!check_embedding(k).all()) note_failure(rep, "k=" + std::to_string(k));
  }
}

void suite_closed_projections(int max_n, SuiteReport& rep) {
  auto catalog = space_catalog(std::min(max_n, 3));
  for (const auto& x : catalog)
    for (const auto& y : catalog) {
      ++rep.checked;
      FinSpace p = product(x, y);
      std::vector<int> to_y(p.size()), to_x(p.size());
      for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < y.size(); ++b) {
          to_y[a * y.size() + b] = b;
          to_x[a * y.size() + b] = a;
        }
      if (!is_closed_map(PointMap{p, y, to_y}) || !is_closed_map(PointMap{p, x, to_x}))
        note_failure(rep, enc_str(x) + " ; " + enc_str(y));
    }
}

struct SuiteEntry {
  const char* id;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"product_vacuously_normal", suite_product_vacuously_normal},
    {"product_normal_pairs", suite_product_normal_pairs},
    {"shrink_iff_normal", suite_shrink_iff_normal},
    {"decomposition_normal_t0", suite_decomposition_normal_t0},
    {"very_open_laws", suite_very_open_laws},
    {"retraction_preserves_normal", suite_retraction_preserves_normal},
    {"irreducible_normal_collapse", suite_irreducible_normal_collapse},
    {"cube_chain_embeddings", suite_cube_chain_embeddings},
    {"closed_projections", suite_closed_projections},
};

}  // namespace

SuiteReport run_suite(const std::string& suite_id, int max_n) {
  for (const auto& e : kSuites)
    if (suite_id == e.id) {
      SuiteReport rep;
      rep.id = suite_id;
      uint64_t t0 = now_ms();
      e.fn(max_n, rep);
      rep.elapsed_ms = now_ms() - t0;
      rep.pass = rep.failures.empty();
      return rep;
    }
  throw Error(Errc::unknown_suite, suite_id);
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> v;
  for (const auto& e : kSuites) v.push_back(e.id);
  return v;
}

}  // namespace finitop
