#include "doctest.h"

#include "finitop/construct.hpp"
#include "finitop/error.hpp"
#include "finitop/fin_space.hpp"
#include "finitop/maps.hpp"
#include "finitop/search.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace finitop;

TEST_CASE("from_open_sets: generated specialization orders") {
  FinSpace s = sierpinski();
  CHECK(s.le(0, 1));
  CHECK(!s.le(1, 0));
  CHECK(s.le(0, 0));
  CHECK(s.le(1, 1));

  FinSpace ind = FinSpace::from_open_sets(3, {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ind.le(i, j));

  // divisor sets on {2..5} relabeled 0..3: x <= y iff (x+2) divides (y+2)
  std::vector<Bits> subbase;
  for (int m = 2; m <= 5; ++m) {
    Bits u(4);
    for (int d = 2; d <= 5; ++d)
      if (m % d == 0) u.set(d - 2);
    subbase.push_back(u);
  }
  FinSpace div = FinSpace::from_open_sets(4, subbase);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(div.le(x, y) == ((y + 2) % (x + 2) == 0));
}

TEST_CASE("from_open_sets agrees with the materialized topology") {
  gen::Rng rng(2024);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Bits> subbase;
      int k = int(rng() % 4);
      for (int i = 0; i < k; ++i) subbase.push_back(gen::random_subset(n, rng));
      FinSpace s = FinSpace::from_open_sets(n, subbase);
      auto opens = oracle::generated_topology(n, subbase);
      for (const Bits& u : oracle::all_subsets(n))
        CHECK(s.is_open(u) == (opens.count(oracle::to_mask(u)) > 0));
    }
}

TEST_CASE("from_open_sets rejects out-of-range points") {
  Bits big(3);
  big.set(2);
  CHECK_THROWS_AS(FinSpace::from_open_sets(2, {big}), Error);
}

TEST_CASE("from_le_pairs validates transitivity") {
  std::pair<int, int> bad[] = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(FinSpace::from_le_pairs(3, bad), Error);
  std::pair<int, int> good[] = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_NOTHROW(FinSpace::from_le_pairs(3, good));
  std::pair<int, int> oob[] = {{0, 7}};
  CHECK_THROWS_AS(FinSpace::from_le_pairs(3, oob), Error);
}

TEST_CASE("closure examples") {
  FinSpace s = sierpinski();
  CHECK(s.closure(Bits::of(2, {0})) == Bits::of(2, {0, 1}));
  CHECK(s.closure(Bits(2)) == Bits(2));
  FinSpace v = v_space();
  CHECK(v.closure(Bits::of(3, {2})) == Bits::of(3, {0, 1, 2}));
}

TEST_CASE("interior, is_open, is_closed examples") {
  FinSpace s = sierpinski();
  Bits one = Bits::of(2, {1});
  CHECK(!s.is_open(one));
  CHECK(s.is_closed(one));
  Bits whole = Bits::full(2);
  CHECK(s.interior(whole) == whole);
  CHECK(s.closure(whole) == whole);
  CHECK(s.is_open(whole));
  CHECK(s.is_closed(whole));
  FinSpace v = v_space();
  Bits oz = Bits::of(3, {0, 2});
  CHECK(v.is_open(oz));
  CHECK(!v.is_closed(oz));
}

TEST_CASE("closure idempotent and interior dual to closure") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 7);
    FinSpace x = gen::random_preorder(n, rng);
    Bits s = gen::random_subset(n, rng);
    Bits cl = x.closure(s);
    CHECK(x.closure(cl) == cl);
    CHECK(x.interior(s) == x.closure(s.complement()).complement());
    CHECK(s.contains(x.interior(s)));
    CHECK(cl.contains(s));
  }
}

TEST_CASE("min_open and point_closure examples") {
  FinSpace s = sierpinski();
  CHECK(s.min_open(1) == Bits::of(2, {0, 1}));
  CHECK(s.point_closure(0) == Bits::of(2, {0, 1}));
  CHECK(discrete(2).min_open(0) == Bits::of(2, {0}));
  CHECK(lambda_space().min_open(2) == Bits::of(3, {0, 1, 2}));
}

TEST_CASE("min_open is the intersection of all open sets containing the point") {
  gen::Rng rng(11);
  auto check_space = [](const FinSpace& x) {
    auto opens = oracle::open_sets(x);
    for (int p = 0; p < x.size(); ++p) {
      Bits inter = Bits::full(x.size());
      for (const Bits& u : opens)
        if (u.test(p)) inter &= u;
      CHECK(inter == x.min_open(p));
    }
  };
  for (int n = 1; n <= 5; ++n) {
    EnumerationStream es(n, false, true);
    while (auto s = es.next()) check_space(*s);
  }
  for (int trial = 0; trial < 40; ++trial) check_space(gen::random_preorder(6, rng));
}

TEST_CASE("a set is open iff it is the union of the minimal opens of its points") {
  gen::Rng rng(13);
  auto check_space = [](const FinSpace& x) {
    for (const Bits& s : oracle::all_subsets(x.size())) {
      Bits u(x.size());
      for (int p = s.first(); p >= 0; p = s.next(p)) u |= x.min_open(p);
      CHECK(x.is_open(s) == (u == s));
    }
  };
  for (int n = 1; n <= 5; ++n) {
    EnumerationStream es(n, false, true);
    while (auto s = es.next()) check_space(*s);
  }
  for (int trial = 0; trial < 30; ++trial) check_space(gen::random_preorder(6, rng));
}

TEST_CASE("canonical form: idempotent and relabeling-invariant") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + int(rng() % 7);
    FinSpace x = gen::random_preorder(n, rng);
    FinSpace c = x.canonical_form();
    CHECK(c.canonical_form() == c);
    CHECK(gen::random_relabel(x, rng).canonical_form() == c);
  }
}

TEST_CASE("homeomorphism examples") {
  FinSpace s = sierpinski();
  std::pair<int, int> swapped[] = {{1, 0}};
  CHECK(s.homeomorphic_to(FinSpace::from_le_pairs(2, swapped)));
  CHECK(!s.homeomorphic_to(discrete(2)));
  auto [q, m] = t0_quotient(e_space());
  CHECK(q.homeomorphic_to(s));
}

TEST_CASE("canonical equality matches exhaustive permutation isomorphism") {
  gen::Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 5);
    FinSpace a = gen::random_preorder(n, rng);
    FinSpace b = trial % 2 ? gen::random_relabel(a, rng) : gen::random_preorder(n, rng);
    CHECK(a.homeomorphic_to(b) == oracle::brute_homeomorphic(a, b));
  }
}

TEST_CASE("indistinguishable pairs") {
  CHECK(e_space().indistinguishable_pairs() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(sierpinski().indistinguishable_pairs().empty());
  CHECK(indiscrete(3).indistinguishable_pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}
