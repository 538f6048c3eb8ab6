#include "doctest.h"

#include "finitop/construct.hpp"
#include "finitop/dsl.hpp"
#include "finitop/error.hpp"
#include "finitop/props.hpp"
#include "support/gen.hpp"

using namespace finitop;

TEST_CASE("parsing and free variables") {
  auto q1 = parse_query("normal(X) & !normal(prod(X,Y))");
  CHECK(free_vars(*q1) == std::set<std::string>{"X", "Y"});

  auto q2 = parse_query("homeo(t0q(star(X)), star(t0q(X)))");
  CHECK(free_vars(*q2) == std::set<std::string>{"X"});

  CHECK(free_vars(*parse_query("normal(X)")) == std::set<std::string>{"X"});
  CHECK(free_vars(*parse_query("normal(prod(X,Y)) | t0(Y)")) ==
        std::set<std::string>{"X", "Y"});
  CHECK(free_vars(*parse_query("normal(star(X))")) == std::set<std::string>{"X"});
}

TEST_CASE("syntax errors carry position and expectation") {
  try {
    parse_query("normal(X");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.position == 9);
    CHECK(e.expected == "\")\"");
  }
  CHECK_THROWS_AS(parse_query("frobnicate(X)"), SyntaxError);
  CHECK_THROWS_AS(parse_query("normal(X) &"), SyntaxError);
  CHECK_THROWS_AS(parse_query("power(X, Y)"), SyntaxError);
}

TEST_CASE("evaluation") {
  Binding b{{"X", sierpinski()}};
  CHECK(eval_query(*parse_query("vacnormal(prod(X,X))"), b));
  CHECK(!eval_query(*parse_query("t1(X)"), b));
  CHECK(eval_query(*parse_query("normal(sum(X,X))"), b));
  CHECK(!eval_query(*parse_query("vacnormal(sum(X,X))"), b));
  CHECK(eval_query(*parse_query("t0(X) -> normal(X)"), b));
  CHECK(eval_query(*parse_query("t1(X) | irreducible(X)"), b));
  CHECK(eval_query(*parse_query("trivcompact(star(X))"), b));
  CHECK(eval_query(*parse_query("homeo(X, t0q(X))"), b));
  CHECK(eval_query(*parse_query("homeo(power(X, 2), prod(X, X))"), b));
  CHECK(eval_query(*parse_query("homeo(t0q(star(X)), star(t0q(X)))"), b));
  CHECK(!eval_query(*parse_query("homeo(prod(X, X), sum(X, X))"), b));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval_query(*parse_query("normal(X)"), {}), Error);
  Binding b{{"X", sierpinski()}};
  CHECK_THROWS_AS(eval_query(*parse_query("normal(power(X, 13))"), b), Error);
}

TEST_CASE("precedence: ! binds tighter than &, & tighter than |, | tighter than ->") {
  Binding b{{"X", sierpinski()}, {"Y", discrete(2)}};
  // !t1(X) & t1(Y) parses as (!t1(X)) & t1(Y): true
  CHECK(eval_query(*parse_query("!t1(X) & t1(Y)"), b));
  // t1(X) & t1(Y) | t0(X) parses as (t1&t1) | t0: true
  CHECK(eval_query(*parse_query("t1(X) & t1(Y) | t0(X)"), b));
  // t0(X) -> t1(X) | t0(Y): implies has lowest precedence: t0 -> (t1|t0): true
  CHECK(eval_query(*parse_query("t0(X) -> t1(X) | t0(Y)"), b));
}

TEST_CASE("pretty-print round trip is a fixed point") {
  const char* queries[] = {
      "normal(X) & !normal(prod(X, Y))",
      "homeo(t0q(star(X)), star(t0q(X)))",
      "(t0(X) | t1(Y)) -> vacnormal(power(X, 3))",
      "!(!normal(X) & irreducible(sum(X, Y)))",
      "trivcompact(star(prod(X, Y)))",
  };
  for (const char* q : queries) {
    std::string once = pretty_print(*parse_query(q));
    std::string twice = pretty_print(*parse_query(once));
    CHECK(once == twice);
  }
}

TEST_CASE("evaluation is pure and atoms agree with the property checkers") {
  gen::Rng rng(59);
  auto q = parse_query("normal(X) & vacnormal(X) | irreducible(X) -> trivcompact(X)");
  for (int trial = 0; trial < 100; ++trial) {
    FinSpace x = gen::random_preorder(1 + int(rng() % 5), rng);
    Binding b{{"X", x}};
    bool v1 = eval_query(*q, b);
    bool v2 = eval_query(*q, b);
    CHECK(v1 == v2);
    CHECK(eval_query(*parse_query("normal(X)"), b) == is_normal(x));
    CHECK(eval_query(*parse_query("vacnormal(X)"), b) == is_vacuously_normal(x));
    CHECK(eval_query(*parse_query("t0(X)"), b) == is_t0(x));
    CHECK(eval_query(*parse_query("t1(X)"), b) == is_t1_discrete(x));
    CHECK(eval_query(*parse_query("irreducible(X)"), b) == is_irreducible(x));
    CHECK(eval_query(*parse_query("trivcompact(X)"), b) == is_trivially_compact(x));
  }
}
