#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "finitop/fin_space.hpp"

namespace finitop {

// Query language over space variables:
//   expr    := implies
//   implies := or ("->" or)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | pred | "(" expr ")"
//   pred    := NAME "(" args ")"
//   space   := VAR | NAME "(" space ("," space | "," INT)? ")"
// Predicates: normal vacnormal t0 t1 irreducible trivcompact homeo(e,e).
// Space constructors: prod(e,e) sum(e,e) star(e) t0q(e) power(e,k).
// Variables are single uppercase letters; keywords are reserved.

enum class SpaceOp { var, prod, sum, star, t0q, power };

struct SpaceExpr {
  SpaceOp op;
  std::string var;
  std::vector<std::unique_ptr<SpaceExpr>> args;
  int exponent = 0;
};

enum class QueryOp { pred, homeo, and_, or_, not_, implies };

enum class Pred { normal, vacnormal, t0, t1, irreducible, trivcompact };

struct QueryAst {
  QueryOp op;
  Pred pred = Pred::normal;
  std::vector<std::unique_ptr<SpaceExpr>> spaces;
  std::vector<std::unique_ptr<QueryAst>> children;
};

using Binding = std::map<std::string, FinSpace>;

/// Throws SyntaxError with 1-based byte offset and the expected-token set.
std::unique_ptr<QueryAst> parse_query(const std::string& text);

std::set<std::string> free_vars(const QueryAst& ast);

/// Throws UnboundVariable; SizeOverflow propagates from constructors.
bool eval_query(const QueryAst& ast, const Binding& binding, int max_points = 4096);

FinSpace eval_space(const SpaceExpr& e, const Binding& binding, int max_points = 4096);

std::string pretty_print(const QueryAst& ast);
std::string pretty_print(const SpaceExpr& e);

}  // namespace finitop
