#include "finitop/dsl.hpp"

#include <cctype>

#include "finitop/construct.hpp"
#include "finitop/error.hpp"
#include "finitop/props.hpp"

namespace finitop {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos + 1, expected);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("\"") + c + "\"");
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("integer");
    return std::stoi(s.substr(start, pos - start));
  }

  std::unique_ptr<SpaceExpr> space() {
    skip_ws();
    size_t start = pos;
    std::string name = ident();
    if (name.empty()) fail("space expression");
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
      auto e = std::make_unique<SpaceExpr>();
      e->op = SpaceOp::var;
      e->var = name;
      return e;
    }
    SpaceOp op;
    int arity;
    if (name == "prod") {
      op = SpaceOp::prod;
      arity = 2;
    } else if (name == "sum") {
      op = SpaceOp::sum;
      arity = 2;
    } else if (name == "star") {
      op = SpaceOp::star;
      arity = 1;
    } else if (name == "t0q") {
      op = SpaceOp::t0q;
      arity = 1;
    } else if (name == "power") {
      op = SpaceOp::power;
      arity = 1;
    } else {
      pos = start;
      fail("one of prod, sum, star, t0q, power, or a variable");
    }
    auto e = std::make_unique<SpaceExpr>();
    e->op = op;
    expect('(');
    e->args.push_back(space());
    if (arity == 2 || op == SpaceOp::power) {
      expect(',');
      if (op == SpaceOp::power)
        e->exponent = integer();
      else
        e->args.push_back(space());
    }
    expect(')');
    return e;
  }

  std::unique_ptr<QueryAst> pred() {
    skip_ws();
    size_t start = pos;
    std::string name = ident();
    if (name.empty()) fail("predicate");
    auto q = std::make_unique<QueryAst>();
    if (name == "homeo") {
      q->op = QueryOp::homeo;
      expect('(');
      q->spaces.push_back(space());
      expect(',');
      q->spaces.push_back(space());
      expect(')');
      return q;
    }
    q->op = QueryOp::pred;
    if (name == "normal")
      q->pred = Pred::normal;
    else if (name == "vacnormal")
      q->pred = Pred::vacnormal;
    else if (name == "t0")
      q->pred = Pred::t0;
    else if (name == "t1")
      q->pred = Pred::t1;
    else if (name == "irreducible")
      q->pred = Pred::irreducible;
    else if (name == "trivcompact")
      q->pred = Pred::trivcompact;
    else {
      pos = start;
      fail("one of normal, vacnormal, t0, t1, irreducible, trivcompact, homeo");
    }
    expect('(');
    q->spaces.push_back(space());
    expect(')');
    return q;
  }

  std::unique_ptr<QueryAst> unary() {
    if (eat('!')) {
      auto q = std::make_unique<QueryAst>();
      q->op = QueryOp::not_;
      q->children.push_back(unary());
      return q;
    }
    if (eat('(')) {
      auto q = expr();
      expect(')');
      return q;
    }
    return pred();
  }

  std::unique_ptr<QueryAst> conj() {
    auto q = unary();
    while (peek_is('&')) {
      eat('&');
      auto r = std::make_unique<QueryAst>();
      r->op = QueryOp::and_;
      r->children.push_back(std::move(q));
      r->children.push_back(unary());
      q = std::move(r);
    }
    return q;
  }

  std::unique_ptr<QueryAst> disj() {
    auto q = conj();
    while (true) {
      skip_ws();
      // "|" but not part of "->"; the grammar has no "||".
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        auto r = std::make_unique<QueryAst>();
        r->op = QueryOp::or_;
        r->children.push_back(std::move(q));
        r->children.push_back(conj());
        q = std::move(r);
      } else {
        return q;
      }
    }
  }

  std::unique_ptr<QueryAst> expr() {
    auto q = disj();
    if (eat("->")) {
      auto r = std::make_unique<QueryAst>();
      r->op = QueryOp::implies;
      r->children.push_back(std::move(q));
      r->children.push_back(disj());
      q = std::move(r);
    }
    return q;
  }

  std::unique_ptr<QueryAst> parse() {
    auto q = expr();
    skip_ws();
    if (pos != s.size()) fail("end of input");
    return q;
  }
};

void collect_vars(const SpaceExpr& e, std::set<std::string>& out) {
  if (e.op == SpaceOp::var) out.insert(e.var);
  for (const auto& a : e.args) collect_vars(*a, out);
}

void collect_vars(const QueryAst& q, std::set<std::string>& out) {
  for (const auto& e : q.spaces) collect_vars(*e, out);
  for (const auto& c : q.children) collect_vars(*c, out);
}

}  // namespace

std::unique_ptr<QueryAst> parse_query(const std::string& text) {
  Parser p(text);
  return p.parse();
}

std::set<std::string> free_vars(const QueryAst& ast) {
  std::set<std::string> out;
  collect_vars(ast, out);
  return out;
}

FinSpace eval_space(const SpaceExpr& e, const Binding& binding, int max_points) {
  switch (e.op) {
    case SpaceOp::var: {
      auto it = binding.find(e.var);
      if (it == binding.end())
        throw Error(Errc::unbound_variable, "no binding for " + e.var);
      return it->second;
    }
    case SpaceOp::prod:
      return product(eval_space(*e.args[0], binding, max_points),
                     eval_space(*e.args[1], binding, max_points), max_points);
    case SpaceOp::sum:
      return sum(eval_space(*e.args[0], binding, max_points),
                 eval_space(*e.args[1], binding, max_points));
    case SpaceOp::star:
      return star_extension(eval_space(*e.args[0], binding, max_points));
    case SpaceOp::t0q:
      return t0_quotient(eval_space(*e.args[0], binding, max_points)).first;
    case SpaceOp::power:
      return power(eval_space(*e.args[0], binding, max_points), e.exponent, max_points);
  }
  throw Error(Errc::syntax_error, "bad space op");
}

bool eval_query(const QueryAst& ast, const Binding& binding, int max_points) {
  switch (ast.op) {
    case QueryOp::pred: {
      FinSpace x = eval_space(*ast.spaces[0], binding, max_points);
      switch (ast.pred) {
        case Pred::normal: return is_normal(x);
        case Pred::vacnormal: return is_vacuously_normal(x);
        case Pred::t0: return is_t0(x);
        case Pred::t1: return is_t1_discrete(x);
        case Pred::irreducible: return is_irreducible(x);
        case Pred::trivcompact: return is_trivially_compact(x);
      }
      return false;
    }
    case QueryOp::homeo:
      return eval_space(*ast.spaces[0], binding, max_points)
          .homeomorphic_to(eval_space(*ast.spaces[1], binding, max_points));
    case QueryOp::not_: return !eval_query(*ast.children[0], binding, max_points);
    case QueryOp::and_:
      return eval_query(*ast.children[0], binding, max_points) &&
             eval_query(*ast.children[1], binding, max_points);
    case QueryOp::or_:
      return eval_query(*ast.children[0], binding, max_points) ||
             eval_query(*ast.children[1], binding, max_points);
    case QueryOp::implies:
      return !eval_query(*ast.children[0], binding, max_points) ||
             eval_query(*ast.children[1], binding, max_points);
  }
  return false;
}

std::string pretty_print(const SpaceExpr& e) {
  switch (e.op) {
    case SpaceOp::var: return e.var;
    case SpaceOp::prod: return "prod(" + pretty_print(*e.args[0]) + ", " + pretty_print(*e.args[1]) + ")";
    case SpaceOp::sum: return "sum(" + pretty_print(*e.args[0]) + ", " + pretty_print(*e.args[1]) + ")";
    case SpaceOp::star: return "star(" + pretty_print(*e.args[0]) + ")";
    case SpaceOp::t0q: return "t0q(" + pretty_print(*e.args[0]) + ")";
    case SpaceOp::power:
      return "power(" + pretty_print(*e.args[0]) + ", " + std::to_string(e.exponent) + ")";
  }
  return "?";
}

std::string pretty_print(const QueryAst& ast) {
  switch (ast.op) {
    case QueryOp::pred: {
      const char* name = "";
      switch (ast.pred) {
        case Pred::normal: name = "normal"; break;
        case Pred::vacnormal: name = "vacnormal"; break;
        case Pred::t0: name = "t0"; break;
        case Pred::t1: name = "t1"; break;
        case Pred::irreducible: name = "irreducible"; break;
        case Pred::trivcompact: name = "trivcompact"; break;
      }
      return std::string(name) + "(" + pretty_print(*ast.spaces[0]) + ")";
    }
    case QueryOp::homeo:
      return "homeo(" + pretty_print(*ast.spaces[0]) + ", " + pretty_print(*ast.spaces[1]) + ")";
    case QueryOp::not_: return "!" + pretty_print(*ast.children[0]);
    case QueryOp::and_:
      return "(" + pretty_print(*ast.children[0]) + " & " + pretty_print(*ast.children[1]) + ")";
    case QueryOp::or_:
      return "(" + pretty_print(*ast.children[0]) + " | " + pretty_print(*ast.children[1]) + ")";
    case QueryOp::implies:
      return "(" + pretty_print(*ast.children[0]) + " -> " + pretty_print(*ast.children[1]) + ")";
  }
  return "?";
}

}  // namespace finitop
