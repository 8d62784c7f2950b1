#include "hhcoh/formula.hpp"

#include <cctype>
#include <sstream>

namespace hhcoh::formula {

long long residue(long long a, long long t) {
  if (t <= 0) throw FormulaError("residue modulo non-positive number");
  long long r = a % t;
  return r < 0 ? r + t : r;
}
long long fn_f(long long x, long long y) { return x == y ? 1 : 0; }
long long fn_h(long long x, long long y) {
  bool even = residue(x, 2) == 0;
  if (x < y) return even ? 1 : 0;
  return even ? 0 : 1;
}
long long fn_f0(long long x, long long y) { return x < y ? 1 : 0; }
long long fn_f1(long long x, long long y) { return x < y ? 1 : -1; }
long long fn_f2(long long x, long long y) { return x == y ? 1 : -1; }

struct Node {
  enum Kind { Num, Var, Neg, Bin, Call } kind;
  long long num = 0;
  std::string name;  // variable, operator or function
  std::vector<Expr> kids;
};

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  long long value = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), std::stoll(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    } else {
      static const char* two[] = {"<=", ">=", "!=", "==", ".."};
      bool matched = false;
      for (auto* op : two)
        if (s.compare(i, 2, op) == 0) {
          out.push_back({Token::Op, op});
          i += 2;
          matched = true;
          break;
        }
      if (matched) continue;
      if (std::string("+-*/()<>=,:^").find(ch) == std::string::npos)
        throw FormulaError(std::string("unexpected character '") + ch + "'");
      out.push_back({Token::Op, std::string(1, ch)});
      ++i;
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

Expr make(Node::Kind k, std::string name = {}, std::vector<Expr> kids = {}, long long num = 0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->kids = std::move(kids);
  n->num = num;
  return n;
}

bool reserved(const std::string& id) {
  return id == "w" || id == "e" || id == "x" || id == "and" || id == "or" || id == "where" || id == "for";
}

// names that are always variables, so "s(2-j2)" reads as a product
bool is_variable(const std::string& id) {
  return id == "s" || id == "j" || id == "m" || id == "i" || id == "l" || id == "r" || id == "n" || id == "j1" ||
         id == "j2" || id == "i2";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  bool at_op(const std::string& op) const { return peek().kind == Token::Op && peek().text == op; }
  bool at_ident(const std::string& id) const { return peek().kind == Token::Ident && peek().text == id; }
  bool done() const { return peek().kind == Token::End; }
  void expect_op(const std::string& op) {
    if (!at_op(op)) throw FormulaError("expected '" + op + "' near '" + peek().text + "'");
    ++p_;
  }
  void expect_ident(const std::string& id) {
    if (!at_ident(id)) throw FormulaError("expected '" + id + "' near '" + peek().text + "'");
    ++p_;
  }
  std::string ident() {
    if (peek().kind != Token::Ident) throw FormulaError("expected identifier near '" + peek().text + "'");
    return t_[p_++].text;
  }

  Expr expr() { return or_expr(); }

  Expr or_expr() {
    auto l = and_expr();
    while (at_ident("or")) {
      ++p_;
      l = make(Node::Bin, "or", {l, and_expr()});
    }
    return l;
  }
  Expr and_expr() {
    auto l = cmp();
    while (at_ident("and")) {
      ++p_;
      l = make(Node::Bin, "and", {l, cmp()});
    }
    return l;
  }
  Expr cmp() {
    auto l = additive();
    Expr acc;
    while (peek().kind == Token::Op &&
           (at_op("<") || at_op("<=") || at_op(">") || at_op(">=") || at_op("=") || at_op("==") || at_op("!="))) {
      std::string op = t_[p_++].text;
      if (op == "==") op = "=";
      auto r = additive();
      auto c = make(Node::Bin, op, {l, r});
      acc = acc ? make(Node::Bin, "and", {acc, c}) : c;
      l = r;
    }
    return acc ? acc : l;
  }
  Expr additive() {
    auto l = mult();
    while (at_op("+") || at_op("-")) {
      std::string op = t_[p_++].text;
      l = make(Node::Bin, op, {l, mult()});
    }
    return l;
  }
  bool starts_primary() const {
    if (peek().kind == Token::Number) return true;
    if (peek().kind == Token::Ident) return !reserved(peek().text);
    return at_op("(");
  }
  Expr mult() {
    auto l = unary();
    for (;;) {
      if (at_op("*") || at_op("/")) {
        std::string op = t_[p_++].text;
        l = make(Node::Bin, op, {l, unary()});
      } else if (starts_primary()) {
        l = make(Node::Bin, "*", {l, power()});
      } else {
        return l;
      }
    }
  }
  Expr unary() {
    if (at_op("-")) {
      ++p_;
      return make(Node::Neg, "", {unary()});
    }
    if (at_op("+")) {
      ++p_;
      return unary();
    }
    return power();
  }
  Expr power() {
    auto b = primary();
    if (at_op("^")) {
      ++p_;
      return make(Node::Bin, "^", {b, unary()});
    }
    return b;
  }
  Expr primary() {
    const auto& tk = peek();
    if (tk.kind == Token::Number) {
      ++p_;
      return make(Node::Num, "", {}, tk.value);
    }
    if (tk.kind == Token::Ident) {
      if (reserved(tk.text)) throw FormulaError("unexpected keyword '" + tk.text + "'");
      std::string name = tk.text;
      ++p_;
      if (at_op("(") && !is_variable(name)) {
        ++p_;
        std::vector<Expr> args;
        if (!at_op(")")) {
          args.push_back(expr());
          while (at_op(",")) {
            ++p_;
            args.push_back(expr());
          }
        }
        expect_op(")");
        return make(Node::Call, name, std::move(args));
      }
      return make(Node::Var, name);
    }
    if (at_op("(")) {
      ++p_;
      auto e = expr();
      expect_op(")");
      return e;
    }
    throw FormulaError("unexpected token '" + tk.text + "'");
  }

  PathRef path() {
    if (at_ident("e")) {
      ++p_;
      expect_op("(");
      auto v = expr();
      expect_op(")");
      return {v, v};
    }
    expect_ident("w");
    expect_op("(");
    auto a = expr();
    expect_op(",");
    auto b = expr();
    expect_op(")");
    return {a, b};
  }

  bool at_path() const {
    return (at_ident("w") || at_ident("e")) && peek(1).kind == Token::Op && peek(1).text == "(";
  }

  std::vector<TermSpec> sum() {
    std::vector<TermSpec> terms;
    int sign = 1;
    if (at_op("-")) {
      sign = -1;
      ++p_;
    } else if (at_op("+")) {
      ++p_;
    }
    for (;;) {
      TermSpec t;
      t.sign = sign;
      while (!at_path()) {
        if (done()) throw FormulaError("tensor term without a path");
        if (at_op("*")) {
          ++p_;
          continue;
        }
        t.factors.push_back(power_factor());
      }
      t.left = path();
      expect_ident("x");
      t.right = path();
      terms.push_back(std::move(t));
      if (at_op("+")) {
        sign = 1;
        ++p_;
      } else if (at_op("-")) {
        sign = -1;
        ++p_;
      } else {
        break;
      }
    }
    return terms;
  }

  // a coefficient factor: signed power expression (no implicit product with the path)
  Expr power_factor() {
    if (at_op("-")) {
      ++p_;
      return make(Node::Neg, "", {power_factor()});
    }
    return power();
  }

 private:
  std::vector<Token> t_;
  std::size_t p_ = 0;
};

long long ipow(long long b, long long e) {
  if (e < 0) {
    if (b == 1) return 1;
    if (b == -1) return (e % 2 == 0) ? 1 : -1;
    throw FormulaError("negative exponent");
  }
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Sym konst(long long v) { return Sym{v, 0}; }

}  // namespace

Sym eval(const Expr& e, const Env& env) {
  switch (e->kind) {
    case Node::Num:
      return konst(e->num);
    case Node::Var: {
      if (e->name == "s") return Sym{0, 1};
      auto it = env.vars.find(e->name);
      if (it == env.vars.end()) throw FormulaError("unbound variable " + e->name);
      return it->second;
    }
    case Node::Neg: {
      auto v = eval(e->kids[0], env);
      return Sym{-v.c, -v.k};
    }
    case Node::Bin: {
      const auto& op = e->name;
      if (op == "and") return konst(eval_bool(e->kids[0], env) && eval_bool(e->kids[1], env));
      if (op == "or") return konst(eval_bool(e->kids[0], env) || eval_bool(e->kids[1], env));
      auto a = eval(e->kids[0], env);
      auto b = eval(e->kids[1], env);
      if (op == "+") return Sym{a.c + b.c, a.k + b.k};
      if (op == "-") return Sym{a.c - b.c, a.k - b.k};
      if (op == "*") {
        if (a.k == 0) return Sym{a.c * b.c, a.c * b.k};
        if (b.k == 0) return Sym{a.c * b.c, a.k * b.c};
        // s*s: no label needs it, keep the numeric value
        return konst(a.value(env.s) * b.value(env.s));
      }
      long long x = a.value(env.s), y = b.value(env.s);
      if (op == "/") {
        if (y == 0) throw FormulaError("division by zero");
        return konst((x - residue(x, y)) / y);
      }
      if (op == "^") return konst(ipow(x, y));
      if (op == "<") return konst(x < y);
      if (op == "<=") return konst(x <= y);
      if (op == ">") return konst(x > y);
      if (op == ">=") return konst(x >= y);
      if (op == "=") return konst(x == y);
      if (op == "!=") return konst(x != y);
      throw FormulaError("unknown operator " + op);
    }
    case Node::Call: {
      std::vector<long long> args;
      for (const auto& k : e->kids) args.push_back(eval(k, env).value(env.s));
      const auto& f = e->name;
      auto need = [&](std::size_t n) {
        if (args.size() != n) throw FormulaError(f + ": expected " + std::to_string(n) + " arguments");
      };
      if (f == "f") return need(2), konst(fn_f(args[0], args[1]));
      if (f == "h") return need(2), konst(fn_h(args[0], args[1]));
      if (f == "f0") return need(2), konst(fn_f0(args[0], args[1]));
      if (f == "f1") return need(2), konst(fn_f1(args[0], args[1]));
      if (f == "f2") return need(2), konst(fn_f2(args[0], args[1]));
      if (f == "mod") return need(2), konst(residue(args[0], args[1]));
      if (f == "div") {
        need(2);
        if (args[1] == 0) throw FormulaError("div by zero");
        return konst((args[0] - residue(args[0], args[1])) / args[1]);
      }
      if (env.extra)
        if (auto v = env.extra(f, args)) return konst(*v);
      throw FormulaError("unknown function " + f);
    }
  }
  throw FormulaError("bad expression node");
}

long long eval_int(const Expr& e, const Env& env) { return eval(e, env).value(env.s); }
bool eval_bool(const Expr& e, const Env& env) { return eval_int(e, env) != 0; }

Expr parse_expr(const std::string& text) {
  Parser p(tokenize(text));
  auto e = p.expr();
  if (!p.done()) throw FormulaError("trailing input in expression: " + text);
  return e;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// split "HEAD : BODY" at the first ':' that is outside parentheses
std::pair<std::string, std::string> split_colon(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ':' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw FormulaError("missing ':' in entry line");
}

EntrySpec parse_entry_head(const std::string& head, bool single) {
  EntrySpec e;
  Parser p(tokenize(head));
  if (single) {
    p.expect_ident("at");
    e.row = p.additive();
    p.expect_op(",");
    e.col = p.additive();
  } else {
    p.expect_ident("i");
    p.expect_op("=");
    e.row = p.additive();
  }
  while (!p.done()) {
    if (p.at_ident("where")) {
      p.ident();
      e.cond = p.expr();
    } else if (p.at_ident("for")) {
      p.ident();
      e.loop_var = p.ident();
      p.expect_op("=");
      e.loop_lo = p.additive();
      p.expect_op("..");
      e.loop_hi = p.additive();
    } else {
      throw FormulaError("unexpected '" + p.peek().text + "' in entry head");
    }
  }
  return e;
}

}  // namespace

std::vector<TableSpec> parse_tables(const std::string& text) {
  std::vector<TableSpec> tables;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  TableSpec* cur = nullptr;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    try {
      auto word = line.substr(0, line.find(' '));
      auto rest = word.size() < line.size() ? trim(line.substr(word.size())) : std::string();
      if (word == "table") {
        tables.push_back(TableSpec{});
        cur = &tables.back();
        cur->name = rest;
        continue;
      }
      if (!cur) throw FormulaError("content before the first table");
      if (word == "shape") {
        Parser p(tokenize(rest));
        cur->cols = p.additive();
        p.expect_op(",");
        cur->rows = p.additive();
        if (!p.done()) throw FormulaError("shape takes two expressions");
      } else if (word == "let") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw FormulaError("let needs '='");
        cur->lets.emplace_back(trim(rest.substr(0, eq)), parse_expr(rest.substr(eq + 1)));
      } else if (word == "block") {
        Parser p(tokenize(rest));
        BlockSpec b;
        b.lo = p.additive();
        p.expect_op("<=");
        p.expect_ident("j");
        p.expect_op("<");
        b.hi = p.additive();
        if (!p.done()) throw FormulaError("block syntax: LO <= j < HI");
        b.line = lineno;
        cur->blocks.push_back(std::move(b));
      } else if (word == "i" || word == "i=" || line.rfind("i =", 0) == 0 || line.rfind("i=", 0) == 0) {
        if (cur->blocks.empty()) throw FormulaError("entry outside a block");
        auto [head, body] = split_colon(line);
        auto e = parse_entry_head(head, false);
        Parser p(tokenize(body));
        e.terms = p.sum();
        if (!p.done()) throw FormulaError("trailing input after tensor sum");
        e.line = lineno;
        cur->blocks.back().entries.push_back(std::move(e));
      } else if (word == "at") {
        auto [head, body] = split_colon(line);
        auto e = parse_entry_head(head, true);
        Parser p(tokenize(body));
        e.terms = p.sum();
        if (!p.done()) throw FormulaError("trailing input after tensor sum");
        e.line = lineno;
        cur->singles.push_back(std::move(e));
      } else {
        throw FormulaError("unknown directive '" + word + "'");
      }
    } catch (const FormulaError& err) {
      throw FormulaError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return tables;
}

namespace {

void emit(const EntrySpec& e, Env& env, std::size_t row_limit, std::size_t col, ConcreteTable& out,
          const std::string& table) {
  auto run = [&](Env& local) {
    if (e.cond && !eval_bool(e.cond, local)) return;
    long long row = eval_int(e.row, local);
    if (row < 0 || static_cast<std::size_t>(row) >= row_limit)
      throw FormulaError(table + " line " + std::to_string(e.line) + ": row " + std::to_string(row) +
                         " out of range at column " + std::to_string(col));
    ConcreteEntry ce{static_cast<std::size_t>(row), col, {}, e.line};
    for (const auto& t : e.terms) {
      long long c = t.sign;
      for (const auto& f : t.factors) c *= eval_int(f, local);
      if (c == 0) continue;
      ce.terms.push_back({c, {eval(t.left.from, local), eval(t.left.to, local)},
                          {eval(t.right.from, local), eval(t.right.to, local)}});
    }
    if (!ce.terms.empty()) out.entries.push_back(std::move(ce));
  };
  if (e.loop_var.empty()) {
    run(env);
    return;
  }
  long long lo = eval_int(e.loop_lo, env), hi = eval_int(e.loop_hi, env);
  for (long long v = lo; v <= hi; ++v) {
    Env local = env;
    local.vars[e.loop_var] = Sym{v, 0};
    run(local);
  }
}

void bind_column(Env& env, long long j) {
  long long i2 = residue(j, env.s), j2 = (j - i2) / env.s;
  env.vars["j"] = Sym{i2, j2};
  env.vars["i2"] = Sym{i2, 0};
  env.vars["j2"] = Sym{j2, 0};
}

}  // namespace

ConcreteTable instantiate(const TableSpec& spec, Env env) {
  for (const auto& [name, e] : spec.lets) env.vars[name] = eval(e, env);
  ConcreteTable out;
  out.cols = static_cast<std::size_t>(eval_int(spec.cols, env));
  out.rows = static_cast<std::size_t>(eval_int(spec.rows, env));
  std::vector<int> covered(out.cols, 0);
  try {
    for (const auto& b : spec.blocks) {
      long long lo = eval_int(b.lo, env), hi = eval_int(b.hi, env);
      if (lo < 0 || hi > static_cast<long long>(out.cols) || lo > hi)
        throw FormulaError("block range outside the column count (line " + std::to_string(b.line) + ")");
      for (long long j = lo; j < hi; ++j) {
        ++covered[static_cast<std::size_t>(j)];
        Env local = env;
        bind_column(local, j);
        for (const auto& e : b.entries) emit(e, local, out.rows, static_cast<std::size_t>(j), out, spec.name);
      }
    }
    for (const auto& e : spec.singles) {
      long long col = eval_int(e.col, env);
      if (col < 0 || static_cast<std::size_t>(col) >= out.cols)
        throw FormulaError("column " + std::to_string(col) + " out of range (line " + std::to_string(e.line) + ")");
      Env local = env;
      bind_column(local, col);
      emit(e, local, out.rows, static_cast<std::size_t>(col), out, spec.name);
    }
  } catch (const FormulaError& err) {
    throw FormulaError(spec.name + ": " + err.what());
  }
  if (!spec.blocks.empty())
    for (std::size_t j = 0; j < out.cols; ++j)
      if (covered[j] > 1) throw FormulaError(spec.name + ": column " + std::to_string(j) + " lies in two blocks");
  return out;
}

}  // namespace hhcoh::formula
