#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhcoh::formula {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer of the form c + k*s, kept symbolic in s so that path lengths can be read off
/// the constant part even when s = 1 collapses distinct labels.
struct Sym {
  long long c = 0;
  long long k = 0;
  long long value(long long s) const { return c + k * s; }
  friend bool operator==(const Sym&, const Sym&) = default;
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Env {
  long long s = 1;
  std::map<std::string, Sym> vars;
  /// Extra functions (e.g. kappa); return nullopt if unknown.
  std::function<std::optional<long long>(const std::string&, const std::vector<long long>&)> extra;
};

Sym eval(const Expr& e, const Env& env);
long long eval_int(const Expr& e, const Env& env);
bool eval_bool(const Expr& e, const Env& env);
Expr parse_expr(const std::string& text);

struct PathRef {
  Expr from;
  Expr to;
};

struct TermSpec {
  int sign = 1;
  std::vector<Expr> factors;
  PathRef left;
  PathRef right;
};

struct EntrySpec {
  Expr row;
  Expr col;   // only for single-element lines
  Expr cond;  // may be null
  std::string loop_var;
  Expr loop_lo, loop_hi;  // inclusive range
  std::vector<TermSpec> terms;
  int line = 0;
};

struct BlockSpec {
  Expr lo, hi;  // lo <= j < hi
  std::vector<EntrySpec> entries;
  int line = 0;
};

struct TableSpec {
  std::string name;
  Expr cols, rows;
  std::vector<std::pair<std::string, Expr>> lets;
  std::vector<BlockSpec> blocks;
  std::vector<EntrySpec> singles;
};

/// Parses every table of a text document.
std::vector<TableSpec> parse_tables(const std::string& text);

struct LabelPath {
  Sym from;
  Sym to;
};

struct ConcreteTerm {
  long long coeff;
  LabelPath left;
  LabelPath right;
};

struct ConcreteEntry {
  std::size_t row;
  std::size_t col;
  std::vector<ConcreteTerm> terms;
  int line;
};

struct ConcreteTable {
  std::size_t cols = 0, rows = 0;
  std::vector<ConcreteEntry> entries;
};

/// Instantiates a table: binds j = (j mod s) + s (j div s), i2, j2 per column and evaluates.
ConcreteTable instantiate(const TableSpec& spec, Env env);

/// Built-in helper functions, exposed for tests.
long long fn_f(long long x, long long y);
long long fn_h(long long x, long long y);
long long fn_f0(long long x, long long y);
long long fn_f1(long long x, long long y);
long long fn_f2(long long x, long long y);
long long residue(long long a, long long t);

}  // namespace hhcoh::formula
