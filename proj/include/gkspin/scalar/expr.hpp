#pragma once

#include "gkspin/scalar/field_scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gkspin {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class EvalError : public std::runtime_error {
public:
  EvalError(const std::string &msg, std::string subexpr)
      : std::runtime_error(msg + ": " + subexpr), subexpr_(std::move(subexpr)) {}
  const std::string &subexpression() const { return subexpr_; }

private:
  std::string subexpr_;
};

enum class Op { Const, Var, Add, Mul, Neg, Div, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

class Expr {
public:
  Expr();
  Expr(const FieldScalar &c);
  Expr(long v) : Expr(FieldScalar(v)) {}
  Expr(int v) : Expr(FieldScalar(static_cast<long>(v))) {}
  explicit Expr(NodePtr n) : n_(std::move(n)) {}

  static Expr var(int id);

  Op op() const;
  bool is_const() const { return op() == Op::Const; }
  bool is_zero() const;
  bool is_one() const;
  const FieldScalar &constant() const;
  int var_id() const;
  int exponent() const;
  const std::vector<Expr> &args() const;
  std::size_t hash() const;
  const Node *node() const { return n_.get(); }

  std::string str() const;

  Expr operator-() const;
  Expr &operator+=(const Expr &o) { return *this = *this + o; }
  Expr &operator-=(const Expr &o) { return *this = *this - o; }
  Expr &operator*=(const Expr &o) { return *this = *this * o; }
  friend Expr operator+(const Expr &a, const Expr &b);
  friend Expr operator-(const Expr &a, const Expr &b);
  friend Expr operator*(const Expr &a, const Expr &b);
  friend Expr operator/(const Expr &a, const Expr &b);

private:
  NodePtr n_;
};

struct Node {
  Op op;
  FieldScalar value;
  int var = -1;
  int exponent = 0;
  std::vector<Expr> args;
  std::size_t hash = 0;
};

Expr make_add(std::vector<Expr> terms);
Expr make_mul(std::vector<Expr> factors);
Expr pow(const Expr &base, int k);

bool same(const Expr &a, const Expr &b);

// Variable registry.  Complex coordinates come in conjugate pairs; real
// variables are self-conjugate.  A radical is a real variable r with a defining
// relation r^2 = square, differentiated by the chain rule.
struct VarInfo {
  std::string name;
  int conj = -1;
  bool real = false;
  std::optional<Expr> square;
};

int declare_pair(const std::string &name, const std::string &conj_name);
int declare_real(const std::string &name);
int declare_radical(const std::string &name, const Expr &square);
const VarInfo &var_info(int id);
std::optional<int> find_var(const std::string &name);

class VarTable {
public:
  void add(int id) { ids_[var_info(id).name] = id; }
  std::optional<int> lookup(const std::string &name) const;
  const std::map<std::string, int> &all() const { return ids_; }

private:
  std::map<std::string, int> ids_;
};

Expr parse_expr(const std::string &text, const VarTable &vars);

Expr conj(const Expr &e);

class Differentiator {
public:
  Expr operator()(const Expr &e, int var);

private:
  std::unordered_map<const Node *, Expr> memo_;
  std::vector<Expr> keep_;
  int var_ = -1;
  Expr run(const Expr &e);
};

Expr diff(const Expr &e, int var);

class SamplePoint {
public:
  void set(int var, FieldScalar v);
  const FieldScalar &get(int var) const;
  bool has(int var) const;
  std::string str() const;

private:
  std::map<int, FieldScalar> values_;
};

// Memoised exact evaluation at one point; reuse across expressions sharing
// subtrees.
class Evaluator {
public:
  explicit Evaluator(const SamplePoint &p) : p_(p) {}
  FieldScalar operator()(const Expr &e);

private:
  const SamplePoint &p_;
  std::unordered_map<const Node *, FieldScalar> memo_;
  std::vector<Expr> keep_;
};

FieldScalar eval(const Expr &e, const SamplePoint &p);

} // namespace gkspin
