#include "gkspin/scalar/expr.hpp"

#include <cctype>

namespace gkspin {

namespace {

std::size_t combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Expr build(Op op, std::vector<Expr> args, FieldScalar value = {}, int var = -1,
           int exponent = 0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->value = std::move(value);
  n->var = var;
  n->exponent = exponent;
  n->args = std::move(args);
  std::size_t h = static_cast<std::size_t>(op) * 1000003u;
  if (op == Op::Const)
    h = combine(h, n->value.hash());
  h = combine(h, static_cast<std::size_t>(var + 7));
  h = combine(h, static_cast<std::size_t>(exponent + 1000));
  for (const auto &a : n->args)
    h = combine(h, a.hash());
  n->hash = h;
  return Expr(NodePtr(std::move(n)));
}

const Expr &zero_expr() {
  static const Expr z = build(Op::Const, {}, FieldScalar(0));
  return z;
}

std::vector<VarInfo> &registry() {
  static std::vector<VarInfo> r;
  return r;
}

Expr make_neg(const Expr &x);
Expr make_div(const Expr &a, const Expr &b);

} // namespace

Expr::Expr() : n_(zero_expr().n_) {}
Expr::Expr(const FieldScalar &c) : n_(build(Op::Const, {}, c).n_) {}

Expr Expr::var(int id) {
  var_info(id);
  return build(Op::Var, {}, {}, id);
}

Op Expr::op() const { return n_->op; }
bool Expr::is_zero() const { return n_->op == Op::Const && n_->value.is_zero(); }
bool Expr::is_one() const { return n_->op == Op::Const && n_->value.is_one(); }
const FieldScalar &Expr::constant() const { return n_->value; }
int Expr::var_id() const { return n_->var; }
int Expr::exponent() const { return n_->exponent; }
const std::vector<Expr> &Expr::args() const { return n_->args; }
std::size_t Expr::hash() const { return n_->hash; }

bool same(const Expr &a, const Expr &b) {
  if (a.node() == b.node())
    return true;
  if (a.hash() != b.hash() || a.op() != b.op())
    return false;
  switch (a.op()) {
  case Op::Const:
    return a.constant() == b.constant();
  case Op::Var:
    return a.var_id() == b.var_id();
  default:
    break;
  }
  if (a.exponent() != b.exponent() || a.args().size() != b.args().size())
    return false;
  for (std::size_t k = 0; k < a.args().size(); ++k)
    if (!same(a.args()[k], b.args()[k]))
      return false;
  return true;
}

Expr make_add(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  FieldScalar c(0);
  bool has_c = false;
  for (auto &t : terms) {
    if (t.op() == Op::Add) {
      for (const auto &s : t.args()) {
        if (s.is_const()) {
          c += s.constant();
          has_c = true;
        } else {
          flat.push_back(s);
        }
      }
    } else if (t.is_const()) {
      c += t.constant();
      has_c = true;
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (has_c && !c.is_zero())
    flat.emplace_back(c);
  if (flat.empty())
    return Expr();
  if (flat.size() == 1)
    return flat.front();
  return build(Op::Add, std::move(flat));
}

Expr make_mul(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  FieldScalar c(1);
  auto absorb = [&](const Expr &f, auto &self) -> void {
    switch (f.op()) {
    case Op::Const:
      c *= f.constant();
      break;
    case Op::Mul:
      for (const auto &g : f.args())
        self(g, self);
      break;
    case Op::Neg:
      c = -c;
      self(f.args()[0], self);
      break;
    default:
      flat.push_back(f);
    }
  };
  for (const auto &f : factors)
    absorb(f, absorb);
  if (c.is_zero())
    return Expr();
  if (flat.empty())
    return Expr(c);
  bool negate = (-c).is_one();
  if (negate)
    c = FieldScalar(1);
  Expr body;
  if (c.is_one()) {
    body = flat.size() == 1 ? flat.front() : build(Op::Mul, std::move(flat));
  } else {
    flat.insert(flat.begin(), Expr(c));
    body = build(Op::Mul, std::move(flat));
  }
  return negate ? build(Op::Neg, {body}) : body;
}

namespace {

Expr make_neg(const Expr &x) {
  switch (x.op()) {
  case Op::Const:
    return Expr(-x.constant());
  case Op::Neg:
    return x.args()[0];
  case Op::Mul:
    if (x.args()[0].is_const()) {
      std::vector<Expr> f = x.args();
      f[0] = Expr(-f[0].constant());
      return make_mul(std::move(f));
    }
    break;
  default:
    break;
  }
  return build(Op::Neg, {x});
}

Expr make_div(const Expr &a, const Expr &b) {
  if (b.is_const()) {
    if (b.constant().is_zero())
      throw EvalError("division by zero", b.str());
    return a * Expr(b.constant().inverse());
  }
  if (a.is_zero())
    return Expr();
  return build(Op::Div, {a, b});
}

} // namespace

Expr pow(const Expr &base, int k) {
  if (k == 0)
    return Expr(1);
  if (k == 1)
    return base;
  switch (base.op()) {
  case Op::Const:
    if (base.constant().is_zero() && k < 0)
      throw EvalError("division by zero", base.str());
    return Expr(base.constant().pow(k));
  case Op::Pow:
    return pow(base.args()[0], base.exponent() * k);
  case Op::Neg: {
    Expr p = pow(base.args()[0], k);
    return (k % 2 == 0) ? p : make_neg(p);
  }
  default:
    break;
  }
  return build(Op::Pow, {base}, {}, -1, k);
}

Expr Expr::operator-() const { return make_neg(*this); }
Expr operator+(const Expr &a, const Expr &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  return make_add({a, b});
}
Expr operator-(const Expr &a, const Expr &b) {
  if (b.is_zero())
    return a;
  return make_add({a, make_neg(b)});
}
Expr operator*(const Expr &a, const Expr &b) {
  if (a.is_zero() || b.is_zero())
    return Expr();
  if (a.is_one())
    return b;
  if (b.is_one())
    return a;
  return make_mul({a, b});
}
Expr operator/(const Expr &a, const Expr &b) { return make_div(a, b); }

// ---------------------------------------------------------------- printing

namespace {


std::string print(const Expr &e);

bool const_is_atomic(const FieldScalar &c) { return c.str().find(' ') == std::string::npos; }

std::string wrap(const std::string &s) { return "(" + s + ")"; }

// Positive counterpart if e prints naturally with a leading minus.
std::optional<Expr> negated_form(const Expr &e) {
  if (e.op() == Op::Neg)
    return e.args()[0];
  if (e.is_const() && e.constant().is_rational() && e.constant().sign() < 0)
    return Expr(-e.constant());
  if (e.op() == Op::Mul && e.args()[0].is_const() && e.args()[0].constant().is_rational() &&
      e.args()[0].constant().sign() < 0)
    return -e;
  return std::nullopt;
}

std::string print_factor(const Expr &f, bool leading) {
  switch (f.op()) {
  case Op::Const: {
    std::string s = f.constant().str();
    if (s.find(' ') != std::string::npos || (!leading && s[0] == '-'))
      return wrap(s);
    return s;
  }
  case Op::Add:
  case Op::Div:
  case Op::Neg:
    return wrap(print(f));
  default:
    return print(f);
  }
}

std::string print(const Expr &e) {
  switch (e.op()) {
  case Op::Const:
    return e.constant().str();
  case Op::Var:
    return var_info(e.var_id()).name;
  case Op::Add: {
    std::string out;
    bool first = true;
    for (const auto &t : e.args()) {
      if (first) {
        out = print(t);
        first = false;
        continue;
      }
      if (auto pos = negated_form(t)) {
        std::string s = print(*pos);
        if (pos->op() == Op::Add || (pos->is_const() && !const_is_atomic(pos->constant())))
          s = wrap(s);
        out += " - " + s;
      } else {
        out += " + " + print(t);
      }
    }
    return out;
  }
  case Op::Mul: {
    std::string out;
    for (std::size_t k = 0; k < e.args().size(); ++k) {
      if (k)
        out += "*";
      out += print_factor(e.args()[k], k == 0);
    }
    return out;
  }
  case Op::Neg: {
    const Expr &x = e.args()[0];
    std::string s = print(x);
    if (x.op() == Op::Add || x.op() == Op::Div)
      s = wrap(s);
    return "-" + s;
  }
  case Op::Div: {
    const Expr &a = e.args()[0], &b = e.args()[1];
    std::string sa = print(a), sb = print(b);
    if (a.op() == Op::Add || (a.is_const() && sa.find(' ') != std::string::npos))
      sa = wrap(sa);
    if (b.op() == Op::Add || b.op() == Op::Mul || b.op() == Op::Div || b.op() == Op::Neg)
      sb = wrap(sb);
    return sa + "/" + sb;
  }
  case Op::Pow: {
    const Expr &b = e.args()[0];
    std::string sb = print(b);
    if (b.op() != Op::Var)
      sb = wrap(sb);
    return sb + "^" + std::to_string(e.exponent());
  }
  }
  return "?";
}

} // namespace

std::string Expr::str() const { return print(*this); }

// ---------------------------------------------------------------- registry

int declare_pair(const std::string &name, const std::string &conj_name) {
  if (auto id = find_var(name)) {
    const VarInfo &vi = var_info(*id);
    if (vi.real || var_info(vi.conj).name != conj_name)
      throw std::invalid_argument("variable " + name + " already declared differently");
    return *id;
  }
  if (find_var(conj_name))
    throw std::invalid_argument("variable " + conj_name + " already declared");
  auto &r = registry();
  int a = static_cast<int>(r.size());
  r.push_back({name, a + 1, false, std::nullopt});
  r.push_back({conj_name, a, false, std::nullopt});
  return a;
}

int declare_real(const std::string &name) {
  if (auto id = find_var(name)) {
    if (!var_info(*id).real)
      throw std::invalid_argument("variable " + name + " already declared as complex");
    return *id;
  }
  auto &r = registry();
  int a = static_cast<int>(r.size());
  r.push_back({name, a, true, std::nullopt});
  return a;
}

int declare_radical(const std::string &name, const Expr &square) {
  if (auto id = find_var(name)) {
    const VarInfo &vi = var_info(*id);
    if (!vi.square || !same(*vi.square, square))
      throw std::invalid_argument("radical " + name + " already declared differently");
    return *id;
  }
  auto &r = registry();
  int a = static_cast<int>(r.size());
  r.push_back({name, a, true, square});
  return a;
}

const VarInfo &var_info(int id) {
  auto &r = registry();
  if (id < 0 || id >= static_cast<int>(r.size()))
    throw std::out_of_range("unknown variable id " + std::to_string(id));
  return r[static_cast<std::size_t>(id)];
}

std::optional<int> find_var(const std::string &name) {
  auto &r = registry();
  for (std::size_t k = 0; k < r.size(); ++k)
    if (r[k].name == name)
      return static_cast<int>(k);
  return std::nullopt;
}

std::optional<int> VarTable::lookup(const std::string &name) const {
  auto it = ids_.find(name);
  if (it == ids_.end())
    return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(const std::string &s, const VarTable &v) : s_(s), vars_(v) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size())
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

private:
  const std::string &s_;
  const VarTable &vars_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(-term());
      else
        break;
    }
    return terms.size() == 1 ? terms[0] : make_add(std::move(terms));
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*'))
        e = e * unary();
      else if (accept('/'))
        e = e / unary();
      else
        break;
    }
    return e;
  }

  Expr unary() {
    if (accept('-'))
      return -unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        throw ParseError("expected integer exponent", pos_);
      int k = std::stoi(s_.substr(start, pos_ - start));
      return pow(base, neg ? -k : k);
    }
    return base;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size())
      throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Expr(FieldScalar(mpq_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "i")
        return Expr(FieldScalar::i());
      if (id == "sqrt2")
        return Expr(FieldScalar::sqrt2());
      if (id == "sqrt3")
        return Expr(FieldScalar::sqrt3());
      if (id == "sqrt6")
        return Expr(FieldScalar::sqrt6());
      if (auto v = vars_.lookup(id))
        return Expr::var(*v);
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

} // namespace

Expr parse_expr(const std::string &text, const VarTable &vars) {
  Parser p(text, vars);
  try {
    return p.parse();
  } catch (const EvalError &e) {
    throw ParseError(std::string("constant folding failed (") + e.what() + ")", 0);
  }
}

// ---------------------------------------------------------------- calculus

Expr conj(const Expr &e) {
  switch (e.op()) {
  case Op::Const:
    return e.constant().is_real() ? e : Expr(e.constant().conj());
  case Op::Var: {
    const VarInfo &vi = var_info(e.var_id());
    return vi.real ? e : Expr::var(vi.conj);
  }
  default:
    break;
  }
  std::vector<Expr> args;
  args.reserve(e.args().size());
  for (const auto &a : e.args())
    args.push_back(conj(a));
  return build(e.op(), std::move(args), {}, -1, e.exponent());
}

Expr Differentiator::operator()(const Expr &e, int var) {
  if (var != var_) {
    memo_.clear();
    var_ = var;
  }
  return run(e);
}

Expr Differentiator::run(const Expr &e) {
  auto it = memo_.find(e.node());
  if (it != memo_.end())
    return it->second;
  Expr r;
  switch (e.op()) {
  case Op::Const:
    break;
  case Op::Var: {
    const VarInfo &vi = var_info(e.var_id());
    if (e.var_id() == var_)
      r = Expr(1);
    else if (vi.square)
      r = run(*vi.square) / (Expr(2) * e);
    break;
  }
  case Op::Add: {
    std::vector<Expr> t;
    for (const auto &a : e.args()) {
      Expr d = run(a);
      if (!d.is_zero())
        t.push_back(d);
    }
    r = make_add(std::move(t));
    break;
  }
  case Op::Neg:
    r = -run(e.args()[0]);
    break;
  case Op::Mul: {
    std::vector<Expr> t;
    const auto &f = e.args();
    for (std::size_t k = 0; k < f.size(); ++k) {
      Expr d = run(f[k]);
      if (d.is_zero())
        continue;
      std::vector<Expr> g = f;
      g[k] = d;
      t.push_back(make_mul(std::move(g)));
    }
    r = make_add(std::move(t));
    break;
  }
  case Op::Div: {
    const Expr &a = e.args()[0], &b = e.args()[1];
    Expr da = run(a), db = run(b);
    r = da / b - (a * db) / pow(b, 2);
    break;
  }
  case Op::Pow: {
    const Expr &b = e.args()[0];
    int k = e.exponent();
    Expr db = run(b);
    r = make_mul({Expr(k), pow(b, k - 1), db});
    break;
  }
  }
  // Keep the key node alive alongside its result.
  memo_.emplace(e.node(), r);
  keep_.push_back(e);
  return r;
}

Expr diff(const Expr &e, int var) {
  Differentiator d;
  return d(e, var);
}

// ---------------------------------------------------------------- evaluation

void SamplePoint::set(int var, FieldScalar v) { values_[var] = std::move(v); }

const FieldScalar &SamplePoint::get(int var) const {
  auto it = values_.find(var);
  if (it == values_.end())
    throw EvalError("unbound variable", var_info(var).name);
  return it->second;
}

bool SamplePoint::has(int var) const { return values_.count(var) != 0; }

std::string SamplePoint::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto &[k, v] : values_) {
    if (!first)
      out += ", ";
    first = false;
    out += var_info(k).name + " = " + v.str();
  }
  return out + "}";
}

namespace {

std::string clip(const std::string &s) {
  return s.size() > 240 ? s.substr(0, 240) + "..." : s;
}

} // namespace

FieldScalar Evaluator::operator()(const Expr &e) {
  auto it = memo_.find(e.node());
  if (it != memo_.end())
    return it->second;
  FieldScalar v;
  switch (e.op()) {
  case Op::Const:
    return e.constant();
  case Op::Var:
    v = p_.get(e.var_id());
    break;
  case Op::Add:
    for (const auto &a : e.args())
      v += (*this)(a);
    break;
  case Op::Neg:
    v = -(*this)(e.args()[0]);
    break;
  case Op::Mul:
    v = FieldScalar(1);
    for (const auto &a : e.args()) {
      v *= (*this)(a);
      if (v.is_zero())
        break;
    }
    break;
  case Op::Div: {
    FieldScalar den = (*this)(e.args()[1]);
    if (den.is_zero())
      throw EvalError("division by zero", clip(e.args()[1].str()));
    v = (*this)(e.args()[0]) / den;
    break;
  }
  case Op::Pow: {
    FieldScalar b = (*this)(e.args()[0]);
    if (b.is_zero() && e.exponent() < 0)
      throw EvalError("division by zero", clip(e.args()[0].str()));
    v = b.pow(e.exponent());
    break;
  }
  }
  memo_.emplace(e.node(), v);
  keep_.push_back(e);
  return v;
}

FieldScalar eval(const Expr &e, const SamplePoint &p) {
  Evaluator ev(p);
  return ev(e);
}

} // namespace gkspin
