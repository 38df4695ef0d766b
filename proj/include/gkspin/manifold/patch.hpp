#pragma once

#include "gkspin/clifford/multivector.hpp"
#include "gkspin/scalar/expr.hpp"
#include "gkspin/scalar/sampler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkspin {

using FormField = Multivector<Expr>;
using PointForm = Multivector<FieldScalar>;

// Complex chart with coordinates z_k and conjugates.  Real generator j of the
// form algebra is dz_{j/2} for even j and its conjugate for odd j, so
// conjugation swaps j and j ^ 1.
class Patch {
public:
  // n coordinates named z1..zn / z1b..znb.  A punctured patch removes the
  // origin and carries the radius r with r^2 = sum z_k zb_k.
  Patch(int n, bool punctured);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  static int partner(int j) { return j ^ 1; }

  int var(int j) const { return vars_[j]; }
  Expr coord(int j) const { return Expr::var(vars_[j]); }
  std::optional<int> radius() const { return radius_; }
  Expr r() const;
  Expr r2() const;

  const VarTable &table() const { return table_; }
  Expr parse(const std::string &text) const { return parse_expr(text, table_); }
  const std::vector<std::string> &generator_names() const { return names_; }
  const std::vector<std::string> &vector_names() const { return vnames_; }
  Blade volume_blade() const { return (Blade(1) << dim()) - 1; }

  void add_constraint(const Expr &e) { constraints_.push_back(e); }
  SamplingDomain domain() const;

private:
  int n_;
  std::vector<int> vars_;
  std::optional<int> radius_;
  VarTable table_;
  std::vector<std::string> names_, vnames_;
  std::vector<Expr> constraints_;
};

// Section of the complexified T + T*: coefficients of d/dx_j and dx_j.
struct GenSection {
  std::vector<Expr> vec, cov;

  GenSection() = default;
  explicit GenSection(int dim) : vec(dim, Expr(0)), cov(dim, Expr(0)) {}
  static GenSection vector_field(std::vector<Expr> v);
  static GenSection one_form(std::vector<Expr> c);

  int dim() const { return static_cast<int>(vec.size()); }
  GenSection &operator+=(const GenSection &o);
  GenSection &operator-=(const GenSection &o);
  friend GenSection operator+(GenSection a, const GenSection &b) { return a += b; }
  friend GenSection operator-(GenSection a, const GenSection &b) { return a -= b; }
  GenSection operator-() const;
  GenSection scaled(const Expr &c) const;
  std::string str(const Patch &p) const;
};

// Sign and image of a blade under a permutation of generator indices.
std::pair<Blade, int> permute_blade(Blade b, const std::vector<int> &perm);

FormField conj(const FormField &w);
GenSection conj(const GenSection &e);
PointForm conj_point(const PointForm &w);

// <v + xi, u + eta> = (xi(u) + eta(v)) / 2
Expr pairing_tt(const GenSection &a, const GenSection &b);

// i_v w + xi ^ w
FormField spin_action(const GenSection &e, const FormField &w);
FormField interior(const std::vector<Expr> &v, const FormField &w);
FormField one_form_field(const std::vector<Expr> &c);

FormField exterior_d(const FormField &w, const Patch &p);
GenSection differential(const Expr &f, const Patch &p);
// v(f)
Expr directional(const std::vector<Expr> &v, const Expr &f, const Patch &p);

// Real part (f + conj f) / 2.
Expr real_part(const Expr &f);

PointForm eval_form(const FormField &w, const SamplePoint &pt);
// Stacked [vector; covector] coordinates at a point.
std::vector<FieldScalar> eval_section(const GenSection &e, const SamplePoint &pt);

// Every coefficient of every form passes the randomized zero test.
ZeroVerdict form_is_zero(const FormField &w, Sampler &s, int trials = kDefaultTrials);
ZeroVerdict section_is_zero(const GenSection &e, Sampler &s, int trials = kDefaultTrials);

} // namespace gkspin
