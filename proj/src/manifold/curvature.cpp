#include "gkspin/manifold/curvature.hpp"

#include "gkspin/manifold/pointwise.hpp"

namespace gkspin {

GaugedForm conj(const GaugedForm &w) { return {conj(w.form), w.phase, -w.sign}; }

GaugedForm twisted_d(const GaugedForm &w, const Twist &h, const Patch &p) {
  FormField r = twisted_d(w.form, h, p);
  if (w.sign != 0) {
    // d(e^{i s p} X) = e^{i s p}(dX + i s dp ^ X)
    Expr c = Expr(FieldScalar::i() * FieldScalar(w.sign));
    r += wedge(one_form_field(differential(w.phase, p).cov), w.form).scaled(c);
  }
  return {r, w.phase, w.sign};
}

GaugedForm spin_action(const GenSection &e, const GaugedForm &w) {
  return {spin_action(e, w.form), w.phase, w.sign};
}

GaugedForm lie_derivative_h(const GenSection &e, const GaugedForm &w, const Twist &h,
                            const Patch &p) {
  GaugedForm a = twisted_d(spin_action(e, w), h, p);
  GaugedForm b = spin_action(e, twisted_d(w, h, p));
  return {a.form + b.form, w.phase, w.sign};
}

Expr mukai_top(const GaugedForm &a, const GaugedForm &b, const Patch &p) {
  bool cancel = (a.sign == 0 && b.sign == 0) ||
                (a.sign == -b.sign && same(a.phase, b.phase));
  if (!cancel)
    throw std::invalid_argument("pairing of spinors whose phases do not cancel");
  return mukai_pairing(a.form, b.form, p.volume_blade());
}

Regauged regauge(const GaugedForm &w, const GenSection &eta, const Expr &phase,
                 const Patch &patch) {
  if (w.sign != 0)
    throw std::invalid_argument("spinor already carries a phase");
  GenSection shift = differential(phase, patch).scaled(Expr(FieldScalar::i()));
  return {GaugedForm(w.form, phase, 1), eta + shift};
}

namespace {

FieldScalar i_pow_minus(int n) {
  FieldScalar r(1);
  for (int k = 0; k < n; ++k)
    r *= -FieldScalar::i();
  return r;
}

Expr vol_top(const CurvatureData &d, const Patch &p) { return d.vol.get(p.volume_blade()); }

} // namespace

std::pair<Expr, Expr> normalization_residuals(const CurvatureData &d, const Patch &p) {
  Expr c = Expr(i_pow_minus(p.n()));
  Expr v = vol_top(d, p);
  return {c * mukai_top(d.phi, conj(d.phi), p) - v, c * mukai_top(d.psi, conj(d.psi), p) - v};
}

Expr scalar_curvature(const CurvatureData &d, const Patch &p) {
  Expr c = Expr(i_pow_minus(p.n()));
  Expr a = mukai_top(d.psi, twisted_d(spin_action(d.eta, conj(d.psi)), d.h, p), p);
  Expr b = mukai_top(d.phi, twisted_d(spin_action(d.zeta, conj(d.phi)), d.h, p), p);
  return real_part(c * (a + b)) / vol_top(d, p);
}

Expr defn_scalar_curvature(const CurvatureData &d, const Patch &p) {
  Expr c = Expr(i_pow_minus(p.n()));
  Expr a = mukai_top(d.psi, lie_derivative_h(d.eta, conj(d.psi), d.h, p), p);
  Expr b = mukai_top(d.phi, lie_derivative_h(d.zeta, conj(d.phi), d.h, p), p);
  return real_part(c * (a + b)) / vol_top(d, p) + Expr(2) * pairing_tt(d.zeta, d.eta);
}

CurvatureData swapped(const CurvatureData &d) { return {d.psi, d.phi, d.zeta, d.eta, d.h, d.vol}; }

namespace {

ExactVector eval_differential(const Expr &f, const Patch &p, const SamplePoint &pt) {
  ExactVector v(2 * p.dim());
  for (int j = 0; j < p.dim(); ++j)
    v[p.dim() + j] = eval(diff(f, p.var(j)), pt);
  return v;
}

FieldScalar eval_directional(const ExactVector &e, const Expr &f, const Patch &p,
                             const SamplePoint &pt) {
  FieldScalar s;
  for (int j = 0; j < p.dim(); ++j)
    if (!e[j].is_zero())
      s += e[j] * eval(diff(f, p.var(j)), pt);
  return s;
}

} // namespace

FieldScalar poisson_bracket_psi(const Expr &f1, const Expr &f2, const FormField &psi,
                                const Patch &p, const SamplePoint &pt) {
  ExactMatrix j = induced_j(eval_form(psi, pt), p.dim());
  ExactVector a = j * eval_differential(f1, p, pt);
  ExactVector b = j * eval_differential(f2, p, pt);
  return eval_directional(a, f2, p, pt) - eval_directional(b, f1, p, pt);
}

ConstantStructure::ConstantStructure(const FormField &psi, const Patch &p, std::uint64_t seed,
                                     int trials) {
  Sampler s(p.domain(), seed);
  for (int t = 0; t < trials; ++t) {
    ExactMatrix j = induced_j(eval_form(psi, s.next()), p.dim());
    if (t == 0)
      j_ = j;
    else if (!(j == j_))
      throw std::invalid_argument("generalized complex structure is not constant");
  }
}

GenSection ConstantStructure::apply(const GenSection &e) const {
  int dim = e.dim();
  GenSection r(dim);
  for (int a = 0; a < 2 * dim; ++a) {
    std::vector<Expr> terms;
    for (int b = 0; b < 2 * dim; ++b) {
      const FieldScalar &m = j_(a, b);
      if (m.is_zero())
        continue;
      const Expr &x = b < dim ? e.vec[b] : e.cov[b - dim];
      terms.push_back(Expr(m) * x);
    }
    (a < dim ? r.vec[a] : r.cov[a - dim]) = make_add(terms);
  }
  return r;
}

Expr ConstantStructure::poisson(const Expr &f1, const Expr &f2, const Patch &p) const {
  GenSection a = apply(differential(f1, p)), b = apply(differential(f2, p));
  return directional(a.vec, f2, p) - directional(b.vec, f1, p);
}

namespace {

void require_hamiltonian(const Expr &f, const GenSection &zeta, const Patch &p, Sampler &s) {
  ZeroVerdict v = is_zero(directional(zeta.vec, f, p), s);
  if (!v)
    throw HamiltonianError("pi_T(zeta) f does not vanish at " + v.witness->str());
}

} // namespace

FormField modified_lie_derivative(const Expr &f, const ConstantStructure &j,
                                  const GenSection &zeta, const Twist &h, const FormField &w,
                                  const Patch &p, Sampler &s) {
  require_hamiltonian(f, zeta, p, s);
  FormField r = lie_derivative_h(j.apply(differential(f, p)), w, h, p);
  Expr c = Expr(FieldScalar(-2) * FieldScalar::i()) * f;
  return r + lie_derivative_h(zeta, w, h, p).scaled(c);
}

GenSection modified_lie_derivative(const Expr &f, const ConstantStructure &j,
                                   const GenSection &zeta, const Twist &h, const GenSection &x,
                                   const Patch &p, Sampler &s) {
  require_hamiltonian(f, zeta, p, s);
  GenSection r = lie_derivative_h(j.apply(differential(f, p)), x, h, p);
  Expr c = Expr(FieldScalar(-2) * FieldScalar::i()) * f;
  return r + lie_derivative_h(zeta, x, h, p).scaled(c);
}

FormField b_transform(const FormField &phi, const FormField &b) {
  for (const auto &[bl, c] : b.terms())
    if (grade_of(bl) != 2)
      throw std::invalid_argument("b-field must be a 2-form");
  return wedge(exp_form(b), phi);
}

FormField b_transform_twist(const FormField &h, const FormField &b, const Patch &p) {
  return h - exterior_d(b, p);
}

GenSection b_transform(const GenSection &e, const FormField &b) {
  GenSection r = e;
  FormField ib = interior(e.vec, b);
  for (const auto &[bl, c] : ib.terms())
    r.cov[std::countr_zero(bl)] -= c;
  return r;
}

} // namespace gkspin
