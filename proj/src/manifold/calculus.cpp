#include "gkspin/manifold/calculus.hpp"

namespace gkspin {

Twist::Twist(FormField h, const Patch &p, std::uint64_t seed, int trials) : h_(std::move(h)) {
  for (const auto &[b, c] : h_.terms())
    if (grade_of(b) != 3)
      throw TwistError("twist is not a 3-form");
  Sampler s(p.domain(), seed);
  if (!form_is_zero(h_ - conj(h_), s, trials))
    throw TwistError("twist is not real");
  ZeroVerdict closed = form_is_zero(exterior_d(h_, p), s, trials);
  if (!closed)
    throw TwistError("twist is not closed: dH != 0 at " + closed.witness->str());
}

FormField twisted_d(const FormField &w, const Twist &h, const Patch &p) {
  FormField r = exterior_d(w, p);
  if (!h.trivial())
    r += wedge(h.form(), w);
  return r;
}

std::vector<Expr> vector_bracket(const std::vector<Expr> &u, const std::vector<Expr> &v,
                                 const Patch &p) {
  std::vector<Expr> r(u.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    r[j] = directional(u, v[j], p) - directional(v, u[j], p);
  return r;
}

std::vector<Expr> lie_one_form(const std::vector<Expr> &u, const std::vector<Expr> &xi,
                               const Patch &p) {
  std::vector<Expr> r(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    std::vector<Expr> terms{directional(u, xi[j], p)};
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!xi[k].is_zero())
        terms.push_back(xi[k] * diff(u[k], p.var(static_cast<int>(j))));
    r[j] = make_add(terms);
  }
  return r;
}

namespace {

Expr contract(const std::vector<Expr> &v, const std::vector<Expr> &xi) {
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < v.size(); ++j)
    terms.push_back(v[j] * xi[j]);
  return make_add(terms);
}

// -i_v i_u H as covector coefficients
std::vector<Expr> twist_term(const std::vector<Expr> &u, const std::vector<Expr> &v,
                             const Twist &h) {
  std::vector<Expr> r(u.size(), Expr(0));
  if (h.trivial())
    return r;
  FormField one = interior(v, interior(u, h.form()));
  for (const auto &[b, c] : one.terms())
    r[std::countr_zero(b)] = -c;
  return r;
}

} // namespace

GenSection courant_bracket(const GenSection &a, const GenSection &b, const Twist &h,
                           const Patch &p) {
  GenSection r(p.dim());
  r.vec = vector_bracket(a.vec, b.vec, p);
  auto la = lie_one_form(a.vec, b.cov, p);
  auto lb = lie_one_form(b.vec, a.cov, p);
  Expr g = contract(a.vec, b.cov) - contract(b.vec, a.cov);
  auto tw = twist_term(a.vec, b.vec, h);
  FieldScalar half = FieldScalar::rational(1, 2);
  for (int j = 0; j < p.dim(); ++j)
    r.cov[j] = la[j] - lb[j] - half * diff(g, p.var(j)) + tw[j];
  return r;
}

GenSection dorfman_bracket(const GenSection &a, const GenSection &b, const Twist &h,
                           const Patch &p) {
  return courant_bracket(a, b, h, p) + differential(pairing_tt(a, b), p);
}

FormField lie_derivative_h(const GenSection &e, const FormField &w, const Twist &h,
                           const Patch &p) {
  return twisted_d(spin_action(e, w), h, p) + spin_action(e, twisted_d(w, h, p));
}

GenSection lie_derivative_h(const GenSection &e, const GenSection &x, const Twist &h,
                            const Patch &p) {
  return dorfman_bracket(e, x, h, p);
}

} // namespace gkspin
