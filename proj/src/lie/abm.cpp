#include "gkspin/lie/abm.hpp"

namespace gkspin {

namespace {

ExactVector add(const ExactVector &a, const ExactVector &b, const FieldScalar &c = FieldScalar(1)) {
  ExactVector r = a;
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] += c * b[k];
  return r;
}

ExactVector neg(const ExactVector &a) {
  ExactVector r = a;
  for (auto &x : r)
    x = -x;
  return r;
}

FieldScalar trace(const ExactMatrix &m) {
  FieldScalar t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    t += m(i, i);
  return t;
}

FieldScalar small_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
  return FieldScalar::rational(num(rng), den(rng));
}

} // namespace

InvSection abm_section(const ExactVector &x, const ExactVector &xp) {
  return {x, neg(xp), x, xp};
}

ExactMatrix adjoint_matrix(const CompactLieData &d, const ExactMatrix &g) {
  if (d.matrices.empty())
    throw std::invalid_argument("algebra has no matrix realization");
  int m = d.dim();
  auto ginv = g.inverse();
  if (!ginv)
    throw std::invalid_argument("group element is singular");
  auto binv = d.b.inverse();
  ExactMatrix ad(m, m);
  for (int c = 0; c < m; ++c) {
    ExactMatrix y = g * d.matrices[c] * *ginv;
    ExactVector rhs(m);
    for (int a = 0; a < m; ++a)
      rhs[a] = -trace(d.matrices[a] * y);
    ExactVector coords = *binv * rhs;
    for (int a = 0; a < m; ++a)
      ad(a, c) = coords[a];
  }
  return ad;
}

TrivValue abm_value(const CompactLieData &, const ExactMatrix &ad_inv, const InvSection &s) {
  return {add(s.xl, ad_inv * s.xr), add(s.fl, ad_inv * s.fr)};
}

FieldScalar abm_pairing(const CompactLieData &d, const ExactMatrix &ad_inv, const InvSection &a,
                        const InvSection &b) {
  TrivValue va = abm_value(d, ad_inv, a), vb = abm_value(d, ad_inv, b);
  return (d.form(va.c, vb.v) + d.form(vb.c, va.v)) * FieldScalar::rational(1, 2);
}

TrivValue abm_bracket(const CompactLieData &d, const ExactMatrix &ad_inv, const InvSection &a,
                      const InvSection &b, int twist_sign) {
  auto br = [&](const ExactVector &x, const ExactVector &y) { return d.bracket(x, y); };
  FieldScalar half = FieldScalar::rational(1, 2);

  // [u, v]: [x^L, y^L] = [x, y]^L, [x^R, y^R] = -[x, y]^R, mixed terms vanish
  ExactVector vec = add(br(a.xl, b.xl), ad_inv * br(a.xr, b.xr), FieldScalar(-1));

  // L_u beta with L_{x^L} B(theta^L, c) = B(theta^L, [x, c]),
  // L_{x^R} B(theta^R, c) = -B(theta^R, [x, c]) and the mixed ones zero
  auto lie = [&](const InvSection &u, const InvSection &f) {
    return add(br(u.xl, f.fl), ad_inv * br(u.xr, f.fr), FieldScalar(-1));
  };
  ExactVector form = add(lie(a, b), lie(b, a), FieldScalar(-1));

  // -(1/2) d(i_u beta - i_v alpha).  Only the mixed contractions
  // i_{x^L} B(theta^R, c) = B(Ad_g x, c) and i_{x^R} B(theta^L, c) = B(x, Ad_g c)
  // are non-constant; d B(Ad_g x, c) = B(theta^L, [x, Ad_g^-1 c]).
  auto d_contract = [&](const InvSection &u, const InvSection &f) {
    return add(br(u.xl, ad_inv * f.fr), br(f.fl, ad_inv * u.xr));
  };
  ExactVector exact = add(d_contract(a, b), d_contract(b, a), FieldScalar(-1));
  form = add(form, exact, -half);

  // -i_v i_u H with H(x, y, z) = twist_sign B([x, y], z)
  ExactVector u = add(a.xl, ad_inv * a.xr), v = add(b.xl, ad_inv * b.xr);
  form = add(form, br(u, v), FieldScalar(-twist_sign));
  return {vec, form};
}

ExactMatrix random_group_point(const CompactLieData &d, std::mt19937_64 &rng) {
  if (d.matrices.empty())
    throw std::invalid_argument("algebra has no matrix realization");
  std::size_t n = d.matrices.front().rows();
  FieldScalar i = FieldScalar::i();
  ExactMatrix g = ExactMatrix::identity(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // stereographic image of a rational point of R^3 on S^3
    FieldScalar x1 = small_rational(rng), x2 = small_rational(rng), x3 = small_rational(rng);
    FieldScalar s = x1 * x1 + x2 * x2 + x3 * x3;
    FieldScalar inv = (FieldScalar(1) + s).inverse();
    FieldScalar qa = (FieldScalar(1) - s) * inv, qb = FieldScalar(2) * x1 * inv,
                qc = FieldScalar(2) * x2 * inv, qd = FieldScalar(2) * x3 * inv;
    ExactMatrix block = ExactMatrix::identity(n);
    block(k, k) = qa + qb * i;
    block(k, k + 1) = qc + qd * i;
    block(k + 1, k) = -qc + qd * i;
    block(k + 1, k + 1) = qa - qb * i;
    g = g * block;
  }
  FieldScalar t = small_rational(rng);
  FieldScalar phase = (FieldScalar(1) - t * t + FieldScalar(2) * t * i) / (FieldScalar(1) + t * t);
  return g.scaled(phase);
}

} // namespace gkspin
