#include "gkspin/lie/lie_gk.hpp"

namespace gkspin {

namespace {

std::vector<std::vector<FieldScalar>> half_gram(const CompactLieData &d) {
  std::vector<std::vector<FieldScalar>> g(d.dim(), std::vector<FieldScalar>(d.dim()));
  for (int a = 0; a < d.dim(); ++a)
    for (int c = 0; c < d.dim(); ++c)
      g[a][c] = d.b(a, c) * FieldScalar::rational(1, 2);
  return g;
}

CompactLieData validated(CompactLieData d) {
  validate_lie(d);
  return d;
}

int element_parity(const DoubleElement &z) {
  int p = z.l.is_zero() ? parity(z.r) : parity(z.l);
  if (p < 0 || (!z.l.is_zero() && !z.r.is_zero() && parity(z.r) != p))
    throw std::invalid_argument("element of the double is not homogeneous");
  return p;
}

FieldScalar small_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return FieldScalar::rational(num(rng), den(rng));
}

} // namespace

DoubleElement diag_e(const ClElement &y) { return {y, y}; }
DoubleElement anti_a(const ClElement &y) { return {y, -y}; }

LieGK::LieGK(CompactLieData d)
    : d_(validated(std::move(d))), space_(d_.basis, half_gram(d_)), xi_(Algebra::Exterior) {
  int m = d_.dim();
  auto ginv = d_.b.inverse();
  if (!ginv)
    throw LieDataError({"B is degenerate"});
  std::vector<ExactVector> dual(m);
  for (int a = 0; a < m; ++a)
    dual[a] = ginv->column(a);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        FieldScalar v = d_.form(dual[a], d_.bracket(dual[b], dual[c]));
        if (!v.is_zero())
          xi_.add((Blade(1) << a) | (Blade(1) << b) | (Blade(1) << c), v);
      }
  q_xi_ = q_map(xi_, space_);

  p_ = ExactVector(m);
  for (auto [th, thb] : d_.roots) {
    ExactVector pa(m);
    for (auto [t, tb] : d_.cartan)
      for (int k : {t, tb}) {
        ClElement w = wedge(ClElement::generator(k),
                            wedge(ClElement::generator(th), ClElement::generator(thb)));
        const auto &[blade, sign] = *w.terms().begin();
        pa[k] = xi_.get(blade) * sign * FieldScalar::rational(1, 2);
      }
    for (int k = 0; k < m; ++k)
      p_[k] += pa[k];
    p_alpha_.push_back(std::move(pa));
  }
  ExactVector s = d_.conj_vector(p_);
  for (int k = 0; k < m; ++k)
    s[k] += p_[k];
  if (s != ExactVector(m))
    throw LieDataError({"P is not pure imaginary"});
}

ClElement LieGK::vec(const ExactVector &v) const {
  ClElement r(Algebra::Clifford);
  for (int a = 0; a < d_.dim(); ++a)
    if (!v[a].is_zero())
      r.add(Blade(1) << a, v[a]);
  return r;
}

ClElement LieGK::phi() const {
  ClElement x = one();
  for (auto [t, tb] : d_.cartan)
    x = mul(x, gen(t));
  for (auto [a, ab] : d_.roots)
    x = mul(x, gen(a));
  return x;
}

ClElement LieGK::psi() const {
  ClElement x = one();
  for (auto [t, tb] : d_.cartan)
    x = mul(mul(x, gen(t)), gen(tb));
  for (auto [a, ab] : d_.roots)
    x = mul(mul(x, gen(a)), gen(ab));
  return x;
}

ClElement LieGK::conj(const ClElement &x) const {
  ClElement r(Algebra::Clifford);
  for (const auto &[b, c] : x.terms()) {
    auto it = conj_cache_.find(b);
    if (it == conj_cache_.end()) {
      ClElement w = one();
      for (Blade bb = b; bb; bb &= bb - 1)
        w = mul(w, gen(d_.conj[std::countr_zero(bb)]));
      it = conj_cache_.emplace(b, std::move(w)).first;
    }
    r += it->second.scaled(c.conj());
  }
  return r;
}

ClElement LieGK::graded_commutator(const ClElement &a, const ClElement &b) const {
  int pa = parity(a), pb = parity(b);
  if (pa < 0 || pb < 0)
    throw std::invalid_argument("graded commutator needs homogeneous arguments");
  ClElement ab = mul(a, b), ba = mul(b, a);
  return (pa & pb) ? ab + ba : ab - ba;
}

ClElement LieGK::rho(const DoubleElement &z, const ClElement &x) const {
  int px = parity(x);
  if (px < 0)
    throw std::invalid_argument("rho needs a homogeneous target");
  int pz = element_parity(z);
  ClElement xr = mul(x, z.r);
  return (pz & px) ? mul(z.l, x) + xr : mul(z.l, x) - xr;
}

ClElement LieGK::d_cl(const ClElement &x) const { return -graded_commutator(q_xi_, x); }

FieldScalar LieGK::pairing(const ClElement &x, const ClElement &y) const {
  return cl_pairing(x, y, space_);
}

LieCurvature LieGK::curvature(const ClElement &phi, const ClElement &psi) const {
  ClElement p = vec(p_);
  auto term = [&](const ClElement &s, const DoubleElement &z) {
    ClElement sb = conj(s);
    FieldScalar den = pairing(s, sb);
    if (den.is_zero())
      throw LieDataError({"(s, conj s) vanishes"});
    return (-pairing(s, d_cl(rho(z, sb))) / den).real_part();
  };
  LieCurvature c;
  c.term_psi = term(psi, anti_a(p));
  c.term_phi = term(phi, diag_e(p));
  c.s = c.term_psi + c.term_phi;
  return c;
}

FieldScalar pin_norm(const LieGK &g, const PinFactor &e) {
  return g.data().form(e.u1, e.u1) - g.data().form(e.u2, e.u2);
}

DoubleElement pin_element(const LieGK &g, const PinFactor &e) {
  return {g.vec(e.u1), g.vec(e.u2)};
}

ClElement apply_pin(const LieGK &g, const std::vector<PinFactor> &chain, const ClElement &x) {
  ClElement y = x;
  for (const auto &e : chain) {
    FieldScalar n = pin_norm(g, e);
    if (n != FieldScalar(1) && n != FieldScalar(-1))
      throw std::invalid_argument("Pin factor has B_d(E, E) = " + n.str() + ", not +-1");
    if (g.data().conj_vector(e.u1) != e.u1 || g.data().conj_vector(e.u2) != e.u2)
      throw std::invalid_argument("Pin factor is not real");
    y = g.rho(pin_element(g, e), y);
  }
  return y;
}

PinFactor random_pin_factor(const LieGK &g, std::mt19937_64 &rng) {
  const auto &d = g.data();
  std::uniform_int_distribution<std::size_t> pick(0, d.cartan.size() - 1);
  FieldScalar eps = (rng() & 1) ? FieldScalar(1) : FieldScalar(-1);
  FieldScalar q1, q2, k;
  do {
    q1 = small_rational(rng);
    q2 = small_rational(rng);
    k = eps - q1 * q1 + q2 * q2;
  } while (k.is_zero());
  FieldScalar tau;
  do
    tau = small_rational(rng);
  while (tau.is_zero());
  // p1^2 - p2^2 = k
  FieldScalar half = FieldScalar::rational(1, 2);
  FieldScalar p1 = (tau + k / tau) * half, p2 = (k / tau - tau) * half;
  auto real_cartan = [&](const FieldScalar &p, const FieldScalar &q) {
    // c t + conj(c) tbar with c = (p + q i)/sqrt2, so B(u, u) = p^2 + q^2
    auto [t, tb] = d.cartan[pick(rng)];
    FieldScalar c = (p + q * FieldScalar::i()) * FieldScalar::sqrt2().inverse();
    ExactVector u(d.dim());
    u[t] = c;
    u[tb] = c.conj();
    return u;
  };
  return {real_cartan(p1, q1), real_cartan(p2, q2)};
}

} // namespace gkspin
