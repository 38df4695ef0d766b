#include "gkspin/models/models.hpp"

#include <stdexcept>

namespace gkspin {

namespace {

constexpr int dz1 = 0, dz1b = 1, dz2 = 2, dz2b = 3;

Blade bl(std::initializer_list<int> idx) {
  Blade b = 0;
  for (int j : idx)
    b |= Blade(1) << j;
  return b;
}

FormField term(Blade b, const Expr &c) { return FormField::blade(b, c); }

FieldScalar q(long a, long b) { return FieldScalar::rational(a, b); }

std::shared_ptr<const Patch> flat_patch() { return std::make_shared<Patch>(2, false); }
std::shared_ptr<const Patch> punctured_patch() { return std::make_shared<Patch>(2, true); }

struct HopfData {
  FormField phi, psi, h, vol;
  GenSection eta, zeta;
};

HopfData hopf_data(const Patch &p) {
  Expr z1 = p.coord(dz1), z1b = p.coord(dz1b), z2 = p.coord(dz2), z2b = p.coord(dz2b);
  Expr r2 = p.r2();
  Expr inv_r2 = Expr(1) / r2;
  // (1/sqrt2)(1/r)
  Expr norm = Expr(q(1, 2) * FieldScalar::sqrt2()) / p.r();

  HopfData d;
  // dz1 ^ e^{-i omega / r^2} and dz2 ^ e^{-i omega / r^2}
  FormField phi = term(bl({dz1}), Expr(1)) + term(bl({dz1, dz2, dz2b}), inv_r2);
  FormField psi = term(bl({dz2}), Expr(1)) + term(bl({dz1, dz1b, dz2}), inv_r2);
  d.phi = phi.scaled(norm);
  d.psi = psi.scaled(norm);

  Expr inv_r4 = Expr(1) / (r2 * r2);
  d.vol = term(p.volume_blade(), -inv_r4);
  // H = -i_{r d/dr} vol
  d.h = interior(radial_vector(p).vec, d.vol).scaled(Expr(-1));

  Expr half(q(1, 2)), c = Expr(q(-1, 2)) * inv_r2;
  d.eta = GenSection(p.dim());
  d.eta.cov[dz1b] = c * z1;
  d.eta.cov[dz1] = -(c * z1b);
  d.eta.vec[dz2] = -(half * z2);
  d.eta.vec[dz2b] = half * z2b;
  d.zeta = GenSection(p.dim());
  d.zeta.cov[dz2b] = c * z2;
  d.zeta.cov[dz2] = -(c * z2b);
  d.zeta.vec[dz1] = -(half * z1);
  d.zeta.vec[dz1b] = half * z1b;
  return d;
}

} // namespace

CurvatureData GKModel::curvature_data() const {
  CurvatureData d;
  d.phi = GaugedForm(phi);
  d.psi = GaugedForm(psi);
  d.eta = eta;
  d.zeta = zeta;
  d.h = h.is_zero() ? Twist() : Twist(h, *patch);
  d.vol = vol;
  return d;
}

GenSection radial_vector(const Patch &p) {
  GenSection e(p.dim());
  for (int j = 0; j < p.dim(); ++j)
    e.vec[j] = p.coord(j);
  return e;
}

GenSection log_radial_form(const Patch &p) {
  GenSection e(p.dim());
  Expr c = Expr(1) / (Expr(2) * p.r2());
  for (int j = 0; j < p.dim(); ++j)
    e.cov[j] = c * p.coord(Patch::partner(j));
  return e;
}

GenSection pin_element(const Patch &p, int sign) {
  GenSection e = radial_vector(p);
  GenSection f = log_radial_form(p);
  return sign > 0 ? e + f : e - f;
}

GKModel model_flat_kahler() {
  GKModel m;
  m.name = "flat-kahler";
  m.kind = ModelKind::FlatKahler;
  m.patch = flat_patch();
  const Patch &p = *m.patch;
  m.phi = term(bl({dz1, dz2}), Expr(q(1, 2)));
  // e^{-i omega / 2}, omega = (i/2) sum dz ^ dzb
  m.psi = exp_form(term(bl({dz1, dz1b}), Expr(q(1, 4))) + term(bl({dz2, dz2b}), Expr(q(1, 4))));
  m.vol = term(p.volume_blade(), Expr(q(-1, 4)));
  m.eta = GenSection(p.dim());
  m.zeta = GenSection(p.dim());
  m.expected_s = FieldScalar(0);
  m.orientation = 1;
  return m;
}

GKModel model_hopf_odd() {
  GKModel m;
  m.name = "hopf-odd";
  m.kind = ModelKind::HopfOdd;
  m.patch = punctured_patch();
  HopfData d = hopf_data(*m.patch);
  m.phi = d.phi;
  m.psi = d.psi;
  m.h = d.h;
  m.vol = d.vol;
  m.eta = d.eta;
  m.zeta = d.zeta;
  m.expected_s = FieldScalar::rational(1, 2);
  m.orientation = 1;
  return m;
}

GKModel model_hopf_even(int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("even Hopf model needs sign +1 or -1");
  GKModel m = model_hopf_odd();
  m.name = sign > 0 ? "hopf-even-plus" : "hopf-even-minus";
  m.kind = ModelKind::HopfEven;
  m.even_sign = sign;
  GenSection e = pin_element(*m.patch, sign);
  m.phi = spin_action(e, m.phi);
  m.psi = spin_action(e, m.psi);
  m.vol = m.vol.scaled(Expr(-sign));
  m.orientation = -sign;
  return m;
}

std::vector<std::string> model_names() {
  return {"flat-kahler", "hopf-odd", "hopf-even-plus", "hopf-even-minus"};
}

GKModel model_by_name(const std::string &name) {
  if (name == "flat-kahler")
    return model_flat_kahler();
  if (name == "hopf-odd")
    return model_hopf_odd();
  if (name == "hopf-even-plus")
    return model_hopf_even(1);
  if (name == "hopf-even-minus")
    return model_hopf_even(-1);
  throw std::out_of_range("unknown model " + name);
}

Expr random_real_polynomial(const Patch &p, std::mt19937_64 &rng, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 2);
  std::vector<Expr> parts;
  for (int t = 0; t < terms; ++t) {
    Expr mono(FieldScalar::gaussian(coef(rng), coef(rng)));
    for (int j = 0; j < p.dim(); ++j)
      mono = mono * pow(p.coord(j), deg(rng));
    parts.push_back(mono);
  }
  Expr s = make_add(parts);
  return s + conj(s);
}

ExactVector apply_at(const ExactMatrix &j, const GenSection &e, const SamplePoint &pt) {
  return j * eval_section(e, pt);
}

} // namespace gkspin
