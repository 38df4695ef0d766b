#include "gkspin/models/models.hpp"

#include <functional>

namespace gkspin {

namespace {

using PointCheck = std::function<std::optional<std::string>(const SamplePoint &)>;

// Runs a pointwise predicate at the sampled points; the first failure (or
// exception) becomes the witness.
Check pointwise(const std::string &id, const std::string &anchor,
                const std::vector<SamplePoint> &pts, const PointCheck &f) {
  for (const auto &pt : pts) {
    std::optional<std::string> why;
    try {
      why = f(pt);
    } catch (const std::exception &e) {
      why = e.what();
    }
    if (why)
      return fail_check(id, anchor, *why + " at " + pt.str());
  }
  return pass_check(id, anchor).value("points", std::to_string(pts.size()));
}

Check zero_check(const std::string &id, const std::string &anchor,
                 const std::function<ZeroVerdict()> &f) {
  try {
    ZeroVerdict v = f();
    if (v)
      return pass_check(id, anchor).value("trials", std::to_string(v.trials));
    return fail_check(id, anchor,
                      "value " + v.witness_value.str() + " at " + v.witness->str());
  } catch (const std::exception &e) {
    return fail_check(id, anchor, e.what());
  }
}

} // namespace

Report verify_model(const GKModel &m, std::uint64_t seed, int trials) {
  Report rep("verify " + m.name, seed, trials);
  const Patch &p = *m.patch;
  int dim = p.dim();
  SamplingDomain dom = p.domain();
  auto sampler = [&](std::uint64_t salt) { return Sampler(dom, seed * 1000003 + salt); };

  std::vector<SamplePoint> pts;
  {
    Sampler s = sampler(1);
    for (int t = 0; t < trials; ++t)
      pts.push_back(s.next());
  }

  // twist
  Twist h;
  try {
    if (!m.h.is_zero())
      h = Twist(m.h, p, seed, trials);
    rep.add(pass_check("twist.real-closed", "H is a real closed 3-form"));
  } catch (const std::exception &e) {
    rep.add(fail_check("twist.real-closed", "H is a real closed 3-form", e.what()));
  }

  rep.add(pointwise("spinors.pure-nondegenerate",
                    "phi and psi are pure and <s, conj s>_s != 0", pts,
                    [&](const SamplePoint &pt) -> std::optional<std::string> {
                      for (const auto *w : {&m.phi, &m.psi}) {
                        PointForm f = eval_form(*w, pt);
                        if (f.is_zero() || !is_pure(f, dim))
                          return std::string(w == &m.phi ? "phi" : "psi") + " not pure";
                        if (!is_nondegenerate(f, dim))
                          return std::string(w == &m.phi ? "phi" : "psi") + " degenerate";
                      }
                      return std::nullopt;
                    }));

  rep.add(pointwise("pair.generalized-kahler",
                    "J_phi, J_psi real, orthogonal, square to -1, commute, -J_phi J_psi positive",
                    pts, [&](const SamplePoint &pt) -> std::optional<std::string> {
                      PointForm a = eval_form(m.phi, pt), b = eval_form(m.psi, pt);
                      ExactMatrix minus_one = ExactMatrix::identity(2 * dim).scaled(FieldScalar(-1));
                      for (const auto &f : {a, b}) {
                        ExactMatrix j = induced_j(f, dim);
                        if (!(j * j == minus_one))
                          return "J^2 != -1";
                        if (!is_real_operator(j))
                          return "J not real";
                        if (!preserves_pairing(j))
                          return "J not orthogonal";
                      }
                      GKCheck g = is_gk_pair(a, b, dim);
                      if (!g.commute)
                        return "J_phi and J_psi do not commute";
                      if (!g.positive)
                        return "generalized metric not positive definite";
                      return std::nullopt;
                    }));

  CurvatureData cd;
  cd.phi = GaugedForm(m.phi);
  cd.psi = GaugedForm(m.psi);
  cd.eta = m.eta;
  cd.zeta = m.zeta;
  cd.h = h;
  cd.vol = m.vol;

  const std::string norm_anchor = "vol = i^-n <phi, conj phi>_s = i^-n <psi, conj psi>_s";
  rep.add(zero_check("normalization", norm_anchor,
                     [&]() {
                       auto [a, b] = normalization_residuals(cd, p);
                       Sampler s = sampler(2);
                       return is_zero(std::vector<Expr>{a, b}, s, trials);
                     }));

  FormField dphi = twisted_d(m.phi, h, p);
  FormField dpsi = twisted_d(m.psi, h, p);
  rep.add(zero_check("integrability.phi", "d_H phi = eta . phi",
                     [&]() {
                       Sampler s = sampler(3);
                       return form_is_zero(dphi - spin_action(m.eta, m.phi), s, trials);
                     }));
  rep.add(zero_check("integrability.psi", "d_H psi = zeta . psi",
                     [&]() {
                       Sampler s = sampler(4);
                       return form_is_zero(dpsi - spin_action(m.zeta, m.psi), s, trials);
                     }));

  rep.add(pointwise("integrability.pointwise",
                    "d_H s = (eta + N) . s solved pointwise agrees with eta, zeta and N = 0", pts,
                    [&](const SamplePoint &pt) -> std::optional<std::string> {
                      EtaN a = extract_eta_n(eval_form(m.phi, pt), eval_form(dphi, pt), dim);
                      EtaN b = extract_eta_n(eval_form(m.psi, pt), eval_form(dpsi, pt), dim);
                      if (!(a.eta == eval_section(m.eta, pt)))
                        return "eta differs from the solved value";
                      if (!(b.eta == eval_section(m.zeta, pt)))
                        return "zeta differs from the solved value";
                      if (!a.n.is_zero() || !b.n.is_zero())
                        return "nonzero N";
                      return std::nullopt;
                    }));

  rep.add(pointwise("nijenhuis.annihilates", "N . psi = 0 for N of phi, and N . phi = 0 for N of psi",
                    pts, [&](const SamplePoint &pt) -> std::optional<std::string> {
                      PointForm a = eval_form(m.phi, pt), b = eval_form(m.psi, pt);
                      EtaN ea = extract_eta_n(a, eval_form(dphi, pt), dim);
                      EtaN eb = extract_eta_n(b, eval_form(dpsi, pt), dim);
                      if (!act_multivector(ea.n, b, dim).is_zero())
                        return "N_phi . psi != 0";
                      if (!act_multivector(eb.n, a, dim).is_zero())
                        return "N_psi . phi != 0";
                      return std::nullopt;
                    }));

  Expr s_dh = scalar_curvature(cd, p);
  Check sc = zero_check("curvature.value",
                        "S vol = Re(i^-n <psi, d_H(eta . conj psi)>_s + i^-n <phi, d_H(zeta . conj phi)>_s)",
                        [&]() {
                          Sampler s = sampler(5);
                          return is_zero(s_dh - Expr(m.expected_s), s, trials);
                        });
  sc.value("expected_S", m.expected_s.str());
  try {
    sc.value("S_at_first_point", eval(s_dh, pts.front()).str());
  } catch (const std::exception &) {
  }
  rep.add(sc);

  rep.add(zero_check("curvature.definition-agrees",
                     "S from L^H_eta, L^H_zeta and 2<zeta, eta> equals the d_H form",
                     [&]() {
                       Sampler s = sampler(6);
                       return is_zero(defn_scalar_curvature(cd, p) - s_dh, s, trials);
                     }));

  rep.add(zero_check("curvature.gauge-invariance",
                     "S unchanged under phi -> e^{ip} phi, psi -> e^{iq} psi (5 phases)",
                     [&]() {
                       std::mt19937_64 rng(seed + 7);
                       ZeroVerdict last;
                       for (int k = 0; k < 5; ++k) {
                         Expr a = random_real_polynomial(p, rng), b = random_real_polynomial(p, rng);
                         Regauged ra = regauge(cd.phi, cd.eta, a, p);
                         Regauged rb = regauge(cd.psi, cd.zeta, b, p);
                         CurvatureData g{ra.spinor, rb.spinor, ra.eta, rb.eta, cd.h, cd.vol};
                         Sampler s = sampler(8 + k);
                         last = is_zero(scalar_curvature(g, p) - s_dh, s, trials);
                         if (!last)
                           return last;
                       }
                       return last;
                     }));

  rep.add(zero_check("curvature.symmetry", "S(J_phi, J_psi) = S(J_psi, J_phi)",
                     [&]() {
                       Sampler s = sampler(13);
                       return is_zero(scalar_curvature(swapped(cd), p) - s_dh, s, trials);
                     }));

  if (m.kind == ModelKind::FlatKahler) {
    Check c = pass_check("flat.type-numbers", "type numbers (2, 0) of dz1^dz2 and e^{-i omega/2}");
    int ta = type_number(eval_form(m.phi, pts.front()));
    int tb = type_number(eval_form(m.psi, pts.front()));
    c.value("type_phi", std::to_string(ta)).value("type_psi", std::to_string(tb));
    if (ta != 2 || tb != 0) {
      c.status = Status::Fail;
      c.witness = "types " + std::to_string(ta) + ", " + std::to_string(tb);
    }
    rep.add(c);
  }

  GKModel odd = m.kind == ModelKind::HopfEven ? model_hopf_odd() : m;
  if (m.kind == ModelKind::HopfOdd || m.kind == ModelKind::HopfEven) {
    GenSection rdr = radial_vector(p), drr = log_radial_form(p);
    rep.add(pointwise("hopf.key-lemma", "-J_psi J_phi (dr/r) = (1/2) r d/dr", pts,
                      [&](const SamplePoint &pt) -> std::optional<std::string> {
                        ExactMatrix jp = induced_j(eval_form(odd.phi, pt), dim);
                        ExactMatrix js = induced_j(eval_form(odd.psi, pt), dim);
                        ExactVector v = (js * (jp * eval_section(drr, pt)));
                        ExactVector w = eval_section(rdr, pt);
                        for (std::size_t a = 0; a < v.size(); ++a)
                          if (!(v[a] + FieldScalar::rational(1, 2) * w[a]).is_zero())
                            return "mismatch in component " + std::to_string(a);
                        return std::nullopt;
                      }));
    rep.add(pointwise("hopf.eta-closed-form", "eta = i J_phi(dr/r), zeta = i J_psi(dr/r)", pts,
                      [&](const SamplePoint &pt) -> std::optional<std::string> {
                        ExactMatrix jp = induced_j(eval_form(odd.phi, pt), dim);
                        ExactMatrix js = induced_j(eval_form(odd.psi, pt), dim);
                        ExactVector d = eval_section(drr, pt);
                        ExactVector a = (jp * d), b = (js * d);
                        ExactVector ea = eval_section(m.eta, pt), eb = eval_section(m.zeta, pt);
                        for (std::size_t k = 0; k < a.size(); ++k) {
                          if (!(FieldScalar::i() * a[k] - ea[k]).is_zero())
                            return "eta mismatch in component " + std::to_string(k);
                          if (!(FieldScalar::i() * b[k] - eb[k]).is_zero())
                            return "zeta mismatch in component " + std::to_string(k);
                        }
                        return std::nullopt;
                      }));
  }

  if (m.kind == ModelKind::HopfEven) {
    GenSection e = pin_element(p, m.even_sign);
    rep.add(zero_check("hopf-even.pin-square", "E . E = +-1 on forms",
                       [&]() {
                         Sampler s = sampler(14);
                         FormField w = odd.phi + odd.psi + odd.h;
                         FormField ee = spin_action(e, spin_action(e, w));
                         return form_is_zero(ee - w.scaled(Expr(m.even_sign)), s, trials);
                       }));
    rep.add(pointwise("hopf-even.anticommute", "<E, J_phi dr/r> = 0", pts,
                      [&](const SamplePoint &pt) -> std::optional<std::string> {
                        ExactMatrix jp = induced_j(eval_form(odd.phi, pt), dim);
                        ExactVector v = jp * eval_section(log_radial_form(p), pt);
                        if (!pairing_point(eval_section(e, pt), v).is_zero())
                          return "nonzero pairing";
                        return std::nullopt;
                      }));
    rep.add(zero_check("hopf-even.volume-sign", "vol_E = -+ vol of the odd model",
                       [&]() {
                         Sampler s = sampler(15);
                         FormField d = m.vol + odd.vol.scaled(Expr(m.even_sign));
                         return form_is_zero(d, s, trials);
                       }));
  }
  return rep;
}

} // namespace gkspin
