#include "gkspin/lie/abm.hpp"
#include "gkspin/lie/lie_gk.hpp"

#include <functional>

namespace gkspin {

namespace {

using Witness = std::optional<std::string>;

Check run(const std::string &id, const std::string &anchor, const std::function<Witness()> &f) {
  try {
    if (auto w = f())
      return fail_check(id, anchor, *w);
    return pass_check(id, anchor);
  } catch (const std::exception &e) {
    return fail_check(id, anchor, e.what());
  }
}

FieldScalar small_gaussian(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 5);
  return FieldScalar::rational(num(rng), den(rng)) +
         FieldScalar::rational(num(rng), den(rng)) * FieldScalar::i();
}

ExactVector random_vector(const CompactLieData &d, std::mt19937_64 &rng) {
  ExactVector v(d.dim());
  for (auto &x : v)
    x = small_gaussian(rng);
  return v;
}

ClElement random_element(const LieGK &g, std::mt19937_64 &rng, int par) {
  int m = g.data().dim();
  std::uniform_int_distribution<Blade> pick(0, (Blade(1) << m) - 1);
  ClElement x(Algebra::Clifford);
  while (x.terms().size() < 4) {
    Blade b = pick(rng);
    if ((std::popcount(b) & 1) == par)
      x.add(b, small_gaussian(rng));
  }
  return x;
}

std::string vec_str(const CompactLieData &d, const ExactVector &v) {
  std::string s;
  for (int a = 0; a < d.dim(); ++a)
    if (!v[a].is_zero())
      s += (s.empty() ? "" : " + ") + ("(" + v[a].str() + ")" + d.basis[a]);
  return s.empty() ? "0" : s;
}

ClElement ext_conj(const CompactLieData &d, const ClElement &w) {
  ClElement r;
  for (const auto &[b, c] : w.terms()) {
    ClElement x = ClElement::scalar(c.conj());
    for (Blade bb = b; bb; bb &= bb - 1)
      x = wedge(x, ClElement::generator(d.conj[std::countr_zero(bb)]));
    r += x;
  }
  return r;
}

// theta_a thetabar_a - thetabar_a theta_a
ClElement root_bivector(const LieGK &g, std::pair<int, int> r) {
  return g.mul(g.gen(r.first), g.gen(r.second)) - g.mul(g.gen(r.second), g.gen(r.first));
}

Witness spinor_identities(const LieGK &g, const ClElement &phi, const ClElement &psi,
                          const std::string &label) {
  ClElement p = g.vec(g.p());
  if (!(g.d_cl(phi) + g.rho(anti_a(p), phi)).is_zero())
    return "d^cl phi != -rho(a(P)) phi for " + label;
  if (!(g.d_cl(psi) + g.rho(diag_e(p), psi)).is_zero())
    return "d^cl psi != -rho(e(P)) psi for " + label;
  return std::nullopt;
}

} // namespace

Report lie_report(const CompactLieData &data, std::uint64_t seed, int trials) {
  Report rep("lie " + data.name, seed, trials);
  auto rng_for = [&](std::uint64_t salt) { return std::mt19937_64(seed * 1000003 + salt); };

  std::unique_ptr<LieGK> gp;
  try {
    gp = std::make_unique<LieGK>(data);
  } catch (const std::exception &e) {
    rep.add(fail_check("data.invariants", "type (1,1), Jacobi, ad-invariance, conjugation",
                       e.what()));
    return rep;
  }
  const LieGK &g = *gp;
  const CompactLieData &d = g.data();
  ClElement phi = g.phi(), psi = g.psi(), p = g.vec(g.p());
  FieldScalar norm = g.norm_p_sq();

  rep.add(pass_check("data.invariants", "type (1,1), Jacobi, ad-invariance, conjugation")
              .value("dim", std::to_string(d.dim()))
              .value("positive_roots", std::to_string(d.roots.size())));

  rep.add(run("cartan.real", "Xi is real", [&]() -> Witness {
    if (!(ext_conj(d, g.xi()) - g.xi()).is_zero())
      return "conj(Xi) - Xi = " + (ext_conj(d, g.xi()) - g.xi()).str(d.basis);
    return std::nullopt;
  }));

  rep.add(run("cartan.abelian-slots", "Xi(t, t', .) = 0 on the Cartan subalgebra", [&]() -> Witness {
    Blade cart = 0;
    for (auto [t, tb] : d.cartan)
      cart |= (Blade(1) << t) | (Blade(1) << tb);
    for (const auto &[b, c] : g.xi().terms())
      if (std::popcount(b & cart) >= 2)
        return "Xi has the term " + ClElement::blade(b, c).str(d.basis);
    return std::nullopt;
  }));

  {
    int root_terms = 0;
    Check c = run("cartan.expansion",
                  "Xi = sum 2 P_a ^ theta_a ^ thetabar_a + root terms of type (2,1) and (1,2)",
                  [&]() -> Witness {
                    ClElement rest = g.xi();
                    for (std::size_t k = 0; k < d.roots.size(); ++k) {
                      auto [a, ab] = d.roots[k];
                      ClElement pa;
                      for (int j = 0; j < d.dim(); ++j)
                        if (!g.p_alpha()[k][j].is_zero())
                          pa.add(Blade(1) << j, g.p_alpha()[k][j] * FieldScalar(2));
                      rest -= wedge(pa, wedge(ClElement::generator(a), ClElement::generator(ab)));
                    }
                    Blade cart = 0, hol = 0;
                    for (auto [t, tb] : d.cartan)
                      cart |= (Blade(1) << t) | (Blade(1) << tb);
                    for (auto [a, ab] : d.roots)
                      hol |= Blade(1) << a;
                    for (const auto &[b, coef] : rest.terms()) {
                      int h = std::popcount(b & hol);
                      if ((b & cart) || h == 0 || h == 3)
                        return "unexpected term " + ClElement::blade(b, coef).str(d.basis);
                      ++root_terms;
                    }
                    return std::nullopt;
                  });
    c.value("root_terms", std::to_string(root_terms));
    rep.add(c);
  }

  rep.add(run("p.pure-imaginary", "conj(P) = -P with P = sum P_a in the Cartan subalgebra",
              [&]() -> Witness {
                ExactVector s = d.conj_vector(g.p());
                for (int k = 0; k < d.dim(); ++k)
                  s[k] += g.p()[k];
                if (s != ExactVector(d.dim()))
                  return "conj(P) + P = " + vec_str(d, s);
                return std::nullopt;
              })
              .value("P", vec_str(d, g.p())));

  rep.add(run("p.norm", "|P|^2 = -B(P, P) >= 0", [&]() -> Witness {
            if (!norm.is_real() || norm.sign() < 0)
              return "|P|^2 = " + norm.str();
            return std::nullopt;
          }).value("norm_P_sq", norm.str()));

  rep.add(run("spinors.kernel", "t_i phi = phi t_i = 0 and theta_a phi = phi theta_a = 0",
              [&]() -> Witness {
                for (int a : d.holomorphic()) {
                  if (!g.mul(g.gen(a), phi).is_zero())
                    return d.basis[a] + " . phi != 0";
                  if (!g.mul(phi, g.gen(a)).is_zero())
                    return "phi . " + d.basis[a] + " != 0";
                }
                return std::nullopt;
              }));

  rep.add(run("spinors.root-eigenvalues",
              "(theta thetabar - thetabar theta) psi = psi = psi (theta thetabar - thetabar theta), "
              "phi (theta thetabar - thetabar theta) = -phi",
              [&]() -> Witness {
                for (auto r : d.roots) {
                  ClElement q = root_bivector(g, r);
                  std::string nm = d.basis[r.first];
                  if (!(g.mul(q, psi) - psi).is_zero())
                    return "left eigenvalue on psi for " + nm;
                  if (!(g.mul(psi, q) - psi).is_zero())
                    return "right eigenvalue on psi for " + nm;
                  if (!(g.mul(q, phi) - phi).is_zero())
                    return "left eigenvalue on phi for " + nm;
                  if (!(g.mul(phi, q) + phi).is_zero())
                    return "right eigenvalue on phi for " + nm;
                }
                return std::nullopt;
              }));

  rep.add(run("clifford.module-law", "rho(z)^2 x = (1/2) B_d(z, z) x for z in g + g",
              [&]() -> Witness {
                auto rng = rng_for(11);
                for (int t = 0; t < trials; ++t) {
                  ExactVector u = random_vector(d, rng), v = random_vector(d, rng);
                  DoubleElement z{g.vec(u), g.vec(v)};
                  ClElement x = random_element(g, rng, t & 1);
                  FieldScalar bd = (d.form(u, u) - d.form(v, v)) * FieldScalar::rational(1, 2);
                  if (!(g.rho(z, g.rho(z, x)) - x.scaled(bd)).is_zero())
                    return "fails for u = " + vec_str(d, u) + ", v = " + vec_str(d, v);
                }
                return std::nullopt;
              }));

  rep.add(run("dcl.spinors", "d^cl phi = -rho(a(P)) phi and d^cl psi = -rho(e(P)) psi",
              [&] { return spinor_identities(g, phi, psi, "the base pair"); }));

  ClElement xi_p = g.graded_commutator(g.q_xi(), p);
  rep.add(run("dcl.commutator",
              "rho(e(Xi)) rho(a(P)) + rho(a(P)) rho(e(Xi)) = rho(a([Xi, P]))", [&]() -> Witness {
                auto rng = rng_for(12);
                auto e_xi = [&](const ClElement &x) { return g.graded_commutator(g.q_xi(), x); };
                std::vector<std::pair<std::string, ClElement>> targets{{"phi", phi}, {"psi", psi}};
                for (int t = 0; t < trials; ++t)
                  targets.emplace_back("random element " + std::to_string(t),
                                       random_element(g, rng, t & 1));
                for (const auto &[nm, x] : targets) {
                  ClElement lhs = e_xi(g.rho(anti_a(p), x)) + g.rho(anti_a(p), e_xi(x));
                  if (!(lhs - g.rho(anti_a(xi_p), x)).is_zero())
                    return "fails on " + nm;
                }
                return std::nullopt;
              }));

  {
    FieldScalar bpp = d.form(g.p(), g.p());
    Check c = run("dcl.xi-p", "rho(e([Xi, P])) phi = 2B(P,P) phi, rho(a([Xi, P])) psi = 2B(P,P) psi",
                  [&]() -> Witness {
                    FieldScalar two_b = FieldScalar(2) * bpp;
                    if (!(g.rho(diag_e(xi_p), phi) - phi.scaled(two_b)).is_zero())
                      return "rho(e([Xi, P])) phi != 2B(P,P) phi";
                    if (!(g.rho(anti_a(xi_p), psi) - psi.scaled(two_b)).is_zero())
                      return "rho(a([Xi, P])) psi != 2B(P,P) psi";
                    return std::nullopt;
                  });
    c.value("B(P,P)", bpp.str());
    rep.add(c);
  }

  {
    // recorded, not asserted
    ClElement q2 = g.mul(g.q_xi(), g.q_xi());
    int nonzero = 0;
    for (int a = 0; a < d.dim(); ++a)
      if (!g.d_cl(g.d_cl(g.gen(a))).is_zero())
        ++nonzero;
    Check c = pass_check("dcl.square", "d^cl d^cl on generators (recorded)");
    c.value("q(Xi)^2", q2.str(d.basis));
    c.value("generators with d^cl d^cl != 0", std::to_string(nonzero));
    rep.add(c);
  }

  {
    Check c = run("pairing.normalization", "(psi, conj psi) != 0 and (phi, conj phi) != 0",
                  [&]() -> Witness {
                    if (g.pairing(psi, g.conj(psi)).is_zero())
                      return "(psi, conj psi) = 0";
                    if (g.pairing(phi, g.conj(phi)).is_zero())
                      return "(phi, conj phi) = 0";
                    return std::nullopt;
                  });
    FieldScalar dpsi = g.pairing(psi, g.conj(psi)), dphi = g.pairing(phi, g.conj(phi));
    c.value("(psi, conj psi)", dpsi.str()).value("(phi, conj phi)", dphi.str());
    if (!dpsi.is_zero())
      c.value("ratio phi/psi", (dphi / dpsi).str());
    rep.add(c);
  }

  {
    LieCurvature cv;
    Check c = run("curvature.value", "each term equals |P|^2 and S = 2|P|^2", [&]() -> Witness {
      cv = g.curvature(phi, psi);
      if (cv.term_psi != norm)
        return "psi term = " + cv.term_psi.str() + ", |P|^2 = " + norm.str();
      if (cv.term_phi != norm)
        return "phi term = " + cv.term_phi.str() + ", |P|^2 = " + norm.str();
      if (cv.s != FieldScalar(2) * norm)
        return "S = " + cv.s.str();
      return std::nullopt;
    });
    c.value("norm_P_sq", norm.str())
        .value("term_psi", cv.term_psi.str())
        .value("term_phi", cv.term_phi.str())
        .value("S", cv.s.str());
    rep.add(c);
  }

  auto pin_check = [&](const std::vector<PinFactor> &chain, const std::string &label) -> Witness {
    ClElement pg = apply_pin(g, chain, phi), sg = apply_pin(g, chain, psi);
    if (auto w = spinor_identities(g, pg, sg, label))
      return w;
    LieCurvature cv = g.curvature(pg, sg);
    if (cv.s != FieldScalar(2) * norm)
      return "S = " + cv.s.str() + " for " + label;
    return std::nullopt;
  };

  {
    auto [t, tb] = d.cartan.front();
    ExactVector u(d.dim());
    u[t] = u[tb] = FieldScalar::sqrt2().inverse();
    PinFactor e{u, ExactVector(d.dim())};
    rep.add(run("pin.single", "E = (u, 0) with B(u, u) = 1 keeps the integrability identities and S",
                [&] { return pin_check({e}, "E = (u, 0)"); }));
    rep.add(run("pin.repeated", "E applied twice scales both spinors by 1/2 and keeps S",
                [&]() -> Witness {
                  if (!(apply_pin(g, {e, e}, phi) - phi.scaled(FieldScalar::rational(1, 2))).is_zero())
                    return "rho(E)^2 phi != (1/2) phi";
                  return pin_check({e, e}, "E E");
                }));
  }

  {
    auto rng = rng_for(13);
    std::uniform_int_distribution<int> len(1, 4);
    int chains = 5;
    rep.add(run("pin.chains", "random Pin chains keep d^cl identities and S = 2|P|^2",
                [&]() -> Witness {
                  for (int k = 0; k < chains; ++k) {
                    std::vector<PinFactor> chain(len(rng));
                    for (auto &e : chain)
                      e = random_pin_factor(g, rng);
                    if (auto w = pin_check(chain, "chain " + std::to_string(k) + " of length " +
                                                      std::to_string(chain.size())))
                      return w;
                  }
                  return std::nullopt;
                })
                .value("chains", std::to_string(chains)));
  }

  // ABM
  std::vector<ExactMatrix> ads{ExactMatrix::identity(d.dim())};
  int points = std::max(10, trials);
  if (!d.matrices.empty()) {
    auto rng = rng_for(14);
    for (int k = 0; k < points; ++k)
      ads.push_back(adjoint_matrix(d, conj_transpose(random_group_point(d, rng))));
  }

  if (d.matrices.empty()) {
    Check c{"abm.pairing", "<s(z1), s(z2)> = B_d(z1, z2)", Status::Skip, std::nullopt, {}};
    c.value("reason", "no matrix realization");
    rep.add(c);
  } else {
    rep.add(run("abm.pairing", "<s(z1), s(z2)> = B_d(z1, z2)", [&]() -> Witness {
              auto rng = rng_for(15);
              for (std::size_t k = 0; k < ads.size(); ++k) {
                ExactVector x1 = random_vector(d, rng), y1 = random_vector(d, rng),
                            x2 = random_vector(d, rng), y2 = random_vector(d, rng);
                FieldScalar lhs = abm_pairing(d, ads[k], abm_section(x1, y1), abm_section(x2, y2));
                FieldScalar rhs = d.form(x1, x2) - d.form(y1, y2);
                if (lhs != rhs)
                  return "point " + std::to_string(k) + ": " + lhs.str() + " != " + rhs.str();
                // null direction (x, x)
                if (!abm_pairing(d, ads[k], abm_section(x1, x1), abm_section(x1, x1)).is_zero())
                  return "s(x, x) is not null at point " + std::to_string(k);
              }
              return std::nullopt;
            }).value("points", std::to_string(ads.size())));
  }

  auto bracket_case = [&](int twist, bool left1, bool left2) -> Witness {
    ExactVector zero(d.dim());
    for (std::size_t k = 0; k < ads.size(); ++k)
      for (int a = 0; a < d.dim(); ++a)
        for (int b = 0; b < d.dim(); ++b) {
          ExactVector ea = d.unit(a), eb = d.unit(b);
          InvSection s1 = left1 ? abm_section(ea, zero) : abm_section(zero, ea);
          InvSection s2 = left2 ? abm_section(eb, zero) : abm_section(zero, eb);
          ExactVector l = (left1 && left2) ? d.bracket(ea, eb) : zero;
          ExactVector r = (!left1 && !left2) ? d.bracket(ea, eb) : zero;
          TrivValue got = abm_bracket(d, ads[k], s1, s2, twist);
          TrivValue want = abm_value(d, ads[k], abm_section(l, r));
          if (!(got == want))
            return std::string("[s") + (left1 ? "^L(" : "^R(") + d.basis[a] + "), s" +
                   (left2 ? "^L(" : "^R(") + d.basis[b] + ")]_H at point " + std::to_string(k) +
                   ": form part " + vec_str(d, got.c) + " vs " + vec_str(d, want.c);
        }
    return std::nullopt;
  };

  rep.add(run("abm.bracket", "[s(z1), s(z2)]_H = s([z1, z2]_d) on basis pairs", [&]() -> Witness {
            for (bool l1 : {true, false})
              for (bool l2 : {true, false})
                if (auto w = bracket_case(1, l1, l2))
                  return w;
            return std::nullopt;
          }).value("points", std::to_string(ads.size())));

  {
    Witness opposite = bracket_case(-1, true, true);
    Check c = pass_check("abm.twist-convention",
                         "i_z i_y i_x H = B([x, y], z) on left-invariant fields");
    c.value("opposite sign", opposite ? "fails: " + *opposite : "also holds");
    rep.add(c);
  }
  return rep;
}

} // namespace gkspin
