#include "manifold_util.hpp"

#include <gtest/gtest.h>

using namespace gkspin;
using namespace gkspin::testing;

namespace {

// generator indices on C^2
constexpr int dz1 = 0, dz1b = 1, dz2 = 2, dz2b = 3;

Blade bl(std::initializer_list<int> idx) {
  Blade b = 0;
  for (int j : idx)
    b |= Blade(1) << j;
  return b;
}

FormField complex_volume() { return blade_form(bl({dz1, dz2})); }

// e^{-i omega / 2} with omega = (i/2) sum dz ^ dzb
FormField symplectic_spinor() {
  FormField w = blade_form(bl({dz1, dz1b}), Expr(FieldScalar::rational(1, 4))) +
                blade_form(bl({dz2, dz2b}), Expr(FieldScalar::rational(1, 4)));
  return exp_form(w);
}

GenSection d_dx(const Patch &p) {
  GenSection e(p.dim());
  e.vec[dz1] = Expr(1);
  e.vec[dz1b] = Expr(1);
  return e;
}

Expr x_coord(const Patch &p) {
  return Expr(FieldScalar::rational(1, 2)) * (p.coord(dz1) + p.coord(dz1b));
}

Expr y_coord(const Patch &p) {
  return Expr(-FieldScalar::i() * FieldScalar::rational(1, 2)) * (p.coord(dz1) - p.coord(dz1b));
}

GenSection one_form_x(const Patch &p, const Expr &c) {
  GenSection e(p.dim());
  e.cov[dz1] = Expr(FieldScalar::rational(1, 2)) * c;
  e.cov[dz1b] = Expr(FieldScalar::rational(1, 2)) * c;
  return e;
}

Twist sample_twist(const Patch &p) {
  // exact real 3-form d(f i dz1 ^ dz1b) with f real
  Expr f = p.coord(dz2) * p.coord(dz2b) + p.coord(dz1) + p.coord(dz1b);
  FormField b = blade_form(bl({dz1, dz1b}), Expr(FieldScalar::i()) * f);
  return Twist(exterior_d(b, p), p);
}

PointForm at_origin_like(const FormField &w, const Patch &p, std::uint64_t seed) {
  Sampler s(p.domain(), seed);
  return eval_form(w, s.next());
}

} // namespace

TEST(SpinAction, Basics) {
  Patch p(2, false);
  GenSection dd1 = GenSection::vector_field({Expr(1), Expr(0), Expr(0), Expr(0)});
  Sampler s(p.domain(), 1);
  EXPECT_TRUE(form_is_zero(spin_action(dd1, gen_form(dz1)) - FormField::scalar(Expr(1)), s));
  GenSection f1 = GenSection::one_form({Expr(1), Expr(0), Expr(0), Expr(0)});
  EXPECT_TRUE(form_is_zero(spin_action(f1, FormField::scalar(Expr(1))) - gen_form(dz1), s));
}

TEST(SpinAction, CliffordRelation) {
  Patch p(2, false);
  std::mt19937_64 rng(41);
  Sampler s(p.domain(), 2);
  for (int it = 0; it < 10; ++it) {
    GenSection a = random_section(rng, p), b = random_section(rng, p);
    FormField w = random_form(rng, p);
    FormField lhs = spin_action(a, spin_action(b, w)) + spin_action(b, spin_action(a, w));
    FormField rhs = w.scaled(Expr(2) * pairing_tt(a, b));
    EXPECT_TRUE(form_is_zero(lhs - rhs, s));
    EXPECT_TRUE(form_is_zero(spin_action(a, spin_action(a, w)) - w.scaled(pairing_tt(a, a)), s));
  }
}

TEST(Pairing, Examples) {
  Patch p(2, false);
  GenSection e(p.dim());
  e.vec[dz1] = Expr(1);
  e.cov[dz1] = Expr(1);
  EXPECT_TRUE(pairing_tt(e, e).is_one() || eval(pairing_tt(e, e), SamplePoint()).is_one());
  GenSection a = GenSection::vector_field({Expr(1), Expr(0), Expr(0), Expr(0)});
  GenSection b = GenSection::vector_field({Expr(0), Expr(0), Expr(1), Expr(0)});
  EXPECT_TRUE(eval(pairing_tt(a, b), SamplePoint()).is_zero());
}

TEST(ExteriorD, Examples) {
  Patch p(2, false);
  Sampler s(p.domain(), 3);
  FormField w = blade_form(bl({dz1b}), p.coord(dz1));
  EXPECT_TRUE(form_is_zero(exterior_d(w, p) - blade_form(bl({dz1, dz1b})), s));
  Twist h = sample_twist(p);
  EXPECT_TRUE(form_is_zero(twisted_d(FormField::scalar(Expr(1)), h, p) - h.form(), s));
}

TEST(ExteriorD, SquaresToZero) {
  Patch p(2, false);
  std::mt19937_64 rng(42);
  Sampler s(p.domain(), 4);
  Twist h = sample_twist(p);
  for (int it = 0; it < 10; ++it) {
    FormField w = random_form(rng, p);
    EXPECT_TRUE(form_is_zero(exterior_d(exterior_d(w, p), p), s));
    EXPECT_TRUE(form_is_zero(twisted_d(twisted_d(w, h, p), h, p), s));
  }
}

TEST(Twist, RejectsNonClosedOrComplex) {
  Patch p(2, false);
  // real part of i z2 z2b dz1 ^ dz1b ^ dz2b is not closed
  FormField bad =
      blade_form(bl({dz1, dz1b, dz2b}), Expr(FieldScalar::i()) * p.coord(dz2) * p.coord(dz2b));
  EXPECT_THROW(Twist(bad + conj(bad), p), TwistError);
  FormField cplx = blade_form(bl({dz1, dz1b, dz2}));
  EXPECT_THROW(Twist(cplx, p), TwistError);
  EXPECT_THROW(Twist(blade_form(bl({dz1, dz1b})), p), TwistError);
}

TEST(Courant, Examples) {
  Patch p(2, false);
  Sampler s(p.domain(), 5);
  Twist none;
  GenSection r = courant_bracket(d_dx(p), one_form_x(p, x_coord(p)), none, p);
  GenSection half_dx = one_form_x(p, Expr(FieldScalar::rational(1, 2)));
  EXPECT_TRUE(section_is_zero(r - half_dx, s));

  std::mt19937_64 rng(43);
  Twist h = sample_twist(p);
  for (int it = 0; it < 5; ++it) {
    Expr f1 = random_poly(rng, p), f2 = random_poly(rng, p);
    EXPECT_TRUE(section_is_zero(courant_bracket(differential(f1, p), differential(f2, p), h, p), s));
    GenSection a = random_section(rng, p), b = random_section(rng, p);
    EXPECT_TRUE(section_is_zero(courant_bracket(a, b, h, p) + courant_bracket(b, a, h, p), s));
  }
}

TEST(Dorfman, RelationToCourant) {
  Patch p(2, false);
  Sampler s(p.domain(), 6);
  Twist h = sample_twist(p);
  std::mt19937_64 rng(44);
  for (int it = 0; it < 5; ++it) {
    GenSection a = random_section(rng, p);
    EXPECT_TRUE(section_is_zero(dorfman_bracket(a, a, h, p) - differential(pairing_tt(a, a), p), s));
  }
  // constant pairing: brackets agree
  GenSection u = d_dx(p);
  GenSection v = GenSection::one_form({Expr(1), Expr(0), Expr(2), Expr(0)});
  EXPECT_TRUE(section_is_zero(dorfman_bracket(u, v, h, p) - courant_bracket(u, v, h, p), s));
}

TEST(LieDerivative, CartanFormula) {
  Patch p(2, false);
  Sampler s(p.domain(), 7);
  FormField xdx = one_form_field(one_form_x(p, x_coord(p)).cov);
  FormField dx = one_form_field(one_form_x(p, Expr(1)).cov);
  EXPECT_TRUE(form_is_zero(lie_derivative_h(d_dx(p), xdx, Twist(), p) - dx, s));
}

TEST(LieDerivative, OperatorBracketUntwisted) {
  Patch p(2, false);
  Sampler s(p.domain(), 8);
  std::mt19937_64 rng(45);
  Twist none;
  for (int it = 0; it < 5; ++it) {
    GenSection a = random_section(rng, p), b = random_section(rng, p);
    FormField w = random_form(rng, p, 2);
    FormField lhs = lie_derivative_h(a, lie_derivative_h(b, w, none, p), none, p) -
                    lie_derivative_h(b, lie_derivative_h(a, w, none, p), none, p);
    FormField rhs = lie_derivative_h(courant_bracket(a, b, none, p), w, none, p);
    EXPECT_TRUE(form_is_zero(lhs - rhs, s));
  }
}

TEST(LieDerivative, OperatorBracketTwisted) {
  Patch p(2, false);
  Sampler s(p.domain(), 9);
  std::mt19937_64 rng(46);
  Twist h = sample_twist(p);
  for (int it = 0; it < 5; ++it) {
    GenSection a = random_section(rng, p), b = random_section(rng, p);
    FormField w = random_form(rng, p, 2);
    FormField lhs = lie_derivative_h(a, lie_derivative_h(b, w, h, p), h, p) -
                    lie_derivative_h(b, lie_derivative_h(a, w, h, p), h, p);
    FormField rhs = lie_derivative_h(courant_bracket(a, b, h, p), w, h, p);
    EXPECT_TRUE(form_is_zero(lhs - rhs, s));
  }
}

TEST(Conjugation, Forms) {
  Patch p(2, false);
  Sampler s(p.domain(), 10);
  FormField w = blade_form(bl({dz1, dz2b}), Expr(FieldScalar::i()) * p.coord(dz1));
  // conj(i z1 dz1 ^ dz2b) = -i z1b dz1b ^ dz2
  FormField expect = blade_form(bl({dz1b, dz2}), Expr(-FieldScalar::i()) * p.coord(dz1b));
  EXPECT_TRUE(form_is_zero(conj(w) - expect, s));
  std::mt19937_64 rng(47);
  FormField r = random_form(rng, p, 5);
  EXPECT_TRUE(form_is_zero(conj(conj(r)) - r, s));
}

TEST(Kernel, ComplexStructure) {
  Patch p(2, false);
  PointForm phi = at_origin_like(complex_volume(), p, 1);
  auto k = kernel_at_point(phi, p.dim());
  ASSERT_EQ(k.size(), 4u);
  // span{d/dz1b, d/dz2b, dz1, dz2}: coordinates 0, 2, 5, 7 vanish
  for (const auto &v : k)
    for (int a : {0, 2, 5, 7})
      EXPECT_TRUE(v[a].is_zero());
  EXPECT_EQ(type_number(phi), 2);
  EXPECT_TRUE(is_nondegenerate(phi, p.dim()));
}

TEST(Kernel, SymplecticAndImpure) {
  Patch p(2, false);
  PointForm psi = at_origin_like(symplectic_spinor(), p, 2);
  EXPECT_EQ(kernel_at_point(psi, p.dim()).size(), 4u);
  EXPECT_EQ(type_number(psi), 0);
  EXPECT_TRUE(is_nondegenerate(psi, p.dim()));
  // dz1 is pure but pairs to zero with its conjugate
  PointForm one = at_origin_like(gen_form(dz1), p, 3);
  EXPECT_TRUE(is_pure(one, p.dim()));
  EXPECT_FALSE(is_nondegenerate(one, p.dim()));
  // dz1 + dz1 ^ dz2: kernel is span{dz1, d/dz1b, d/dz2b}
  PointForm mixed = at_origin_like(gen_form(dz1) + complex_volume(), p, 4);
  EXPECT_EQ(kernel_at_point(mixed, p.dim()).size(), 3u);
  EXPECT_FALSE(is_pure(mixed, p.dim()));
  EXPECT_THROW(kernel_at_point(PointForm(), p.dim()), DegenerateSpinor);
}

TEST(InducedJ, ComplexStructureBlocks) {
  Patch p(2, false);
  ExactMatrix j = induced_j(at_origin_like(complex_volume(), p, 1), p.dim());
  FieldScalar i = FieldScalar::i();
  ExactMatrix expect(8, 8);
  // J on T: +i on d/dz, -i on d/dzb; -J* on T*: -i on dz, +i on dzb
  FieldScalar diag[8] = {i, -i, i, -i, -i, i, -i, i};
  for (int a = 0; a < 8; ++a)
    expect(a, a) = diag[a];
  EXPECT_EQ(j, expect);
}

TEST(InducedJ, SymplecticBlocks) {
  Patch p(2, false);
  ExactMatrix j = induced_j(at_origin_like(symplectic_spinor(), p, 5), p.dim());
  // omega' = omega / 2 = (i/4) sum dz ^ dzb.  J d/dz_k = (i/4) dzb_k,
  // J d/dzb_k = -(i/4) dz_k, J dz_k = -4i d/dzb_k, J dzb_k = 4i d/dz_k.
  FieldScalar i = FieldScalar::i(), q = FieldScalar::rational(1, 4) * i, f = FieldScalar(4) * i;
  ExactMatrix expect(8, 8);
  for (int k = 0; k < 2; ++k) {
    int z = 2 * k, zb = 2 * k + 1;
    expect(4 + zb, z) = q;
    expect(4 + z, zb) = -q;
    expect(zb, 4 + z) = -f;
    expect(z, 4 + zb) = f;
  }
  EXPECT_EQ(j, expect);
}

TEST(InducedJ, SquareRealityOrthogonality) {
  Patch p(2, false);
  for (const FormField &w : {complex_volume(), symplectic_spinor()}) {
    ExactMatrix j = induced_j(at_origin_like(w, p, 6), p.dim());
    EXPECT_EQ(j * j, ExactMatrix::identity(8).scaled(FieldScalar(-1)));
    EXPECT_TRUE(is_real_operator(j));
    EXPECT_TRUE(preserves_pairing(j));
  }
  EXPECT_THROW(induced_j(at_origin_like(gen_form(dz1), p, 6), p.dim()), DegenerateSpinor);
}

TEST(GKPair, FlatKahlerAndDiagonal) {
  Patch p(2, false);
  PointForm phi = at_origin_like(complex_volume(), p, 7);
  PointForm psi = at_origin_like(symplectic_spinor(), p, 7);
  GKCheck good = is_gk_pair(phi, psi, p.dim());
  EXPECT_TRUE(good.ok());
  GKCheck same_pair = is_gk_pair(phi, phi, p.dim());
  EXPECT_TRUE(same_pair.commute);
  EXPECT_FALSE(same_pair.positive);
}

TEST(EtaN, ClosedSpinorsHaveNoData) {
  Patch p(2, false);
  Sampler s(p.domain(), 11);
  SamplePoint pt = s.next();
  for (const FormField &w : {complex_volume(), symplectic_spinor()}) {
    EtaN en = extract_eta_n(eval_form(w, pt), eval_form(exterior_d(w, p), pt), p.dim());
    for (const auto &x : en.eta)
      EXPECT_TRUE(x.is_zero());
    EXPECT_TRUE(en.n.is_zero());
  }
}

TEST(EtaN, RecoversPlantedData) {
  // phi = e^{f} dz1 ^ dz2 is not closed; d phi = df ^ phi = (df)^{1,0} part
  // from L-bar, so eta is the pure imaginary combination fixed by df.
  Patch p(2, false);
  Sampler s(p.domain(), 12);
  SamplePoint pt = s.next();
  PointForm phi = eval_form(complex_volume(), pt);
  ExactVector xi(8);
  xi[4 + dz1b] = FieldScalar(3);
  xi[4 + dz2b] = FieldScalar::i();
  PointForm dphi = act_point(xi, phi, 4);
  EtaN en = extract_eta_n(phi, dphi, 4);
  // residual d phi - eta . phi vanishes and eta is pure imaginary
  EXPECT_TRUE((dphi - act_point(en.eta, phi, 4)).is_zero());
  ExactVector c = conj_vector(en.eta);
  for (int a = 0; a < 8; ++a)
    EXPECT_EQ(c[a], -en.eta[a]);
}

TEST(EtaN, RejectsOutsideImage) {
  Patch p(2, false);
  PointForm psi = eval_form(symplectic_spinor(), SamplePoint());
  // the symplectic spinor is generic: every form lies in the image
  PointForm target = eval_form(gen_form(dz1), SamplePoint());
  EXPECT_NO_THROW(extract_eta_n(psi, target, 4));
}

TEST(Poisson, FlatSymplectic) {
  Patch p(2, false);
  Sampler s(p.domain(), 13);
  FormField psi = symplectic_spinor();
  std::mt19937_64 rng(48);
  for (int it = 0; it < 5; ++it) {
    SamplePoint pt = s.next();
    // omega' = dx ^ dy / 2 gives {x, y} = 2 + 2
    EXPECT_EQ(poisson_bracket_psi(x_coord(p), y_coord(p), psi, p, pt), FieldScalar(4));
    Expr f = random_real_poly(rng, p), g = random_real_poly(rng, p);
    EXPECT_TRUE(poisson_bracket_psi(f, f, psi, p, pt).is_zero());
    FieldScalar c = FieldScalar::rational(3, 7);
    EXPECT_EQ(poisson_bracket_psi(Expr(c) * f, g, psi, p, pt),
              c * poisson_bracket_psi(f, g, psi, p, pt));
  }
}

TEST(ModifiedLie, ReducesWithoutZeta) {
  Patch p(2, false);
  Sampler s(p.domain(), 14);
  ConstantStructure j(symplectic_spinor(), p, 1);
  std::mt19937_64 rng(49);
  Expr f = random_real_poly(rng, p);
  FormField w = random_form(rng, p, 2);
  GenSection zero(p.dim());
  FormField a = modified_lie_derivative(f, j, zero, Twist(), w, p, s);
  FormField b = lie_derivative_h(j.apply(differential(f, p)), w, Twist(), p);
  EXPECT_TRUE(form_is_zero(a - b, s));
  FormField z = modified_lie_derivative(Expr(0), j, zero, Twist(), w, p, s);
  EXPECT_TRUE(form_is_zero(z, s));
}

TEST(ModifiedLie, CommutatorIdentity) {
  Patch p(2, false);
  Sampler s(p.domain(), 15);
  ConstantStructure j(symplectic_spinor(), p, 2);
  GenSection zero(p.dim());
  Twist none;
  std::mt19937_64 rng(50);
  for (int it = 0; it < 3; ++it) {
    Expr f1 = random_real_poly(rng, p), f2 = random_real_poly(rng, p);
    FormField w = random_form(rng, p, 2);
    auto L = [&](const Expr &f, const FormField &x) {
      return modified_lie_derivative(f, j, zero, none, x, p, s);
    };
    FormField lhs = L(f1, L(f2, w)) - L(f2, L(f1, w));
    // [J df1, J df2] = J d(X1 f2) while {f1, f2} = 2 X1 f2
    FormField rhs = L(Expr(FieldScalar::rational(1, 2)) * j.poisson(f1, f2, p), w);
    EXPECT_TRUE(form_is_zero(lhs - rhs, s));
  }
}

TEST(ModifiedLie, RejectsNonHamiltonian) {
  Patch p(2, false);
  Sampler s(p.domain(), 16);
  ConstantStructure j(symplectic_spinor(), p, 3);
  GenSection zeta = GenSection::vector_field({Expr(1), Expr(1), Expr(0), Expr(0)});
  EXPECT_THROW(modified_lie_derivative(x_coord(p), j, zeta, Twist(), FormField(), p, s),
               HamiltonianError);
}

TEST(BTransform, Basics) {
  Patch p(2, false);
  Sampler s(p.domain(), 17);
  FormField psi = symplectic_spinor();
  EXPECT_TRUE(form_is_zero(b_transform(psi, FormField()) - psi, s));
  FormField b = blade_form(bl({dz1, dz2b}), Expr(FieldScalar::i())) +
                blade_form(bl({dz1b, dz2}), Expr(FieldScalar::i()));
  FormField w = blade_form(bl({dz1, dz1b}), Expr(FieldScalar::rational(1, 4))) +
                blade_form(bl({dz2, dz2b}), Expr(FieldScalar::rational(1, 4)));
  EXPECT_TRUE(form_is_zero(b_transform(psi, b) - exp_form(b + w), s));
  // e^b e e^{-b} acting on forms
  std::mt19937_64 rng(51);
  GenSection e = random_section(rng, p);
  FormField x = random_form(rng, p);
  FormField lhs = b_transform(spin_action(e, b_transform(x, -b)), b);
  EXPECT_TRUE(form_is_zero(lhs - spin_action(b_transform(e, b), x), s));
}

TEST(Gauged, PhaseCancelsInPairing) {
  Patch p(2, false);
  std::mt19937_64 rng(52);
  Expr q = random_real_poly(rng, p);
  GaugedForm a(symplectic_spinor(), q, 1);
  EXPECT_NO_THROW(mukai_top(a, conj(a), p));
  EXPECT_THROW(mukai_top(a, a, p), std::invalid_argument);
}

TEST(ModifiedLie, UnhalvedBracketDoesNotHold) {
  Patch p(2, false);
  Sampler s(p.domain(), 18);
  ConstantStructure j(symplectic_spinor(), p, 4);
  GenSection zero(p.dim());
  Twist none;
  Expr f1 = x_coord(p) * x_coord(p), f2 = y_coord(p) * y_coord(p);
  FormField w = FormField::scalar(x_coord(p));
  auto L = [&](const Expr &f, const FormField &x) {
    return modified_lie_derivative(f, j, zero, none, x, p, s);
  };
  FormField lhs = L(f1, L(f2, w)) - L(f2, L(f1, w));
  EXPECT_FALSE(form_is_zero(lhs - L(j.poisson(f1, f2, p), w), s));
}
