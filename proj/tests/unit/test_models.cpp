#include "gkspin/models/models.hpp"

#include <json.hpp>

#include <fstream>

#include <gtest/gtest.h>

using namespace gkspin;

namespace {

constexpr int dz1 = 0, dz1b = 1, dz2 = 2, dz2b = 3;

Blade bl(std::initializer_list<int> idx) {
  Blade b = 0;
  for (int j : idx)
    b |= Blade(1) << j;
  return b;
}

void expect_all_pass(const Report &r) {
  for (const auto &c : r.checks())
    EXPECT_NE(c.status, Status::Fail) << c.id << ": " << c.witness.value_or("");
}

FieldScalar golden_s(const std::string &model) {
  std::ifstream f(std::string(GKSPIN_TEST_DATA) + "/golden/manifold_models.json");
  nlohmann::json j = nlohmann::json::parse(f);
  return FieldScalar::parse(j.at(model).at("S").get<std::string>());
}

std::vector<SamplePoint> sample(const Patch &p, int n, std::uint64_t seed) {
  Sampler s(p.domain(), seed);
  std::vector<SamplePoint> pts;
  for (int k = 0; k < n; ++k)
    pts.push_back(s.next());
  return pts;
}

} // namespace

TEST(FlatKahler, Normalization) {
  GKModel m = model_flat_kahler();
  CurvatureData d = m.curvature_data();
  auto [a, b] = normalization_residuals(d, *m.patch);
  Sampler s(m.patch->domain(), 1);
  EXPECT_TRUE(is_zero(a, s));
  EXPECT_TRUE(is_zero(b, s));
  // -1/4 dz1^dz1b^dz2^dz2b is dx1^dy1^dx2^dy2
  EXPECT_EQ(m.vol.get(m.patch->volume_blade()).constant(), FieldScalar::rational(-1, 4));
}

TEST(FlatKahler, TypeNumbersAndCurvature) {
  GKModel m = model_flat_kahler();
  SamplePoint pt = sample(*m.patch, 1, 2).front();
  EXPECT_EQ(type_number(eval_form(m.phi, pt)), 2);
  EXPECT_EQ(type_number(eval_form(m.psi, pt)), 0);
  Sampler s(m.patch->domain(), 3);
  EXPECT_TRUE(is_zero(scalar_curvature(m.curvature_data(), *m.patch), s));
  EXPECT_EQ(m.expected_s, golden_s("flat-kahler"));
}

TEST(FlatKahler, VerifyPasses) {
  Report r = verify_model(model_flat_kahler(), 0, 32);
  expect_all_pass(r);
  EXPECT_TRUE(r.find("flat.type-numbers"));
}

TEST(HopfOdd, ExpectedCurvatureMatchesOracle) {
  EXPECT_EQ(model_hopf_odd().expected_s, golden_s("hopf-odd"));
  EXPECT_EQ(model_hopf_even(1).expected_s, golden_s("hopf-even-plus"));
  EXPECT_EQ(model_hopf_even(-1).expected_s, golden_s("hopf-even-minus"));
}

TEST(HopfOdd, IntegrabilityAndEta) {
  GKModel m = model_hopf_odd();
  const Patch &p = *m.patch;
  Twist h(m.h, p);
  Sampler s(p.domain(), 4);
  EXPECT_TRUE(form_is_zero(twisted_d(m.phi, h, p) - spin_action(m.eta, m.phi), s));
  EXPECT_TRUE(form_is_zero(twisted_d(m.psi, h, p) - spin_action(m.zeta, m.psi), s));
  // the undecorated spinor phi = r sqrt2 phi~ is d_H-closed
  FormField phi = m.phi.scaled(p.r() * Expr(FieldScalar::sqrt2()));
  EXPECT_TRUE(form_is_zero(twisted_d(phi, h, p), s));
  for (const auto &pt : sample(p, 4, 5)) {
    EtaN en = extract_eta_n(eval_form(m.phi, pt), eval_form(twisted_d(m.phi, h, p), pt), 4);
    EXPECT_EQ(en.eta, eval_section(m.eta, pt));
    EXPECT_TRUE(en.n.is_zero());
  }
}

TEST(HopfOdd, OppositeTwistBreaksIntegrability) {
  GKModel m = model_hopf_odd();
  const Patch &p = *m.patch;
  Twist h(-m.h, p);
  Sampler s(p.domain(), 6);
  EXPECT_FALSE(form_is_zero(twisted_d(m.phi, h, p) - spin_action(m.eta, m.phi), s));
}

TEST(HopfOdd, KeyLemma) {
  GKModel m = model_hopf_odd();
  const Patch &p = *m.patch;
  for (const auto &pt : sample(p, 8, 7)) {
    ExactMatrix jp = induced_j(eval_form(m.phi, pt), 4);
    ExactMatrix js = induced_j(eval_form(m.psi, pt), 4);
    ExactVector v = js * (jp * eval_section(log_radial_form(p), pt));
    ExactVector w = eval_section(radial_vector(p), pt);
    for (std::size_t a = 0; a < v.size(); ++a)
      EXPECT_EQ(-v[a], FieldScalar::rational(1, 2) * w[a]);
  }
}

TEST(HopfOdd, ComplexStructureOnZ2Direction) {
  // J_phi(r d/dz2) = i dz2b / r
  GKModel m = model_hopf_odd();
  const Patch &p = *m.patch;
  for (const auto &pt : sample(p, 4, 8)) {
    ExactMatrix jp = induced_j(eval_form(m.phi, pt), 4);
    FieldScalar r = pt.get(*p.radius());
    ExactVector e(8);
    e[dz2] = r;
    ExactVector out = jp * e;
    ExactVector expect(8);
    expect[4 + dz2b] = FieldScalar::i() * r.inverse();
    EXPECT_EQ(out, expect);
  }
}

TEST(HopfOdd, VerifyPasses) { expect_all_pass(verify_model(model_hopf_odd(), 0, 8)); }

TEST(HopfEven, PinElementSquares) {
  for (int sign : {1, -1}) {
    GKModel m = model_hopf_even(sign);
    const Patch &p = *m.patch;
    GenSection e = pin_element(p, sign);
    Sampler s(p.domain(), 9);
    EXPECT_TRUE(is_zero(pairing_tt(e, e) - Expr(sign), s));
    FormField w = model_hopf_odd().psi;
    EXPECT_TRUE(form_is_zero(spin_action(e, spin_action(e, w)) - w.scaled(Expr(sign)), s));
  }
}

TEST(HopfEven, VerifyPasses) {
  expect_all_pass(verify_model(model_hopf_even(1), 0, 8));
  expect_all_pass(verify_model(model_hopf_even(-1), 0, 8));
}

TEST(HopfEven, VolumeSigns) {
  GKModel odd = model_hopf_odd(), plus = model_hopf_even(1), minus = model_hopf_even(-1);
  Sampler s(odd.patch->domain(), 10);
  EXPECT_TRUE(form_is_zero(plus.vol + odd.vol, s));
  EXPECT_TRUE(form_is_zero(minus.vol - odd.vol, s));
  EXPECT_EQ(plus.orientation, -1);
  EXPECT_EQ(minus.orientation, 1);
}

TEST(Models, NijenhuisAnnihilates) {
  for (const auto &name : model_names()) {
    GKModel m = model_by_name(name);
    const Patch &p = *m.patch;
    Twist h = m.h.is_zero() ? Twist() : Twist(m.h, p);
    FormField dphi = twisted_d(m.phi, h, p);
    for (const auto &pt : sample(p, 4, 11)) {
      EtaN en = extract_eta_n(eval_form(m.phi, pt), eval_form(dphi, pt), 4);
      EXPECT_TRUE(act_multivector(en.n, eval_form(m.psi, pt), 4).is_zero()) << name;
    }
  }
}

TEST(Models, BFieldInvariance) {
  for (const auto &name : {"flat-kahler", "hopf-odd"}) {
    GKModel m = model_by_name(name);
    const Patch &p = *m.patch;
    // constant real closed b
    FormField b = FormField::blade(bl({dz1, dz2b}), Expr(FieldScalar::i())) +
                  FormField::blade(bl({dz1b, dz2}), Expr(-FieldScalar::i()));
    Sampler s(p.domain(), 12);
    ASSERT_TRUE(form_is_zero(b - conj(b), s));
    CurvatureData d = m.curvature_data();
    CurvatureData t = d;
    t.phi = GaugedForm(b_transform(m.phi, b));
    t.psi = GaugedForm(b_transform(m.psi, b));
    t.eta = b_transform(m.eta, b);
    t.zeta = b_transform(m.zeta, b);
    t.h = m.h.is_zero() ? Twist() : Twist(b_transform_twist(m.h, b, p), p);
    EXPECT_TRUE(form_is_zero(twisted_d(t.phi.form, t.h, p) - spin_action(t.eta, t.phi.form), s))
        << name;
    EXPECT_TRUE(is_zero(scalar_curvature(t, p) - scalar_curvature(d, p), s)) << name;
  }
}

TEST(Models, CorruptedPhiIsCaught) {
  GKModel m = model_hopf_odd();
  // drop the cubic term of phi
  FormField keep;
  for (const auto &[b, c] : m.phi.terms())
    if (grade_of(b) == 1)
      keep.add(b, c);
  m.phi = keep;
  Report r = verify_model(m, 0, 4);
  EXPECT_FALSE(r.all_pass());
  const Check *c = r.find("spinors.pure-nondegenerate");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, Status::Fail);
  ASSERT_TRUE(c->witness);
  EXPECT_NE(c->witness->find("z1 ="), std::string::npos);
}

TEST(Models, ByName) {
  EXPECT_EQ(model_names().size(), 4u);
  EXPECT_THROW(model_by_name("nosuch"), std::out_of_range);
  EXPECT_THROW(model_hopf_even(0), std::invalid_argument);
}

TEST(UserModel, FlatFromJson) {
  std::string text = R"({
    "name": "flat-user", "n": 2, "punctured": false,
    "phi": {"dz1^dz2": "1/2"},
    "psi": {"1": "1", "dz1^dz1b": "1/4", "dz2^dz2b": "1/4", "dz1^dz1b^dz2^dz2b": "1/16"},
    "vol": "-1/4",
    "expected_S": "0"
  })";
  GKModel m = model_from_json(text);
  EXPECT_EQ(m.name, "flat-user");
  expect_all_pass(verify_model(m, 0, 4));
}

TEST(UserModel, Rejections) {
  EXPECT_THROW(model_from_json(R"({"phi": {"dq1": "1"}, "psi": {}, "vol": "1",
                                   "expected_S": "0"})"),
               std::invalid_argument);
  EXPECT_THROW(model_from_json(R"({"phi": {"dz2^dz1": "1"}, "psi": {}, "vol": "1",
                                   "expected_S": "0"})"),
               std::invalid_argument);
  EXPECT_ANY_THROW(model_from_json("{"));
}

TEST(UserModel, WrongCurvatureFails) {
  std::string text = R"({
    "phi": {"dz1^dz2": "1/2"},
    "psi": {"1": "1", "dz1^dz1b": "1/4", "dz2^dz2b": "1/4", "dz1^dz1b^dz2^dz2b": "1/16"},
    "vol": "-1/4", "expected_S": "1"
  })";
  Report r = verify_model(model_from_json(text), 0, 4);
  const Check *c = r.find("curvature.value");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, Status::Fail);
}
