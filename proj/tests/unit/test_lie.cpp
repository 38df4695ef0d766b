#include "gkspin/lie/abm.hpp"
#include "gkspin/lie/lie_gk.hpp"

#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

using namespace gkspin;

namespace {

// golden files use sqrt(2), sqrt(3) and I
FieldScalar golden_scalar(std::string s) {
  for (auto [from, to] : {std::pair<std::string, std::string>{"sqrt(2)", "sqrt2"},
                          {"sqrt(3)", "sqrt3"},
                          {"I", "i"}})
    for (std::size_t p; (p = s.find(from)) != std::string::npos;)
      s.replace(p, from.size(), to);
  return FieldScalar::parse(s);
}

nlohmann::json golden(const std::string &name) {
  std::ifstream f(std::string(GKSPIN_TEST_DATA) + "/golden/lie_" + name + ".json");
  return nlohmann::json::parse(f);
}

class Golden : public ::testing::TestWithParam<std::string> {};

} // namespace

TEST_P(Golden, CurvatureMatchesOracle) {
  auto j = golden(GetParam());
  LieGK g(lie_by_name(GetParam()));
  ASSERT_EQ(j.at("basis").get<std::vector<std::string>>(), g.data().basis);
  LieCurvature c = g.curvature(g.phi(), g.psi());
  EXPECT_EQ(g.norm_p_sq(), golden_scalar(j.at("norm_P_sq")));
  EXPECT_EQ(c.term_psi, golden_scalar(j.at("term_psi")));
  EXPECT_EQ(c.term_phi, golden_scalar(j.at("term_phi")));
  EXPECT_EQ(c.s, golden_scalar(j.at("scalar_curvature")));
  EXPECT_EQ(c.s, FieldScalar(2) * g.norm_p_sq());
}

TEST_P(Golden, CartanPartOfP) {
  auto j = golden(GetParam());
  LieGK g(lie_by_name(GetParam()));
  auto want = j.at("P_cartan_coefficients");
  const auto &cartan = g.data().cartan;
  ASSERT_EQ(want.size(), 2 * cartan.size());
  for (std::size_t k = 0; k < cartan.size(); ++k) {
    EXPECT_EQ(g.p()[cartan[k].first], golden_scalar(want[2 * k]));
    EXPECT_EQ(g.p()[cartan[k].second], golden_scalar(want[2 * k + 1]));
  }
}

TEST_P(Golden, ReportPasses) {
  Report r = lie_report(lie_by_name(GetParam()), 3, 3);
  EXPECT_TRUE(r.all_pass()) << r.text();
  ASSERT_NE(r.find("abm.twist-convention"), nullptr);
}

INSTANTIATE_TEST_SUITE_P(Lie, Golden, ::testing::Values("su2xu1", "su3"));

TEST(LieData, JsonRoundTrip) {
  for (const auto &n : lie_names()) {
    CompactLieData d = lie_by_name(n);
    CompactLieData e = lie_from_json(lie_to_json(d));
    EXPECT_EQ(e.basis, d.basis);
    EXPECT_EQ(e.conj, d.conj);
    EXPECT_EQ(e.cartan, d.cartan);
    EXPECT_EQ(e.roots, d.roots);
    EXPECT_EQ(e.b, d.b);
    EXPECT_EQ(e.structure, d.structure);
    EXPECT_EQ(e.matrices.size(), d.matrices.size());
  }
}

TEST(LieData, BrokenJacobiNamesTriple) {
  auto j = nlohmann::ordered_json::parse(lie_to_json(builtin_su3()));
  auto &entry = j["brackets"]["a1,a2"];
  for (auto &[k, v] : entry.items())
    v = (FieldScalar(2) * FieldScalar::parse(v.get<std::string>())).str();
  try {
    lie_from_json(j.dump());
    FAIL() << "accepted data violating the Jacobi identity";
  } catch (const LieDataError &e) {
    bool named = false;
    for (const auto &v : e.violations())
      named = named || (v.find("Jacobi identity fails on (") != std::string::npos);
    EXPECT_TRUE(named) << e.what();
  }
}

TEST(LieData, SchemaErrors) {
  EXPECT_THROW(lie_from_json("{"), std::invalid_argument);
  EXPECT_THROW(lie_from_json(R"({"basis": ["x"]})"), std::invalid_argument);
  auto j = nlohmann::ordered_json::parse(lie_to_json(builtin_su2xu1()));
  j["brackets"]["a1,a1"] = nlohmann::ordered_json::object();
  EXPECT_THROW(lie_from_json(j.dump()), std::invalid_argument);
  EXPECT_THROW(lie_by_name("so5"), std::out_of_range);
}

TEST(LieData, AsymmetricFormRejected) {
  CompactLieData d = builtin_su2xu1();
  d.b(0, 2) = FieldScalar(1);
  EXPECT_FALSE(lie_violations(d).empty());
  EXPECT_THROW(LieGK{d}, LieDataError);
}

TEST(LieGK, XiIsRealAndSpinorsAreAnnihilated) {
  LieGK g(builtin_su3());
  ClElement phi = g.phi();
  for (int a : g.data().holomorphic()) {
    EXPECT_TRUE(g.mul(g.gen(a), phi).is_zero());
    EXPECT_TRUE(g.mul(phi, g.gen(a)).is_zero());
  }
  EXPECT_FALSE(g.pairing(g.psi(), g.conj(g.psi())).is_zero());
}

TEST(LieGK, IntegrabilityOfBothSpinors) {
  for (const auto &n : lie_names()) {
    LieGK g(lie_by_name(n));
    ClElement p = g.vec(g.p());
    EXPECT_TRUE((g.d_cl(g.phi()) + g.rho(anti_a(p), g.phi())).is_zero()) << n;
    EXPECT_TRUE((g.d_cl(g.psi()) + g.rho(diag_e(p), g.psi())).is_zero()) << n;
  }
}

TEST(LieGK, SwappedEtaBreaksIntegrability) {
  LieGK g(builtin_su2xu1());
  ClElement p = g.vec(g.p());
  EXPECT_FALSE((g.d_cl(g.phi()) + g.rho(diag_e(p), g.phi())).is_zero());
}

TEST(Pin, ChainsKeepCurvature) {
  for (const auto &n : lie_names()) {
    LieGK g(lie_by_name(n));
    std::mt19937_64 rng(17);
    for (int k = 0; k < 3; ++k) {
      std::vector<PinFactor> chain{random_pin_factor(g, rng), random_pin_factor(g, rng)};
      for (const auto &e : chain) {
        FieldScalar nrm = pin_norm(g, e);
        EXPECT_TRUE(nrm == FieldScalar(1) || nrm == FieldScalar(-1));
      }
      LieCurvature c = g.curvature(apply_pin(g, chain, g.phi()), apply_pin(g, chain, g.psi()));
      EXPECT_EQ(c.s, FieldScalar(2) * g.norm_p_sq()) << n;
    }
  }
}

TEST(Pin, RejectsBadNorm) {
  LieGK g(builtin_su2xu1());
  ExactVector u(4);
  u[0] = u[1] = FieldScalar(1);
  EXPECT_THROW(apply_pin(g, {{u, ExactVector(4)}}, g.phi()), std::invalid_argument);
}

TEST(Abm, PairingAndBracketAtRandomPoints) {
  CompactLieData d = builtin_su2xu1();
  std::mt19937_64 rng(5);
  ExactVector zero(d.dim());
  for (int k = 0; k < 4; ++k) {
    ExactMatrix ad = adjoint_matrix(d, conj_transpose(random_group_point(d, rng)));
    for (int a = 0; a < d.dim(); ++a)
      for (int b = 0; b < d.dim(); ++b) {
        ExactVector ea = d.unit(a), eb = d.unit(b);
        EXPECT_EQ(abm_pairing(d, ad, abm_section(ea, zero), abm_section(eb, zero)), d.form(ea, eb));
        EXPECT_EQ(abm_pairing(d, ad, abm_section(zero, ea), abm_section(zero, eb)), -d.form(ea, eb));
        EXPECT_TRUE(abm_pairing(d, ad, abm_section(ea, zero), abm_section(zero, eb)).is_zero());
        TrivValue want = abm_value(d, ad, abm_section(zero, d.bracket(ea, eb)));
        EXPECT_EQ(abm_bracket(d, ad, abm_section(zero, ea), abm_section(zero, eb)), want);
        TrivValue mixed = abm_bracket(d, ad, abm_section(ea, zero), abm_section(zero, eb));
        EXPECT_EQ(mixed, abm_value(d, ad, abm_section(zero, zero)));
      }
  }
}

TEST(Abm, OppositeTwistFails) {
  CompactLieData d = builtin_su2xu1();
  ExactMatrix ad = ExactMatrix::identity(d.dim());
  ExactVector zero(d.dim());
  ExactVector x = d.unit(0), y = d.unit(2);
  TrivValue want = abm_value(d, ad, abm_section(d.bracket(x, y), zero));
  EXPECT_EQ(abm_bracket(d, ad, abm_section(x, zero), abm_section(y, zero), 1), want);
  EXPECT_NE(abm_bracket(d, ad, abm_section(x, zero), abm_section(y, zero), -1), want);
}

TEST(Abm, GroupPointsAreUnitary) {
  CompactLieData d = builtin_su3();
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5; ++k) {
    ExactMatrix g = random_group_point(d, rng);
    EXPECT_EQ(g * conj_transpose(g), ExactMatrix::identity(3));
  }
}
