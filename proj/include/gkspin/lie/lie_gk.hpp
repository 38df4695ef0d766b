#pragma once

#include "gkspin/clifford/clifford.hpp"
#include "gkspin/lie/lie_data.hpp"
#include "gkspin/report/report.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace gkspin {

using ClElement = Multivector<FieldScalar>;

// An element of d = g + g acting on Cl(g^C) by x -> l x - (-1)^{|l||x|} x r.
struct DoubleElement {
  ClElement l, r;
};
DoubleElement diag_e(const ClElement &y);  // (y, y)
DoubleElement anti_a(const ClElement &y);  // (y, -y)

struct LieCurvature {
  FieldScalar term_psi, term_phi, s;
};

// Clifford-side GK data of a compact Lie group.  Cl(g^C) uses xy + yx = B(x, y).
class LieGK {
public:
  explicit LieGK(CompactLieData d);

  const CompactLieData &data() const { return d_; }
  const BilinearSpace &space() const { return space_; }

  // Cartan 3-form in Lambda^3 g^C with i_z i_y i_x Xi = B(x, [y, z]).
  const ClElement &xi() const { return xi_; }
  const ClElement &q_xi() const { return q_xi_; }
  // P_a = (1/2) coefficient of the Cartan part of Xi along theta_a ^ thetabar_a.
  const std::vector<ExactVector> &p_alpha() const { return p_alpha_; }
  const ExactVector &p() const { return p_; }
  FieldScalar norm_p_sq() const { return -d_.form(p_, p_); }

  ClElement phi() const;
  ClElement psi() const;

  ClElement vec(const ExactVector &v) const;
  ClElement gen(int a) const { return vec(d_.unit(a)); }
  ClElement one() const { return ClElement::scalar(FieldScalar(1), Algebra::Clifford); }
  ClElement mul(const ClElement &a, const ClElement &b) const { return clifford_mul(a, b, space_); }
  ClElement conj(const ClElement &x) const;

  // Graded commutator [a, b] = ab - (-1)^{|a||b|} ba.
  ClElement graded_commutator(const ClElement &a, const ClElement &b) const;
  ClElement rho(const DoubleElement &z, const ClElement &x) const;
  // -[q(Xi), x]
  ClElement d_cl(const ClElement &x) const;
  FieldScalar pairing(const ClElement &x, const ClElement &y) const;

  // Re[-(psi, d rho(a(P)) conj psi)/(psi, conj psi)] and the phi term with e(P).
  LieCurvature curvature(const ClElement &phi, const ClElement &psi) const;

private:
  CompactLieData d_;
  BilinearSpace space_;
  ClElement xi_, q_xi_;
  std::vector<ExactVector> p_alpha_;
  ExactVector p_;
  mutable std::map<Blade, ClElement> conj_cache_;
};

// E = (u1, u2) with u_i real elements of the Cartan subalgebra.
struct PinFactor {
  ExactVector u1, u2;
};
FieldScalar pin_norm(const LieGK &g, const PinFactor &e); // B(u1,u1) - B(u2,u2)
DoubleElement pin_element(const LieGK &g, const PinFactor &e);
// Applies E_1 first.
ClElement apply_pin(const LieGK &g, const std::vector<PinFactor> &chain, const ClElement &x);
// Random factor with norm +-1 built from rational data.
PinFactor random_pin_factor(const LieGK &g, std::mt19937_64 &rng);

Report lie_report(const CompactLieData &d, std::uint64_t seed, int trials);

} // namespace gkspin
