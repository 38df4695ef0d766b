#pragma once

#include "gkspin/lie/lie_data.hpp"

#include <random>

namespace gkspin {

// Constant-coefficient section xl^L + xr^R + B(theta^L, fl) + B(theta^R, fr).
struct InvSection {
  ExactVector xl, xr, fl, fr;
};

// s(x, x') = x^L - x'^R + B(theta^L, x) + B(theta^R, x')
InvSection abm_section(const ExactVector &x, const ExactVector &xp);

// Values below are taken at a group point g, given through ad_inv = Ad_{g^-1}.
// Value at g in the left trivialization: vector v in g and a
// covector w -> B(c, w).
struct TrivValue {
  ExactVector v, c;
  bool operator==(const TrivValue &o) const { return v == o.v && c == o.c; }
};

// Ad_g on basis coordinates.
ExactMatrix adjoint_matrix(const CompactLieData &d, const ExactMatrix &g);

TrivValue abm_value(const CompactLieData &d, const ExactMatrix &ad_inv, const InvSection &s);
// (1/2)(alpha_1(v_2) + alpha_2(v_1)) at the point.
FieldScalar abm_pairing(const CompactLieData &d, const ExactMatrix &ad_inv, const InvSection &a,
                        const InvSection &b);
// H-twisted Courant bracket evaluated at the point.  twist_sign fixes
// i_z i_y i_x H = twist_sign * B([x, y], z) on left-invariant fields.
TrivValue abm_bracket(const CompactLieData &d, const ExactMatrix &ad_inv, const InvSection &a,
                      const InvSection &b, int twist_sign = 1);

// Exact points of the group of the matrix realization: unit-norm rational
// quaternions in SU(2) blocks times a rational unit scalar.
ExactMatrix random_group_point(const CompactLieData &d, std::mt19937_64 &rng);

} // namespace gkspin
