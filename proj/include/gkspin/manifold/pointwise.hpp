#pragma once

#include "gkspin/clifford/clifford.hpp"
#include "gkspin/linalg/exact_matrix.hpp"
#include "gkspin/manifold/patch.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace gkspin {

// Exact linear algebra of T + T* at one point.  A vector in C^{2 dim} stores
// d/dx_0..d/dx_{dim-1} followed by dx_0..dx_{dim-1}.

class DegenerateSpinor : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ResidualError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Trivectors and other multivectors over the T + T* basis.
using TTMultivector = Multivector<FieldScalar>;

BilinearSpace tt_space(int dim);

PointForm act_point(const ExactVector &e, const PointForm &w, int dim);
ExactVector conj_vector(const ExactVector &e);
FieldScalar pairing_point(const ExactVector &a, const ExactVector &b);
ExactVector form_coords(const PointForm &w, int dim);

std::vector<ExactVector> kernel_at_point(const PointForm &phi, int dim);
bool is_pure(const PointForm &phi, int dim);
bool is_nondegenerate(const PointForm &phi, int dim);

// -i on ker phi, +i on its conjugate.
ExactMatrix induced_j(const PointForm &phi, int dim);
// Matrix of the pairing <e_a, e_b>.
ExactMatrix pairing_matrix(int dim);
// C with conj(M v) = C conj(M) C conj(v); J is real iff C conj(J) C = J.
bool is_real_operator(const ExactMatrix &m);
bool preserves_pairing(const ExactMatrix &m);

struct GKCheck {
  bool commute = false;
  bool positive = false;
  std::vector<FieldScalar> minors;
  bool ok() const { return commute && positive; }
};

GKCheck is_gk_pair(const PointForm &phi, const PointForm &psi, int dim);

struct EtaN {
  ExactVector eta;    // pure imaginary
  TTMultivector n;    // real trivector
  ExactVector ebar;   // component in the conjugate kernel
  TTMultivector chi;  // trivector part in the conjugate kernel
};

// Splits dH_phi = (eta + N) . phi at a point.
EtaN extract_eta_n(const PointForm &phi, const PointForm &dh_phi, int dim);

// Clifford action of a T + T* multivector (quantized) on a form.
PointForm act_multivector(const TTMultivector &x, const PointForm &w, int dim);

int type_number(const PointForm &phi);

// Stacked [vec; cov] vector as a grade-1 T + T* multivector.
TTMultivector tt_vector(const ExactVector &e);

} // namespace gkspin
