#pragma once

#include "gkspin/linalg/exact_matrix.hpp"
#include "gkspin/manifold/calculus.hpp"

namespace gkspin {

// e^{i sign p} form for a real function p; sign 0 means no phase.  Phases
// never get expanded: they cancel in the pairing of a spinor with a conjugate.
struct GaugedForm {
  FormField form;
  Expr phase = Expr(0);
  int sign = 0;

  GaugedForm() = default;
  GaugedForm(FormField f) : form(std::move(f)) {}
  GaugedForm(FormField f, Expr p, int s) : form(std::move(f)), phase(std::move(p)), sign(s) {}
};

GaugedForm conj(const GaugedForm &w);
GaugedForm twisted_d(const GaugedForm &w, const Twist &h, const Patch &p);
GaugedForm spin_action(const GenSection &e, const GaugedForm &w);
GaugedForm lie_derivative_h(const GenSection &e, const GaugedForm &w, const Twist &h,
                            const Patch &p);
// Top coefficient of <a, b>_s; the phases must cancel.
Expr mukai_top(const GaugedForm &a, const GaugedForm &b, const Patch &p);

// Multiplies an ungauged spinor by e^{i p} and returns the shifted eta.
struct Regauged {
  GaugedForm spinor;
  GenSection eta;
};
Regauged regauge(const GaugedForm &w, const GenSection &eta, const Expr &p, const Patch &patch);

struct CurvatureData {
  GaugedForm phi, psi;
  GenSection eta, zeta;
  Twist h;
  FormField vol;
};

// i^{-n} <phi, conj phi>_s - vol and the same for psi (top coefficients).
std::pair<Expr, Expr> normalization_residuals(const CurvatureData &d, const Patch &p);

// S vol = Re(i^-n <psi, d_H(eta . conj psi)> + i^-n <phi, d_H(zeta . conj phi)>)
Expr scalar_curvature(const CurvatureData &d, const Patch &p);
// S vol = Re(i^-n <psi, L^H_eta conj psi> + i^-n <phi, L^H_zeta conj phi>)
//         + 2 <zeta, eta> vol
Expr defn_scalar_curvature(const CurvatureData &d, const Patch &p);

CurvatureData swapped(const CurvatureData &d);

// {f1, f2} = (J df1)(f2) - (J df2)(f1) at a point, J induced by psi there.
FieldScalar poisson_bracket_psi(const Expr &f1, const Expr &f2, const FormField &psi,
                                const Patch &p, const SamplePoint &pt);

class HamiltonianError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A generalized complex structure whose matrix is the same at every point.
class ConstantStructure {
public:
  // Throws if J differs between sampled points.
  ConstantStructure(const FormField &psi, const Patch &p, std::uint64_t seed,
                    int trials = 8);
  explicit ConstantStructure(ExactMatrix j) : j_(std::move(j)) {}

  const ExactMatrix &matrix() const { return j_; }
  GenSection apply(const GenSection &e) const;
  Expr poisson(const Expr &f1, const Expr &f2, const Patch &p) const;

private:
  ExactMatrix j_;
};

// L^H_{J df} - 2 i f L^H_zeta; throws HamiltonianError unless pi_T(zeta) f = 0.
FormField modified_lie_derivative(const Expr &f, const ConstantStructure &j,
                                  const GenSection &zeta, const Twist &h, const FormField &w,
                                  const Patch &p, Sampler &s);
GenSection modified_lie_derivative(const Expr &f, const ConstantStructure &j,
                                   const GenSection &zeta, const Twist &h, const GenSection &x,
                                   const Patch &p, Sampler &s);

// (e^b ^ phi, H - db) and the transported section v + xi - i_v b.
FormField b_transform(const FormField &phi, const FormField &b);
FormField b_transform_twist(const FormField &h, const FormField &b, const Patch &p);
GenSection b_transform(const GenSection &e, const FormField &b);

} // namespace gkspin
