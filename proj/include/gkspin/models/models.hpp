#pragma once

#include "gkspin/manifold/curvature.hpp"
#include "gkspin/manifold/pointwise.hpp"
#include "gkspin/report/report.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace gkspin {

enum class ModelKind { FlatKahler, HopfOdd, HopfEven, User };

struct GKModel {
  std::string name;
  ModelKind kind = ModelKind::User;
  std::shared_ptr<const Patch> patch;
  FormField phi, psi, h, vol;
  GenSection eta, zeta;
  FieldScalar expected_s;
  // +1 when vol is positive for the standard orientation of C^n.
  int orientation = 1;
  int even_sign = 0;

  CurvatureData curvature_data() const;
};

GKModel model_flat_kahler();
GKModel model_hopf_odd();
// sign = +1 or -1 for E+ and E-.
GKModel model_hopf_even(int sign);

std::vector<std::string> model_names();
// Throws std::out_of_range for an unknown name.
GKModel model_by_name(const std::string &name);

// Model described by a JSON document; see docs/model-format.md.
GKModel model_from_json(const std::string &text);

// r d/dr and dr/r on a punctured patch.
GenSection radial_vector(const Patch &p);
GenSection log_radial_form(const Patch &p);
// r d/dr +- dr/r
GenSection pin_element(const Patch &p, int sign);

// q + conj(q) for a random polynomial q in the coordinates.
Expr random_real_polynomial(const Patch &p, std::mt19937_64 &rng, int terms = 3);

// J applied to a section evaluated at a point.
ExactVector apply_at(const ExactMatrix &j, const GenSection &e, const SamplePoint &pt);

Report verify_model(const GKModel &m, std::uint64_t seed, int trials);

// Clifford laws, Mukai sign, bracket lemmas, gauge invariance and symmetry.
Report props_report(std::uint64_t seed, int trials);

} // namespace gkspin
