#pragma once

#include "gkspin/linalg/exact_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkspin {

// Complexified compact Lie algebra in a basis adapted to a Cartan subalgebra:
// unitary pairs (t_i, conj t_i) and root vectors (theta_a, conj theta_a) for
// the positive roots.
struct CompactLieData {
  std::string name;
  std::vector<std::string> basis;
  std::vector<int> conj;                  // index of the conjugate basis vector
  std::vector<std::pair<int, int>> cartan; // (t_i, tbar_i)
  std::vector<std::pair<int, int>> roots;  // (theta_a, thetabar_a)
  // [e_a, e_b] = sum_c structure[a][b][c] e_c
  std::vector<std::vector<ExactVector>> structure;
  ExactMatrix b;
  // Optional matrix realization, one matrix per basis vector.
  std::vector<ExactMatrix> matrices;

  int dim() const { return static_cast<int>(basis.size()); }
  int index(const std::string &name) const;
  ExactVector unit(int a) const;
  ExactVector bracket(const ExactVector &x, const ExactVector &y) const;
  FieldScalar form(const ExactVector &x, const ExactVector &y) const;
  // Conjugation for the compact real form.
  ExactVector conj_vector(const ExactVector &x) const;
  // Indices spanning g^{1,0}: the t_i and the theta_a.
  std::vector<int> holomorphic() const;
};

// Carries the list of violated invariants.
class LieDataError : public std::runtime_error {
public:
  explicit LieDataError(std::vector<std::string> violations);
  const std::vector<std::string> &violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

// Every violated invariant, empty for valid data.  Stops listing a family
// after the first few entries.
std::vector<std::string> lie_violations(const CompactLieData &d);
void validate_lie(const CompactLieData &d);

// Structure constants and B = -tr(xy) from a matrix realization inside
// gl(n, C) with conj(X) = -X^*.
CompactLieData lie_from_matrices(std::string name, std::vector<std::string> basis,
                                 std::vector<ExactMatrix> matrices,
                                 std::vector<std::pair<int, int>> cartan,
                                 std::vector<std::pair<int, int>> roots);

CompactLieData builtin_su2xu1();
CompactLieData builtin_su3();
std::vector<std::string> lie_names();
// Throws std::out_of_range for unknown names.
CompactLieData lie_by_name(const std::string &name);

// Root-data JSON; invalid data raises LieDataError, malformed JSON raises
// std::invalid_argument.
CompactLieData lie_from_json(const std::string &text);
std::string lie_to_json(const CompactLieData &d);

ExactMatrix conj_transpose(const ExactMatrix &m);

} // namespace gkspin
