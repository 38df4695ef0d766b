#include "gkspin/manifold/pointwise.hpp"

namespace gkspin {

BilinearSpace tt_space(int dim) {
  std::vector<std::string> names;
  for (int j = 0; j < dim; ++j)
    names.push_back("v" + std::to_string(j));
  for (int j = 0; j < dim; ++j)
    names.push_back("f" + std::to_string(j));
  std::vector<std::vector<FieldScalar>> g(2 * dim, std::vector<FieldScalar>(2 * dim));
  for (int j = 0; j < dim; ++j)
    g[j][dim + j] = g[dim + j][j] = FieldScalar::rational(1, 2);
  return BilinearSpace(names, g);
}

PointForm act_point(const ExactVector &e, const PointForm &w, int dim) {
  PointForm r;
  for (int j = 0; j < dim; ++j) {
    if (!e[j].is_zero())
      r += interior_generator(j, w).scaled(e[j]);
    if (!e[dim + j].is_zero())
      r += wedge_generator(j, w).scaled(e[dim + j]);
  }
  return r;
}

ExactVector conj_vector(const ExactVector &e) {
  ExactVector r(e.size());
  for (std::size_t a = 0; a < e.size(); ++a)
    r[a ^ 1] = e[a].conj();
  return r;
}

FieldScalar pairing_point(const ExactVector &a, const ExactVector &b) {
  std::size_t dim = a.size() / 2;
  FieldScalar s;
  for (std::size_t j = 0; j < dim; ++j)
    s += a[dim + j] * b[j] + b[dim + j] * a[j];
  return s * FieldScalar::rational(1, 2);
}

ExactVector form_coords(const PointForm &w, int dim) {
  ExactVector v(std::size_t(1) << dim);
  for (const auto &[b, c] : w.terms())
    v[b] = c;
  return v;
}

namespace {

ExactVector unit(int dim, int a) {
  ExactVector e(2 * dim);
  e[a] = FieldScalar(1);
  return e;
}

ExactMatrix action_matrix(const PointForm &phi, int dim) {
  std::vector<ExactVector> cols;
  for (int a = 0; a < 2 * dim; ++a)
    cols.push_back(form_coords(act_point(unit(dim, a), phi, dim), dim));
  return ExactMatrix::from_columns(cols);
}

bool isotropic(const std::vector<ExactVector> &basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!pairing_point(basis[i], basis[j]).is_zero())
        return false;
  return true;
}

std::vector<ExactVector> conj_all(const std::vector<ExactVector> &vs) {
  std::vector<ExactVector> r;
  for (const auto &v : vs)
    r.push_back(conj_vector(v));
  return r;
}

} // namespace

std::vector<ExactVector> kernel_at_point(const PointForm &phi, int dim) {
  if (phi.is_zero())
    throw DegenerateSpinor("spinor vanishes at the point");
  return action_matrix(phi, dim).kernel();
}

bool is_pure(const PointForm &phi, int dim) {
  auto k = kernel_at_point(phi, dim);
  return static_cast<int>(k.size()) == dim && isotropic(k);
}

bool is_nondegenerate(const PointForm &phi, int dim) {
  if (!is_pure(phi, dim))
    return false;
  auto k = kernel_at_point(phi, dim);
  auto all = k;
  for (auto &v : conj_all(k))
    all.push_back(v);
  return ExactMatrix::from_columns(all).rank() == static_cast<std::size_t>(2 * dim);
}

ExactMatrix induced_j(const PointForm &phi, int dim) {
  if (!is_nondegenerate(phi, dim))
    throw DegenerateSpinor("spinor is not a nondegenerate pure spinor");
  auto k = kernel_at_point(phi, dim);
  auto cols = k;
  for (auto &v : conj_all(k))
    cols.push_back(v);
  ExactMatrix m = ExactMatrix::from_columns(cols);
  ExactMatrix d(2 * dim, 2 * dim);
  for (int a = 0; a < 2 * dim; ++a)
    d(a, a) = a < dim ? -FieldScalar::i() : FieldScalar::i();
  return m * d * *m.inverse();
}

ExactMatrix pairing_matrix(int dim) {
  ExactMatrix p(2 * dim, 2 * dim);
  for (int j = 0; j < dim; ++j)
    p(j, dim + j) = p(dim + j, j) = FieldScalar::rational(1, 2);
  return p;
}

bool is_real_operator(const ExactMatrix &m) {
  std::size_t n = m.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m(a ^ 1, b ^ 1).conj() != m(a, b))
        return false;
  return true;
}

bool preserves_pairing(const ExactMatrix &m) {
  ExactMatrix p = pairing_matrix(static_cast<int>(m.rows() / 2));
  return m.transposed() * p * m == p;
}

GKCheck is_gk_pair(const PointForm &phi, const PointForm &psi, int dim) {
  ExactMatrix j1 = induced_j(phi, dim), j2 = induced_j(psi, dim);
  GKCheck out;
  ExactMatrix a = j1 * j2, b = j2 * j1;
  out.commute = a == b;
  ExactMatrix g = a.scaled(FieldScalar(-1));
  ExactMatrix p = pairing_matrix(dim);
  // h(e_a, e_b) = <G e_a, conj e_b>
  ExactMatrix gp = g.transposed() * p;
  std::size_t n = 2 * dim;
  ExactMatrix h(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      h(x, y) = gp(x, y ^ 1);
  out.minors = h.leading_minors();
  out.positive = true;
  for (const auto &m : out.minors)
    if (!m.is_real() || m.sign() <= 0)
      out.positive = false;
  return out;
}

TTMultivector tt_vector(const ExactVector &e) {
  TTMultivector r;
  for (std::size_t a = 0; a < e.size(); ++a)
    r.add(Blade(1) << a, e[a]);
  return r;
}

PointForm act_multivector(const TTMultivector &x, const PointForm &w, int dim) {
  static thread_local std::map<int, BilinearSpace> spaces;
  auto it = spaces.find(dim);
  if (it == spaces.end())
    it = spaces.emplace(dim, tt_space(dim)).first;
  TTMultivector cl = q_map(x, it->second);
  PointForm r;
  for (const auto &[b, c] : cl.terms()) {
    PointForm cur = w;
    // ordered product: the rightmost generator acts first
    for (int a = 2 * dim - 1; a >= 0; --a)
      if (b & (Blade(1) << a))
        cur = act_point(unit(dim, a), cur, dim);
    r += cur.scaled(c);
  }
  return r;
}

EtaN extract_eta_n(const PointForm &phi, const PointForm &dh_phi, int dim) {
  auto lbar = conj_all(kernel_at_point(phi, dim));
  if (static_cast<int>(lbar.size()) != dim)
    throw DegenerateSpinor("spinor is not pure");
  std::vector<ExactVector> cols;
  for (const auto &e : lbar)
    cols.push_back(form_coords(act_point(e, phi, dim), dim));
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        triples.push_back({i, j, k});
        PointForm t = act_point(lbar[i], act_point(lbar[j], act_point(lbar[k], phi, dim), dim), dim);
        cols.push_back(form_coords(t, dim));
      }
  auto x = ExactMatrix::from_columns(cols).solve(form_coords(dh_phi, dim));
  if (!x)
    throw ResidualError("d_H phi is not in the image of L-bar and its third power");
  EtaN out;
  out.ebar = ExactVector(2 * dim);
  for (int i = 0; i < dim; ++i)
    for (int a = 0; a < 2 * dim; ++a)
      out.ebar[a] += (*x)[i] * lbar[i][a];
  ExactVector c = conj_vector(out.ebar);
  out.eta = out.ebar;
  for (int a = 0; a < 2 * dim; ++a)
    out.eta[a] -= c[a];
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const FieldScalar &coef = (*x)[dim + t];
    if (coef.is_zero())
      continue;
    auto [i, j, k] = triples[t];
    out.chi += wedge(wedge(tt_vector(lbar[i]), tt_vector(lbar[j])), tt_vector(lbar[k])).scaled(coef);
  }
  out.n = out.chi + conj_point(out.chi);
  return out;
}

int type_number(const PointForm &phi) {
  if (phi.is_zero())
    throw DegenerateSpinor("type number of a vanishing spinor");
  return phi.min_grade();
}

} // namespace gkspin
