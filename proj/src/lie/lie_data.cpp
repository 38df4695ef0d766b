#include "gkspin/lie/lie_data.hpp"

#include <algorithm>
#include <sstream>

namespace gkspin {

namespace {

constexpr int kMaxListed = 4;

std::string join(const std::vector<std::string> &v) {
  std::string s;
  for (const auto &x : v)
    s += (s.empty() ? "" : "; ") + x;
  return s;
}

FieldScalar trace(const ExactMatrix &m) {
  FieldScalar t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    t += m(i, i);
  return t;
}

bool is_zero(const ExactVector &v) {
  return std::all_of(v.begin(), v.end(), [](const FieldScalar &x) { return x.is_zero(); });
}

std::string vec_str(const CompactLieData &d, const ExactVector &v) {
  std::string s;
  for (int a = 0; a < d.dim(); ++a)
    if (!v[a].is_zero())
      s += (s.empty() ? "" : " + ") + ("(" + v[a].str() + ")" + d.basis[a]);
  return s.empty() ? "0" : s;
}

} // namespace

LieDataError::LieDataError(std::vector<std::string> violations)
    : std::runtime_error("invalid Lie data: " + join(violations)),
      violations_(std::move(violations)) {}

int CompactLieData::index(const std::string &n) const {
  auto it = std::find(basis.begin(), basis.end(), n);
  if (it == basis.end())
    throw std::invalid_argument("unknown basis vector '" + n + "'");
  return static_cast<int>(it - basis.begin());
}

ExactVector CompactLieData::unit(int a) const {
  ExactVector v(dim());
  v[a] = FieldScalar(1);
  return v;
}

ExactVector CompactLieData::bracket(const ExactVector &x, const ExactVector &y) const {
  ExactVector r(dim());
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero())
      continue;
    for (int c = 0; c < dim(); ++c) {
      if (y[c].is_zero())
        continue;
      FieldScalar f = x[a] * y[c];
      for (int k = 0; k < dim(); ++k)
        if (!structure[a][c][k].is_zero())
          r[k] += f * structure[a][c][k];
    }
  }
  return r;
}

FieldScalar CompactLieData::form(const ExactVector &x, const ExactVector &y) const {
  FieldScalar s;
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero())
      continue;
    for (int c = 0; c < dim(); ++c)
      if (!y[c].is_zero() && !b(a, c).is_zero())
        s += x[a] * b(a, c) * y[c];
  }
  return s;
}

ExactVector CompactLieData::conj_vector(const ExactVector &x) const {
  ExactVector r(dim());
  for (int a = 0; a < dim(); ++a)
    r[conj[a]] = x[a].conj();
  return r;
}

std::vector<int> CompactLieData::holomorphic() const {
  std::vector<int> h;
  for (auto [t, tb] : cartan)
    h.push_back(t);
  for (auto [a, ab] : roots)
    h.push_back(a);
  return h;
}

std::vector<std::string> lie_violations(const CompactLieData &d) {
  std::vector<std::string> out;
  int m = d.dim();
  if (m == 0)
    return {"empty basis"};
  if (static_cast<int>(d.conj.size()) != m || d.b.rows() != std::size_t(m) ||
      d.b.cols() != std::size_t(m) || static_cast<int>(d.structure.size()) != m)
    return {"sizes of conjugation, B or structure constants do not match the basis"};
  for (const auto &row : d.structure)
    if (static_cast<int>(row.size()) != m ||
        std::any_of(row.begin(), row.end(), [&](const ExactVector &v) { return int(v.size()) != m; }))
      return {"structure constant table is not dim x dim x dim"};

  // adapted basis: the pairs cover every index once
  std::vector<int> seen(m, 0);
  for (auto [x, y] : d.cartan)
    ++seen[x], ++seen[y];
  for (auto [x, y] : d.roots)
    ++seen[x], ++seen[y];
  for (int a = 0; a < m; ++a)
    if (seen[a] != 1)
      out.push_back("basis vector " + d.basis[a] + " must occur in exactly one Cartan or root pair");
  if (!out.empty())
    return out;

  auto name = [&](int a) { return d.basis[a]; };
  auto triple = [&](int a, int b, int c) {
    return "(" + name(a) + ", " + name(b) + ", " + name(c) + ")";
  };

  for (int a = 0; a < m; ++a)
    if (d.conj[a] < 0 || d.conj[a] >= m || d.conj[d.conj[a]] != a)
      out.push_back("conjugation is not an involution at " + name(a));
  for (const auto &pairs : {d.cartan, d.roots})
    for (auto [x, y] : pairs)
      if (d.conj[x] != y)
        out.push_back("conj(" + name(x) + ") is not " + name(y));
  if (!out.empty())
    return out;

  int listed = 0;
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      if (d.b(a, c) != d.b(c, a) && listed++ < kMaxListed)
        out.push_back("B is not symmetric at (" + name(a) + ", " + name(c) + ")");

  // type (1,1) with a unitary basis
  std::vector<int> hol = d.holomorphic();
  listed = 0;
  for (int x : hol)
    for (int y : hol) {
      if (!d.b(x, y).is_zero() && listed++ < kMaxListed)
        out.push_back("B(" + name(x) + ", " + name(y) + ") != 0, B is not of type (1,1)");
      FieldScalar want(x == y ? 1 : 0);
      if (d.b(x, d.conj[y]) != want && listed++ < kMaxListed)
        out.push_back("B(" + name(x) + ", " + name(d.conj[y]) + ") = " +
                      d.b(x, d.conj[y]).str() + ", expected " + want.str());
    }

  listed = 0;
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      ExactVector s = d.structure[a][c];
      for (int k = 0; k < m; ++k)
        s[k] += d.structure[c][a][k];
      if (!is_zero(s) && listed++ < kMaxListed)
        out.push_back("bracket not antisymmetric on (" + name(a) + ", " + name(c) + ")");
    }

  listed = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        ExactVector x = d.unit(a), y = d.unit(b), z = d.unit(c);
        ExactVector j1 = d.bracket(x, d.bracket(y, z)), j2 = d.bracket(y, d.bracket(z, x)),
                    j3 = d.bracket(z, d.bracket(x, y));
        for (int k = 0; k < m; ++k)
          j1[k] += j2[k] + j3[k];
        if (!is_zero(j1) && listed++ < kMaxListed)
          out.push_back("Jacobi identity fails on " + triple(a, b, c) + ": sum = " + vec_str(d, j1));
      }

  listed = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        ExactVector x = d.unit(a), y = d.unit(b), z = d.unit(c);
        FieldScalar v = d.form(d.bracket(x, y), z) + d.form(y, d.bracket(x, z));
        if (!v.is_zero() && listed++ < kMaxListed)
          out.push_back("B is not ad-invariant on " + triple(a, b, c));
      }

  listed = 0;
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      if (d.b(d.conj[a], d.conj[c]) != d.b(a, c).conj() && listed++ < kMaxListed)
        out.push_back("B is not real on (" + name(a) + ", " + name(c) + ")");
      ExactVector lhs = d.structure[d.conj[a]][d.conj[c]];
      ExactVector rhs = d.conj_vector(d.structure[a][c]);
      if (lhs != rhs && listed++ < kMaxListed)
        out.push_back("structure constants not conjugation-consistent on (" + name(a) + ", " +
                      name(c) + ")");
    }
  }

  // g^{1,0} closed under the bracket
  listed = 0;
  for (int x : hol)
    for (int y : hol) {
      ExactVector br = d.structure[x][y];
      for (int k : hol)
        br[k] = FieldScalar();
      if (!is_zero(br) && listed++ < kMaxListed)
        out.push_back("[" + name(x) + ", " + name(y) + "] leaves g^{1,0}");
    }
  for (auto [t, tb] : d.cartan)
    for (auto [u, ub] : d.cartan)
      for (int x : {t, tb})
        for (int y : {u, ub})
          if (!is_zero(d.structure[x][y]) && listed++ < kMaxListed)
            out.push_back("Cartan elements " + name(x) + ", " + name(y) + " do not commute");

  if (!d.matrices.empty() && static_cast<int>(d.matrices.size()) != m)
    out.push_back("matrix realization does not match the basis");
  return out;
}

void validate_lie(const CompactLieData &d) {
  auto v = lie_violations(d);
  if (!v.empty())
    throw LieDataError(std::move(v));
}

ExactMatrix conj_transpose(const ExactMatrix &m) {
  ExactMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(j, i) = m(i, j).conj();
  return r;
}

CompactLieData lie_from_matrices(std::string name, std::vector<std::string> basis,
                                 std::vector<ExactMatrix> matrices,
                                 std::vector<std::pair<int, int>> cartan,
                                 std::vector<std::pair<int, int>> roots) {
  CompactLieData d;
  d.name = std::move(name);
  d.basis = std::move(basis);
  d.matrices = std::move(matrices);
  d.cartan = std::move(cartan);
  d.roots = std::move(roots);
  int m = d.dim();
  d.b = ExactMatrix(m, m);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      d.b(a, c) = -trace(d.matrices[a] * d.matrices[c]);
  auto ginv = d.b.inverse();
  if (!ginv)
    throw LieDataError({"B is degenerate on the realization"});
  auto coords = [&](const ExactMatrix &x) {
    ExactVector rhs(m);
    for (int a = 0; a < m; ++a)
      rhs[a] = -trace(d.matrices[a] * x);
    ExactVector c = *ginv * rhs;
    ExactMatrix back(x.rows(), x.cols());
    for (int a = 0; a < m; ++a)
      back = back + d.matrices[a].scaled(c[a]);
    if (!(back == x))
      throw LieDataError({"matrix realization is not closed under the bracket"});
    return c;
  };
  d.conj.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    ExactVector c = coords(conj_transpose(d.matrices[a]).scaled(FieldScalar(-1)));
    for (int k = 0; k < m; ++k)
      if (c[k] == FieldScalar(1) &&
          std::count_if(c.begin(), c.end(), [](const FieldScalar &x) { return !x.is_zero(); }) == 1)
        d.conj[a] = k;
    if (d.conj[a] < 0)
      throw LieDataError({"conjugate of " + d.basis[a] + " is not a basis vector"});
  }
  d.structure.assign(m, std::vector<ExactVector>(m));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      d.structure[a][c] =
          coords(d.matrices[a] * d.matrices[c] - d.matrices[c] * d.matrices[a]);
  validate_lie(d);
  return d;
}

namespace {

ExactMatrix elementary(int n, int i, int j) {
  ExactMatrix e(n, n);
  e(i, j) = FieldScalar(1);
  return e;
}

ExactMatrix diag(const std::vector<FieldScalar> &v) {
  ExactMatrix e(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    e(i, i) = v[i];
  return e;
}

ExactMatrix neg_adjoint(const ExactMatrix &m) { return conj_transpose(m).scaled(FieldScalar(-1)); }

} // namespace

CompactLieData builtin_su2xu1() {
  // u(2) = su(2) + u(1); t = diag(i, 1)/sqrt2 is isotropic with B(t, conj t) = 1
  FieldScalar s = FieldScalar::sqrt2().inverse();
  ExactMatrix t = diag({FieldScalar::i() * s, s});
  ExactMatrix a = elementary(2, 0, 1);
  return lie_from_matrices("su2xu1", {"t1", "t1b", "a1", "a1b"},
                           {t, neg_adjoint(t), a, neg_adjoint(a)}, {{0, 1}}, {{2, 3}});
}

CompactLieData builtin_su3() {
  // t = diag(1, w, w^2)/sqrt3 with w a primitive cube root of unity
  FieldScalar w = (FieldScalar(-1) + FieldScalar::i() * FieldScalar::sqrt3()) *
                  FieldScalar::rational(1, 2);
  FieldScalar s = FieldScalar::sqrt3().inverse();
  ExactMatrix t = diag({s, w * s, w * w * s});
  std::vector<std::string> names{"t1", "t1b"};
  std::vector<ExactMatrix> mats{t, neg_adjoint(t)};
  std::vector<std::pair<int, int>> roots;
  int k = 1;
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
    ExactMatrix e = elementary(3, i, j);
    names.push_back("a" + std::to_string(k));
    names.push_back("a" + std::to_string(k) + "b");
    roots.emplace_back(static_cast<int>(mats.size()), static_cast<int>(mats.size()) + 1);
    mats.push_back(e);
    mats.push_back(neg_adjoint(e));
    ++k;
  }
  return lie_from_matrices("su3", names, mats, {{0, 1}}, roots);
}

std::vector<std::string> lie_names() { return {"su2xu1", "su3"}; }

CompactLieData lie_by_name(const std::string &name) {
  if (name == "su2xu1")
    return builtin_su2xu1();
  if (name == "su3")
    return builtin_su3();
  throw std::out_of_range("unknown algebra '" + name + "'");
}

} // namespace gkspin
