#include "gkspin/manifold/patch.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkspin {

Patch::Patch(int n, bool punctured) : n_(n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("patch dimension out of range");
  std::vector<Expr> sq;
  for (int k = 1; k <= n; ++k) {
    std::string z = "z" + std::to_string(k);
    int id = declare_pair(z, z + "b");
    int idb = var_info(id).conj;
    vars_.push_back(id);
    vars_.push_back(idb);
    table_.add(id);
    table_.add(idb);
    names_.push_back("d" + z);
    names_.push_back("d" + z + "b");
    vnames_.push_back("d/d" + z);
    vnames_.push_back("d/d" + z + "b");
    sq.push_back(Expr::var(id) * Expr::var(idb));
  }
  if (punctured) {
    Expr s = make_add(sq);
    radius_ = declare_radical(n == 2 ? "r" : "r" + std::to_string(n), s);
    table_.add(*radius_);
    constraints_.push_back(s);
  }
}

Expr Patch::r() const {
  if (!radius_)
    throw std::logic_error("patch has no radius variable");
  return Expr::var(*radius_);
}

Expr Patch::r2() const {
  std::vector<Expr> sq;
  for (int k = 0; k < n_; ++k)
    sq.push_back(coord(2 * k) * coord(2 * k + 1));
  return make_add(sq);
}

SamplingDomain Patch::domain() const {
  SamplingDomain d;
  for (int k = 0; k < n_; ++k)
    d.coords.push_back(vars_[2 * k]);
  d.radius = radius_;
  d.nonvanishing = constraints_;
  return d;
}

GenSection GenSection::vector_field(std::vector<Expr> v) {
  GenSection e(static_cast<int>(v.size()));
  e.vec = std::move(v);
  return e;
}

GenSection GenSection::one_form(std::vector<Expr> c) {
  GenSection e(static_cast<int>(c.size()));
  e.cov = std::move(c);
  return e;
}

GenSection &GenSection::operator+=(const GenSection &o) {
  for (int j = 0; j < dim(); ++j) {
    vec[j] += o.vec[j];
    cov[j] += o.cov[j];
  }
  return *this;
}

GenSection &GenSection::operator-=(const GenSection &o) {
  for (int j = 0; j < dim(); ++j) {
    vec[j] -= o.vec[j];
    cov[j] -= o.cov[j];
  }
  return *this;
}

GenSection GenSection::operator-() const {
  GenSection r(dim());
  for (int j = 0; j < dim(); ++j) {
    r.vec[j] = -vec[j];
    r.cov[j] = -cov[j];
  }
  return r;
}

GenSection GenSection::scaled(const Expr &c) const {
  GenSection r(dim());
  for (int j = 0; j < dim(); ++j) {
    r.vec[j] = c * vec[j];
    r.cov[j] = c * cov[j];
  }
  return r;
}

std::string GenSection::str(const Patch &p) const {
  std::string out;
  auto emit = [&](const Expr &c, const std::string &name) {
    if (c.is_zero())
      return;
    if (!out.empty())
      out += " + ";
    out += "(" + c.str() + ")*" + name;
  };
  for (int j = 0; j < dim(); ++j)
    emit(vec[j], p.vector_names()[j]);
  for (int j = 0; j < dim(); ++j)
    emit(cov[j], p.generator_names()[j]);
  return out.empty() ? "0" : out;
}

std::pair<Blade, int> permute_blade(Blade b, const std::vector<int> &perm) {
  std::vector<int> img;
  for (Blade bb = b; bb; bb &= bb - 1)
    img.push_back(perm[std::countr_zero(bb)]);
  int inversions = 0;
  Blade out = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    out |= Blade(1) << img[i];
    for (std::size_t j = i + 1; j < img.size(); ++j)
      inversions += img[i] > img[j];
  }
  return {out, (inversions & 1) ? -1 : 1};
}

namespace {

std::vector<int> swap_perm(int dim) {
  std::vector<int> p(dim);
  for (int j = 0; j < dim; ++j)
    p[j] = Patch::partner(j);
  return p;
}

int max_index(Blade b) { return b ? static_cast<int>(std::bit_width(b)) : 0; }

template <class S> Multivector<S> conj_generic(const Multivector<S> &w) {
  int dim = 0;
  for (const auto &[b, s] : w.terms())
    dim = std::max(dim, max_index(b));
  dim += dim & 1;
  auto perm = swap_perm(dim);
  Multivector<S> r(w.kind());
  for (const auto &[b, s] : w.terms()) {
    auto [nb, sign] = permute_blade(b, perm);
    S c = ScalarTraits<S>::conj(s);
    r.add(nb, sign < 0 ? -c : c);
  }
  return r;
}

} // namespace

FormField conj(const FormField &w) { return conj_generic(w); }
PointForm conj_point(const PointForm &w) { return conj_generic(w); }

GenSection conj(const GenSection &e) {
  GenSection r(e.dim());
  for (int j = 0; j < e.dim(); ++j) {
    r.vec[Patch::partner(j)] = conj(e.vec[j]);
    r.cov[Patch::partner(j)] = conj(e.cov[j]);
  }
  return r;
}

Expr pairing_tt(const GenSection &a, const GenSection &b) {
  std::vector<Expr> terms;
  for (int j = 0; j < a.dim(); ++j) {
    terms.push_back(a.cov[j] * b.vec[j]);
    terms.push_back(b.cov[j] * a.vec[j]);
  }
  return FieldScalar::rational(1, 2) * make_add(terms);
}

FormField interior(const std::vector<Expr> &v, const FormField &w) {
  FormField r;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero())
      continue;
    r += interior_generator(static_cast<int>(j), w).scaled(v[j]);
  }
  return r;
}

FormField one_form_field(const std::vector<Expr> &c) {
  FormField r;
  for (std::size_t j = 0; j < c.size(); ++j)
    r.add(Blade(1) << j, c[j]);
  return r;
}

FormField spin_action(const GenSection &e, const FormField &w) {
  FormField r = interior(e.vec, w);
  for (int j = 0; j < e.dim(); ++j) {
    if (e.cov[j].is_zero())
      continue;
    r += wedge_generator(j, w).scaled(e.cov[j]);
  }
  return r;
}

FormField exterior_d(const FormField &w, const Patch &p) {
  FormField r;
  for (int j = 0; j < p.dim(); ++j) {
    Differentiator dj;
    int v = p.var(j);
    FormField part = w.map_coefficients([&](const Expr &c) { return dj(c, v); });
    r += wedge_generator(j, part);
  }
  return r;
}

GenSection differential(const Expr &f, const Patch &p) {
  GenSection e(p.dim());
  for (int j = 0; j < p.dim(); ++j)
    e.cov[j] = diff(f, p.var(j));
  return e;
}

Expr directional(const std::vector<Expr> &v, const Expr &f, const Patch &p) {
  std::vector<Expr> terms;
  for (int j = 0; j < p.dim(); ++j)
    if (!v[j].is_zero())
      terms.push_back(v[j] * diff(f, p.var(j)));
  return make_add(terms);
}

Expr real_part(const Expr &f) { return FieldScalar::rational(1, 2) * (f + conj(f)); }

PointForm eval_form(const FormField &w, const SamplePoint &pt) {
  Evaluator ev(pt);
  PointForm r(w.kind());
  for (const auto &[b, c] : w.terms())
    r.add(b, ev(c));
  return r;
}

std::vector<FieldScalar> eval_section(const GenSection &e, const SamplePoint &pt) {
  Evaluator ev(pt);
  std::vector<FieldScalar> r;
  for (const auto &c : e.vec)
    r.push_back(ev(c));
  for (const auto &c : e.cov)
    r.push_back(ev(c));
  return r;
}

ZeroVerdict form_is_zero(const FormField &w, Sampler &s, int trials) {
  std::vector<Expr> cs;
  for (const auto &[b, c] : w.terms())
    cs.push_back(c);
  return is_zero(cs, s, trials);
}

ZeroVerdict section_is_zero(const GenSection &e, Sampler &s, int trials) {
  std::vector<Expr> cs = e.vec;
  cs.insert(cs.end(), e.cov.begin(), e.cov.end());
  return is_zero(cs, s, trials);
}

} // namespace gkspin
