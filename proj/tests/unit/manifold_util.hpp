#pragma once

#include "gkspin/manifold/curvature.hpp"
#include "gkspin/manifold/pointwise.hpp"
#include "test_util.hpp"

namespace gkspin::testing {

inline Expr random_poly(std::mt19937_64 &rng, const Patch &p, int terms = 3) {
  std::uniform_int_distribution<int> var(0, p.dim() - 1), deg(0, 2);
  std::vector<Expr> out;
  for (int t = 0; t < terms; ++t) {
    Expr m = Expr(random_scalar(rng, false));
    for (int k = deg(rng); k > 0; --k)
      m = m * p.coord(var(rng));
    out.push_back(m);
  }
  return make_add(out);
}

inline Expr random_real_poly(std::mt19937_64 &rng, const Patch &p) {
  return real_part(random_poly(rng, p));
}

inline GenSection random_section(std::mt19937_64 &rng, const Patch &p) {
  GenSection e(p.dim());
  for (int j = 0; j < p.dim(); ++j) {
    e.vec[j] = random_poly(rng, p, 2);
    e.cov[j] = random_poly(rng, p, 2);
  }
  return e;
}

inline FormField random_form(std::mt19937_64 &rng, const Patch &p, int terms = 3) {
  std::uniform_int_distribution<Blade> blade(0, p.volume_blade());
  FormField w;
  for (int t = 0; t < terms; ++t)
    w.add(blade(rng), random_poly(rng, p, 2));
  return w;
}

inline FormField gen_form(int j) { return FormField::generator(j); }

inline FormField blade_form(Blade b, const Expr &c = Expr(1)) { return FormField::blade(b, c); }

} // namespace gkspin::testing
