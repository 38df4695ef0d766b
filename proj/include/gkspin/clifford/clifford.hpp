#pragma once

#include "gkspin/clifford/multivector.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace gkspin {

using BladeTerms = std::vector<std::pair<Blade, FieldScalar>>;

// Generators with a symmetric Gram matrix <e_i, e_j>.  Clifford products obey
// e_i e_j + e_j e_i = 2 <e_i, e_j>.  Product, symbol and quantization tables
// are cached per space.
class BilinearSpace {
public:
  BilinearSpace(std::vector<std::string> names, std::vector<std::vector<FieldScalar>> gram);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const FieldScalar &form(int i, int j) const { return gram_[i][j]; }
  Blade top() const { return dim() == 32 ? ~Blade(0) : (Blade(1) << dim()) - 1; }

  // Ordered-monomial product tables.
  const BladeTerms &mono_times_gen(Blade m, int j) const;
  const BladeTerms &mono_times_mono(Blade a, Blade b) const;
  // Exterior symbol of a Clifford monomial.
  const BladeTerms &symbol_of(Blade m) const;
  // Clifford image of an exterior monomial.
  const BladeTerms &quantize(Blade m) const;
  // Reversal of a Clifford monomial.
  const BladeTerms &reversed(Blade m) const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<FieldScalar>> gram_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

template <class S> void accumulate(Multivector<S> &r, const BladeTerms &t, const S &c) {
  for (const auto &[b, f] : t) {
    if (f.is_one())
      r.add(b, c);
    else
      r.add(b, c * ScalarTraits<S>::from_field(f));
  }
}

template <class S> void require_clifford(const Multivector<S> &a, const char *what) {
  if (a.kind() != Algebra::Clifford)
    throw std::invalid_argument(std::string(what) + " needs Clifford operands");
}

} // namespace detail

template <class S>
Multivector<S> clifford_mul(const Multivector<S> &a, const Multivector<S> &b,
                            const BilinearSpace &sp) {
  detail::require_clifford(a, "clifford_mul");
  detail::require_clifford(b, "clifford_mul");
  Multivector<S> r(Algebra::Clifford);
  for (const auto &[ba, sa] : a.terms())
    for (const auto &[bb, sb] : b.terms())
      detail::accumulate(r, sp.mono_times_mono(ba, bb), S(sa * sb));
  return r;
}

template <class S>
Multivector<S> symbol_map(const Multivector<S> &x, const BilinearSpace &sp) {
  detail::require_clifford(x, "symbol_map");
  Multivector<S> r(Algebra::Exterior);
  for (const auto &[b, s] : x.terms())
    detail::accumulate(r, sp.symbol_of(b), s);
  return r;
}

template <class S> Multivector<S> q_map(const Multivector<S> &x, const BilinearSpace &sp) {
  require_exterior(x, "q_map");
  Multivector<S> r(Algebra::Clifford);
  for (const auto &[b, s] : x.terms())
    detail::accumulate(r, sp.quantize(b), s);
  return r;
}

template <class S>
Multivector<S> transpose(const Multivector<S> &x, const BilinearSpace &sp) {
  detail::require_clifford(x, "transpose");
  Multivector<S> r(Algebra::Clifford);
  for (const auto &[b, s] : x.terms())
    detail::accumulate(r, sp.reversed(b), s);
  return r;
}

// Top-degree coefficient of symbol(transpose(x) * y).
template <class S>
S cl_pairing(const Multivector<S> &x, const Multivector<S> &y, const BilinearSpace &sp) {
  return symbol_map(clifford_mul(transpose(x, sp), y, sp), sp).get(sp.top());
}

// Graded parity of a homogeneous element, or -1 if mixed.
template <class S> int parity(const Multivector<S> &x) {
  int p = -1;
  for (const auto &[b, s] : x.terms()) {
    int q = grade_of(b) & 1;
    if (p >= 0 && p != q)
      return -1;
    p = q;
  }
  return p < 0 ? 0 : p;
}

} // namespace gkspin
