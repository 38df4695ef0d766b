#pragma once

#include "gkspin/scalar/expr.hpp"
#include "gkspin/scalar/field_scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace gkspin {

using Blade = std::uint32_t;

template <class S> struct ScalarTraits;

template <> struct ScalarTraits<FieldScalar> {
  static bool is_zero(const FieldScalar &s) { return s.is_zero(); }
  static FieldScalar from_field(const FieldScalar &c) { return c; }
  static FieldScalar conj(const FieldScalar &s) { return s.conj(); }
  static std::string str(const FieldScalar &s) { return s.str(); }
};

template <> struct ScalarTraits<Expr> {
  static bool is_zero(const Expr &s) { return s.is_zero(); }
  static Expr from_field(const FieldScalar &c) { return Expr(c); }
  static Expr conj(const Expr &s) { return gkspin::conj(s); }
  static std::string str(const Expr &s) { return s.str(); }
};

enum class Algebra { Exterior, Clifford };

inline int grade_of(Blade b) { return std::popcount(b); }

// Sign from reordering the concatenation a,b of two sorted index sets.
inline int reorder_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Map from blade bitmask to coefficient.  Exterior values use wedge
// monomials; Clifford values use ordered Clifford products of generators.
template <class S> class Multivector {
public:
  using Traits = ScalarTraits<S>;

  explicit Multivector(Algebra kind = Algebra::Exterior) : kind_(kind) {}

  static Multivector scalar(const S &s, Algebra kind = Algebra::Exterior) {
    Multivector m(kind);
    m.add(0, s);
    return m;
  }
  static Multivector generator(int i, Algebra kind = Algebra::Exterior) {
    Multivector m(kind);
    m.add(Blade(1) << i, Traits::from_field(FieldScalar(1)));
    return m;
  }
  static Multivector blade(Blade b, const S &s, Algebra kind = Algebra::Exterior) {
    Multivector m(kind);
    m.add(b, s);
    return m;
  }

  Algebra kind() const { return kind_; }
  const std::map<Blade, S> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Blade b, const S &s) {
    if (Traits::is_zero(s))
      return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, s);
      return;
    }
    it->second = it->second + s;
    if (Traits::is_zero(it->second))
      terms_.erase(it);
  }

  S get(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Traits::from_field(FieldScalar(0)) : it->second;
  }

  Multivector grade_project(int k) const {
    Multivector r(kind_);
    for (const auto &[b, s] : terms_)
      if (grade_of(b) == k)
        r.terms_.emplace(b, s);
    return r;
  }

  // -1 if empty
  int max_grade() const {
    int g = -1;
    for (const auto &[b, s] : terms_)
      g = std::max(g, grade_of(b));
    return g;
  }
  int min_grade() const {
    int g = 1 << 20;
    for (const auto &[b, s] : terms_)
      g = std::min(g, grade_of(b));
    return terms_.empty() ? -1 : g;
  }

  Multivector &operator+=(const Multivector &o) {
    check_kind(o);
    for (const auto &[b, s] : o.terms_)
      add(b, s);
    return *this;
  }
  Multivector &operator-=(const Multivector &o) {
    check_kind(o);
    for (const auto &[b, s] : o.terms_)
      add(b, -s);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
  Multivector operator-() const {
    Multivector r(kind_);
    for (const auto &[b, s] : terms_)
      r.terms_.emplace(b, -s);
    return r;
  }
  Multivector scaled(const S &c) const {
    Multivector r(kind_);
    for (const auto &[b, s] : terms_)
      r.add(b, c * s);
    return r;
  }
  template <class F> Multivector map_coefficients(F f) const {
    Multivector r(kind_);
    for (const auto &[b, s] : terms_)
      r.add(b, f(s));
    return r;
  }

  std::string str(const std::vector<std::string> &names = {}) const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &[b, s] : terms_) {
      if (!out.empty())
        out += " + ";
      out += "(" + Traits::str(s) + ")";
      for (Blade bb = b; bb; bb &= bb - 1) {
        int j = std::countr_zero(bb);
        out += (kind_ == Algebra::Exterior ? "^" : "*");
        out += j < static_cast<int>(names.size()) ? names[j] : "e" + std::to_string(j);
      }
    }
    return out;
  }

private:
  std::map<Blade, S> terms_;
  Algebra kind_;

  void check_kind(const Multivector &o) const {
    if (o.kind_ != kind_)
      throw std::invalid_argument("mixing exterior and Clifford multivectors");
  }
};

template <class S> void require_exterior(const Multivector<S> &a, const char *what) {
  if (a.kind() != Algebra::Exterior)
    throw std::invalid_argument(std::string(what) + " needs exterior operands");
}

template <class S> Multivector<S> wedge(const Multivector<S> &a, const Multivector<S> &b) {
  require_exterior(a, "wedge");
  require_exterior(b, "wedge");
  Multivector<S> r;
  for (const auto &[ba, sa] : a.terms())
    for (const auto &[bb, sb] : b.terms()) {
      if (ba & bb)
        continue;
      S c = sa * sb;
      r.add(ba | bb, reorder_sign(ba, bb) < 0 ? -c : c);
    }
  return r;
}

// e_j ^ w
template <class S> Multivector<S> wedge_generator(int j, const Multivector<S> &w) {
  Multivector<S> r(w.kind());
  Blade bit = Blade(1) << j;
  for (const auto &[b, s] : w.terms()) {
    if (b & bit)
      continue;
    int sign = (std::popcount(b & (bit - 1)) & 1) ? -1 : 1;
    r.add(b | bit, sign < 0 ? -s : s);
  }
  return r;
}

// Contraction by the dual basis vector of generator j (a graded derivation).
template <class S> Multivector<S> interior_generator(int j, const Multivector<S> &w) {
  Multivector<S> r(w.kind());
  Blade bit = Blade(1) << j;
  for (const auto &[b, s] : w.terms()) {
    if (!(b & bit))
      continue;
    int sign = (std::popcount(b & (bit - 1)) & 1) ? -1 : 1;
    r.add(b & ~bit, sign < 0 ? -s : s);
  }
  return r;
}

// +1 on degrees 0,1 mod 4, -1 on degrees 2,3 mod 4.
template <class S> Multivector<S> clifford_involution(const Multivector<S> &a) {
  require_exterior(a, "clifford_involution");
  Multivector<S> r;
  for (const auto &[b, s] : a.terms())
    r.add(b, (grade_of(b) % 4 >= 2) ? -s : s);
  return r;
}

// Coefficient of the top blade in a ^ sigma(b).
template <class S>
S mukai_pairing(const Multivector<S> &a, const Multivector<S> &b, Blade top) {
  require_exterior(a, "mukai_pairing");
  require_exterior(b, "mukai_pairing");
  S acc = ScalarTraits<S>::from_field(FieldScalar(0));
  for (const auto &[ba, sa] : a.terms())
    for (const auto &[bb, sb] : b.terms()) {
      if ((ba | bb) != top || (ba & bb))
        continue;
      int sign = reorder_sign(ba, bb) * ((grade_of(bb) % 4 >= 2) ? -1 : 1);
      S c = sa * sb;
      acc = sign < 0 ? acc - c : acc + c;
    }
  return acc;
}

// e^w for a nilpotent even form without scalar part
template <class S> Multivector<S> exp_form(const Multivector<S> &w) {
  require_exterior(w, "exp_form");
  if (!w.get(0).is_zero())
    throw std::invalid_argument("exp_form needs a form without scalar part");
  using T = ScalarTraits<S>;
  Multivector<S> result = Multivector<S>::scalar(T::from_field(FieldScalar(1)));
  Multivector<S> power = result;
  FieldScalar fact(1);
  for (int k = 1; k < 64; ++k) {
    power = wedge(power, w);
    if (power.is_zero())
      break;
    fact *= FieldScalar(k);
    result += power.scaled(T::from_field(fact.inverse()));
  }
  return result;
}

} // namespace gkspin
