#pragma once

#include "gkspin/manifold/patch.hpp"

#include <stdexcept>

namespace gkspin {

class TwistError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A real closed 3-form, validated once at construction.
class Twist {
public:
  Twist() = default;
  // Throws TwistError if H is not a 3-form, not real, or not closed.
  Twist(FormField h, const Patch &p, std::uint64_t seed = 0, int trials = kDefaultTrials);

  const FormField &form() const { return h_; }
  bool trivial() const { return h_.is_zero(); }

private:
  FormField h_;
};

// d w + H ^ w
FormField twisted_d(const FormField &w, const Twist &h, const Patch &p);

// [u, v] of vector fields
std::vector<Expr> vector_bracket(const std::vector<Expr> &u, const std::vector<Expr> &v,
                                 const Patch &p);
// L_u xi of a 1-form
std::vector<Expr> lie_one_form(const std::vector<Expr> &u, const std::vector<Expr> &xi,
                               const Patch &p);

GenSection courant_bracket(const GenSection &a, const GenSection &b, const Twist &h,
                           const Patch &p);
GenSection dorfman_bracket(const GenSection &a, const GenSection &b, const Twist &h,
                           const Patch &p);

// d_H (e . w) + e . d_H w
FormField lie_derivative_h(const GenSection &e, const FormField &w, const Twist &h,
                           const Patch &p);
// Action on sections: the twisted Dorfman bracket.
GenSection lie_derivative_h(const GenSection &e, const GenSection &x, const Twist &h,
                            const Patch &p);

} // namespace gkspin
