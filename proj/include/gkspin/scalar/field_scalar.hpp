#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gkspin {

// Gaussian rational re + im*i.
struct GaussQ {
  mpq_class re, im;

  GaussQ() = default;
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussQ conj() const { return {re, -im}; }

  GaussQ operator-() const { return {-re, -im}; }
  GaussQ &operator+=(const GaussQ &o);
  GaussQ &operator-=(const GaussQ &o);
  friend GaussQ operator+(GaussQ a, const GaussQ &b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ &b) { return a -= b; }
  friend GaussQ operator*(const GaussQ &a, const GaussQ &b);
  GaussQ inverse() const;
  bool operator==(const GaussQ &o) const { return re == o.re && im == o.im; }
};

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Element of Q(i, sqrt2, sqrt3) stored as c0 + c1*sqrt2 + c2*sqrt3 + c3*sqrt6
// with Gaussian rational coefficients.
class FieldScalar {
public:
  FieldScalar() = default;
  FieldScalar(long v) { c_[0].re = v; }
  FieldScalar(int v) : FieldScalar(static_cast<long>(v)) {}
  FieldScalar(const mpq_class &v) {
    c_[0].re = v;
    c_[0].re.canonicalize();
  }
  FieldScalar(const GaussQ &g) { c_[0] = g; }
  static FieldScalar rational(long num, long den);
  static FieldScalar gaussian(const mpq_class &re, const mpq_class &im);
  static FieldScalar i();
  static FieldScalar sqrt2();
  static FieldScalar sqrt3();
  static FieldScalar sqrt6();

  const GaussQ &component(int k) const { return c_[k]; }
  GaussQ &component(int k) { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_gaussian() const;
  bool is_real() const;
  // sign of a real element, exact
  int sign() const;

  FieldScalar conj() const;
  FieldScalar real_part() const;
  FieldScalar imag_part() const;
  FieldScalar inverse() const;
  FieldScalar pow(long k) const;

  FieldScalar operator-() const;
  FieldScalar &operator+=(const FieldScalar &o);
  FieldScalar &operator-=(const FieldScalar &o);
  FieldScalar &operator*=(const FieldScalar &o);
  FieldScalar &operator/=(const FieldScalar &o) { return *this *= o.inverse(); }
  friend FieldScalar operator+(FieldScalar a, const FieldScalar &b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar &b) { return a -= b; }
  friend FieldScalar operator*(const FieldScalar &a, const FieldScalar &b);
  friend FieldScalar operator/(const FieldScalar &a, const FieldScalar &b) {
    return a * b.inverse();
  }
  bool operator==(const FieldScalar &o) const;
  bool operator!=(const FieldScalar &o) const { return !(*this == o); }

  // Canonical text, e.g. "1/2 + 3/4*i + (1/2 - i)*sqrt2".
  std::string str() const;
  // Accepts the canonical text and anything the expression grammar folds to a
  // constant.
  static FieldScalar parse(const std::string &text);

  double to_double_real() const;
  double to_double_imag() const;
  std::size_t hash() const;

private:
  std::array<GaussQ, 4> c_;
  FieldScalar galois(bool flip2, bool flip3) const;
};

std::ostream &operator<<(std::ostream &os, const FieldScalar &x);

} // namespace gkspin
