#include "gkspin/scalar/field_scalar.hpp"

#include "gkspin/scalar/expr.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace gkspin {

GaussQ &GaussQ::operator+=(const GaussQ &o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussQ &GaussQ::operator-=(const GaussQ &o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussQ operator*(const GaussQ &a, const GaussQ &b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0)
    return GaussQ(a.re * b.re);
  return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussQ GaussQ::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0)
    throw DivisionByZero("division by zero");
  return GaussQ(re / n, -im / n);
}

FieldScalar FieldScalar::rational(long num, long den) {
  if (den == 0)
    throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldScalar(q);
}

FieldScalar FieldScalar::gaussian(const mpq_class &re, const mpq_class &im) {
  FieldScalar x;
  x.c_[0] = GaussQ(re, im);
  return x;
}

FieldScalar FieldScalar::i() { return gaussian(0, 1); }

FieldScalar FieldScalar::sqrt2() {
  FieldScalar x;
  x.c_[1].re = 1;
  return x;
}

FieldScalar FieldScalar::sqrt3() {
  FieldScalar x;
  x.c_[2].re = 1;
  return x;
}

FieldScalar FieldScalar::sqrt6() {
  FieldScalar x;
  x.c_[3].re = 1;
  return x;
}

bool FieldScalar::is_zero() const {
  for (const auto &c : c_)
    if (!c.is_zero())
      return false;
  return true;
}

bool FieldScalar::is_one() const {
  return c_[0].re == 1 && sgn(c_[0].im) == 0 && c_[1].is_zero() && c_[2].is_zero() &&
         c_[3].is_zero();
}

bool FieldScalar::is_gaussian() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool FieldScalar::is_rational() const { return is_gaussian() && sgn(c_[0].im) == 0; }

bool FieldScalar::is_real() const {
  for (const auto &c : c_)
    if (sgn(c.im) != 0)
      return false;
  return true;
}

namespace {

int sign_sqrt2(const mpq_class &a, const mpq_class &b) {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0)
    return sa;
  if (sa == 0)
    return sb;
  if (sa == sb)
    return sa;
  mpq_class d = a * a - 2 * b * b;
  return sa * sgn(d);
}

} // namespace

int FieldScalar::sign() const {
  if (!is_real())
    throw std::domain_error("sign of a non-real field element");
  const mpq_class &a = c_[0].re, &b = c_[1].re, &c = c_[2].re, &d = c_[3].re;
  int su = sign_sqrt2(a, b), sv = sign_sqrt2(c, d);
  if (sv == 0)
    return su;
  if (su == 0)
    return sv;
  if (su == sv)
    return su;
  // u^2 - 3 v^2 with u = a + b sqrt2, v = c + d sqrt2
  mpq_class p = a * a + 2 * b * b - 3 * (c * c + 2 * d * d);
  mpq_class q = 2 * a * b - 6 * c * d;
  return su * sign_sqrt2(p, q);
}

FieldScalar FieldScalar::conj() const {
  FieldScalar r = *this;
  for (auto &c : r.c_)
    c.im = -c.im;
  return r;
}

FieldScalar FieldScalar::real_part() const {
  FieldScalar r = *this;
  for (auto &c : r.c_)
    c.im = 0;
  return r;
}

FieldScalar FieldScalar::imag_part() const {
  FieldScalar r;
  for (int k = 0; k < 4; ++k)
    r.c_[k].re = c_[k].im;
  return r;
}

FieldScalar FieldScalar::galois(bool flip2, bool flip3) const {
  FieldScalar r = *this;
  if (flip2) {
    r.c_[1] = -r.c_[1];
    r.c_[3] = -r.c_[3];
  }
  if (flip3) {
    r.c_[2] = -r.c_[2];
    r.c_[3] = -r.c_[3];
  }
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero())
    throw DivisionByZero("division by zero");
  if (is_gaussian())
    return FieldScalar(c_[0].inverse());
  FieldScalar s3 = galois(false, true);
  FieldScalar y = *this * s3; // in Q(i, sqrt2)
  FieldScalar s2 = y.galois(true, false);
  FieldScalar z = y * s2; // in Q(i)
  FieldScalar zi(z.c_[0].inverse());
  return s3 * s2 * zi;
}

FieldScalar FieldScalar::pow(long k) const {
  if (k < 0)
    return inverse().pow(-k);
  FieldScalar result(1), base = *this;
  while (k > 0) {
    if (k & 1)
      result *= base;
    k >>= 1;
    if (k)
      base *= base;
  }
  return result;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

FieldScalar &FieldScalar::operator+=(const FieldScalar &o) {
  for (int k = 0; k < 4; ++k)
    if (!o.c_[k].is_zero())
      c_[k] += o.c_[k];
  return *this;
}

FieldScalar &FieldScalar::operator-=(const FieldScalar &o) {
  for (int k = 0; k < 4; ++k)
    if (!o.c_[k].is_zero())
      c_[k] -= o.c_[k];
  return *this;
}

FieldScalar operator*(const FieldScalar &a, const FieldScalar &b) {
  FieldScalar r;
  for (int j = 0; j < 4; ++j) {
    if (a.c_[j].is_zero())
      continue;
    for (int k = 0; k < 4; ++k) {
      if (b.c_[k].is_zero())
        continue;
      GaussQ p = a.c_[j] * b.c_[k];
      int common = j & k;
      if (common & 1) {
        p.re *= 2;
        p.im *= 2;
      }
      if (common & 2) {
        p.re *= 3;
        p.im *= 3;
      }
      r.c_[j ^ k] += p;
    }
  }
  return r;
}

FieldScalar &FieldScalar::operator*=(const FieldScalar &o) {
  *this = *this * o;
  return *this;
}

bool FieldScalar::operator==(const FieldScalar &o) const {
  for (int k = 0; k < 4; ++k)
    if (!(c_[k] == o.c_[k]))
      return false;
  return true;
}

namespace {

std::string gauss_str(const GaussQ &g) {
  std::string out;
  if (sgn(g.re) != 0)
    out = g.re.get_str();
  if (sgn(g.im) != 0) {
    mpq_class a = abs(g.im);
    std::string mag = a == 1 ? "i" : a.get_str() + "*i";
    if (out.empty())
      out = (sgn(g.im) < 0 ? "-" : "") + mag;
    else
      out += (sgn(g.im) < 0 ? " - " : " + ") + mag;
  }
  return out.empty() ? "0" : out;
}

} // namespace

std::string FieldScalar::str() const {
  static const char *radicals[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
  std::string out = c_[0].is_zero() ? "" : gauss_str(c_[0]);
  for (int k = 1; k < 4; ++k) {
    const GaussQ &g = c_[k];
    if (g.is_zero())
      continue;
    bool neg = false;
    std::string term;
    if (sgn(g.im) == 0) {
      neg = sgn(g.re) < 0;
      mpq_class a = abs(g.re);
      term = a == 1 ? radicals[k] : a.get_str() + "*" + radicals[k];
    } else {
      term = "(" + gauss_str(g) + ")*" + radicals[k];
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

FieldScalar FieldScalar::parse(const std::string &text) {
  VarTable none;
  Expr e = parse_expr(text, none);
  if (!e.is_const())
    throw ParseError("expected a constant", 0);
  return e.constant();
}

double FieldScalar::to_double_real() const {
  static const double rad[4] = {1.0, 1.4142135623730951, 1.7320508075688772,
                                2.449489742783178};
  double v = 0;
  for (int k = 0; k < 4; ++k)
    v += c_[k].re.get_d() * rad[k];
  return v;
}

double FieldScalar::to_double_imag() const { return imag_part().to_double_real(); }

std::size_t FieldScalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](const mpq_class &q) {
    std::size_t v = mpz_get_ui(q.get_num_mpz_t()) * 31 + mpz_get_ui(q.get_den_mpz_t());
    v ^= static_cast<std::size_t>(sgn(q) + 1);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto &c : c_) {
    mix(c.re);
    mix(c.im);
  }
  return h;
}

std::ostream &operator<<(std::ostream &os, const FieldScalar &x) { return os << x.str(); }

} // namespace gkspin
