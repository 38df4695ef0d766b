#include "gkspin/scalar/sampler.hpp"

namespace gkspin {

Sampler::Sampler(SamplingDomain domain, std::uint64_t seed, int height)
    : domain_(std::move(domain)), rng_(seed), height_(height) {}

mpq_class Sampler::random_rational(int height) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height);
  mpq_class q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

FieldScalar Sampler::random_gaussian(int height) {
  return FieldScalar::gaussian(random_rational(height), random_rational(height));
}

SamplePoint Sampler::draw() {
  SamplePoint p;
  const auto &zs = domain_.coords;
  if (!domain_.radius) {
    for (int z : zs) {
      FieldScalar v = random_gaussian(height_);
      p.set(z, v);
      p.set(var_info(z).conj, v.conj());
    }
    return p;
  }
  // Rational point on the unit sphere by inverse stereographic projection,
  // scaled by a rational radius.
  std::size_t real_dim = 2 * zs.size();
  std::uniform_int_distribution<long> small(-9, 9), den(1, 9), rad(1, 19);
  long b = den(rng_);
  std::vector<mpq_class> t(real_dim - 1);
  mpq_class norm2 = 0;
  for (auto &tj : t) {
    tj = mpq_class(small(rng_), b);
    tj.canonicalize();
    norm2 += tj * tj;
  }
  std::vector<mpq_class> x(real_dim);
  for (std::size_t j = 0; j + 1 < real_dim; ++j)
    x[j] = 2 * t[j] / (1 + norm2);
  x[real_dim - 1] = (norm2 - 1) / (norm2 + 1);
  mpq_class lambda(rad(rng_), rad(rng_));
  lambda.canonicalize();
  for (std::size_t k = 0; k < zs.size(); ++k) {
    FieldScalar v = FieldScalar::gaussian(lambda * x[2 * k], lambda * x[2 * k + 1]);
    p.set(zs[k], v);
    p.set(var_info(zs[k]).conj, v.conj());
  }
  p.set(*domain_.radius, FieldScalar(lambda));
  return p;
}

SamplePoint Sampler::next() {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SamplePoint p = draw();
    bool ok = true;
    Evaluator ev(p);
    for (const auto &c : domain_.nonvanishing) {
      try {
        if (ev(c).is_zero()) {
          ok = false;
          break;
        }
      } catch (const EvalError &) {
        ok = false;
        break;
      }
    }
    if (ok)
      return p;
  }
  throw SamplerExhausted("no admissible sample point after 1000 draws");
}

ZeroVerdict is_zero(const Expr &e, Sampler &sampler, int trials) {
  return is_zero(std::vector<Expr>{e}, sampler, trials);
}

ZeroVerdict is_zero(const std::vector<Expr> &es, Sampler &sampler, int trials) {
  ZeroVerdict v;
  bool all_const = true;
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (!es[k].is_const()) {
      all_const = false;
      continue;
    }
    if (!es[k].constant().is_zero()) {
      v.zero = false;
      v.witness = SamplePoint{};
      v.witness_value = es[k].constant();
      v.witness_index = k;
      return v;
    }
  }
  if (all_const)
    return v;
  int rejected = 0;
  while (v.trials < trials) {
    SamplePoint p = sampler.next();
    Evaluator ev(p);
    try {
      for (std::size_t k = 0; k < es.size(); ++k) {
        FieldScalar val = ev(es[k]);
        if (!val.is_zero()) {
          v.zero = false;
          v.witness = p;
          v.witness_value = val;
          v.witness_index = k;
          ++v.trials;
          return v;
        }
      }
    } catch (const EvalError &) {
      if (++rejected > 50 * trials + 100)
        throw SamplerExhausted("too many sample points hit a zero denominator");
      continue;
    }
    ++v.trials;
  }
  return v;
}

} // namespace gkspin
