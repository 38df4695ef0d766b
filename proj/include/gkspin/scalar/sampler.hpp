#pragma once

#include "gkspin/scalar/expr.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace gkspin {

class SamplerExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Where random points live: complex coordinates z_k (conjugates bound to the
// conjugate value), an optional radius variable with r^2 = sum |z_k|^2, and
// expressions that must not vanish.
struct SamplingDomain {
  std::vector<int> coords;
  std::optional<int> radius;
  std::vector<Expr> nonvanishing;
};

class Sampler {
public:
  Sampler(SamplingDomain domain, std::uint64_t seed, int height = 99);

  // Draws until every non-vanishing constraint holds.
  SamplePoint next();
  const SamplingDomain &domain() const { return domain_; }
  std::mt19937_64 &rng() { return rng_; }

  mpq_class random_rational(int height);
  FieldScalar random_gaussian(int height);

private:
  SamplingDomain domain_;
  std::mt19937_64 rng_;
  int height_;
  SamplePoint draw();
};

struct ZeroVerdict {
  bool zero = true;
  int trials = 0;
  std::optional<SamplePoint> witness;
  FieldScalar witness_value;
  std::size_t witness_index = 0;

  explicit operator bool() const { return zero; }
};

constexpr int kDefaultTrials = 32;

// Randomised identity test.  A point where evaluation hits a zero denominator
// is discarded and redrawn.
ZeroVerdict is_zero(const Expr &e, Sampler &sampler, int trials = kDefaultTrials);
ZeroVerdict is_zero(const std::vector<Expr> &es, Sampler &sampler,
                    int trials = kDefaultTrials);

} // namespace gkspin
