#include "gkspin/clifford/clifford.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

using namespace gkspin;
using namespace gkspin::testing;

namespace {

using MV = Multivector<FieldScalar>;

bool equal(const MV &a, const MV &b) { return (a - b).is_zero(); }

BilinearSpace orthonormal(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<FieldScalar>> g(n, std::vector<FieldScalar>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    g[i][i] = FieldScalar(1);
  }
  return BilinearSpace(names, g);
}

BilinearSpace random_space(std::mt19937_64 &rng, int n) {
  std::vector<std::string> names;
  std::vector<std::vector<FieldScalar>> g(n, std::vector<FieldScalar>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    for (int j = 0; j <= i; ++j)
      g[i][j] = g[j][i] = random_scalar(rng, false);
  }
  return BilinearSpace(names, g);
}

MV random_mv(std::mt19937_64 &rng, int n, Algebra kind, int terms = 4) {
  std::uniform_int_distribution<Blade> pick(0, (Blade(1) << n) - 1);
  MV m(kind);
  for (int k = 0; k < terms; ++k)
    m.add(pick(rng), random_scalar(rng, false));
  return m;
}

MV gen(int i) { return MV::generator(i, Algebra::Clifford); }
MV one(Algebra kind = Algebra::Clifford) { return MV::scalar(FieldScalar(1), kind); }

// Dual pairs dz_k, d/dz_k of a 2-dimensional complex space acting on forms.
MV spin(int e, const MV &form) {
  return e < 4 ? interior_generator(e, form) : wedge_generator(e - 4, form);
}

} // namespace

TEST(BilinearSpace, RejectsAsymmetricGram) {
  std::vector<std::vector<FieldScalar>> g{{FieldScalar(1), FieldScalar(2)},
                                          {FieldScalar(3), FieldScalar(1)}};
  EXPECT_THROW(BilinearSpace({"a", "b"}, g), std::invalid_argument);
  EXPECT_THROW(BilinearSpace({"a"}, g), std::invalid_argument);
}

TEST(Wedge, BasicRules) {
  MV e1 = MV::generator(0), e2 = MV::generator(1);
  EXPECT_TRUE(equal(wedge(e1, e2), MV::blade(0b11, FieldScalar(1))));
  EXPECT_TRUE(wedge(e1, e1).is_zero());
  EXPECT_TRUE(equal(wedge(e2, e1), -wedge(e1, e2)));
}

TEST(Clifford, DualPairAnticommutator) {
  FieldScalar h = FieldScalar::rational(1, 2);
  BilinearSpace sp({"v", "xi"}, {{FieldScalar(0), h}, {h, FieldScalar(0)}});
  MV v = gen(0), xi = gen(1);
  MV s = clifford_mul(v, xi, sp) + clifford_mul(xi, v, sp);
  EXPECT_TRUE(equal(s, one()));
  EXPECT_TRUE(clifford_mul(v, v, sp).is_zero());
}

TEST(Clifford, OrthonormalBivectorSquare) {
  BilinearSpace sp = orthonormal(3);
  MV b = clifford_mul(gen(0), gen(1), sp);
  EXPECT_TRUE(equal(clifford_mul(b, b, sp), -one()));
}

TEST(Clifford, GeneratorRelationsExhaustive) {
  std::mt19937_64 rng(31);
  BilinearSpace sp = random_space(rng, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      MV s = clifford_mul(gen(i), gen(j), sp) + clifford_mul(gen(j), gen(i), sp);
      EXPECT_TRUE(equal(s, MV::scalar(FieldScalar(2) * sp.form(i, j), Algebra::Clifford)));
    }
}

TEST(Clifford, Associativity) {
  std::mt19937_64 rng(32);
  BilinearSpace sp = random_space(rng, 5);
  for (int it = 0; it < 120; ++it) {
    MV a = random_mv(rng, 5, Algebra::Clifford), b = random_mv(rng, 5, Algebra::Clifford),
       c = random_mv(rng, 5, Algebra::Clifford);
    ASSERT_TRUE(equal(clifford_mul(clifford_mul(a, b, sp), c, sp),
                      clifford_mul(a, clifford_mul(b, c, sp), sp)));
  }
}

TEST(Clifford, TopGradeIsWedge) {
  std::mt19937_64 rng(33);
  BilinearSpace sp = random_space(rng, 5);
  std::uniform_int_distribution<Blade> pick(0, 31);
  for (int it = 0; it < 60; ++it) {
    Blade a = pick(rng), b = pick(rng);
    MV ca = MV::blade(a, FieldScalar(1), Algebra::Clifford);
    MV cb = MV::blade(b, FieldScalar(1), Algebra::Clifford);
    MV prod = clifford_mul(ca, cb, sp).grade_project(grade_of(a) + grade_of(b));
    MV w = wedge(MV::blade(a, FieldScalar(1)), MV::blade(b, FieldScalar(1)));
    EXPECT_EQ(prod.terms(), w.terms());
  }
}

TEST(GradeProject, Decomposition) {
  MV x = one(Algebra::Exterior) + MV::blade(0b11, FieldScalar(1));
  EXPECT_TRUE(equal(x.grade_project(2), MV::blade(0b11, FieldScalar(1))));
  EXPECT_TRUE(x.grade_project(7).is_zero());
  std::mt19937_64 rng(34);
  MV y = random_mv(rng, 6, Algebra::Exterior, 10);
  MV sum;
  for (int k = 0; k <= 6; ++k)
    sum += y.grade_project(k);
  EXPECT_TRUE(equal(sum, y));
}

TEST(CliffordInvolution, SignsByDegree) {
  EXPECT_TRUE(equal(clifford_involution(one(Algebra::Exterior)), one(Algebra::Exterior)));
  MV b2 = MV::blade(0b11, FieldScalar(1));
  EXPECT_TRUE(equal(clifford_involution(b2), -b2));
  MV b4 = MV::blade(0b1111, FieldScalar(1));
  EXPECT_TRUE(equal(clifford_involution(b4), b4));
  std::mt19937_64 rng(35);
  MV y = random_mv(rng, 6, Algebra::Exterior, 10);
  EXPECT_TRUE(equal(clifford_involution(clifford_involution(y)), y));
}

TEST(Mukai, Examples) {
  const Blade top = 0b1111; // dz1, dz1b, dz2, dz2b
  EXPECT_EQ(mukai_pairing(one(Algebra::Exterior), MV::blade(top, FieldScalar(1)), top),
            FieldScalar(1));
  EXPECT_EQ(mukai_pairing(MV::generator(0), MV::blade(0b1110, FieldScalar(1)), top),
            FieldScalar(-1));
}

TEST(Mukai, SymplecticExponentials) {
  // -i omega / 2 with omega = (i/2)(dz1^dz1b + dz2^dz2b)
  MV w = MV::blade(0b0011, FieldScalar::rational(1, 4)) +
         MV::blade(0b1100, FieldScalar::rational(1, 4));
  // hand expansion: e^w ^ sigma(e^-w) has top part (1 + 2 + 1)/16
  EXPECT_EQ(mukai_pairing(exp_form(w), exp_form(-w), 0b1111), FieldScalar::rational(1, 4));
}

TEST(Mukai, SpinActionIsSkewAdjoint) {
  // generators 0..3 contract dz_k, 4..7 wedge dz_k; all 16 x 16 basis pairs
  const Blade top = 0b1111;
  for (int e = 0; e < 8; ++e)
    for (Blade a = 0; a < 16; ++a)
      for (Blade b = 0; b < 16; ++b) {
        MV fa = MV::blade(a, FieldScalar(1)), fb = MV::blade(b, FieldScalar(1));
        FieldScalar lhs = mukai_pairing(spin(e, fa), fb, top);
        FieldScalar rhs = mukai_pairing(fa, spin(e, fb), top);
        ASSERT_EQ(lhs, -rhs) << e << " " << a << " " << b;
      }
}

TEST(Quantize, Examples) {
  BilinearSpace sp = orthonormal(3);
  MV e12 = MV::blade(0b11, FieldScalar(1));
  MV expect = (clifford_mul(gen(0), gen(1), sp) - clifford_mul(gen(1), gen(0), sp))
                  .scaled(FieldScalar::rational(1, 2));
  EXPECT_TRUE(equal(q_map(e12, sp), expect));
  EXPECT_TRUE(equal(q_map(MV::generator(0), sp), gen(0)));
}

TEST(Quantize, MatchesSkewSymmetrization) {
  std::mt19937_64 rng(36);
  BilinearSpace sp = random_space(rng, 5);
  for (Blade m = 0; m < 32; ++m) {
    std::vector<int> idx;
    for (Blade bb = m; bb; bb &= bb - 1)
      idx.push_back(std::countr_zero(bb));
    std::vector<int> perm(idx.size());
    std::iota(perm.begin(), perm.end(), 0);
    MV sum(Algebra::Clifford);
    long count = 0;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          inversions += perm[i] > perm[j];
      MV p = one();
      for (int k : perm)
        p = clifford_mul(p, gen(idx[k]), sp);
      sum += (inversions & 1) ? -p : p;
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    MV expect = sum.scaled(FieldScalar::rational(1, count));
    EXPECT_TRUE(equal(q_map(MV::blade(m, FieldScalar(1)), sp), expect)) << m;
  }
}

TEST(Symbol, Examples) {
  std::mt19937_64 rng(37);
  BilinearSpace sp = random_space(rng, 3);
  EXPECT_TRUE(equal(symbol_map(one(), sp), one(Algebra::Exterior)));
  MV s = symbol_map(clifford_mul(gen(0), gen(1), sp), sp);
  MV expect = MV::blade(0b11, FieldScalar(1)) + MV::scalar(sp.form(0, 1));
  EXPECT_TRUE(equal(s, expect));
}

TEST(Symbol, LeftInverseOfQuantize) {
  std::mt19937_64 rng(38);
  BilinearSpace sp = random_space(rng, 6);
  for (int it = 0; it < kRandomIterations; ++it) {
    MV a = random_mv(rng, 6, Algebra::Exterior, 6);
    EXPECT_TRUE(equal(symbol_map(q_map(a, sp), sp), a));
  }
}

TEST(Transpose, ReversesProducts) {
  std::mt19937_64 rng(39);
  BilinearSpace sp = random_space(rng, 4);
  EXPECT_TRUE(equal(transpose(one(), sp), one()));
  MV e12 = clifford_mul(gen(0), gen(1), sp);
  EXPECT_TRUE(equal(transpose(e12, sp), clifford_mul(gen(1), gen(0), sp)));
  MV e123 = clifford_mul(e12, gen(2), sp);
  MV e321 = clifford_mul(clifford_mul(gen(2), gen(1), sp), gen(0), sp);
  EXPECT_TRUE(equal(transpose(e123, sp), e321));
  for (int it = 0; it < kRandomIterations; ++it) {
    MV x = random_mv(rng, 4, Algebra::Clifford), y = random_mv(rng, 4, Algebra::Clifford);
    EXPECT_TRUE(equal(transpose(clifford_mul(x, y, sp), sp),
                      clifford_mul(transpose(y, sp), transpose(x, sp), sp)));
  }
}

TEST(Parity, HomogeneousAndMixed) {
  EXPECT_EQ(parity(gen(0)), 1);
  EXPECT_EQ(parity(one()), 0);
  EXPECT_EQ(parity(gen(0) + one()), -1);
}
