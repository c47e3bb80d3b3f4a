#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/builtins.hpp"
#include "toric/error.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

template <class E>
void expect_code(E&& fn, Errc code) {
  try {
    fn();
    FAIL() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Determinant, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 6);
    EXPECT_EQ(determinant(m), oracle::leibniz_determinant(m.row_vectors()));
  }
}

TEST(Hermite, ShapeAndTransformOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 4;
    IntMatrix m = random_matrix(rng, r, c, 9);
    if (trial % 7 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force a dependency
    }
    HermiteForm hf = hermite_normal_form(m);
    EXPECT_EQ(hf.u * m, hf.h);
    EXPECT_EQ(abs(determinant(hf.u)), 1);
    EXPECT_EQ(hf.rank(), oracle::rank(m.row_vectors()));
    for (std::size_t k = 0; k < hf.rank(); ++k) {
      std::size_t p = hf.pivot_cols[k];
      EXPECT_GT(hf.h(k, p), 0);
      for (std::size_t j = 0; j < p; ++j) EXPECT_EQ(hf.h(k, j), 0);
      for (std::size_t i = 0; i < k; ++i) {
        EXPECT_GE(hf.h(i, p), 0);
        EXPECT_LT(hf.h(i, p), hf.h(k, p));
      }
      if (k > 0) EXPECT_GT(p, hf.pivot_cols[k - 1]);
    }
    for (std::size_t i = hf.rank(); i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(hf.h(i, j), 0);
  }
}

TEST(Kernel, BlowupKernelMatchesKnownLattice) {
  Fan f = builtin("blowup-cp2").fan;
  auto k = kernel_basis(f.ray_matrix());
  std::vector<IntVector> expected = {make_int_vector({0, 1, 0, 1}), make_int_vector({1, 1, 1, 0})};
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : expected) EXPECT_TRUE(oracle::in_integer_span(k, v)) << to_string(v);
  for (const auto& v : k) EXPECT_TRUE(oracle::in_integer_span(expected, v)) << to_string(v);
}

TEST(Kernel, ProjectiveSpaceKernelIsAllOnes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Fan f = builtin("cp:" + std::to_string(n)).fan;
    auto k = kernel_basis(f.ray_matrix());
    ASSERT_EQ(k.size(), 1u);
    IntVector ones(n + 1, Integer(1));
    EXPECT_TRUE(oracle::in_integer_span(k, ones));
  }
}

TEST(Kernel, InjectiveMapHasEmptyKernel) {
  IntMatrix rays = IntMatrix::from_rows(std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({1, 1})});
  EXPECT_TRUE(kernel_basis(rays).empty());
}

TEST(Kernel, RaysThatDoNotSpanAreRejected) {
  IntMatrix rays = IntMatrix::from_rows(std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({-1, 0})});
  expect_code([&] { kernel_basis(rays); }, Errc::RaysDoNotSpan);
}

TEST(Kernel, SaturatesAgainstBruteForceBox) {
  for (const auto& id : {std::string("cp:2"), std::string("cp1xcp1"), std::string("blowup-cp2")}) {
    Fan f = builtin(id).fan;
    auto k = kernel_basis(f.ray_matrix());
    EXPECT_EQ(k.size(), f.num_rays() - f.dim());
    for (const auto& v : k) {
      IntVector img = f.ray_matrix().transpose() * v;
      EXPECT_TRUE(is_zero(img));
    }
    for (const auto& lambda : oracle::small_kernel_vectors(f, 2))
      EXPECT_TRUE(oracle::in_integer_span(k, lambda)) << id << " " << to_string(lambda);
  }
}

TEST(Kernel, RandomUnimodularConjugatesKeepRank) {
  std::mt19937_64 rng(5);
  Fan f = builtin("blowup-cp2").fan;
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix u = IntMatrix::identity(2);
    for (int s = 0; s < 4; ++s) u.add_row_multiple(rng() % 2 ? 0 : 1, rng() % 2 ? 1 : 0, Integer(long(rng() % 5) - 2));
    if (determinant(u) == 0) continue;
    IntMatrix rays = f.ray_matrix() * u.transpose();
    if (abs(determinant(u)) != 1) continue;
    auto k = kernel_basis(rays);
    for (const auto& lambda : kernel_basis(f.ray_matrix())) EXPECT_TRUE(oracle::in_integer_span(k, lambda));
  }
}

TEST(ExtendToBasis, CompletesPrimitiveSystems) {
  std::vector<IntVector> v = {make_int_vector({1, 1})};
  auto ext = extend_to_basis(v, 2);
  ASSERT_EQ(ext.size(), 1u);
  std::vector<IntVector> all = {v[0], ext[0]};
  EXPECT_EQ(abs(oracle::leibniz_determinant(all)), 1);

  std::vector<IntVector> w = {make_int_vector({1, 2, 3}), make_int_vector({0, 1, 1})};
  auto e2 = extend_to_basis(w, 3);
  w.insert(w.end(), e2.begin(), e2.end());
  EXPECT_EQ(abs(oracle::leibniz_determinant(w)), 1);
}

TEST(ExtendToBasis, EmptyInputGivesStandardBasis) {
  auto e = extend_to_basis(std::vector<IntVector>{}, 3);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(abs(oracle::leibniz_determinant(e)), 1);
}

TEST(ExtendToBasis, RejectsImprimitiveAndDependent) {
  expect_code([] { extend_to_basis(std::vector<IntVector>{make_int_vector({2, 0})}, 2); }, Errc::NotPrimitiveSystem);
  expect_code([] { extend_to_basis(std::vector<IntVector>{make_int_vector({1, 1}), make_int_vector({1, -1})}, 2); },
              Errc::NotPrimitiveSystem);
  expect_code([] { extend_to_basis(std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({2, 0})}, 2); },
              Errc::DimensionMismatch);
}

TEST(ExtendToBasis, RandomPrimitiveVectors) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-20, 20);
  int checked = 0;
  while (checked < 100) {
    IntVector v = {Integer(d(rng)), Integer(d(rng)), Integer(d(rng))};
    if (is_zero(v) || !is_primitive(v)) continue;
    std::vector<IntVector> s = {v};
    auto e = extend_to_basis(s, 3);
    s.insert(s.end(), e.begin(), e.end());
    EXPECT_EQ(abs(oracle::leibniz_determinant(s)), 1) << to_string(v);
    ++checked;
  }
}

TEST(DualBasis, PairsToIdentity) {
  std::vector<IntVector> b = {make_int_vector({0, -1}), make_int_vector({1, 1})};
  DualBasis db = dual_basis(b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dot(db.dual[i], b[j]), i == j ? 1 : 0);
  // The blow-up extension (1,1) of v4 = (0,-1) gives eps_4 = (1,-1).
  EXPECT_EQ(db.dual[0], make_int_vector({1, -1}));
}

TEST(DualBasis, RejectsNonBases) {
  expect_code([] { dual_basis(std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({1, 2})}); },
              Errc::NotABasis);
}

TEST(SolveLinear, ConsistentAndInconsistent) {
  RatMatrix a = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  auto x = solve_linear(a, {Rational(3), Rational(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  RatMatrix b = {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  EXPECT_FALSE(solve_linear(b, {Rational(1), Rational(3)}));
}

TEST(Rank, CP2RaysHaveRankTwo) {
  IntMatrix m = builtin("cp:2").fan.ray_matrix();
  EXPECT_EQ(rational_rank(m), 2u);
}
