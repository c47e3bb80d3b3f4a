#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toric/builtins.hpp"
#include "toric/error.hpp"
#include "toric/homology.hpp"

using namespace toric;

namespace {

Fan hirzebruch(long a) {
  return Fan(2, {make_int_vector({1, 0}), make_int_vector({0, 1}), make_int_vector({-1, a}), make_int_vector({0, -1})},
             {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

std::vector<Fan> sample_fans() {
  std::vector<Fan> out;
  for (const auto& id : builtin_ids()) out.push_back(builtin(id).fan);
  out.push_back(builtin("cp:4").fan);
  out.push_back(hirzebruch(2));
  out.push_back(hirzebruch(3));
  return out;
}

// Coefficient of [pt] in a top-degree class.
int top_coefficient(const HomologyClass& c) { return c.coords.empty() ? 0 : c.coords[0]; }

}  // namespace

TEST(Homology, RanksMatchHVector) {
  for (const auto& f : sample_fans()) {
    HomologyRing h(f);
    auto expected = oracle::h_vector(f);
    for (std::size_t k = 0; k <= f.dim(); ++k) EXPECT_EQ(h.rank(2 * k), expected[k]);
    EXPECT_EQ(h.rank(1), 0u);
    EXPECT_EQ(h.total_rank(), f.max_cones().size());
  }
}

TEST(Homology, PoincareDualityPairingIsPerfect) {
  for (const auto& f : sample_fans()) {
    HomologyRing h(f);
    const std::size_t n = f.dim();
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t r = h.rank(2 * k);
      ASSERT_EQ(r, h.rank(2 * (n - k)));
      // Gaussian elimination over GF(2) on the pairing matrix.
      std::vector<std::vector<int>> m(r, std::vector<int>(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          m[a][b] = top_coefficient(intersection_product(h, h.basis_class(2 * k, a), h.basis_class(2 * (n - k), b)));
      std::size_t rank = 0;
      for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = rank;
        while (p < r && !m[p][c]) ++p;
        if (p == r) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < r; ++i)
          if (i != rank && m[i][c])
            for (std::size_t t = 0; t < r; ++t) m[i][t] ^= m[rank][t];
        ++rank;
      }
      EXPECT_EQ(rank, r);
    }
  }
}

TEST(Homology, SurfaceIntersectionsMatchRayCycle) {
  for (const auto& f : {builtin("cp:2").fan, builtin("cp1xcp1").fan, builtin("blowup-cp2").fan, hirzebruch(2),
                        hirzebruch(3)}) {
    HomologyRing h(f);
    for (std::size_t i = 0; i < f.num_rays(); ++i)
      for (std::size_t j = 0; j < f.num_rays(); ++j) {
        HomologyClass p = intersection_product(h, h.divisor(i), h.divisor(j));
        EXPECT_EQ(top_coefficient(p), oracle::surface_intersection_mod2(f, i, j)) << i << "," << j;
      }
  }
}

TEST(Homology, ProjectiveSpacePowers) {
  for (std::size_t n = 1; n <= 4; ++n) {
    HomologyRing h(builtin("cp:" + std::to_string(n)).fan);
    HomologyClass p = h.unit();
    for (std::size_t i = 1; i <= n + 1; ++i) {
      p = intersection_product(h, p, h.divisor(0));
      if (i <= n) {
        EXPECT_FALSE(p.is_zero()) << n << " " << i;
        EXPECT_EQ(p.codegree, 2 * i);
      } else {
        EXPECT_TRUE(p.is_zero());
      }
    }
    EXPECT_EQ(p.homological_degree(n), -2);
  }
}

TEST(Homology, QuadricClassicalProducts) {
  HomologyRing h(builtin("cp1xcp1").fan);
  HomologyClass a = h.divisor(0), b = h.divisor(2);
  EXPECT_EQ(intersection_product(h, a, b), h.point());
  EXPECT_TRUE(intersection_product(h, a, a).is_zero());
  EXPECT_TRUE(intersection_product(h, b, b).is_zero());
  EXPECT_EQ(h.divisor(0), h.divisor(1));
}

TEST(Homology, UnitAndAssociativity) {
  for (const auto& f : sample_fans()) {
    HomologyRing h(f);
    std::vector<HomologyClass> basis;
    for (std::size_t c = 0; c <= 2 * f.dim(); c += 2)
      for (std::size_t k = 0; k < h.rank(c); ++k) basis.push_back(h.basis_class(c, k));
    for (const auto& a : basis) {
      EXPECT_EQ(intersection_product(h, h.unit(), a), a);
      for (const auto& b : basis) {
        EXPECT_EQ(intersection_product(h, a, b), intersection_product(h, b, a));
        for (const auto& c : basis)
          EXPECT_EQ(intersection_product(h, intersection_product(h, a, b), c),
                    intersection_product(h, a, intersection_product(h, b, c)));
      }
    }
  }
}

TEST(Homology, IncompleteFanRejected) {
  Fan f(2, {make_int_vector({1, 0}), make_int_vector({0, 1})}, {{0, 1}});
  try {
    HomologyRing h(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotComplete);
  }
}

TEST(Homology, ChernPairing) {
  Fan f = builtin("blowup-cp2").fan;
  EXPECT_EQ(chern_pairing(f, make_int_vector({0, 1, 0, 1})), 2);
  EXPECT_EQ(chern_pairing(f, make_int_vector({1, 0, 1, -1})), 1);
  EXPECT_THROW(chern_pairing(f, make_int_vector({1, 0, 0, 0})), Error);
}

TEST(Homology, DivisorExpansionOfTheExceptionalDivisor) {
  Fan f = builtin("blowup-cp2").fan;
  DivisorExpansion e = divisor_expansion(f, make_index_set({3}), std::vector<IntVector>{make_int_vector({1, 1})});
  ASSERT_EQ(e.pairing.size(), 1u);
  EXPECT_EQ(e.pairing[0][0], 1);
  EXPECT_EQ(e.pairing[0][1], -1);
  EXPECT_EQ(e.pairing[0][2], 0);
  EXPECT_EQ(e.pairing[0][3], 1);
  try {
    divisor_expansion(f, make_index_set({0, 2}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NotACone);
  }
  try {
    divisor_expansion(f, make_index_set({3}), std::vector<IntVector>{make_int_vector({2, 1})});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::BadExtension);
  }
}
