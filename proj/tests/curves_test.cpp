#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_lifts.hpp"
#include "toric/builtins.hpp"
#include "toric/curves.hpp"
#include "toric/error.hpp"

using namespace toric;

namespace {

LiftComponent linear(double root) {
  LiftComponent c;
  c.real_roots = {root};
  return c;
}

RealDiscLift blowup_disc() {
  return RealDiscLift({linear(0), LiftComponent::constant(), linear(1), LiftComponent::zero_component()});
}

RealDiscLift unreparametrized_disc() {
  return RealDiscLift({linear(0), LiftComponent::constant(), LiftComponent::constant(), LiftComponent::zero_component()});
}

template <class F>
Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

}  // namespace

TEST(Curves, BlowupDiscHasMaslovOne) {
  Fan f = builtin("blowup-cp2").fan;
  MaslovResult r = maslov_general(f, blowup_disc(), std::vector<IntVector>{make_int_vector({1, 1})});
  EXPECT_EQ(r.mu, 1);
  EXPECT_EQ(r.zero_set, make_index_set({3}));
  EXPECT_EQ(infinity_stratum(f, blowup_disc()).indices, make_index_set({3}));
}

TEST(Curves, UnreparametrizedDiscMeetsD3AtInfinity) {
  Fan f = builtin("blowup-cp2").fan;
  InfinityStratum s = infinity_stratum(f, unreparametrized_disc());
  EXPECT_EQ(s.indices, make_index_set({2, 3}));
  EXPECT_EQ(s.limit_cone, make_index_set({2}));
  EXPECT_EQ(s.multiplicity[2], 1);
  EXPECT_EQ(code_of([&] { maslov_general(f, unreparametrized_disc()); }), Errc::InfinityConditionFails);
}

TEST(Curves, ReparametrizationFixesInfinity) {
  Fan f = builtin("blowup-cp2").fan;
  Mobius phi = suggested_reparametrization(unreparametrized_disc());
  EXPECT_GT(phi.determinant(), 0);
  RealDiscLift moved = reparametrize(f, unreparametrized_disc(), phi);
  EXPECT_TRUE(infinity_stratum(f, moved).clear());
  EXPECT_EQ(maslov_general(f, moved).mu, 1);
  // The map z -> z / (z - 1) also works; it reverses orientation but the
  // Maslov index of the conjugate disc agrees.
  RealDiscLift other = reparametrize(f, unreparametrized_disc(), Mobius{1, 0, 1, -1});
  EXPECT_EQ(maslov_general(f, other).mu, 1);
}

TEST(Curves, ReparametrizedLiftTracesTheSameMap) {
  Fan f = builtin("blowup-cp2").fan;
  Mobius phi{2, -1, 1, 1};
  RealDiscLift lift = blowup_disc();
  RealDiscLift moved = reparametrize(f, lift, phi);
  Cone chart{make_index_set({0, 3})};
  for (Complex z : {Complex(0.3, 0.7), Complex(-1.2, 2.0), Complex(2.5, 0.1)}) {
    auto a = chart_coords(f, chart, moved.evaluate(z));
    auto b = chart_coords(f, chart, lift.evaluate(phi.apply(z)));
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(std::abs(a[k] - b[k]), 0.0, 1e-9);
  }
}

TEST(Curves, AffineTranslation) {
  Fan f = builtin("cp:1").fan;
  RealDiscLift lift({linear(0), linear(1)});
  RealDiscLift moved = reparametrize(f, lift, Mobius{1, 1, 0, 1});
  ASSERT_EQ(moved.component(0).real_roots.size(), 1u);
  EXPECT_DOUBLE_EQ(moved.component(0).real_roots[0], -1.0);
  EXPECT_DOUBLE_EQ(moved.component(1).real_roots[0], 0.0);
  EXPECT_EQ(code_of([&] { reparametrize(f, lift, Mobius{1, 1, 2, 2}); }), Errc::DegenerateMobius);
}

TEST(Curves, ProjectiveLineZeroCount) {
  Fan f = builtin("cp:1").fan;
  RealDiscLift lift({linear(0), linear(1)});
  EXPECT_TRUE(infinity_stratum(f, lift).indices.empty());
  EXPECT_EQ(maslov_zero_count(f, lift).mu, 2);
  EXPECT_EQ(maslov_general(f, lift).mu, 2);
}

TEST(Curves, ValidationErrors) {
  Fan cp2 = builtin("cp:2").fan;
  EXPECT_EQ(code_of([&] { validate_lift(cp2, RealDiscLift({linear(0), linear(0)})); }), Errc::WrongLength);
  EXPECT_EQ(code_of([&] { validate_lift(cp2, RealDiscLift({linear(0), linear(0), linear(0)})); }), Errc::OutsideU);
  EXPECT_NO_THROW(validate_lift(cp2, RealDiscLift({linear(0), linear(0), linear(5)})));
  Fan blow = builtin("blowup-cp2").fan;
  RealDiscLift bad({LiftComponent::zero_component(), LiftComponent::constant(), LiftComponent::zero_component(),
                    LiftComponent::constant()});
  EXPECT_EQ(code_of([&] { maslov_general(blow, bad); }), Errc::NotACone);
  EXPECT_EQ(code_of([&] { maslov_zero_count(blow, blowup_disc()); }), Errc::NotApplicable);
  LiftComponent upper;
  upper.complex_roots = {Complex(0, -1)};
  EXPECT_EQ(code_of([&] { RealDiscLift({upper}); }), Errc::InvalidLift);
}

TEST(Curves, ChartCoordinates) {
  Fan p1 = builtin("cp:1").fan;
  std::vector<Complex> pt = {Complex(3, 0), Complex(2, 0)};
  auto c = chart_coords(p1, Cone{{0}}, pt);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(std::abs(c[0] - Complex(1.5, 0)), 0, 1e-15);
  Fan blow = builtin("blowup-cp2").fan;
  std::vector<Complex> ones(4, Complex(1, 0));
  auto d = chart_coords(blow, Cone{{0, 1}}, ones);
  EXPECT_EQ(d, (std::vector<Complex>{1, 1}));
  std::vector<Complex> hole = {0, 1, 1, 1};
  EXPECT_EQ(code_of([&] { chart_coords(blow, Cone{{2, 3}}, hole); }), Errc::NotInChart);
}

TEST(Curves, RandomLiftsAgreeWithChernNumber) {
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  for (const auto& id : builtin_ids()) {
    Fan f = builtin(id).fan;
    auto degs = testgen::balanced_degrees(f, {}, 3);
    ASSERT_FALSE(degs.empty()) << id;
    for (int trial = 0; trial < 6; ++trial) {
      const auto& d = degs[rng() % degs.size()];
      RealDiscLift lift = testgen::random_lift(d, {}, rng);
      Integer zc = maslov_zero_count(f, lift).mu;
      Integer gen = maslov_general(f, lift).mu;
      DoubleSymmetryReport rep = verify_double_symmetry(f, lift, 16, rng());
      EXPECT_EQ(zc, gen);
      EXPECT_EQ(zc, rep.c1);
      EXPECT_TRUE(rep.symmetric) << rep.max_deviation;
      EXPECT_TRUE(rep.agrees);
      ++checked;
    }
  }
  EXPECT_GE(checked, 20u);
}

TEST(Curves, GeneralFormulaIgnoresTheExtension) {
  std::mt19937_64 rng(99);
  for (const auto& id : builtin_ids()) {
    Fan f = builtin(id).fan;
    if (f.dim() < 2) continue;
    for (std::size_t ray = 0; ray < f.num_rays(); ++ray) {
      IndexSet i0 = {ray};
      auto degs = testgen::balanced_degrees(f, i0, 2);
      if (degs.empty()) continue;
      RealDiscLift lift = testgen::random_lift(degs[rng() % degs.size()], i0, rng);
      Integer mu = maslov_general(f, lift).mu;
      for (int t = 0; t < 4; ++t) {
        auto ext = testgen::random_extension(f, i0, rng);
        EXPECT_EQ(maslov_general(f, lift, ext).mu, mu) << id;
      }
      DoubleSymmetryReport rep = verify_double_symmetry(f, lift, 8, 3);
      EXPECT_EQ(rep.c1, mu) << id;
    }
  }
}
