#include <gtest/gtest.h>

#include "toric/builtins.hpp"
#include "toric/error.hpp"
#include "toric/quantum.hpp"

using namespace toric;

namespace {

std::vector<QHClass> basis_of(const QuantumRing& q) {
  std::vector<QHClass> out;
  const auto& h = q.classical();
  for (std::size_t c = 0; c <= 2 * h.dim(); c += 2)
    for (std::size_t k = 0; k < h.rank(c); ++k) out.push_back(q.basis_class(c, k));
  return out;
}

QHClass power(const QuantumRing& q, const QHClass& a, std::size_t k) {
  QHClass p = q.unit();
  for (std::size_t i = 0; i < k; ++i) p = q.product(p, a);
  return p;
}

}  // namespace

TEST(Quantum, ProjectiveSpaceRelation) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto rels = quantum_relations(builtin("cp:" + std::to_string(n)).fan);
    ASSERT_EQ(rels.size(), 1u);
    EXPECT_EQ(rels[0].collection.size(), n + 1);
    EXPECT_EQ(rels[0].q_power, 1u);
    for (auto c : rels[0].rhs_exponents) EXPECT_EQ(c, 0u);
  }
}

TEST(Quantum, QuadricAndBlowupRelations) {
  auto quad = quantum_relations(builtin("cp1xcp1").fan);
  ASSERT_EQ(quad.size(), 2u);
  for (const auto& r : quad) EXPECT_EQ(r.q_power, 1u);
  auto blow = quantum_relations(builtin("blowup-cp2").fan);
  ASSERT_EQ(blow.size(), 2u);
  EXPECT_EQ(blow[0].collection, make_index_set({0, 2}));
  EXPECT_EQ(blow[0].rhs_exponents, (std::vector<std::uint32_t>{0, 0, 0, 1}));
  EXPECT_EQ(blow[0].q_power, 1u);
  EXPECT_EQ(blow[1].collection, make_index_set({1, 3}));
  EXPECT_EQ(blow[1].q_power, 2u);
}

TEST(Quantum, RelationsAreHomogeneous) {
  for (const auto& id : builtin_ids()) {
    Fan f = builtin(id).fan;
    long cx = minimal_chern(f).get_si();
    for (const auto& r : quantum_relations(f)) {
      long s = 0;
      for (auto c : r.rhs_exponents) s += c;
      EXPECT_EQ(2 * static_cast<long>(r.collection.size()), 2 * s + 2 * cx * static_cast<long>(r.q_power));
    }
  }
}

TEST(Quantum, NonFanoRejected) {
  Fan f2(2, {make_int_vector({1, 0}), make_int_vector({0, 1}), make_int_vector({-1, 2}), make_int_vector({0, -1})},
         {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  try {
    quantum_relations(f2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFano);
  }
}

TEST(Quantum, ProjectiveSpaceTable) {
  for (std::size_t n = 1; n <= 3; ++n) {
    QuantumRing q(builtin("cp:" + std::to_string(n)).fan);
    const auto& h = q.classical();
    QHClass hyper = q.divisor(0);
    HomologyClass classical = h.unit();
    for (std::size_t i = 1; i <= n; ++i) {
      classical = intersection_product(h, classical, h.divisor(0));
      EXPECT_EQ(power(q, hyper, i), q.from_classical(classical)) << n << " " << i;
    }
    EXPECT_EQ(power(q, hyper, n + 1), q.basis_class(0, 0, 1));
  }
}

TEST(Quantum, QuadricTable) {
  QuantumRing q(builtin("cp1xcp1").fan);
  QHClass a = q.divisor(0), b = q.divisor(2);
  EXPECT_EQ(q.product(a, b), q.from_classical(q.classical().point()));
  EXPECT_EQ(q.product(b, a), q.product(a, b));
  EXPECT_EQ(q.product(a, a), q.basis_class(0, 0, 1));
  EXPECT_EQ(q.product(b, b), q.basis_class(0, 0, 1));
  EXPECT_EQ(q.label(q.product(a, a)), "[X]·q");
}

TEST(Quantum, RingAxiomsAndClassicalLimit) {
  for (const auto& id : builtin_ids()) {
    QuantumRing q(builtin(id).fan);
    const auto& h = q.classical();
    auto basis = basis_of(q);
    ASSERT_LE(basis.size(), 16u);
    for (const auto& a : basis) {
      EXPECT_EQ(q.product(q.unit(), a), a);
      for (const auto& b : basis) {
        QHClass ab = q.product(a, b);
        EXPECT_EQ(ab, q.product(b, a));
        HomologyClass ca = h.zero(static_cast<std::size_t>(a.degree));
        ca.coords[a.terms[0].index] = 1;
        HomologyClass cb = h.zero(static_cast<std::size_t>(b.degree));
        cb.coords[b.terms[0].index] = 1;
        EXPECT_EQ(q.classical_part(ab), intersection_product(h, ca, cb)) << id;
        for (const auto& c : basis) EXPECT_EQ(q.product(ab, c), q.product(a, q.product(b, c))) << id;
      }
    }
  }
}

TEST(Quantum, LaurentShiftsAndHomogeneity) {
  QuantumRing q(builtin("cp:2").fan);
  QHClass x = q.basis_class(2, 0, -1);
  EXPECT_EQ(x.degree, 2 - 6);
  QHClass y = q.product(x, q.basis_class(4, 0, 0));
  EXPECT_EQ(y, q.basis_class(0, 0, 0));
  QHClass mixed{2, {{2, 0, 0}, {0, 0, 0}}};
  try {
    q.product(mixed, q.unit());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InhomogeneousClass);
  }
}

TEST(Quantum, RealTablesTransportTheAmbientTable) {
  RealQuantumTable rp2 = qh_real(builtin("cp:2").fan, "[RP^2]");
  EXPECT_EQ(rp2.minimal_maslov, 3);
  EXPECT_EQ(rp2.coefficients.variable_degree, -3);
  ASSERT_EQ(rp2.basis.size(), 3u);
  // h_R is the degree-1 class; h_R * [pt] = [RP^2] t.
  std::size_t h = 1, pt = 0, unit = 2;
  EXPECT_EQ(rp2.basis[unit].label, "[RP^2]");
  for (const auto& p : rp2.products) {
    if (p.left == h && p.right == h) EXPECT_EQ(p.result, (std::vector<std::pair<std::size_t, long>>{{pt, 0}}));
    if (p.left == pt && p.right == h) EXPECT_EQ(p.result, (std::vector<std::pair<std::size_t, long>>{{unit, 1}}));
  }

  RealQuantumTable torus = qh_real(builtin("cp1xcp1").fan);
  QuantumRing qx(builtin("cp1xcp1").fan);
  for (const auto& p : torus.products) {
    const auto& a = torus.basis[p.left];
    const auto& b = torus.basis[p.right];
    QHClass ab = qx.product(qx.basis_class(a.codegree, a.index), qx.basis_class(b.codegree, b.index));
    ASSERT_EQ(ab.terms.size(), p.result.size());
    for (const auto& [idx, pow] : p.result) {
      const auto& r = torus.basis[idx];
      EXPECT_EQ(r.degree * 2, 2 * 2 - r.codegree);  // halved homological degree
      EXPECT_EQ(static_cast<long>(a.degree + b.degree) - 2, static_cast<long>(r.degree) - 2 * pow);
      EXPECT_TRUE(std::find(ab.terms.begin(), ab.terms.end(), QHTerm{r.codegree, r.index, pow}) != ab.terms.end());
    }
  }
}

TEST(Quantum, RealRequiresChernAtLeastTwo) {
  try {
    qh_real(builtin("blowup-cp2").fan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ChernTooSmall);
  }
}

TEST(Quantum, Wideness) {
  Builtin cp2 = builtin("cp:2");
  WidenessSummary w = wideness_summary(cp2.fan, cp2.polytope, make_int_vector({1, 3}));
  EXPECT_EQ(w.rank_mod, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(w.displacement_bound, 3u);
  EXPECT_TRUE(w.wide);
  Builtin quad = builtin("cp1xcp1");
  EXPECT_EQ(wideness_summary(quad.fan, quad.polytope, make_int_vector({1, 2})).displacement_bound, 4u);
  Builtin line = builtin("cp:1");
  EXPECT_EQ(wideness_summary(line.fan, line.polytope, make_int_vector({1})).displacement_bound, 2u);
}

TEST(Quantum, GroebnerComputationStaysBounded) {
  for (const auto& id : builtin_ids()) {
    QuantumRing q(builtin(id).fan);
    std::vector<gf2::Polynomial> gens = q.groebner_basis();
    EXPECT_NO_THROW(q.poly_ring().groebner_basis(gens, 10000)) << id;
  }
}
