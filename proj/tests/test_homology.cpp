#include <gtest/gtest.h>

#include "cma/equiv.hpp"
#include "cma/homology.hpp"
#include "cma/oracle.hpp"
#include "cma/permkit.hpp"
#include "test_util.hpp"

using namespace cma;

namespace {

ElemDivisorData jordan_data(const FieldCtx& ctx, std::initializer_list<std::pair<long, unsigned>> blocks) {
  std::vector<ElementaryDivisor> items;
  for (auto [eig, size] : blocks) items.push_back({Poly::from_ints(ctx, {-eig, 1}), size, 1});
  return make_elem_divisor_data(ctx, items);
}

}  // namespace

TEST(BlockReport, Examples) {
  auto q = FieldCtx::rationals();
  const Poly x = Poly::from_ints(q, {0, 1});
  auto b = block_report(x, {3, 1});
  EXPECT_EQ(b.cartan, (std::vector<std::vector<std::uint64_t>>{{3, 1}, {1, 1}}));
  EXPECT_EQ(b.cartan_det, 2);
  EXPECT_EQ(b.gldim, GlDim::Infinite);
  auto a = block_report(x, {2, 1});
  EXPECT_EQ(a.cartan_det, 1);
  EXPECT_EQ(a.gldim, GlDim::Two);
  auto s = block_report(x, {1});
  EXPECT_EQ(s.gldim, GlDim::Zero);
  EXPECT_TRUE(s.semisimple);
  EXPECT_EQ(s.simples, 1u);
  EXPECT_STREQ(to_string(GlDim::Infinite), "infinite");
}

TEST(SgDescriptor, Examples) {
  auto q = FieldCtx::rationals();
  auto c = build_profile(jordan_data(q, {{0, 2}, {0, 4}}));
  auto sg = sg_descriptor(c);
  ASSERT_EQ(sg.size(), 2u);
  for (const auto& b : sg) {
    EXPECT_EQ(b.rep, Poly::from_ints(q, {0, 1}));
    EXPECT_EQ(b.j, 2u);
  }
  auto full = build_profile(jordan_data(q, {{0, 1}, {0, 2}}));
  EXPECT_TRUE(sg_descriptor(full).empty());
  auto j33 = sg_descriptor(build_profile(jordan_data(q, {{0, 3}, {0, 3}})));
  ASSERT_EQ(j33.size(), 1u);
  EXPECT_EQ(j33[0].j, 3u);
}

TEST(AlgebraDimension, Examples) {
  auto q = FieldCtx::rationals();
  auto zero = make_elem_divisor_data(q, {{Poly::from_ints(q, {0, 1}), 1, 5}});
  EXPECT_EQ(algebra_dimension(zero), 25);
  EXPECT_EQ(algebra_dimension_from_invariant_factors(zero), 25);
  auto e = jordan_data(q, {{0, 2}, {0, 4}});
  EXPECT_EQ(algebra_dimension(e), 10);
  EXPECT_EQ(algebra_dimension_from_invariant_factors(e), 10);
  auto irr = make_elem_divisor_data(q, {{Poly::from_ints(q, {-2, 0, 0, 0, 1}), 1, 1}});
  EXPECT_EQ(algebra_dimension(irr), 4);
}

TEST(HomologyReport, Examples) {
  auto q = FieldCtx::rationals();
  auto ec = jordan_data(q, {{0, 2}, {0, 4}});
  auto c = homology_report(build_profile(ec), ec);
  EXPECT_EQ(c.blocks.size(), 1u);
  EXPECT_EQ(c.non_semisimple_block_count, 1u);
  EXPECT_EQ(c.total_cartan_det, 4);
  EXPECT_EQ(c.gldim, GlDim::Infinite);
  EXPECT_FALSE(c.quasi_hereditary);
  EXPECT_EQ(c.sg.size(), 2u);
  EXPECT_EQ(c.blocks[0].cartan, (std::vector<std::vector<std::uint64_t>>{{4, 2}, {2, 2}}));
  EXPECT_EQ(c.blocks[0].indec_gorenstein_projectives, 4u);

  auto ed = jordan_data(q, {{0, 2}, {1, 2}});
  auto d = homology_report(build_profile(ed), ed);
  EXPECT_EQ(d.non_semisimple_block_count, 2u);
  EXPECT_EQ(d.total_cartan_det, 4);
  for (const auto& b : d.blocks) EXPECT_EQ(b.cartan, (std::vector<std::vector<std::uint64_t>>{{2}}));
  std::uint64_t gp = 0;
  for (const auto& b : d.blocks) gp += b.indec_gorenstein_projectives;
  EXPECT_EQ(gp, 4u);

  auto f2 = FieldCtx::prime(2);
  auto ep = perm_elementary_divisors({{3}, 2}, f2);
  auto p = homology_report(build_profile(ep), ep);
  EXPECT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.non_semisimple_block_count, 0u);
  EXPECT_EQ(p.total_cartan_det, 1);
  EXPECT_EQ(p.gldim, GlDim::Zero);
  EXPECT_TRUE(p.sg.empty());
}

TEST(ConjectureWitness, Examples) {
  auto q = FieldCtx::rationals();
  const Poly x = Poly::from_ints(q, {0, 1});
  auto make = [&](std::initializer_list<unsigned> t) {
    std::vector<ElementaryDivisor> items;
    for (auto e : t) items.push_back({x, e, 1});
    auto e = make_elem_divisor_data(q, items);
    return conjecture_witnesses(homology_report(build_profile(e), e));
  };
  auto a = make({3, 2, 1});
  EXPECT_TRUE(a.cdc_applicable);
  EXPECT_TRUE(a.cdc_holds);
  EXPECT_EQ(a.cartan_det, 1);
  auto b = make({3, 1});
  EXPECT_FALSE(b.cdc_applicable);
  EXPECT_EQ(b.cartan_det, 2);
  auto s = make({1});
  EXPECT_TRUE(s.cdc_applicable);
  EXPECT_EQ(s.cartan_det, 1);
  EXPECT_TRUE(s.cm_finite);
  EXPECT_EQ(s.auslander_gorenstein_level, 1u);
}

TEST(HomologyProperties, DeterminantMatchesDirect) {
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<std::uint64_t> v;
    for (unsigned i = 0; i < 6; ++i)
      if (mask >> i & 1) v.push_back(i * 2 + 1 + (i % 2));
    IndexSet t = make_index_set(v);
    auto b = block_report(Poly::from_ints(FieldCtx::prime(2), {0, 1}), t);
    ASSERT_EQ(b.cartan_det, integer_determinant(b.cartan));
    ASSERT_EQ(b.cartan_det == 1, b.gldim != GlDim::Infinite);
  }
  EXPECT_EQ(integer_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(integer_determinant({}), 1);
}

TEST(HomologyProperties, DimensionMatchesCentralizer) {
  std::mt19937_64 rng(101);
  for (auto ctx : {FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::prime(5), FieldCtx::rationals()}) {
    for (int it = 0; it < 25; ++it) {
      Matrix c = cma::testing::random_matrix(ctx, 1 + rng() % 6, rng);
      auto e = elementary_divisors(c);
      const auto kernel = centralizer_basis(c).dim();
      ASSERT_EQ(algebra_dimension(e), static_cast<unsigned long>(kernel));
      ASSERT_EQ(algebra_dimension_from_invariant_factors(e), static_cast<unsigned long>(kernel));
    }
  }
}

TEST(HomologyProperties, SgPairsShareCartanDeterminant) {
  std::mt19937_64 rng(102);
  RandomSpec spec;
  spec.max_n = 16;
  std::size_t sg = 0;
  for (auto ctx : {FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::rationals()}) {
    IsoOracle iso;
    for (int it = 0; it < 150; ++it) {
      auto ea = random_elem_divisors(ctx, rng, spec);
      auto eb = related_elem_divisors(ea, rng, spec);
      auto a = build_profile(ea, iso);
      auto b = build_profile(eb, iso);
      auto ha = homology_report(a, ea);
      auto hb = homology_report(b, eb);
      ASSERT_EQ(ha.quasi_hereditary, a.i_c().empty());
      ASSERT_EQ(ha.quasi_hereditary, ha.total_cartan_det == 1);
      mpz_class from_d = 1;
      for (auto j : a.u_c) from_d *= static_cast<unsigned long>(j);
      ASSERT_EQ(ha.total_cartan_det, from_d);
      if (decide_Sg(a, b, iso).holds) {
        ++sg;
        ASSERT_EQ(ha.total_cartan_det, hb.total_cartan_det);
        ASSERT_EQ(ha.quasi_hereditary, hb.quasi_hereditary);
      }
    }
  }
  EXPECT_GT(sg, 50u);
}
