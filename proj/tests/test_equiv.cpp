#include <gtest/gtest.h>

#include "cma/equiv.hpp"
#include "cma/oracle.hpp"
#include "cma/permkit.hpp"

using namespace cma;

namespace {

ElemDivisorData jordan_data(const FieldCtx& ctx, std::initializer_list<std::pair<long, unsigned>> blocks) {
  std::vector<ElementaryDivisor> items;
  for (auto [eig, size] : blocks) items.push_back({Poly::from_ints(ctx, {-eig, 1}), size, 1});
  return make_elem_divisor_data(ctx, items);
}

std::array<bool, 6> holds(const LatticeReport& r) {
  std::array<bool, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = r.verdicts[i].holds;
  return out;
}

}  // namespace

TEST(Relations, Names) {
  for (auto r : kAllRelations) EXPECT_EQ(parse_relation(to_string(r)), r);
  EXPECT_THROW(parse_relation("X"), Error);
}

TEST(DecideI, ThreeThreePair) {
  for (auto ctx : {FieldCtx::rationals(), FieldCtx::prime(2)}) {
    auto c = build_profile(jordan_data(ctx, {{0, 3}, {0, 3}}));
    auto d = build_profile(jordan_data(ctx, {{1, 3}, {1, 3}}));
    IsoOracle iso;
    auto v = decide_I(c, d, iso);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.witness.size(), 1u);
    EXPECT_TRUE(replay_witness(v, c, d, iso));
    EXPECT_EQ(v.algebra_meaning, "algebras isomorphic");
    auto self = decide_I(c, c, iso);
    ASSERT_EQ(self.witness.size(), 1u);
    EXPECT_EQ(self.witness[0], (std::pair<std::size_t, std::size_t>{0, 0}));
    auto lr = implication_lattice_check(c, d, iso);
    EXPECT_EQ(holds(lr), (std::array<bool, 6>{true, true, true, true, true, true}));
  }
}

TEST(Deciders, TwoFourVersusTwoTwo) {
  auto q = FieldCtx::rationals();
  auto c = build_profile(jordan_data(q, {{0, 2}, {0, 4}}));
  auto d = build_profile(jordan_data(q, {{0, 2}, {1, 2}}));
  IsoOracle iso;
  EXPECT_FALSE(decide_I(c, d, iso).holds);
  EXPECT_FALSE(decide_D(c, d, iso).holds);
  EXPECT_FALSE(decide_S(c, d, iso).holds);
  auto sg = decide_Sg(c, d, iso);
  EXPECT_TRUE(sg.holds);
  EXPECT_TRUE(replay_witness(sg, c, d, iso));
  EXPECT_EQ(sg.algebra_meaning, "singularly equivalent");
  auto lr = implication_lattice_check(c, d, iso);
  EXPECT_TRUE(lr.violations.empty());
  EXPECT_EQ(holds(lr), (std::array<bool, 6>{false, false, false, false, false, true}));
}

TEST(Deciders, AlmostDerivedNeedsJ) {
  auto f2 = FieldCtx::prime(2);
  const Poly x = Poly::from_ints(f2, {0, 1});
  auto a = build_profile(make_elem_divisor_data(f2, {{x, 5, 1}, {x, 3, 1}, {x, 1, 1}}));
  auto b = build_profile(make_elem_divisor_data(f2, {{x, 5, 1}, {x, 2, 1}}));
  IsoOracle iso;
  EXPECT_FALSE(decide_AD(a, b, iso).holds);
  // {5,3} = J({5,2})
  auto c = build_profile(make_elem_divisor_data(f2, {{x, 5, 1}, {x, 3, 1}}));
  auto v = decide_AD(c, b, iso);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(replay_witness(v, c, b, iso));
  EXPECT_FALSE(decide_M(c, b, iso).holds);
  EXPECT_TRUE(decide_D(c, b, iso).holds);
}

TEST(Deciders, PermutationExamples) {
  auto f2 = FieldCtx::prime(2);
  IsoOracle iso;
  auto a = build_profile(perm_elementary_divisors({{6, 3}, 2}, f2));
  auto b = build_profile(perm_elementary_divisors({{3}, 2}, f2));
  EXPECT_EQ(a.r_c(), 0u);
  EXPECT_TRUE(decide_Sg(a, b, iso).holds);
  auto sa = build_profile(perm_elementary_divisors({{6, 1, 1, 1}, 2}, f2));
  auto sb = build_profile(perm_elementary_divisors({{1, 1, 1}, 2}, f2));
  ASSERT_EQ(sa.i_c().size(), 1u);
  EXPECT_EQ(sa.groups[sa.i_c()[0]].p, Poly::from_ints(f2, {1, 1, 1}));
  EXPECT_TRUE(sb.i_c().empty());
  EXPECT_FALSE(decide_Sg(sa, sb, iso).holds);
}

TEST(Deciders, ContextMismatch) {
  auto a = build_profile(jordan_data(FieldCtx::prime(2), {{0, 2}}));
  auto b = build_profile(jordan_data(FieldCtx::prime(3), {{0, 2}}));
  IsoOracle iso;
  EXPECT_THROW(decide_I(a, b, iso), Error);
}

TEST(Lattice, ViolationNames) {
  EXPECT_TRUE(lattice_violations({true, true, true, true, true, true}).empty());
  EXPECT_TRUE(lattice_violations({false, false, false, false, false, false}).empty());
  auto v = lattice_violations({true, false, false, false, false, false});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front(), "I => M");
  EXPECT_EQ(lattice_violations({false, false, false, true, true, true}), (std::vector<std::string>{"AD => D"}));
}

TEST(EquivProperties, RandomPairs) {
  std::mt19937_64 rng(91);
  RandomSpec spec;
  spec.max_n = 14;
  std::size_t sg = 0, iso_pairs = 0;
  for (auto ctx : {FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::rationals()}) {
    IsoOracle iso;
    for (int it = 0; it < 200; ++it) {
      auto ea = random_elem_divisors(ctx, rng, spec);
      auto eb = related_elem_divisors(ea, rng, spec);
      auto a = build_profile(ea, iso);
      auto b = build_profile(eb, iso);
      auto ab = implication_lattice_check(a, b, iso);
      auto ba = implication_lattice_check(b, a, iso);
      ASSERT_TRUE(ab.violations.empty()) << ab.violations.front();
      ASSERT_EQ(holds(ab), holds(ba));
      for (auto r : kAllRelations) ASSERT_TRUE(decide(r, a, a, iso).holds);
      if (ab[Relation::I].holds) {
        ++iso_pairs;
        ASSERT_EQ(ea.n, eb.n);
        ASSERT_EQ(ea.minimal_polynomial().degree(), eb.minimal_polynomial().degree());
      }
      if (ab[Relation::Sg].holds) {
        ++sg;
        ASSERT_EQ(a.u_c, b.u_c);
      }
    }
  }
  EXPECT_GT(sg, 100u);
  EXPECT_GT(iso_pairs, 10u);
}
