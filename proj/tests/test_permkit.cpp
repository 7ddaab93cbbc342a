#include <gtest/gtest.h>

#include <random>

#include "cma/permkit.hpp"

using namespace cma;

namespace {

std::vector<std::tuple<std::string, unsigned, unsigned>> describe(const ElemDivisorData& e) {
  std::vector<std::tuple<std::string, unsigned, unsigned>> out;
  for (const auto& it : e.items) out.emplace_back(it.p.to_string(), it.exponent, it.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

// all partitions of n, parts descending
void partitions(std::uint64_t n, std::uint64_t max_part, std::vector<std::uint64_t>& cur,
                std::vector<std::vector<std::uint64_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

CycleType random_type(std::mt19937_64& rng, std::uint64_t p, std::uint64_t max_n) {
  std::uniform_int_distribution<std::uint64_t> part(1, 12);
  CycleType ct{{}, p};
  std::uint64_t n = 0;
  do {
    std::uint64_t x = part(rng);
    if (rng() % 3 == 0) x *= p;
    if (n + x > max_n) break;
    ct.parts.push_back(x);
    n += x;
  } while (rng() % 4 != 0);
  if (ct.parts.empty()) ct.parts.push_back(p);
  return ct;
}

}  // namespace

TEST(NuP, Examples) {
  EXPECT_EQ(nu_p(6, 2), 1u);
  EXPECT_EQ(nu_p(9, 3), 2u);
  EXPECT_EQ(nu_p(12, 0), 0u);
  EXPECT_EQ(p_prime_part(12, 2), 3u);
  EXPECT_EQ(p_prime_part(12, 0), 12u);
}

TEST(Split, Examples) {
  auto [r, s] = regular_singular_split({{6, 3}, 2});
  EXPECT_EQ(r.parts, (std::vector<std::uint64_t>{3, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(s.parts, (std::vector<std::uint64_t>{6, 1, 1, 1}));
  auto [r0, s0] = regular_singular_split({{5, 2}, 0});
  EXPECT_EQ(r0.parts, (std::vector<std::uint64_t>{5, 2}));
  EXPECT_EQ(s0.parts, std::vector<std::uint64_t>(7, 1));
  auto [r2, s2] = regular_singular_split({{4, 2}, 2});
  EXPECT_EQ(r2.parts, std::vector<std::uint64_t>(6, 1));
  EXPECT_EQ(s2.parts, (std::vector<std::uint64_t>{4, 2}));
  EXPECT_THROW(validate({{}, 2}), Error);
  EXPECT_THROW(validate({{3}, 4}), Error);
}

TEST(PermDivisors, SixThreeOverF2) {
  auto f2 = FieldCtx::prime(2);
  auto e = perm_elementary_divisors({{6, 3}, 2}, f2);
  EXPECT_EQ(e.n, 9u);
  // (x-1)^2 from the 6-cycle, x-1 from the 3-cycle, likewise for x^2+x+1
  EXPECT_EQ(describe(e), describe(make_elem_divisor_data(
                             f2, {{Poly::from_ints(f2, {1, 1}), 1, 1},
                                  {Poly::from_ints(f2, {1, 1}), 2, 1},
                                  {Poly::from_ints(f2, {1, 1, 1}), 1, 1},
                                  {Poly::from_ints(f2, {1, 1, 1}), 2, 1}})));
  auto t = perm_elementary_divisors({{3}, 2}, f2);
  EXPECT_EQ(t.items.size(), 2u);
  EXPECT_EQ(t.items[0].exponent, 1u);
  EXPECT_EQ(t.items[1].exponent, 1u);
}

TEST(PermDivisors, RationalCyclotomic) {
  auto q = FieldCtx::rationals();
  auto e = perm_elementary_divisors({{12}, 0}, q);
  ASSERT_EQ(e.items.size(), 6u);
  for (const auto& it : e.items) {
    EXPECT_EQ(it.exponent, 1u);
    EXPECT_EQ(it.multiplicity, 1u);
  }
  EXPECT_THROW(perm_elementary_divisors({{12}, 2}, q), Error);
}

TEST(Splitting, Orders) {
  const std::uint64_t p = 11;
  CycleType sigma{{7 * p * p * p, 7 * p * p, 5 * p * p, 3 * p * p, 7 * p}, p};
  EXPECT_EQ(multiplicative_order(11, 105), 6u);
  EXPECT_EQ(splitting_context(sigma).degree(), 6u);
  EXPECT_EQ(splitting_context({{3}, 2}).degree(), 2u);
  EXPECT_EQ(splitting_context({{4, 2, 1}, 2}).kind(), FieldKind::Prime);
  EXPECT_THROW(splitting_context({{3}, 0}), Error);
}

TEST(PrimitiveElement, GeneratesTheGroup) {
  for (auto ctx : {FieldCtx::prime(2), FieldCtx::prime(11), FieldCtx::extension_auto(2, 4),
                   FieldCtx::extension_auto(3, 3)}) {
    const auto g = primitive_element(ctx);
    const std::uint64_t order = ctx.order().get_ui() - 1;
    FieldElem x = g;
    std::uint64_t k = 1;
    while (!x.is_one()) {
      x = x * g;
      ++k;
    }
    EXPECT_EQ(k, order) << ctx.name();
  }
}

TEST(ClosedForm, ExampleAtEleven) {
  const std::uint64_t p = 11;
  CycleType sigma{{7 * p * p * p, 7 * p * p, 5 * p * p, 3 * p * p, 7 * p}, p};
  CycleType tau{{7 * p * p * p, 7 * p * p, 5 * p * p, 3 * p * p, 5 * p, 3 * p}, p};
  auto ctx = splitting_context(sigma, tau);
  auto a = closed_form_profile(sigma, ctx);
  auto b = closed_form_profile(tau, ctx);
  ASSERT_EQ(a.r_c(), 1u);
  ASSERT_EQ(b.r_c(), 1u);
  std::vector<std::uint64_t> u;
  for (int i = 0; i < 7; ++i) u.push_back(p * p * p - p * p);
  for (int i = 0; i < 7; ++i) u.push_back(p * p - p);
  for (int i = 0; i < 7; ++i) u.push_back(p);
  for (int i = 0; i < 6; ++i) u.push_back(p * p);
  EXPECT_EQ(a.u_c, make_multiset(u));
  EXPECT_EQ(b.u_c, make_multiset(u));
  IsoOracle iso;
  EXPECT_TRUE(decide_Sg(a, b, iso).holds);
  EXPECT_FALSE(decide_M(a, b, iso).holds);
  EXPECT_TRUE(tilde_sets(a, 0).members.empty());
}

TEST(ClosedForm, SingleCycle) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto prof = closed_form_profile({{p}, p});
    ASSERT_EQ(prof.groups.size(), 1u);
    EXPECT_EQ(prof.groups[0].pset, (IndexSet{p}));
    EXPECT_EQ(prof.groups[0].d(), (p == 2 ? IndexMultiset{2} : IndexMultiset{p}));
  }
}

TEST(ClosedForm, MatchesFactorizationPath) {
  for (std::uint64_t p : {2, 3}) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      std::vector<std::uint64_t> cur;
      std::vector<std::vector<std::uint64_t>> parts;
      partitions(n, n, cur, parts);
      for (const auto& pt : parts) {
        CycleType ct{pt, p};
        auto ctx = splitting_context(ct);
        auto fast = closed_form_divisors(ct, ctx);
        auto slow = perm_elementary_divisors(ct, ctx);
        ASSERT_EQ(fast, slow) << ct.to_string() << " p=" << p;
      }
    }
  }
}

TEST(TildeSets, Unfold) {
  auto f3 = FieldCtx::prime(3);
  auto prof = build_profile(perm_elementary_divisors({{9, 3, 1}, 3}, f3));
  ASSERT_EQ(prof.r_c(), 1u);
  auto t = tilde_sets(prof, 0);
  ASSERT_EQ(t.members.size(), 1u);
  EXPECT_EQ(t.d_tilde, (IndexMultiset{2}));
  EXPECT_THROW(tilde_sets(prof, 1), Error);
}

TEST(SingularTransfer, Examples) {
  auto f2 = FieldCtx::prime(2);
  auto r = check_singular_part_transfer({{6, 3}, 2}, {{3}, 2}, f2);
  EXPECT_FALSE(r.hypothesis_met);
  EXPECT_TRUE(r.pair_sg);
  EXPECT_FALSE(r.singular_sg);
  EXPECT_EQ(r.status, TransferStatus::HypothesisNotMet);
  EXPECT_EQ(r.singular_a.parts, (std::vector<std::uint64_t>{6, 1, 1, 1}));

  auto f3 = FieldCtx::prime(3);
  auto same = check_singular_part_transfer({{9, 3}, 3}, {{9, 3}, 3}, f3);
  EXPECT_EQ(same.status, TransferStatus::Confirmed);
  auto more = check_singular_part_transfer({{9, 3}, 3}, {{9, 3, 1}, 3}, f3);
  EXPECT_TRUE(more.hypothesis_met);
  EXPECT_NE(more.status, TransferStatus::Violated);
}

TEST(OneMore, Examples) {
  auto f3 = FieldCtx::prime(3);
  auto a = check_one_more({{9, 3}, 3}, 3, f3);
  EXPECT_EQ(a.I, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.J, (IndexSet{9, 3}));
  EXPECT_TRUE(a.hypothesis);
  EXPECT_TRUE(a.condition5);
  EXPECT_TRUE(a.m_equivalent);
  EXPECT_TRUE(a.sg_equivalent);
  EXPECT_TRUE(a.consistent);

  auto b = check_one_more({{9}, 3}, 3, f3);
  EXPECT_FALSE(b.condition5);
  EXPECT_FALSE(b.sg_equivalent);
  EXPECT_FALSE(b.m_equivalent);
  EXPECT_TRUE(b.consistent);

  auto c = check_one_more({{5, 4, 7}, 3}, 1, f3);
  EXPECT_EQ(c.I.size(), 3u);
}

TEST(PermProperties, DegreeBookkeepingAndExceptionalDivisor) {
  std::mt19937_64 rng(51);
  for (std::uint64_t p : {2, 3, 5}) {
    auto ctx = FieldCtx::prime(p);
    for (int it = 0; it < 60; ++it) {
      auto ct = random_type(rng, p, 40);
      auto e = perm_elementary_divisors(ct, ctx);
      std::uint64_t total = 0;
      for (const auto& d : e.items) total += d.p.degree() * d.exponent * d.multiplicity;
      ASSERT_EQ(total, ct.n());
      auto prof = build_profile(e);
      int exceptional = 0;
      for (const auto& g : prof.groups) {
        if (g.p == Poly::from_ints(ctx, {-1, 1})) {
          ++exceptional;
          ASSERT_EQ(g.n_f, ipow(p, nu_p(g.n_f, p)));
        }
      }
      ASSERT_EQ(exceptional, 1);
    }
  }
}

TEST(PermProperties, SingularPartTrivialIffNoGaps) {
  std::mt19937_64 rng(52);
  for (std::uint64_t p : {3, 5, 7}) {
    auto ctx = FieldCtx::prime(p);
    for (int it = 0; it < 80; ++it) {
      auto ct = random_type(rng, p, 40);
      const bool identity = regular_singular_split(ct).second.parts == std::vector<std::uint64_t>(ct.n(), 1);
      auto prof = build_profile(perm_elementary_divisors(ct, ctx));
      ASSERT_EQ(identity, prof.i_c().empty()) << ct.to_string();
    }
  }
}

TEST(PermProperties, SingularTransferUnderHypothesis) {
  std::mt19937_64 rng(53);
  int sg_pairs = 0;
  for (int it = 0; it < 500; ++it) {
    const std::uint64_t p = it % 2 ? 3 : 5;
    auto ctx = FieldCtx::prime(p);
    auto a = random_type(rng, p, 40);
    // bias toward Sg-equivalent pairs: add p-regular cycles to a copy
    CycleType b = a;
    if (rng() % 2) {
      b.parts.push_back(1 + rng() % 4 * 2 % p);
      if (b.parts.back() % p == 0) b.parts.back() = 1;
    } else {
      b = random_type(rng, p, 40);
    }
    auto r = check_singular_part_transfer(a, b, ctx);
    ASSERT_TRUE(r.hypothesis_met);
    ASSERT_NE(r.status, TransferStatus::Violated) << a.to_string() << " " << b.to_string();
    sg_pairs += r.pair_sg;
  }
  EXPECT_GT(sg_pairs, 50);
}

TEST(PermProperties, OneMoreCriterion) {
  std::mt19937_64 rng(54);
  int tested = 0;
  while (tested < 200) {
    const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[rng() % 3];
    auto base = random_type(rng, p, 30);
    std::uint64_t extra = 1 + rng() % 6;
    if (rng() % 2) extra *= p;
    auto r = check_one_more(base, extra, FieldCtx::prime(p));
    if (!r.hypothesis) continue;
    ++tested;
    ASSERT_TRUE(r.consistent) << base.to_string() << " + " << extra << " p=" << p;
  }
}
