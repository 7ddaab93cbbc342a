#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "cma/json_io.hpp"
#include "cma/selftest.hpp"

using namespace cma;

TEST(FieldSpec, Spellings) {
  EXPECT_EQ(parse_field_spec("Q"), FieldCtx::rationals());
  EXPECT_EQ(parse_field_spec("F2"), FieldCtx::prime(2));
  EXPECT_EQ(parse_field_spec("F_7"), FieldCtx::prime(7));
  auto f = parse_field_spec("F_11^6");
  EXPECT_EQ(f.characteristic(), 11u);
  EXPECT_EQ(f.degree(), 6u);
  auto g = parse_field_spec("GF(4)");
  EXPECT_EQ(g.characteristic(), 2u);
  EXPECT_EQ(g.degree(), 2u);
  EXPECT_EQ(parse_field_spec(R"({"kind":"Fp","p":5})"), FieldCtx::prime(5));
}

TEST(FieldSpec, Errors) {
  EXPECT_THROW(parse_field_spec("F4"), Error);
  EXPECT_THROW(parse_field_spec("R"), Error);
  EXPECT_THROW(parse_json("{oops"), Error);
  try {
    parse_json("[1,");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(FieldSpec, JsonRoundTrip) {
  for (const auto& ctx : {FieldCtx::rationals(), FieldCtx::prime(3), FieldCtx::extension_auto(2, 3),
                          FieldCtx::extension_auto(11, 6)})
    EXPECT_EQ(field_from_json(field_to_json(ctx)), ctx);
}

TEST(MatrixJson, Constructors) {
  const auto q = FieldCtx::rationals();
  auto c = matrix_from_json(parse_json(R"({"field":"Q","construct":{"direct_sum":[
      {"jordan":{"eigen":0,"size":2}},{"jordan":{"eigen":1,"size":2}}]}})"),
                            q);
  EXPECT_EQ(c, direct_sum({jordan(q, q.zero(), 2), jordan(q, q.one(), 2)}));

  auto f2 = FieldCtx::prime(2);
  auto p = matrix_from_json(parse_json(R"({"field":"F2","construct":{"permutation":{"cycle_type":[2,1]}}})"), q);
  EXPECT_EQ(p.ctx(), f2);
  EXPECT_EQ(p, permutation_matrix(f2, {1, 0, 2}));

  auto comp = matrix_from_json(parse_json(R"({"field":"F2","construct":{"companion":{"poly":[1,1,1],"power":2}}})"), q);
  EXPECT_EQ(comp, companion_power(Poly::from_ints(f2, {1, 1, 1}), 2));

  auto rows = matrix_from_json(parse_json(R"({"matrix":[["1/2",0],[0,"-3"]]})"), q);
  EXPECT_EQ(rows(0, 0), q.from_mpq(mpq_class(1, 2)));
  EXPECT_EQ(rows(1, 1), q.from_int(-3));
}

TEST(MatrixJson, RoundTrip) {
  std::mt19937_64 rng(3);
  for (const auto& ctx : {FieldCtx::rationals(), FieldCtx::prime(5), FieldCtx::extension_auto(3, 2)}) {
    for (int it = 0; it < 10; ++it) {
      Matrix m = realize(random_elem_divisors(ctx, rng), rng);
      Json j = matrix_to_json(m);
      EXPECT_EQ(matrix_from_json(j, FieldCtx::rationals()), m);
    }
  }
}

TEST(MatrixJson, MalformedInput) {
  const auto q = FieldCtx::rationals();
  EXPECT_THROW(matrix_from_json(parse_json(R"({"matrix":[[1,2],[3]]})"), q), Error);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"construct":{"spiral":3}})"), q), Error);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"field":"F2","matrix":[["1/2"]]})"), q), Error);
}

TEST(CycleTypeJson, Parse) {
  EXPECT_EQ(parse_parts("6,3"), (std::vector<std::uint64_t>{6, 3}));
  EXPECT_EQ(parse_parts("[6, 3]"), (std::vector<std::uint64_t>{6, 3}));
  auto ct = cycle_type_from_json(parse_json(R"({"cycle_type":[6,3],"p":2})"));
  EXPECT_EQ(ct.parts, (std::vector<std::uint64_t>{6, 3}));
  EXPECT_EQ(ct.p, 2u);
  EXPECT_EQ(cycle_type_from_json(cycle_type_to_json(ct)).parts, ct.parts);
  EXPECT_THROW(parse_parts("6,,x"), Error);
}

TEST(Reports, AnalyzeRoundTripIsByteIdentical) {
  std::mt19937_64 rng(17);
  for (const auto& ctx : {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(3)}) {
    for (int it = 0; it < 20; ++it) {
      auto e = random_elem_divisors(ctx, rng);
      auto prof = build_profile(e);
      const std::string once = dump_json(analyze_json(e, prof, homology_report(prof, e)));
      EXPECT_EQ(dump_json(parse_json(once)), once);
    }
  }
}

TEST(Reports, AnalyzeContent) {
  const auto q = FieldCtx::rationals();
  auto e = elementary_divisors(direct_sum({jordan(q, q.zero(), 2), jordan(q, q.zero(), 4)}));
  auto prof = build_profile(e);
  Json j = analyze_json(e, prof, homology_report(prof, e));
  EXPECT_EQ(j["profile"]["M_c"], Json::array({"x^4"}));
  EXPECT_EQ(j["profile"]["U_c"], Json::array({2, 2}));
  EXPECT_EQ(j["homology"]["dim"], 10);
  EXPECT_EQ(j["homology"]["quasi_hereditary"], false);
  EXPECT_EQ(j["homology"]["non_semisimple_block_count"], 1);
}

TEST(Reports, CompareContent) {
  const auto q = FieldCtx::rationals();
  IsoOracle iso;
  auto a = build_profile(elementary_divisors(direct_sum({jordan(q, q.zero(), 3), jordan(q, q.zero(), 3)})), iso);
  auto b = build_profile(elementary_divisors(direct_sum({jordan(q, q.one(), 3), jordan(q, q.one(), 3)})), iso);
  auto lr = implication_lattice_check(a, b, iso);
  Json j = compare_json({lr.verdicts.begin(), lr.verdicts.end()}, lr.violations);
  for (auto r : kAllRelations) EXPECT_EQ(j["relations"][to_string(r)], true) << to_string(r);
  EXPECT_EQ(j["algebra"]["isomorphic"], true);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(PowerDisplay, Forms) {
  const auto q = FieldCtx::rationals();
  EXPECT_EQ(power_display(Poly::from_ints(q, {0, 1}), 4), "x^4");
  EXPECT_EQ(power_display(Poly::from_ints(q, {1, 1}), 2), "(x + 1)^2");
  EXPECT_EQ(power_display(Poly::from_ints(q, {1, 1}), 1), "x + 1");
}

TEST(Selftest, AllCasesPassQuickly) {
  const auto start = std::chrono::steady_clock::now();
  auto results = run_selftest();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GE(results.size(), 20u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  EXPECT_LT(secs, 60.0);
}
