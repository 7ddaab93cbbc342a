#include "cma/selftest.hpp"

#include <functional>

#include "cma/json_io.hpp"
#include "cma/oracle.hpp"

namespace cma {

namespace {

struct Failed {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failed{what};
}

ElemDivisorData jordans(const FieldCtx& ctx, std::initializer_list<std::pair<long, std::size_t>> blocks) {
  std::vector<Matrix> ms;
  for (auto [eig, size] : blocks) ms.push_back(jordan(ctx, ctx.from_int(eig), size));
  return elementary_divisors(direct_sum(ms));
}

Poly P(const FieldCtx& ctx, std::initializer_list<long> c) { return Poly::from_ints(ctx, c); }

CycleType large_sigma(std::uint64_t p) { return {{7 * p * p * p, 7 * p * p, 5 * p * p, 3 * p * p, 7 * p}, p}; }
CycleType large_tau(std::uint64_t p) { return {{7 * p * p * p, 7 * p * p, 5 * p * p, 3 * p * p, 5 * p, 3 * p}, p}; }

std::vector<std::pair<std::string, std::function<void()>>> cases() {
  const FieldCtx q = FieldCtx::rationals();
  const FieldCtx f2 = FieldCtx::prime(2);
  std::vector<std::pair<std::string, std::function<void()>>> out;

  out.emplace_back("F_11^6 context from an automatic modulus", [] {
    auto ctx = FieldCtx::extension_auto(11, 6);
    expect(ctx.degree() == 6 && ctx.order() == mpz_class(1771561), "wrong order");
  });
  out.emplace_back("x^3 - 1 over F_2 splits as (x + 1)(x^2 + x + 1)", [=] {
    auto fac = factorize(P(f2, {1, 0, 0, 1}));
    expect(fac.factors.size() == 2 && fac.factors[0].first == P(f2, {1, 1}) && fac.factors[1].first == P(f2, {1, 1, 1}),
           "unexpected factors");
  });
  out.emplace_back("Q[x]/(x) and Q[x]/(x - 1) are isomorphic", [=] {
    expect(quotient_algebras_isomorphic(P(q, {0, 1}), P(q, {-1, 1})), "not isomorphic");
  });
  out.emplace_back("x^2 + x + 1 is irreducible over F_2", [=] { expect(is_irreducible(P(f2, {1, 1, 1})), "reducible"); });
  out.emplace_back("minimal polynomial of J_3(0)+J_3(0) is x^3", [=] {
    expect(minimal_polynomial(direct_sum({jordan(q, q.zero(), 3), jordan(q, q.zero(), 3)})) == P(q, {0, 0, 0, 1}), "wrong");
  });
  out.emplace_back("minimal polynomial of J_2(0)+J_2(1) is x^2 (x - 1)^2", [=] {
    expect(minimal_polynomial(direct_sum({jordan(q, q.zero(), 2), jordan(q, q.one(), 2)})) == P(q, {0, 0, 1, -2, 1}),
           "wrong");
  });
  out.emplace_back("J_2(0)+J_4(0) has elementary divisors x^2, x^4", [=] {
    auto e = jordans(q, {{0, 2}, {0, 4}});
    expect(e.items.size() == 2 && e.items[0].exponent == 4 && e.items[1].exponent == 2 && e.items[0].multiplicity == 1 &&
               e.items[1].multiplicity == 1,
           "wrong divisors");
  });
  out.emplace_back("J_3(0)+J_3(0) has x^3 twice", [=] {
    auto e = jordans(q, {{0, 3}, {0, 3}});
    expect(e.items.size() == 1 && e.items[0].exponent == 3 && e.items[0].multiplicity == 2, "wrong divisors");
  });
  out.emplace_back("3-cycle over F_2 has divisors x + 1, x^2 + x + 1", [=] {
    auto e = elementary_divisors(permutation_matrix(f2, {1, 2, 0}));
    expect(e.items.size() == 2 && e.items[0].p == P(f2, {1, 1}) && e.items[1].p == P(f2, {1, 1, 1}), "wrong divisors");
  });
  out.emplace_back("J_3(0)+J_3(0) as a 6x6 matrix", [=] {
    auto c = direct_sum({jordan(q, q.zero(), 3), jordan(q, q.zero(), 3)});
    Matrix expect_m(q, 6);
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {3, 4}, {4, 5}}) expect_m(i, j) = q.one();
    expect(c == expect_m, "wrong matrix");
  });
  out.emplace_back("H and D of {4,2} are {2,2}", [] {
    expect(mset_H({4, 2}) == IndexMultiset{2, 2} && mset_D({4, 2}) == IndexMultiset{2, 2}, "wrong multisets");
  });
  out.emplace_back("profile of J_2(0)+J_4(0)", [=] {
    auto c = build_profile(jordans(q, {{0, 2}, {0, 4}}));
    expect(c.groups.size() == 1 && c.groups[0].n_f == 4, "M_c should be {x^4}");
    expect(c.i_c().size() == 1 && c.r_c() == 1 && c.classes[0].d == IndexMultiset{2, 2}, "I_c / D mismatch");
  });
  out.emplace_back("profile of J_2(0)+J_2(1)", [=] {
    auto d = build_profile(jordans(q, {{0, 2}, {1, 2}}));
    expect(d.i_c().size() == 2 && d.r_c() == 1 && d.classes[0].d == IndexMultiset{2, 2}, "I_d / D mismatch");
  });
  out.emplace_back("profile of J_3(0)+J_3(0)", [=] {
    auto c = build_profile(jordans(q, {{0, 3}, {0, 3}}));
    expect(c.groups.size() == 1 && c.groups[0].n_f == 3 && c.groups[0].ptilde == IndexMultiset{3, 3} &&
               c.groups[0].pset == IndexSet{3},
           "wrong group");
  });
  out.emplace_back("J_3(0)+J_3(0) and J_3(1)+J_3(1) are I-equivalent over Q and F_2", [=] {
    for (const auto& ctx : {q, f2}) {
      IsoOracle iso;
      auto c = build_profile(jordans(ctx, {{0, 3}, {0, 3}}), iso);
      auto d = build_profile(jordans(ctx, {{1, 3}, {1, 3}}), iso);
      expect(decide_I(c, d, iso).holds, "not I-equivalent over " + ctx.name());
    }
  });
  out.emplace_back("J_2(0)+J_4(0) vs J_2(0)+J_2(1): Sg only", [=] {
    IsoOracle iso;
    auto c = build_profile(jordans(q, {{0, 2}, {0, 4}}), iso);
    auto d = build_profile(jordans(q, {{0, 2}, {1, 2}}), iso);
    auto lr = implication_lattice_check(c, d, iso);
    expect(lr[Relation::Sg].holds, "Sg should hold");
    for (auto r : {Relation::I, Relation::M, Relation::AD, Relation::D, Relation::S})
      expect(!lr[r].holds, std::string(to_string(r)) + " should fail");
    expect(lr.violations.empty(), "lattice violation");
  });
  out.emplace_back("block T = {3,1}: Cartan determinant 2, infinite global dimension", [=] {
    auto b = block_report(P(q, {0, 1}), {3, 1});
    expect(b.cartan == std::vector<std::vector<std::uint64_t>>{{3, 1}, {1, 1}} && b.cartan_det == 2 &&
               b.gldim == GlDim::Infinite,
           "wrong block");
    HomologyReport rep;
    rep.blocks = {b};
    rep.total_cartan_det = 2;
    rep.gldim = GlDim::Infinite;
    auto w = conjecture_witnesses(rep);
    expect(!w.cdc_applicable && w.cartan_det == 2, "witness should not apply");
  });
  out.emplace_back("Sg descriptor of J_2(0)+J_4(0) is (x,2),(x,2)", [=] {
    auto sg = sg_descriptor(build_profile(jordans(q, {{0, 2}, {0, 4}})));
    expect(sg.size() == 2 && sg[0].j == 2 && sg[1].j == 2 && sg[0].rep == P(q, {0, 1}), "wrong descriptor");
  });
  out.emplace_back("J_2(0)+J_2(1) has two non-semisimple blocks of infinite global dimension", [=] {
    auto e = jordans(q, {{0, 2}, {1, 2}});
    auto rep = homology_report(build_profile(e), e);
    expect(rep.non_semisimple_block_count == 2 && rep.total_cartan_det == 4 && rep.gldim == GlDim::Infinite, "wrong report");
    for (const auto& b : rep.blocks) expect(b.cartan == std::vector<std::vector<std::uint64_t>>{{2}}, "wrong Cartan");
  });
  out.emplace_back("nu_2(6) = 1 and nu_0(12) = 0", [] { expect(nu_p(6, 2) == 1 && nu_p(12, 0) == 0, "wrong valuation"); });
  out.emplace_back("singular part of (6,3) at p = 2 is (6,1,1,1)", [] {
    auto [r, s] = regular_singular_split({{6, 3}, 2});
    expect(s.parts == std::vector<std::uint64_t>{6, 1, 1, 1}, "wrong singular part");
    auto [r0, s0] = regular_singular_split({{6, 3}, 0});
    expect(r0.parts == std::vector<std::uint64_t>{6, 3} && s0.parts == std::vector<std::uint64_t>(9, 1),
           "characteristic 0 split");
  });
  out.emplace_back("(6,3) over F_2 has divisors x+1, (x+1)^2, x^2+x+1, (x^2+x+1)^2", [=] {
    auto e = perm_elementary_divisors({{6, 3}, 2}, f2);
    expect(e.items.size() == 4, "expected four divisors");
    expect(e.items[0].p == P(f2, {1, 1}) && e.items[0].exponent == 2 && e.items[1].exponent == 1, "x + 1 part");
    expect(e.items[2].p == P(f2, {1, 1, 1}) && e.items[2].exponent == 2 && e.items[3].exponent == 1, "x^2 + x + 1 part");
    auto t = perm_elementary_divisors({{3}, 2}, f2);
    expect(t.items.size() == 2 && t.items[0].exponent == 1 && t.items[1].exponent == 1, "3-cycle divisors");
    expect(verify_perm_fastpath({{6, 3}, 2}, f2).ok, "matrix path disagrees");
  });
  out.emplace_back("(6,3) vs (3) over F_2: Sg holds but not for singular parts", [=] {
    IsoOracle iso;
    auto a = build_profile(perm_elementary_divisors({{6, 3}, 2}, f2), iso);
    auto b = build_profile(perm_elementary_divisors({{3}, 2}, f2), iso);
    expect(a.i_c().empty() && b.i_c().empty() && decide_Sg(a, b, iso).holds, "pair should be Sg-equivalent");
    auto sa = build_profile(perm_elementary_divisors({{6, 1, 1, 1}, 2}, f2), iso);
    auto sb = build_profile(perm_elementary_divisors({{1, 1, 1}, 2}, f2), iso);
    expect(!decide_Sg(sa, sb, iso).holds, "singular parts should not be Sg-equivalent");
    auto r = check_singular_part_transfer({{6, 3}, 2}, {{3}, 2}, f2);
    expect(r.status == TransferStatus::HypothesisNotMet && r.pair_sg && !r.singular_sg, "transfer report");
  });
  out.emplace_back("large permutation pair at p = 11: Sg but not M", [] {
    auto sigma = large_sigma(11), tau = large_tau(11);
    auto ctx = splitting_context(sigma, tau);
    expect(ctx.degree() == 6, "splitting field should be F_11^6");
    auto a = closed_form_profile(sigma, ctx);
    auto b = closed_form_profile(tau, ctx);
    IsoOracle iso;
    expect(decide_Sg(a, b, iso).holds, "should be Sg-equivalent");
    expect(!decide_M(a, b, iso).holds, "should not be M-equivalent");
    expect(a.u_c == b.u_c, "U differs");
  });
  out.emplace_back("compare on J_2(0)+J_4(0) vs J_2(0)+J_2(1)", [=] {
    IsoOracle iso;
    auto c = build_profile(jordans(q, {{0, 2}, {0, 4}}), iso);
    auto d = build_profile(jordans(q, {{0, 2}, {1, 2}}), iso);
    auto lr = implication_lattice_check(c, d, iso);
    auto j = compare_json({lr.verdicts.begin(), lr.verdicts.end()}, lr.violations);
    expect(j["relations"]["Sg"] == true && j["relations"]["D"] == false && j["relations"]["S"] == false, "relations");
    expect(j["algebra"]["singularly_equivalent"] == true && j["algebra"]["isomorphic"] == false, "algebra tags");
  });
  out.emplace_back("analyze on J_3(0)+J_3(0)", [=] {
    auto e = jordans(q, {{0, 3}, {0, 3}});
    auto prof = build_profile(e);
    auto j = analyze_json(e, prof, homology_report(prof, e));
    expect(j["profile"]["M_c"] == Json::array({"x^3"}), "M_c");
    expect(j["homology"]["sg"] == Json::array({{{"rep", "x"}, {"j", 3}}}), "Sg blocks");
  });
  return out;
}

}  // namespace

std::vector<SelftestCase> run_selftest() {
  std::vector<SelftestCase> results;
  for (auto& [name, fn] : cases()) {
    SelftestCase c{name, false, {}};
    try {
      fn();
      c.passed = true;
    } catch (const Failed& f) {
      c.detail = f.what;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    results.push_back(std::move(c));
  }
  return results;
}

}  // namespace cma
