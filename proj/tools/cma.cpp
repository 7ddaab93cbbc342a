// Command-line front end: analyze, compare, perm, oracle, selftest.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cma/json_io.hpp"
#include "cma/selftest.hpp"

using namespace cma;

namespace {

struct Common {
  std::string field = "Q";
  bool json = false;
  unsigned degree_cap = 24;
  FactorOptions factor_options() const {
    FactorOptions o;
    o.degree_cap = degree_cap;
    return o;
  }
};

std::string read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read input \"" + arg + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_string(const std::vector<std::uint64_t>& v, bool multiset) {
  std::string s = multiset ? "{{" : "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + (multiset ? "}}" : "}");
}

template <class T, class F>
std::string join(const std::vector<T>& v, F f, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + f(v[i]);
  return s;
}

std::string matrix_string(const std::vector<std::vector<std::uint64_t>>& m) {
  return "[" + join(m, [](const auto& r) { return "[" + join(r, [](auto x) { return std::to_string(x); }, ",") + "]"; }, ",") +
         "]";
}

void print_divisors(std::ostream& os, const ElemDivisorData& e) {
  os << "field " << e.ctx.name() << ", n = " << e.n << "\n";
  std::vector<std::string> items;
  for (const auto& it : e.items)
    for (unsigned m = 0; m < it.multiplicity; ++m) items.push_back(power_display(it.p, it.exponent));
  os << "elementary divisors: " << join(items, [](const std::string& s) { return s; }) << "\n";
  os << "invariant factors: " << join(e.invariant_factors, [](const Poly& p) { return p.to_string(); }) << "\n";
}

void print_profile(std::ostream& os, const InvariantProfile& prof) {
  os << "M_c = {" << join(prof.groups, [](const auto& g) { return power_display(g.p, g.n_f); }) << "}\n";
  for (const auto& g : prof.groups) {
    os << "  " << g.p.to_string() << ": P~_c = " << set_string(g.ptilde, true) << ", P_c = " << set_string(g.pset, false)
       << ", H = " << set_string(g.h(), true) << ", D = " << set_string(g.d(), true) << (g.in_I_c ? ", in I_c" : "")
       << "\n";
  }
  std::vector<std::string> gappy;
  for (auto i : prof.i_c()) gappy.push_back(prof.groups[i].p.to_string());
  os << "I_c = {" << join(gappy, [](const std::string& s) { return s; }) << "}, r_c = " << prof.r_c() << "\n";
  for (std::size_t i = 0; i < prof.classes.size(); ++i) {
    const auto& c = prof.classes[i];
    os << "  class " << i + 1 << ": Q = R[x]/(" << c.rep.to_string() << "), members {"
       << join(c.members, [&](std::size_t m) { return prof.groups[m].p.to_string(); }) << "}, D_{c," << i + 1
       << "} = " << set_string(c.d, true) << "\n";
  }
  os << "U_c = " << set_string(prof.u_c, true) << "\n";
}

void print_homology(std::ostream& os, const HomologyReport& rep) {
  for (const auto& b : rep.blocks) {
    os << "block " << power_display(b.p, b.n_f) << ": T = " << set_string(b.t, false) << ", Cartan "
       << matrix_string(b.cartan) << ", det " << b.cartan_det.get_str() << ", gldim " << to_string(b.gldim)
       << (b.semisimple ? ", semisimple" : "") << "\n";
  }
  os << "total Cartan determinant " << rep.total_cartan_det.get_str() << ", gldim " << to_string(rep.gldim)
     << ", quasi-hereditary " << (rep.quasi_hereditary ? "yes" : "no") << "\n";
  os << "singularity category: ";
  if (rep.sg.empty())
    os << "0\n";
  else
    os << join(rep.sg, [](const SgBlock& s) { return "stmod R[x]/(" + power_display(s.rep, s.j) + ")"; }, " x ") << "\n";
  os << "dim = " << rep.dim.get_str() << ", non-semisimple blocks " << rep.non_semisimple_block_count
     << ", CM-finite, 1-minimal Auslander-Gorenstein\n";
}

void print_verdicts(std::ostream& os, const std::vector<EquivVerdict>& vs, const std::vector<std::string>& violations) {
  for (const auto& v : vs)
    os << to_string(v.relation) << ": " << (v.holds ? "yes" : "no") << "  (" << v.algebra_meaning << ")\n";
  for (const auto& v : violations) os << "lattice violation: " << v << "\n";
}

std::vector<Relation> parse_relations(const std::string& s) {
  std::vector<Relation> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_relation(tok));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty relation list");
  return out;
}

// Evaluates the requested relations; the full lattice is always checked.
std::pair<std::vector<EquivVerdict>, std::vector<std::string>> evaluate(const InvariantProfile& a,
                                                                          const InvariantProfile& b, IsoOracle& iso,
                                                                          const std::vector<Relation>& rels) {
  LatticeReport lr = implication_lattice_check(a, b, iso);
  std::vector<EquivVerdict> vs;
  for (auto r : rels) vs.push_back(lr[r]);
  return {vs, lr.violations};
}

ElemDivisorData divisors_of_input(const std::string& input, const Common& c) {
  const Json j = parse_json(read_input(input));
  if (j.is_object() && j.contains("cycle_type")) {
    CycleType ct = cycle_type_from_json(j);
    FieldCtx ctx = ct.p == 0 ? FieldCtx::rationals() : FieldCtx::prime(ct.p);
    if (j.contains("field")) {
      const auto& f = j.at("field");
      if (f == "auto-splitting") ctx = splitting_context(ct);
      else if (f != "prime") ctx = field_from_json(f);
    }
    return perm_elementary_divisors(ct, ctx, c.factor_options());
  }
  return elementary_divisors(matrix_from_json(j, parse_field_spec(c.field)), c.factor_options());
}

int emit_compare(const std::vector<EquivVerdict>& vs, const std::vector<std::string>& violations, bool json) {
  if (json)
    std::cout << dump_json(compare_json(vs, violations)) << "\n";
  else
    print_verdicts(std::cout, vs, violations);
  return violations.empty() ? 0 : 4;
}

FieldCtx perm_field(const Common& c, bool field_given, bool splitting, const CycleType& a, const CycleType* b) {
  if (field_given) return parse_field_spec(c.field);
  if (splitting) return b ? splitting_context(a, *b) : splitting_context(a);
  return a.p == 0 ? FieldCtx::rationals() : FieldCtx::prime(a.p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, equivalences and homological data of centralizer matrix algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--field", c.field, "coefficient field: Q, F2, F_11^6, GF(4) or a JSON descriptor");
  app.add_flag("--json", c.json, "emit JSON");
  app.add_option("--degree-cap", c.degree_cap, "maximal degree factored over Q");

  auto* analyze = app.add_subcommand("analyze", "profile and homology report of one matrix");
  std::string input;
  analyze->add_option("-i,--input", input, "matrix JSON (file, '-' or inline)")->required();

  auto* compare = app.add_subcommand("compare", "decide the six equivalence relations for two matrices");
  std::string in_a, in_b, relations = "I,M,D,AD,S,Sg";
  std::vector<std::string> compare_inputs;
  compare->add_option("-i,--input", compare_inputs, "both matrices, given twice")->expected(0, 2);
  compare->add_option("-a,--a", in_a, "first matrix");
  compare->add_option("-b,--b", in_b, "second matrix");
  compare->add_option("--relations", relations, "comma separated subset of I,M,D,AD,S,Sg");

  auto* perm = app.add_subcommand("perm", "permutation matrices from cycle types");
  perm->require_subcommand(1);
  std::uint64_t p = 0;
  std::string parts_a, parts_b, base;
  std::uint64_t extra = 0;
  bool splitting = false, singular_parts = false;
  auto add_perm_common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "characteristic (0 or a prime)");
    sub->add_flag("--splitting", splitting, "work over the splitting field");
    sub->add_option("--field", c.field, "coefficient field");
    sub->add_flag("--json", c.json, "emit JSON");
  };
  auto* p_div = perm->add_subcommand("divisors", "elementary divisors from a cycle type");
  p_div->add_option("--a,--type", parts_a, "cycle type, e.g. 6,3")->required();
  add_perm_common(p_div);
  auto* p_prof = perm->add_subcommand("profile", "invariant profile and homology from a cycle type");
  p_prof->add_option("--a,--type", parts_a, "cycle type")->required();
  bool closed_form = false;
  p_prof->add_flag("--closed-form", closed_form, "use root-of-unity arithmetic over the splitting field");
  add_perm_common(p_prof);
  auto* p_cmp = perm->add_subcommand("compare", "compare two cycle types");
  p_cmp->add_option("--a", parts_a, "first cycle type")->required();
  p_cmp->add_option("--b", parts_b, "second cycle type")->required();
  p_cmp->add_option("--relations", relations, "relations to decide");
  p_cmp->add_flag("--singular-parts", singular_parts, "also compare the p-singular parts");
  add_perm_common(p_cmp);
  auto* p_sing = perm->add_subcommand("singular-part", "singular-part transfer of Sg-equivalence");
  p_sing->add_option("--a", parts_a, "first cycle type")->required();
  p_sing->add_option("--b", parts_b, "second cycle type")->required();
  add_perm_common(p_sing);
  auto* p_one = perm->add_subcommand("one-more", "add one cycle and test the criterion");
  p_one->add_option("--base", base, "base cycle type")->required();
  p_one->add_option("--extra", extra, "length of the added cycle")->required();
  add_perm_common(p_one);

  auto* oracle = app.add_subcommand("oracle", "seeded brute-force corpus check");
  std::uint64_t seed = 42;
  std::size_t count = 50, max_n = 6;
  oracle->add_option("--seed", seed, "master seed");
  oracle->add_option("--count", count, "number of random instances");
  oracle->add_option("--max-n", max_n, "largest matrix realized for the kernel checks");

  auto* selftest = app.add_subcommand("selftest", "golden checks for the published examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const FactorOptions opt = c.factor_options();
    if (*analyze) {
      ElemDivisorData e = divisors_of_input(input, c);
      IsoOracle iso(opt);
      InvariantProfile prof = build_profile(e, iso);
      HomologyReport rep = homology_report(prof, e);
      if (c.json) {
        std::cout << dump_json(analyze_json(e, prof, rep)) << "\n";
      } else {
        print_divisors(std::cout, e);
        print_profile(std::cout, prof);
        print_homology(std::cout, rep);
      }
      return 0;
    }
    if (*compare) {
      if (!compare_inputs.empty()) {
        if (compare_inputs.size() != 2 || !in_a.empty() || !in_b.empty())
          throw Error(ErrorCode::ParseError, "compare needs exactly two inputs");
        in_a = compare_inputs[0];
        in_b = compare_inputs[1];
      }
      if (in_a.empty() || in_b.empty()) throw Error(ErrorCode::ParseError, "compare needs two inputs (-a and -b)");
      ElemDivisorData ea = divisors_of_input(in_a, c);
      ElemDivisorData eb = divisors_of_input(in_b, c);
      IsoOracle iso(opt);
      auto [vs, viol] = evaluate(build_profile(ea, iso), build_profile(eb, iso), iso, parse_relations(relations));
      return emit_compare(vs, viol, c.json);
    }
    if (*perm) {
      bool field_given = app.get_option("--field")->count() > 0;
      for (CLI::App* s : {p_div, p_prof, p_cmp, p_sing, p_one})
        if (*s && s->get_option("--field")->count() > 0) field_given = true;
      if (*p_div || *p_prof) {
        CycleType ct{parse_parts(parts_a), p};
        validate(ct);
        FieldCtx ctx = perm_field(c, field_given, splitting || closed_form, ct, nullptr);
        ElemDivisorData e = closed_form ? closed_form_divisors(ct, ctx) : perm_elementary_divisors(ct, ctx, opt);
        if (*p_div) {
          if (c.json)
            std::cout << dump_json(elem_divisors_to_json(e)) << "\n";
          else
            print_divisors(std::cout, e);
          return 0;
        }
        IsoOracle iso(opt);
        InvariantProfile prof = build_profile(e, iso);
        HomologyReport rep = homology_report(prof, e);
        if (c.json) {
          Json j = analyze_json(e, prof, rep);
          j["cycle_type"] = cycle_type_to_json(ct);
          std::cout << dump_json(j) << "\n";
        } else {
          std::cout << "cycle type " << ct.to_string() << " at p = " << ct.p << "\n";
          print_divisors(std::cout, e);
          print_profile(std::cout, prof);
          print_homology(std::cout, rep);
        }
        return 0;
      }
      if (*p_cmp || *p_sing) {
        CycleType a{parse_parts(parts_a), p}, b{parse_parts(parts_b), p};
        validate(a);
        validate(b);
        FieldCtx ctx = perm_field(c, field_given, splitting, a, &b);
        if (*p_sing) {
          auto r = check_singular_part_transfer(a, b, ctx, opt);
          if (c.json) {
            std::cout << dump_json({{"hypothesis_met", r.hypothesis_met},
                                    {"pair_sg", r.pair_sg},
                                    {"singular_sg", r.singular_sg},
                                    {"singular_a", cycle_type_to_json(r.singular_a)},
                                    {"singular_b", cycle_type_to_json(r.singular_b)},
                                    {"status", to_string(r.status)}})
                      << "\n";
          } else {
            std::cout << "hypothesis " << (r.hypothesis_met ? "met" : "not met") << "\n"
                      << "pair Sg-equivalent: " << (r.pair_sg ? "yes" : "no") << "\n"
                      << "singular parts " << r.singular_a.to_string() << " and " << r.singular_b.to_string()
                      << " Sg-equivalent: " << (r.singular_sg ? "yes" : "no") << "\n"
                      << "status: " << to_string(r.status) << "\n";
          }
          return r.status == TransferStatus::Violated ? 4 : 0;
        }
        IsoOracle iso(opt);
        const auto rels = parse_relations(relations);
        auto [vs, viol] = evaluate(build_profile(perm_elementary_divisors(a, ctx, opt), iso),
                                   build_profile(perm_elementary_divisors(b, ctx, opt), iso), iso, rels);
        if (!singular_parts) return emit_compare(vs, viol, c.json);
        CycleType sa = regular_singular_split(a).second, sb = regular_singular_split(b).second;
        auto [svs, sviol] = evaluate(build_profile(perm_elementary_divisors(sa, ctx, opt), iso),
                                     build_profile(perm_elementary_divisors(sb, ctx, opt), iso), iso, rels);
        if (c.json) {
          std::cout << dump_json({{"pair", compare_json(vs, viol)},
                                  {"singular_parts", compare_json(svs, sviol)},
                                  {"singular_a", cycle_type_to_json(sa)},
                                  {"singular_b", cycle_type_to_json(sb)}})
                    << "\n";
        } else {
          std::cout << "pair " << a.to_string() << " vs " << b.to_string() << ":\n";
          print_verdicts(std::cout, vs, viol);
          std::cout << "singular parts " << sa.to_string() << " vs " << sb.to_string() << ":\n";
          print_verdicts(std::cout, svs, sviol);
        }
        return viol.empty() && sviol.empty() ? 0 : 4;
      }
      if (*p_one) {
        CycleType b{parse_parts(base), p};
        validate(b);
        FieldCtx ctx = perm_field(c, field_given, splitting, b, nullptr);
        auto r = check_one_more(b, extra, ctx, opt);
        if (c.json) {
          std::cout << dump_json({{"I", r.I},
                                  {"J", r.J},
                                  {"case_i", r.case_i},
                                  {"case_ii", r.case_ii},
                                  {"case_iii", r.case_iii},
                                  {"hypothesis", r.hypothesis},
                                  {"condition5", r.condition5},
                                  {"M", r.m_equivalent},
                                  {"Sg", r.sg_equivalent},
                                  {"consistent", r.consistent}})
                    << "\n";
        } else {
          std::cout << "I = {" << join(r.I, [](std::size_t i) { return std::to_string(i); }) << "}, J = "
                    << set_string(r.J, false) << "\n"
                    << "hypothesis " << (r.hypothesis ? "holds" : "fails") << "\n"
                    << "same valuation and divisibility for some base cycle: " << (r.condition5 ? "yes" : "no") << "\n"
                    << "M-equivalent: " << (r.m_equivalent ? "yes" : "no") << ", Sg-equivalent: "
                    << (r.sg_equivalent ? "yes" : "no") << "\n"
                    << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
        }
        return r.consistent ? 0 : 4;
      }
    }
    if (*oracle) {
      CorpusOptions o;
      o.seed = seed;
      o.count = count;
      o.field = parse_field_spec(app.get_option("--field")->count() ? c.field : "F2");
      o.matrix_max_n = max_n;
      CorpusReport r = corpus_check(o);
      if (c.json) {
        std::cout << dump_json(corpus_to_json(r)) << "\n";
      } else {
        std::cout << r.instances << " instances, " << r.pairs << " pairs (" << r.sg_pairs << " Sg-equivalent), "
                  << r.checks << " checks, " << r.failures << " failures\n";
        for (const auto& m : r.messages) std::cout << "  " << m << "\n";
      }
      return r.ok() ? 0 : 4;
    }
    if (*selftest) {
      auto results = run_selftest();
      std::size_t failed = 0;
      Json arr = Json::array();
      for (const auto& r : results) {
        failed += !r.passed;
        arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!c.json) std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
      }
      if (c.json)
        std::cout << dump_json({{"cases", arr}, {"failed", failed}}) << "\n";
      else
        std::cout << results.size() - failed << "/" << results.size() << " passed\n";
      return failed ? 4 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::DegreeCapExceeded: return 3;
      case ErrorCode::InvariantViolation: return 4;
      default: return 2;
    }
  }
  return 0;
}
