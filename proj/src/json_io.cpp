#include "cma/json_io.hpp"

#include <algorithm>
#include <regex>

namespace cma {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) return std::stoull(s);
  }
  parse_error(std::string("expected a nonnegative integer for ") + what);
}

std::string elem_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  parse_error("field elements are strings or integers");
}

Json index_array(const std::vector<std::uint64_t>& v) { return Json(v); }

Json poly_names(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2); }

FieldCtx field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  const std::string kind = require(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "Q") return FieldCtx::rationals();
  if (kind == "Fp") return FieldCtx::prime(as_u64(require(j, "p"), "p"));
  if (kind == "Fq") {
    const std::uint64_t p = as_u64(require(j, "p"), "p");
    const auto k = static_cast<unsigned>(as_u64(require(j, "k"), "k"));
    if (!j.contains("modulus")) return k == 1 ? FieldCtx::prime(p) : FieldCtx::extension_auto(p, k);
    std::vector<std::uint64_t> m;
    for (const auto& c : j.at("modulus")) m.push_back(as_u64(c, "modulus coefficient"));
    return FieldCtx::extension(p, k, m);
  }
  parse_error("unknown field kind");
}

Json field_to_json(const FieldCtx& ctx) {
  switch (ctx.kind()) {
    case FieldKind::Rationals: return {{"kind", "Q"}};
    case FieldKind::Prime: return {{"kind", "Fp"}, {"p", ctx.characteristic()}};
    case FieldKind::Extension: {
      Json m = Json::array();
      for (auto c : ctx.modulus()) m.push_back(std::to_string(c));
      return {{"kind", "Fq"}, {"p", ctx.characteristic()}, {"k", ctx.degree()}, {"modulus", m}};
    }
  }
  return {};
}

FieldCtx parse_field_spec(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) parse_error("empty field descriptor");
  if (s.front() == '{') return field_from_json(parse_json(s));
  if (s == "Q" || s == "QQ") return FieldCtx::rationals();
  static const std::regex fq(R"((?:F_?|GF\()(\d+)(?:\^(\d+))?\)?)");
  std::smatch m;
  if (!std::regex_match(s, m, fq)) parse_error("unrecognized field \"" + text + "\"");
  const std::uint64_t base = std::stoull(m[1].str());
  if (s.rfind("GF(", 0) == 0 && !m[2].matched) {
    // GF(q) with q a prime power
    for (std::uint64_t p = 2; p <= base; ++p) {
      if (base % p) continue;
      unsigned k = 0;
      std::uint64_t q = base;
      while (q % p == 0) {
        q /= p;
        ++k;
      }
      if (q != 1) parse_error("GF order must be a prime power");
      return k == 1 ? FieldCtx::prime(p) : FieldCtx::extension_auto(p, k);
    }
    parse_error("GF order must be a prime power");
  }
  const unsigned k = m[2].matched ? static_cast<unsigned>(std::stoul(m[2].str())) : 1;
  return k == 1 ? FieldCtx::prime(base) : FieldCtx::extension_auto(base, k);
}

FieldElem elem_from_json(const FieldCtx& ctx, const Json& j) {
  if (ctx.kind() == FieldKind::Extension) {
    if (!j.is_array()) return ctx.parse(elem_text(j));
    std::vector<std::uint64_t> c;
    for (const auto& x : j) {
      const FieldElem r = FieldCtx::prime(ctx.characteristic()).parse(elem_text(x));
      c.push_back(r.residue());
    }
    if (c.size() > ctx.degree()) parse_error("too many extension coefficients");
    c.resize(ctx.degree(), 0);
    return ctx.from_coeffs(std::move(c));
  }
  try {
    return ctx.parse(elem_text(j));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) throw;
    parse_error(e.what());
  }
}

Json elem_to_json(const FieldElem& e) {
  auto parts = e.encode();
  if (std::holds_alternative<std::vector<std::uint64_t>>(e.repr())) return Json(parts);
  return parts.front();
}

Poly poly_from_json(const FieldCtx& ctx, const Json& j) {
  const Json& arr = j.is_object() ? require(j, "coeffs") : j;
  if (!arr.is_array()) parse_error("polynomial coefficients must be an array");
  std::vector<FieldElem> c;
  for (const auto& x : arr) c.push_back(elem_from_json(ctx, x));
  return Poly(ctx, std::move(c));
}

Json poly_to_json(const Poly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(elem_to_json(x));
  return {{"coeffs", c}, {"display", p.to_string()}};
}

std::string power_display(const Poly& p, std::uint64_t e) {
  const std::string s = p.to_string();
  if (e == 1) return s;
  const bool bare = s.find_first_of(" +-") == std::string::npos;
  return (bare ? s : "(" + s + ")") + "^" + std::to_string(e);
}

Matrix construct_from_json(const FieldCtx& ctx, const Json& j) {
  if (j.is_array()) {
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& r : j) {
      if (!r.is_array()) parse_error("matrix rows must be arrays");
      std::vector<FieldElem> row;
      for (const auto& x : r) row.push_back(elem_from_json(ctx, x));
      rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_error("empty matrix");
    for (const auto& r : rows)
      if (r.size() != rows.size()) parse_error("matrix must be square");
    return Matrix(ctx, std::move(rows));
  }
  if (!j.is_object() || j.size() != 1) parse_error("a constructor is an object with exactly one key");
  const auto& [key, val] = *j.items().begin();
  if (key == "matrix") return construct_from_json(ctx, val);
  if (key == "jordan") {
    const FieldElem eig = elem_from_json(ctx, val.contains("eigen") ? val.at("eigen") : Json("0"));
    const auto size = as_u64(require(val, "size"), "size");
    if (size == 0) parse_error("Jordan blocks have positive size");
    return jordan(ctx, eig, size);
  }
  if (key == "companion") {
    const Poly g = poly_from_json(ctx, val.is_object() ? require(val, "poly") : val);
    const unsigned power = val.is_object() && val.contains("power") ? static_cast<unsigned>(as_u64(val.at("power"), "power")) : 1;
    if (power == 0) parse_error("companion power must be positive");
    return power == 1 ? companion(g) : companion_power(g, power);
  }
  if (key == "direct_sum") {
    if (!val.is_array() || val.empty()) parse_error("direct_sum takes a nonempty array");
    std::vector<Matrix> blocks;
    for (const auto& b : val) blocks.push_back(construct_from_json(ctx, b));
    return direct_sum(blocks);
  }
  if (key == "conjugate") {
    return conjugate(construct_from_json(ctx, require(val, "of")), construct_from_json(ctx, require(val, "by")));
  }
  if (key == "permutation") {
    std::vector<std::size_t> sigma;
    if (val.is_object()) {
      CycleType ct{{}, ctx.characteristic()};
      for (const auto& x : require(val, "cycle_type")) ct.parts.push_back(as_u64(x, "cycle length"));
      validate(ct);
      sigma = permutation_of_type(ct);
    } else {
      for (const auto& x : val) sigma.push_back(as_u64(x, "image"));
    }
    std::vector<bool> seen(sigma.size());
    for (auto s : sigma) {
      if (s >= sigma.size() || seen[s]) parse_error("not a permutation");
      seen[s] = true;
    }
    return permutation_matrix(ctx, sigma);
  }
  parse_error("unknown constructor \"" + key + "\"");
}

Matrix matrix_from_json(const Json& j, const FieldCtx& fallback) {
  if (j.is_array()) return construct_from_json(fallback, j);
  const FieldCtx ctx = j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : fallback;
  if (j.is_object() && j.contains("matrix")) return construct_from_json(ctx, j.at("matrix"));
  if (j.is_object() && j.contains("construct")) return construct_from_json(ctx, j.at("construct"));
  return construct_from_json(ctx, j);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(elem_to_json(m(i, k)));
    rows.push_back(r);
  }
  return {{"field", field_to_json(m.ctx())}, {"matrix", rows}};
}

std::vector<std::uint64_t> parse_parts(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) parse_error("bad cycle type \"" + text + "\"");
    out.push_back(std::stoull(tok));
    pos = next + 1;
  }
  return out;
}

CycleType cycle_type_from_json(const Json& j) {
  CycleType ct;
  for (const auto& x : require(j, "cycle_type")) ct.parts.push_back(as_u64(x, "cycle length"));
  ct.p = j.contains("p") ? as_u64(j.at("p"), "p") : 0;
  validate(ct);
  return ct;
}

Json cycle_type_to_json(const CycleType& ct) { return {{"cycle_type", ct.parts}, {"p", ct.p}}; }

Json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json elem_divisors_to_json(const ElemDivisorData& e) {
  Json items = Json::array();
  for (const auto& it : e.items) {
    items.push_back({{"p", it.p.to_string()},
                     {"exponent", it.exponent},
                     {"multiplicity", it.multiplicity},
                     {"divisor", power_display(it.p, it.exponent)}});
  }
  return {{"field", field_to_json(e.ctx)},
          {"n", e.n},
          {"elementary_divisors", items},
          {"invariant_factors", poly_names(e.invariant_factors)},
          {"minimal_polynomial", e.minimal_polynomial().to_string()}};
}

Json profile_to_json(const InvariantProfile& prof) {
  Json groups = Json::array(), m_c = Json::array(), r_c = Json::array(), i_c = Json::array();
  for (const auto& g : prof.groups) {
    groups.push_back({{"p", g.p.to_string()},
                      {"degree", g.p.degree()},
                      {"n_f", g.n_f},
                      {"P_tilde", index_array(g.ptilde)},
                      {"P", index_array(g.pset)},
                      {"H", index_array(g.h())},
                      {"D", index_array(g.d())},
                      {"in_I_c", g.in_I_c},
                      {"reducible", g.reducible}});
    m_c.push_back(power_display(g.p, g.n_f));
    if (g.reducible) r_c.push_back(power_display(g.p, g.n_f));
    if (g.in_I_c) i_c.push_back(g.p.to_string());
  }
  Json classes = Json::array();
  for (const auto& c : prof.classes) {
    Json members = Json::array();
    for (auto m : c.members) members.push_back(prof.groups[m].p.to_string());
    classes.push_back({{"rep", c.rep.to_string()}, {"degree", c.rep.degree()}, {"members", members}, {"D", index_array(c.d)}});
  }
  return {{"field", field_to_json(prof.ctx)},
          {"n", prof.n},
          {"groups", groups},
          {"M_c", m_c},
          {"R_c", r_c},
          {"I_c", i_c},
          {"classes", classes},
          {"r_c", prof.r_c()},
          {"U_c", index_array(prof.u_c)}};
}

Json homology_to_json(const HomologyReport& rep) {
  Json blocks = Json::array();
  for (const auto& b : rep.blocks) {
    blocks.push_back({{"p", b.p.to_string()},
                      {"n_f", b.n_f},
                      {"T", index_array(b.t)},
                      {"cartan", b.cartan},
                      {"cartan_det", mpz_to_json(b.cartan_det)},
                      {"gldim", to_string(b.gldim)},
                      {"semisimple", b.semisimple},
                      {"simples", b.simples},
                      {"indec_gorenstein_projectives", b.indec_gorenstein_projectives}});
  }
  Json sg = Json::array();
  for (const auto& s : rep.sg) sg.push_back({{"rep", s.rep.to_string()}, {"j", s.j}});
  const ConjectureWitness w = conjecture_witnesses(rep);
  return {{"blocks", blocks},
          {"total_cartan_det", mpz_to_json(rep.total_cartan_det)},
          {"gldim", to_string(rep.gldim)},
          {"quasi_hereditary", rep.quasi_hereditary},
          {"sg", sg},
          {"dim", mpz_to_json(rep.dim)},
          {"non_semisimple_block_count", rep.non_semisimple_block_count},
          {"cm_finite", rep.cm_finite},
          {"minimal_ag_level", rep.minimal_ag_level},
          {"conjectures",
           {{"cdc_applicable", w.cdc_applicable},
            {"cdc_holds", w.cdc_holds},
            {"cartan_det", mpz_to_json(w.cartan_det)},
            {"cm_finite", w.cm_finite},
            {"auslander_gorenstein_level", w.auslander_gorenstein_level}}}};
}

Json analyze_json(const ElemDivisorData& e, const InvariantProfile& prof, const HomologyReport& rep) {
  return {{"divisors", elem_divisors_to_json(e)}, {"profile", profile_to_json(prof)}, {"homology", homology_to_json(rep)}};
}

Json compare_json(const std::vector<EquivVerdict>& verdicts, const std::vector<std::string>& violations) {
  Json rel = Json::object(), wit = Json::object(), meaning = Json::object(), algebra = Json::object();
  for (const auto& v : verdicts) {
    const std::string name = to_string(v.relation);
    rel[name] = v.holds;
    meaning[name] = v.algebra_meaning;
    if (v.holds) {
      Json w = Json::array();
      for (auto [a, b] : v.witness) w.push_back({a, b});
      wit[name] = w;
    }
    if (v.relation == Relation::I) algebra["isomorphic"] = v.holds;
    if (v.relation == Relation::Sg) algebra["singularly_equivalent"] = v.holds;
  }
  return {{"relations", rel}, {"witnesses", wit}, {"meanings", meaning}, {"algebra", algebra}, {"violations", violations}};
}

Json corpus_to_json(const CorpusReport& rep) {
  return {{"instances", rep.instances}, {"pairs", rep.pairs},       {"sg_pairs", rep.sg_pairs},
          {"checks", rep.checks},       {"failures", rep.failures}, {"lattice_violations", rep.lattice_violations},
          {"messages", rep.messages},   {"ok", rep.ok()}};
}

}  // namespace cma
