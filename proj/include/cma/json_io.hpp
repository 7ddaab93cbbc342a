#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cma/equiv.hpp"
#include "cma/homology.hpp"
#include "cma/matforms.hpp"
#include "cma/oracle.hpp"
#include "cma/permkit.hpp"
#include "cma/profile.hpp"

namespace cma {

/// Keys are kept sorted, so dump -> parse -> dump is the identity.
using Json = nlohmann::json;

/// Throws ParseError on malformed text.
Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

/// {"kind":"Q"} | {"kind":"Fp","p":2} | {"kind":"Fq","p":11,"k":6[,"modulus":[...]]}
FieldCtx field_from_json(const Json& j);
Json field_to_json(const FieldCtx& ctx);
/// "Q", "F2", "F_2", "F11^6", "F_11^6", "GF(4)" or a JSON descriptor.
FieldCtx parse_field_spec(const std::string& text);

FieldElem elem_from_json(const FieldCtx& ctx, const Json& j);
Json elem_to_json(const FieldElem& e);
/// {"coeffs":[...]} or a bare array, lowest degree first.
Poly poly_from_json(const FieldCtx& ctx, const Json& j);
Json poly_to_json(const Poly& p);
/// "x^4", "(x + 1)^2"
std::string power_display(const Poly& p, std::uint64_t e);

/// {"field":..., "matrix":[[...]]} or {"field":..., "construct":{...}}.
/// `fallback` is used when the document has no "field".
Matrix matrix_from_json(const Json& j, const FieldCtx& fallback);
/// jordan, companion, direct_sum, conjugate, permutation or matrix nodes.
Matrix construct_from_json(const FieldCtx& ctx, const Json& j);
Json matrix_to_json(const Matrix& m);

/// "6,3" or "[6,3]"
std::vector<std::uint64_t> parse_parts(const std::string& text);
/// {"cycle_type":[6,3],"p":2}
CycleType cycle_type_from_json(const Json& j);
Json cycle_type_to_json(const CycleType& ct);

Json elem_divisors_to_json(const ElemDivisorData& e);
Json profile_to_json(const InvariantProfile& prof);
Json homology_to_json(const HomologyReport& rep);
/// The `analyze` document.
Json analyze_json(const ElemDivisorData& e, const InvariantProfile& prof, const HomologyReport& rep);
/// The `compare` document for the evaluated relations.
Json compare_json(const std::vector<EquivVerdict>& verdicts, const std::vector<std::string>& violations);
Json corpus_to_json(const CorpusReport& rep);
Json mpz_to_json(const mpz_class& v);

}  // namespace cma
