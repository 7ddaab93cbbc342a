#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cma/profile.hpp"

namespace cma {

enum class Relation { I, M, D, AD, S, Sg };
inline constexpr std::array<Relation, 6> kAllRelations{Relation::I, Relation::M, Relation::D,
                                                       Relation::AD, Relation::S, Relation::Sg};
const char* to_string(Relation r);
/// Throws ParseError on an unknown name.
Relation parse_relation(const std::string& s);

struct EquivVerdict {
  Relation relation = Relation::I;
  bool holds = false;
  /// Index pairs (a, b): group indices for I/M/D/AD/S, class indices for Sg.
  std::vector<std::pair<std::size_t, std::size_t>> witness;
  std::string algebra_meaning;
};

EquivVerdict decide_I(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide_M(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide_D(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide_AD(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide_S(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide_Sg(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);
EquivVerdict decide(Relation r, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);

/// Re-checks a positive verdict's witness directly against the definitions.
bool replay_witness(const EquivVerdict& v, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);

struct LatticeReport {
  std::array<EquivVerdict, 6> verdicts;
  /// Violated implications such as "I => M"; empty for a consistent result.
  std::vector<std::string> violations;

  const EquivVerdict& operator[](Relation r) const { return verdicts[static_cast<std::size_t>(r)]; }
};

/// Implications I=>M, M=>AD, AD=>D, D=>Sg, AD=>S, S=>Sg checked on a verdict vector.
std::vector<std::string> lattice_violations(const std::array<bool, 6>& holds);
LatticeReport implication_lattice_check(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso);

}  // namespace cma
