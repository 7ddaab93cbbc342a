#include "cma/equiv.hpp"

#include <algorithm>
#include <functional>

namespace cma {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::I: return "I";
    case Relation::M: return "M";
    case Relation::D: return "D";
    case Relation::AD: return "AD";
    case Relation::S: return "S";
    case Relation::Sg: return "Sg";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  for (Relation r : kAllRelations) {
    if (s == to_string(r)) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown relation '" + s + "'");
}

namespace {

const char* meaning(Relation r) {
  switch (r) {
    case Relation::I: return "algebras isomorphic";
    case Relation::Sg: return "singularly equivalent";
    case Relation::M: return "Morita equivalent (cited companion result)";
    case Relation::D: return "derived equivalent (cited companion result)";
    case Relation::AD: return "no algebra-level claim (cited companion relation)";
    case Relation::S: return "stably equivalent (cited companion result)";
  }
  return "";
}

void require_same_field(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.ctx != b.ctx) throw Error(ErrorCode::CtxMismatch, "profiles over different fields");
}

// Class ids for the irreducibles of both profiles under quotient isomorphism.
struct JointClasses {
  std::vector<std::size_t> a, b;
};

JointClasses joint_classes(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  std::vector<Poly> reps;
  auto classify = [&](const Poly& p) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (iso(reps[i], p)) return i;
    }
    reps.push_back(p);
    return reps.size() - 1;
  };
  JointClasses out;
  for (const auto& g : a.groups) out.a.push_back(classify(g.p));
  for (const auto& g : b.groups) out.b.push_back(classify(g.p));
  return out;
}

using Key = std::pair<std::size_t, std::vector<std::uint64_t>>;

// A bijection preserving keys exists iff the key multisets agree; the
// witness pairs equal keys in sorted order.
EquivVerdict signature_match(Relation rel, const std::vector<Key>& ka, const std::vector<Key>& kb) {
  EquivVerdict v{rel, false, {}, meaning(rel)};
  if (ka.size() != kb.size()) return v;
  std::vector<std::size_t> ia(ka.size()), ib(kb.size());
  for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = ib[i] = i;
  std::sort(ia.begin(), ia.end(), [&](auto x, auto y) { return ka[x] < ka[y]; });
  std::sort(ib.begin(), ib.end(), [&](auto x, auto y) { return kb[x] < kb[y]; });
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ka[ia[i]] != kb[ib[i]]) return v;
  }
  for (std::size_t i = 0; i < ia.size(); ++i) v.witness.emplace_back(ia[i], ib[i]);
  std::sort(v.witness.begin(), v.witness.end());
  v.holds = true;
  return v;
}

EquivVerdict by_signature(Relation rel, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso,
                          const std::function<std::vector<std::uint64_t>(const MaximalDivisorGroup&)>& data) {
  require_same_field(a, b);
  const JointClasses jc = joint_classes(a, b, iso);
  std::vector<Key> ka, kb;
  for (std::size_t i = 0; i < a.groups.size(); ++i) ka.emplace_back(jc.a[i], data(a.groups[i]));
  for (std::size_t i = 0; i < b.groups.size(); ++i) kb.emplace_back(jc.b[i], data(b.groups[i]));
  return signature_match(rel, ka, kb);
}

bool p_or_j(const IndexSet& pa, const IndexSet& pb) { return pa == pb || pa == mset_J(pb); }

// Perfect matching between the selected groups by augmenting paths.
EquivVerdict by_matching(Relation rel, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso,
                         bool reducible_only) {
  require_same_field(a, b);
  EquivVerdict v{rel, false, {}, meaning(rel)};
  const JointClasses jc = joint_classes(a, b, iso);
  std::vector<std::size_t> la, lb;
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    if (!reducible_only || a.groups[i].reducible) la.push_back(i);
  }
  for (std::size_t i = 0; i < b.groups.size(); ++i) {
    if (!reducible_only || b.groups[i].reducible) lb.push_back(i);
  }
  if (la.size() != lb.size()) return v;
  std::vector<std::vector<std::size_t>> adj(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    for (std::size_t j = 0; j < lb.size(); ++j) {
      if (jc.a[la[i]] == jc.b[lb[j]] && p_or_j(a.groups[la[i]].pset, b.groups[lb[j]].pset)) adj[i].push_back(j);
    }
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_b(lb.size(), kNone);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (match_b[j] == kNone || augment(match_b[j])) {
        match_b[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < la.size(); ++i) {
    seen.assign(lb.size(), false);
    if (!augment(i)) return v;
  }
  for (std::size_t j = 0; j < lb.size(); ++j) v.witness.emplace_back(la[match_b[j]], lb[j]);
  std::sort(v.witness.begin(), v.witness.end());
  v.holds = true;
  return v;
}

}  // namespace

EquivVerdict decide_I(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  return by_signature(Relation::I, a, b, iso, [](const MaximalDivisorGroup& g) { return g.ptilde; });
}

EquivVerdict decide_M(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  return by_signature(Relation::M, a, b, iso, [](const MaximalDivisorGroup& g) { return g.pset; });
}

EquivVerdict decide_D(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  return by_signature(Relation::D, a, b, iso, [](const MaximalDivisorGroup& g) { return g.h(); });
}

EquivVerdict decide_AD(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  return by_matching(Relation::AD, a, b, iso, false);
}

EquivVerdict decide_S(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  return by_matching(Relation::S, a, b, iso, true);
}

EquivVerdict decide_Sg(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  require_same_field(a, b);
  EquivVerdict v{Relation::Sg, false, {}, meaning(Relation::Sg)};
  if (a.r_c() != b.r_c()) return v;
  std::vector<bool> used(b.r_c(), false);
  for (std::size_t i = 0; i < a.r_c(); ++i) {
    // classes of b are pairwise non-isomorphic, so at most one candidate
    std::size_t hit = b.r_c();
    for (std::size_t j = 0; j < b.r_c(); ++j) {
      if (!used[j] && iso(a.classes[i].rep, b.classes[j].rep)) {
        hit = j;
        break;
      }
    }
    if (hit == b.r_c() || a.classes[i].d != b.classes[hit].d) {
      v.witness.clear();
      return v;
    }
    used[hit] = true;
    v.witness.emplace_back(i, hit);
  }
  v.holds = true;
  return v;
}

EquivVerdict decide(Relation r, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  switch (r) {
    case Relation::I: return decide_I(a, b, iso);
    case Relation::M: return decide_M(a, b, iso);
    case Relation::D: return decide_D(a, b, iso);
    case Relation::AD: return decide_AD(a, b, iso);
    case Relation::S: return decide_S(a, b, iso);
    case Relation::Sg: return decide_Sg(a, b, iso);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown relation");
}

bool replay_witness(const EquivVerdict& v, const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  if (!v.holds) return false;
  if (a.ctx != b.ctx) return false;
  std::size_t na = 0, nb = 0;
  std::function<bool(std::size_t, std::size_t)> ok;
  if (v.relation == Relation::Sg) {
    na = a.r_c();
    nb = b.r_c();
    ok = [&](std::size_t i, std::size_t j) {
      return iso(a.classes[i].rep, b.classes[j].rep) && a.classes[i].d == b.classes[j].d;
    };
  } else {
    const bool red = v.relation == Relation::S;
    auto count = [&](const InvariantProfile& p) {
      std::size_t c = 0;
      for (const auto& g : p.groups) c += (!red || g.n_f >= 2) ? 1 : 0;
      return c;
    };
    na = count(a);
    nb = count(b);
    ok = [&, red](std::size_t i, std::size_t j) {
      const auto& ga = a.groups[i];
      const auto& gb = b.groups[j];
      if (red && (ga.n_f < 2 || gb.n_f < 2)) return false;
      // R[x]/(p^i) ~= R[x]/(q^j) needs i = j and R[x]/(p) ~= R[x]/(q)
      if (ga.n_f != gb.n_f || !iso(ga.p, gb.p)) return false;
      const IndexSet pa = make_index_set(ga.ptilde);
      const IndexSet pb = make_index_set(gb.ptilde);
      switch (v.relation) {
        case Relation::I: return ga.ptilde == gb.ptilde;
        case Relation::M: return pa == pb;
        case Relation::D: return mset_H(pa) == mset_H(pb);
        default: return p_or_j(pa, pb);
      }
    };
  }
  if (na != nb || v.witness.size() != na) return false;
  std::vector<bool> used_a(v.relation == Relation::Sg ? a.r_c() : a.groups.size(), false);
  std::vector<bool> used_b(v.relation == Relation::Sg ? b.r_c() : b.groups.size(), false);
  for (const auto& [i, j] : v.witness) {
    if (i >= used_a.size() || j >= used_b.size() || used_a[i] || used_b[j]) return false;
    used_a[i] = used_b[j] = true;
    if (!ok(i, j)) return false;
  }
  return true;
}

std::vector<std::string> lattice_violations(const std::array<bool, 6>& h) {
  auto at = [&](Relation r) { return h[static_cast<std::size_t>(r)]; };
  const std::pair<Relation, Relation> edges[] = {{Relation::I, Relation::M},  {Relation::M, Relation::AD},
                                                 {Relation::AD, Relation::D}, {Relation::D, Relation::Sg},
                                                 {Relation::AD, Relation::S}, {Relation::S, Relation::Sg}};
  std::vector<std::string> out;
  for (const auto& [from, to] : edges) {
    if (at(from) && !at(to)) out.push_back(std::string(to_string(from)) + " => " + to_string(to));
  }
  return out;
}

LatticeReport implication_lattice_check(const InvariantProfile& a, const InvariantProfile& b, IsoOracle& iso) {
  LatticeReport rep;
  std::array<bool, 6> holds{};
  for (std::size_t i = 0; i < kAllRelations.size(); ++i) {
    rep.verdicts[i] = decide(kAllRelations[i], a, b, iso);
    holds[i] = rep.verdicts[i].holds;
    if (holds[i] && !replay_witness(rep.verdicts[i], a, b, iso))
      rep.violations.push_back(std::string("witness replay failed for ") + to_string(kAllRelations[i]));
  }
  auto v = lattice_violations(holds);
  rep.violations.insert(rep.violations.end(), v.begin(), v.end());
  return rep;
}

}  // namespace cma
