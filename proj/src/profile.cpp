#include "cma/profile.hpp"

#include <algorithm>
#include <functional>

namespace cma {

IndexSet make_index_set(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (auto x : v) {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "index sets hold positive integers");
  }
  return v;
}

IndexMultiset make_multiset(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

IndexMultiset multiset_union(const IndexMultiset& a, const IndexMultiset& b) {
  IndexMultiset out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {
void require_nonempty(const IndexSet& t) {
  if (t.empty()) throw Error(ErrorCode::TooSmall, "empty index set");
}
void require_two(const IndexSet& t) {
  if (t.size() < 2) throw Error(ErrorCode::TooSmall, "index set needs at least two elements");
}
}  // namespace

IndexSet mset_J(const IndexSet& t) {
  require_nonempty(t);
  std::vector<std::uint64_t> out{t[0]};
  for (std::size_t i = 1; i < t.size(); ++i) out.push_back(t[0] - t[i]);
  return make_index_set(std::move(out));
}

IndexMultiset mset_H(const IndexSet& t) {
  require_nonempty(t);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) out.push_back(t[i] - t[i + 1]);
  out.push_back(t.back());
  return make_multiset(std::move(out));
}

IndexMultiset mset_D(const IndexSet& t) {
  IndexMultiset h = mset_H(t);
  h.erase(std::remove(h.begin(), h.end(), 1u), h.end());
  return h;
}

IndexMultiset mset_Dprime(const IndexSet& t) {
  require_two(t);
  return mset_D(IndexSet(t.begin(), t.end() - 1));
}

std::size_t mset_count(std::uint64_t s, const IndexMultiset& m) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), s));
}

IndexSet last_two(const IndexSet& t) {
  require_two(t);
  return {t[t.size() - 2], t.back()};
}

IndexSet second_last(const IndexSet& t) {
  require_two(t);
  return {t[t.size() - 2]};
}

std::vector<std::size_t> InvariantProfile::i_c() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].in_I_c) out.push_back(i);
  }
  return out;
}

bool IsoOracle::operator()(const Poly& f, const Poly& g) {
  if (f.ctx() != g.ctx()) throw Error(ErrorCode::CtxMismatch, "isomorphism test across fields");
  if (f.degree() != g.degree()) return false;
  if (f.ctx().is_finite() || f == g) return true;
  for (const auto& [key, ans] : cache_) {
    if ((key.first == f && key.second == g) || (key.first == g && key.second == f)) return ans;
  }
  const bool ans = quotient_algebras_isomorphic(f, g, opt_);
  cache_.push_back({{f, g}, ans});
  return ans;
}

InvariantProfile build_profile(const ElemDivisorData& e, IsoOracle& iso) {
  InvariantProfile prof{e.ctx, e.n, {}, {}, {}};
  for (const auto& it : e.items) {
    if (prof.groups.empty() || prof.groups.back().p != it.p) {
      prof.groups.push_back(MaximalDivisorGroup{it.p, 0, {}, {}, false, false});
    }
    auto& g = prof.groups.back();
    for (unsigned m = 0; m < it.multiplicity; ++m) g.ptilde.push_back(it.exponent);
  }
  for (auto& g : prof.groups) {
    g.ptilde = make_multiset(std::move(g.ptilde));
    g.pset = make_index_set(g.ptilde);
    g.n_f = g.pset.front();
    g.in_I_c = g.pset.size() != g.n_f;
    g.reducible = g.n_f >= 2;
    prof.u_c = multiset_union(prof.u_c, g.d());
  }
  // groups are already in canonical order, so the first member of each
  // class is its canonical representative
  for (std::size_t i = 0; i < prof.groups.size(); ++i) {
    const auto& g = prof.groups[i];
    if (!g.in_I_c) continue;
    auto cls = std::find_if(prof.classes.begin(), prof.classes.end(),
                            [&](const IsoClass& c) { return iso(c.rep, g.p); });
    if (cls == prof.classes.end()) {
      prof.classes.push_back({g.p, {}, {}});
      cls = prof.classes.end() - 1;
    }
    cls->members.push_back(i);
    cls->d = multiset_union(cls->d, g.d());
  }
  std::sort(prof.classes.begin(), prof.classes.end(),
            [](const IsoClass& a, const IsoClass& b) { return a.rep.canonical_less(b.rep); });
  return prof;
}

InvariantProfile build_profile(const ElemDivisorData& e, const FactorOptions& opt) {
  IsoOracle iso(opt);
  return build_profile(e, iso);
}

}  // namespace cma
