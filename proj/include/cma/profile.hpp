#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cma/factor.hpp"
#include "cma/matforms.hpp"

namespace cma {

/// Finite set of positive integers, stored strictly decreasing.
using IndexSet = std::vector<std::uint64_t>;
/// Finite multiset of positive integers, stored ascending.
using IndexMultiset = std::vector<std::uint64_t>;

/// Sorts decreasing and removes duplicates.
IndexSet make_index_set(std::vector<std::uint64_t> v);
IndexMultiset make_multiset(std::vector<std::uint64_t> v);
IndexMultiset multiset_union(const IndexMultiset& a, const IndexMultiset& b);

/// {m1} together with m1 - mi for i >= 2.
IndexSet mset_J(const IndexSet& t);
/// Consecutive differences followed by the last element.
IndexMultiset mset_H(const IndexSet& t);
/// H with every 1 removed.
IndexMultiset mset_D(const IndexSet& t);
/// D of t without its minimum. Throws TooSmall on singletons.
IndexMultiset mset_Dprime(const IndexSet& t);
std::size_t mset_count(std::uint64_t s, const IndexMultiset& m);
/// Two smallest elements. Throws TooSmall.
IndexSet last_two(const IndexSet& t);
/// Second smallest element. Throws TooSmall.
IndexSet second_last(const IndexSet& t);

/// Data attached to one maximal elementary divisor p^{n_f}.
struct MaximalDivisorGroup {
  Poly p;
  std::uint64_t n_f = 0;
  IndexMultiset ptilde;
  IndexSet pset;
  bool in_I_c = false;
  bool reducible = false;

  IndexMultiset d() const { return mset_D(pset); }
  IndexMultiset h() const { return mset_H(pset); }
};

struct IsoClass {
  /// Canonically least member.
  Poly rep;
  /// Indices into InvariantProfile::groups.
  std::vector<std::size_t> members;
  IndexMultiset d;
};

struct InvariantProfile {
  FieldCtx ctx;
  std::size_t n = 0;
  /// One per irreducible factor of the minimal polynomial, canonical order.
  std::vector<MaximalDivisorGroup> groups;
  /// Iso classes of the groups in I_c, ordered by representative.
  std::vector<IsoClass> classes;
  IndexMultiset u_c;

  std::size_t r_c() const { return classes.size(); }
  /// Indices of groups in I_c.
  std::vector<std::size_t> i_c() const;
};

/// Caches quotient-algebra isomorphism answers between irreducibles.
class IsoOracle {
 public:
  explicit IsoOracle(FactorOptions opt = {}) : opt_(opt) {}
  bool operator()(const Poly& f, const Poly& g);
  const FactorOptions& options() const { return opt_; }

 private:
  FactorOptions opt_;
  std::vector<std::pair<std::pair<Poly, Poly>, bool>> cache_;
};

InvariantProfile build_profile(const ElemDivisorData& e, IsoOracle& iso);
InvariantProfile build_profile(const ElemDivisorData& e, const FactorOptions& opt = {});

}  // namespace cma
