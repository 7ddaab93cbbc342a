#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cma/equiv.hpp"
#include "cma/matforms.hpp"
#include "cma/profile.hpp"

namespace cma {

/// Cycle type of a permutation together with the characteristic it is read in.
struct CycleType {
  std::vector<std::uint64_t> parts;
  /// 0 or a prime.
  std::uint64_t p = 0;

  std::uint64_t n() const;
  std::string to_string() const;
};

/// Throws InvalidArgument on empty parts, a zero part or a composite p.
void validate(const CycleType& ct);

/// Exponent of p in n; 0 when p = 0.
unsigned nu_p(std::uint64_t n, std::uint64_t p);
/// n with every factor p removed.
std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p);
std::uint64_t ipow(std::uint64_t b, unsigned e);

/// p-regular and p-singular parts, each padded with fixed points up to n.
std::pair<CycleType, CycleType> regular_singular_split(const CycleType& ct);

/// One elementary divisor g^{p^nu} per cycle and irreducible factor g of
/// x^{lambda'} - 1, computed from cycle lengths only.
ElemDivisorData perm_elementary_divisors(const CycleType& ct, const FieldCtx& ctx, const FactorOptions& opt = {});

/// Multiplicative order of p modulo m (m coprime to p).
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t m);
/// F_p when the order is 1, otherwise the auto extension F_{p^k}.
FieldCtx splitting_context(const CycleType& ct);
/// Same, for the least field splitting both cycle types.
FieldCtx splitting_context(const CycleType& a, const CycleType& b);

/// Elementary divisors over `ctx` (which must contain the lcm(lambda')-th
/// roots of unity) from a primitive root: each root of unity zeta of order d
/// contributes x - zeta with exponents p^{nu(lambda_i)} for d | lambda'_i.
ElemDivisorData closed_form_divisors(const CycleType& ct, const FieldCtx& ctx);
InvariantProfile closed_form_profile(const CycleType& ct);
InvariantProfile closed_form_profile(const CycleType& ct, const FieldCtx& ctx);

/// A generator of the multiplicative group of a finite field.
FieldElem primitive_element(const FieldCtx& ctx);

struct TildeSets {
  /// Group indices in the class whose power-index set contains 1.
  std::vector<std::size_t> members;
  IndexMultiset d_tilde;
};
TildeSets tilde_sets(const InvariantProfile& prof, std::size_t class_index);

enum class TransferStatus { Confirmed, Violated, HypothesisNotMet };
const char* to_string(TransferStatus s);

struct SingularTransferReport {
  bool hypothesis_met = false;
  bool pair_sg = false;
  bool singular_sg = false;
  CycleType singular_a, singular_b;
  TransferStatus status = TransferStatus::HypothesisNotMet;
};

/// Decides Sg for (a, b) and for their singular parts over ctx.
SingularTransferReport check_singular_part_transfer(const CycleType& a, const CycleType& b, const FieldCtx& ctx,
                                                    const FactorOptions& opt = {});

struct OneMoreReport {
  /// 1-based indices j of base parts with lambda'_{extra} | lambda'_j.
  std::vector<std::size_t> I;
  IndexSet J;
  bool case_i = false, case_ii = false, case_iii = false;
  bool hypothesis = false;
  bool condition5 = false;
  bool m_equivalent = false;
  bool sg_equivalent = false;
  /// false only when the hypothesis holds and the three verdicts disagree.
  bool consistent = true;
};

OneMoreReport check_one_more(const CycleType& base, std::uint64_t extra, const FieldCtx& ctx,
                             const FactorOptions& opt = {});

}  // namespace cma
