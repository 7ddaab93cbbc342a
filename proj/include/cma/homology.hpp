#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cma/profile.hpp"

namespace cma {

enum class GlDim { Zero, Two, Infinite };
const char* to_string(GlDim g);

struct BlockReport {
  Poly p;
  std::uint64_t n_f = 0;
  /// t_1 > ... > t_s
  IndexSet t;
  std::vector<std::vector<std::uint64_t>> cartan;
  mpz_class cartan_det;
  GlDim gldim = GlDim::Zero;
  bool semisimple = true;
  std::size_t simples = 0;
  std::uint64_t indec_gorenstein_projectives = 0;
};

struct SgBlock {
  Poly rep;
  std::uint64_t j = 0;
};

struct HomologyReport {
  std::vector<BlockReport> blocks;
  mpz_class total_cartan_det;
  GlDim gldim = GlDim::Zero;
  bool quasi_hereditary = true;
  /// One entry per stable category factor, grouped by class in class order.
  std::vector<SgBlock> sg;
  mpz_class dim;
  std::size_t non_semisimple_block_count = 0;
  bool cm_finite = true;
  unsigned minimal_ag_level = 1;
};

struct ConjectureWitness {
  bool cdc_applicable = false;
  bool cdc_holds = true;
  mpz_class cartan_det;
  bool cm_finite = true;
  unsigned auslander_gorenstein_level = 1;
};

BlockReport block_report(const Poly& p, const IndexSet& t);
std::vector<BlockReport> block_reports(const InvariantProfile& prof);
std::vector<SgBlock> sg_descriptor(const InvariantProfile& prof);
/// Dimension of the centralizer: sum over pairs of elementary divisors on the
/// same irreducible p of deg(p) * min(i, j).
mpz_class algebra_dimension(const ElemDivisorData& e);
/// The same dimension from the invariant factors: sum_k (2k - 1) deg d_{r-k+1}.
mpz_class algebra_dimension_from_invariant_factors(const ElemDivisorData& e);
HomologyReport homology_report(const InvariantProfile& prof, const ElemDivisorData& e);
ConjectureWitness conjecture_witnesses(const HomologyReport& rep);

/// Determinant of an integer matrix by fraction-free elimination.
mpz_class integer_determinant(const std::vector<std::vector<std::uint64_t>>& m);

}  // namespace cma
