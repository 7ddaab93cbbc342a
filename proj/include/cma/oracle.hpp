#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cma/homology.hpp"
#include "cma/matforms.hpp"
#include "cma/permkit.hpp"
#include "cma/profile.hpp"

namespace cma {

/// Brute-force checks built from kernels of explicit linear maps.

struct CentralizerBasis {
  Matrix c;
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Kernel of x -> cx - xc on n x n matrices. Throws TooLarge for n > 60.
CentralizerBasis centralizer_basis(const Matrix& c);

/// dim Hom(R[x]/(a), R[x]/(b)) as the kernel of X -> C_b X - X C_a.
/// Throws InvariantViolation if it differs from deg gcd(a, b).
std::size_t hom_dim(const Poly& a, const Poly& b);

struct CartanCheck {
  IndexSet t;
  Poly f;
  std::vector<std::vector<std::uint64_t>> cartan;
  mpz_class det_formula;
  mpz_class det_direct;
  std::size_t centralizer_dim = 0;
  std::uint64_t expected_dim = 0;
  bool ok = false;
  std::string failure;
};

/// Cartan matrix of the block for f and T from Hom dimensions between the
/// companion blocks of f^{t_i}. Throws TooLarge when sum deg(f) t_i > 60.
CartanCheck verify_cartan(const IndexSet& t, const Poly& f);

/// sigma on {0..n-1} made of consecutive cycles of the given lengths.
std::vector<std::size_t> permutation_of_type(const CycleType& ct);

struct FastPathCheck {
  ElemDivisorData from_matrix;
  ElemDivisorData from_cycles;
  bool ok = false;
};

/// Throws TooLarge for n > 40.
FastPathCheck verify_perm_fastpath(const CycleType& ct, const FieldCtx& ctx);

struct RandomSpec {
  unsigned max_irreducibles = 3;
  unsigned max_exponent = 6;
  unsigned max_degree = 3;
  std::size_t max_n = 8;
};

/// A random monic irreducible of the given degree.
Poly random_irreducible(const FieldCtx& ctx, unsigned degree, std::mt19937_64& rng);
ElemDivisorData random_elem_divisors(const FieldCtx& ctx, std::mt19937_64& rng, const RandomSpec& spec = {});
/// A perturbation of e that tends to keep some relations: an isomorphic
/// substitution, a J swap, an H reordering, inserted 1-gaps, multiplicity
/// changes or an extra gap-free group.
ElemDivisorData related_elem_divisors(const ElemDivisorData& e, std::mt19937_64& rng, const RandomSpec& spec = {});
/// direct sum of companion powers, conjugated by a random invertible matrix.
Matrix realize(const ElemDivisorData& e, std::mt19937_64& rng);

/// Replaces the power-index set of the first group while leaving its
/// multiset untouched. Used as a negative control.
void corrupt_profile(InvariantProfile& prof);

std::uint64_t splitmix64(std::uint64_t x);

struct CorpusOptions {
  std::uint64_t seed = 42;
  std::size_t count = 50;
  FieldCtx field = FieldCtx::prime(2);
  RandomSpec spec;
  /// Matrix-level checks (similarity, centralizer dimension) up to this n.
  std::size_t matrix_max_n = 6;
  /// Compare instance 0 against a corrupted copy of itself.
  bool corrupt = false;
};

struct CorpusReport {
  std::size_t instances = 0;
  std::size_t pairs = 0;
  std::size_t sg_pairs = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t lattice_violations = 0;
  /// one line per failure, each naming the instance seed(s)
  std::vector<std::string> messages;
  bool ok() const { return failures == 0; }
};

/// Instance k uses seed splitmix64(seed + k), so results do not depend on
/// evaluation order. Instances come in (random, related) couples and the
/// pairwise checks cover every pair.
CorpusReport corpus_check(const CorpusOptions& opt);

}  // namespace cma
