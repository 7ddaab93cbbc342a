#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cma/poly.hpp"

namespace cma {

struct FactorOptions {
  /// Largest squarefree degree factored over Q before DegreeCapExceeded.
  unsigned degree_cap = 24;
  /// Seed for the randomized splitting steps.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Factorization {
  FieldElem unit;
  /// Monic irreducible factors with exponents, sorted canonically.
  std::vector<std::pair<Poly, unsigned>> factors;

  /// unit * prod factor^exponent
  Poly expand(const FieldCtx& ctx) const;
};

Factorization factorize(const Poly& f, const FactorOptions& opt = {});

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and every g_i squarefree and pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

bool is_irreducible(const Poly& f, const FactorOptions& opt = {});

/// n-th cyclotomic polynomial. Throws CharacteristicDividesN over F_q when p | n.
Poly cyclotomic(unsigned n, const FieldCtx& ctx);

/// Decides R[x]/(f) ~= R[x]/(g) as R-algebras for irreducible f, g.
/// Over a finite field this is equality of degrees; over Q it asks whether g
/// acquires a root in Q[x]/(f), decided with a Trager norm.
bool quotient_algebras_isomorphic(const Poly& f, const Poly& g, const FactorOptions& opt = {});

namespace detail {
/// Monic factors of a squarefree monic polynomial over a finite field,
/// unsorted.
std::vector<Poly> factor_squarefree_finite(const Poly& f, std::uint64_t seed);
/// Monic irreducible factors over Q of a squarefree polynomial.
std::vector<Poly> factor_squarefree_rational(const Poly& f, const FactorOptions& opt);
}  // namespace detail

}  // namespace cma
