#pragma once

#include <cstddef>
#include <vector>

#include "cma/factor.hpp"
#include "cma/matrix.hpp"
#include "cma/poly.hpp"

namespace cma {

/// One entry of the elementary-divisor multiset: p^exponent, `multiplicity`
/// times.
struct ElementaryDivisor {
  Poly p;
  unsigned exponent = 0;
  unsigned multiplicity = 0;
};

/// The multiset of elementary divisors of a matrix together with its
/// invariant factor chain d_1 | d_2 | ... | d_r.
struct ElemDivisorData {
  FieldCtx ctx;
  std::size_t n = 0;
  /// Sorted by irreducible (canonical order), then by exponent descending.
  std::vector<ElementaryDivisor> items;
  std::vector<Poly> invariant_factors;

  /// Distinct irreducibles in canonical order.
  std::vector<Poly> irreducibles() const;
  /// Minimal polynomial (the last invariant factor).
  Poly minimal_polynomial() const;
};

/// Normalizes items (merging duplicates, dropping zero multiplicities),
/// recomputes n and the invariant factors.
ElemDivisorData make_elem_divisor_data(const FieldCtx& ctx, std::vector<ElementaryDivisor> items);

bool operator==(const ElemDivisorData& a, const ElemDivisorData& b);
inline bool operator!=(const ElemDivisorData& a, const ElemDivisorData& b) { return !(a == b); }

/// g(c) for a square matrix c.
Matrix poly_eval(const Poly& g, const Matrix& c);

/// Least common multiple of the Krylov annihilators of the standard basis.
Poly minimal_polynomial(const Matrix& c);

/// Elementary divisors from nullity jumps of p(c)^j for each irreducible
/// factor p of the minimal polynomial.
ElemDivisorData elementary_divisors(const Matrix& c, const FactorOptions& opt = {});

// Constructors.
Matrix jordan(const FieldCtx& ctx, const FieldElem& eigen, std::size_t size);
/// Throws NotMonic.
Matrix companion(const Poly& g);
Matrix companion_power(const Poly& f, unsigned k);
Matrix direct_sum(const std::vector<Matrix>& blocks);
/// g * c * g^-1; throws NotInvertible.
Matrix conjugate(const Matrix& c, const Matrix& g);
/// Permutation matrix sum_i e_{i, sigma(i)} for a 0-based permutation.
Matrix permutation_matrix(const FieldCtx& ctx, const std::vector<std::size_t>& sigma);

}  // namespace cma
