#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cma/error.hpp"

namespace cma {

enum class FieldKind { Rationals, Prime, Extension };

class FieldElem;

namespace detail {
struct FieldData;
}

/// An exact coefficient field: Q, F_p, or F_p[y]/(m(y)).
///
/// Contexts are immutable and interned for the lifetime of the process, so
/// equal fields share one description and elements may hold a plain pointer
/// to it.
class FieldCtx {
 public:
  static FieldCtx rationals();
  /// Throws CompositeP unless p is prime.
  static FieldCtx prime(std::uint64_t p);
  /// `modulus` is the coefficient sequence of a monic degree-k polynomial,
  /// lowest degree first. Throws DegreeMismatch or ReducibleModulus.
  static FieldCtx extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  /// Picks an irreducible modulus by seeded random search; the seed is a
  /// function of (p, k) so repeated calls give the same context.
  static FieldCtx extension_auto(std::uint64_t p, unsigned k);

  FieldKind kind() const;
  /// 0 for Q.
  std::uint64_t characteristic() const;
  /// Extension degree over the prime field (1 for F_p, 0 for Q).
  unsigned degree() const;
  /// Extension modulus, lowest degree first; empty unless kind() == Extension.
  const std::vector<std::uint64_t>& modulus() const;
  /// Number of elements (0 for Q).
  mpz_class order() const;
  bool is_finite() const { return kind() != FieldKind::Rationals; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long v) const;
  FieldElem from_mpz(const mpz_class& v) const;
  /// Only valid over Q.
  FieldElem from_mpq(const mpq_class& v) const;
  /// Coefficient vector over F_p (lowest first); only valid for extensions.
  FieldElem from_coeffs(std::vector<std::uint64_t> coeffs) const;
  /// The class of y in F_p[y]/(m(y)). Only valid for extensions.
  FieldElem generator() const;

  /// Parses the element encoding used in JSON: "n" or "n/d" over Q, a
  /// decimal residue over F_p. Extension elements are arrays and go through
  /// from_coeffs.
  FieldElem parse(const std::string& text) const;

  /// Human readable name: "Q", "F_7", "F_11^6".
  std::string name() const;

  bool operator==(const FieldCtx& other) const;
  bool operator!=(const FieldCtx& other) const { return !(*this == other); }

  const detail::FieldData* data() const { return d_.get(); }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

class FieldElem {
 public:
  using Repr = std::variant<std::uint64_t, mpq_class, std::vector<std::uint64_t>>;

  FieldElem() = default;
  FieldElem(const detail::FieldData* f, Repr r) : f_(f), r_(std::move(r)) {}

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& b) const;
  FieldElem operator-(const FieldElem& b) const;
  FieldElem operator*(const FieldElem& b) const;
  /// Throws DivisionByZero.
  FieldElem operator/(const FieldElem& b) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem inv() const;
  FieldElem pow(const mpz_class& e) const;
  FieldElem pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }

  bool operator==(const FieldElem& b) const;
  bool operator!=(const FieldElem& b) const { return !(*this == b); }
  /// Deterministic total order used for canonical sorting (not a field order).
  bool canonical_less(const FieldElem& b) const;

  /// "n", "n/d", residue, or a polynomial in y for extension elements.
  std::string to_string() const;
  /// JSON-style encoding components: one string for Q / F_p, one string per
  /// coefficient for extensions.
  std::vector<std::string> encode() const;

  const detail::FieldData* field() const { return f_; }
  const Repr& repr() const { return r_; }
  std::uint64_t residue() const { return std::get<std::uint64_t>(r_); }
  const mpq_class& rational() const { return std::get<mpq_class>(r_); }
  const std::vector<std::uint64_t>& coeffs() const { return std::get<std::vector<std::uint64_t>>(r_); }

 private:
  const detail::FieldData* f_ = nullptr;
  Repr r_;
};

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<std::uint64_t> modulus;

  bool same_as(const FieldData& o) const {
    return kind == o.kind && p == o.p && k == o.k && modulus == o.modulus;
  }
};

// Arithmetic helpers on residues mod p and dense polynomials over F_p.
// Polynomials are coefficient vectors, lowest degree first, trimmed.
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

using RawPoly = std::vector<std::uint64_t>;
void raw_trim(RawPoly& a);
RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint64_t p);
RawPoly raw_rem(RawPoly a, const RawPoly& m, std::uint64_t p);
RawPoly raw_sub(const RawPoly& a, const RawPoly& b, std::uint64_t p);
RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p);
RawPoly raw_powmod(const RawPoly& base, const mpz_class& e, const RawPoly& m, std::uint64_t p);
/// Rabin's irreducibility test over F_p.
bool raw_is_irreducible(const RawPoly& f, std::uint64_t p);

}  // namespace detail

}  // namespace cma
