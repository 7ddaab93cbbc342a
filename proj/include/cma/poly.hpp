#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cma/field.hpp"

namespace cma {

/// Dense univariate polynomial over a FieldCtx, lowest degree first.
/// The zero polynomial has no coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldCtx ctx, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldCtx& ctx, const FieldElem& c);
  static Poly x(const FieldCtx& ctx);
  /// c * x^d
  static Poly monomial(const FieldCtx& ctx, const FieldElem& c, std::size_t d);
  /// Integer coefficients, lowest degree first, mapped into ctx.
  static Poly from_ints(const FieldCtx& ctx, std::initializer_list<long> coeffs);
  static Poly from_ints(const FieldCtx& ctx, const std::vector<long>& coeffs);

  const FieldCtx& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  FieldElem coeff(std::size_t i) const;
  /// Throws on the zero polynomial.
  const FieldElem& lead() const;

  /// Associated monic polynomial; the zero polynomial maps to itself.
  Poly monic() const;
  Poly derivative() const;
  FieldElem eval(const FieldElem& at) const;
  /// this(g(x))
  Poly compose(const Poly& g) const;

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator-() const;
  Poly operator*(const Poly& b) const;
  Poly operator*(const FieldElem& s) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  bool operator==(const Poly& b) const;
  bool operator!=(const Poly& b) const { return !(*this == b); }
  /// Degree first, then coefficients from the top down.
  bool canonical_less(const Poly& b) const;

  /// "x^4 - 1" style rendering in variable `var`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldCtx ctx_;
  std::vector<FieldElem> c_;
};

/// Returns (q, r) with f = q*g + r and deg r < deg g. Throws DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Exact quotient; throws InvariantViolation when g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);
Poly pow(const Poly& f, unsigned e);
/// base^e mod m
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);
FieldElem resultant(const Poly& f, const Poly& g);
/// Unique polynomial of degree < n through n points with distinct abscissae.
Poly interpolate(const FieldCtx& ctx, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

}  // namespace cma
