// Factorization over F_q: distinct-degree splitting followed by
// Cantor-Zassenhaus equal-degree splitting.

#include <random>

#include "cma/factor.hpp"

namespace cma::detail {

namespace {

Poly random_poly(const FieldCtx& ctx, int below_degree, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  c.reserve(static_cast<std::size_t>(below_degree));
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.characteristic() - 1);
  for (int i = 0; i < below_degree; ++i) {
    if (ctx.kind() == FieldKind::Extension) {
      std::vector<std::uint64_t> v(ctx.degree());
      for (auto& x : v) x = dist(rng);
      c.push_back(ctx.from_coeffs(std::move(v)));
    } else {
      c.push_back(ctx.from_mpz(mpz_class(static_cast<unsigned long>(dist(rng)))));
    }
  }
  return Poly(ctx, std::move(c));
}

// Splits f (squarefree, all irreducible factors of degree d) into its factors.
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldCtx& ctx = f.ctx();
  const mpz_class q = ctx.order();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const bool even = ctx.characteristic() == 2;
  const Poly one = Poly::constant(ctx, ctx.one());
  for (;;) {
    const Poly a = random_poly(ctx, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(ctx);
    if (even) {
      // trace map a + a^2 + ... + a^(2^(k*d - 1))
      const unsigned steps = ctx.degree() * static_cast<unsigned>(d);
      Poly t = a % f;
      b = t;
      for (unsigned i = 1; i < steps; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      const mpz_class e = (qd - 1) / 2;
      b = powmod(a, e, f) - one;
    }
    const Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree_finite(const Poly& f_in, std::uint64_t seed) {
  std::vector<Poly> out;
  Poly f = f_in.monic();
  if (f.degree() <= 0) return out;
  const FieldCtx& ctx = f.ctx();
  const mpz_class q = ctx.order();
  const Poly x = Poly::x(ctx);
  std::mt19937_64 rng(seed);
  Poly h = x % f;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(h, q, f);
    const Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  return out;
}

}  // namespace cma::detail
