#include "cma/factor.hpp"

#include <algorithm>
#include <map>

namespace cma {

namespace {

// p-th root of a polynomial whose exponents are all multiples of p, over F_q.
Poly pth_root(const Poly& f) {
  const FieldCtx& ctx = f.ctx();
  const std::uint64_t p = ctx.characteristic();
  mpz_class root_exp;  // a -> a^(p^(k-1)) inverts Frobenius on F_(p^k)
  mpz_ui_pow_ui(root_exp.get_mpz_t(), p, ctx.degree() - 1);
  std::vector<FieldElem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i].pow(root_exp));
  return Poly(ctx, std::move(c));
}

std::vector<std::pair<Poly, unsigned>> sqf_finite(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FieldCtx& ctx = f.ctx();
  const unsigned p = static_cast<unsigned>(ctx.characteristic());
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    const Poly y = gcd(w, c);
    const Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, j] : sqf_finite(pth_root(c).monic())) out.emplace_back(g, j * p);
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> sqf_char0(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly df = f.derivative();
  const Poly a0 = gcd(f, df);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(df, a0);
  Poly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace

Poly Factorization::expand(const FieldCtx& ctx) const {
  Poly acc = Poly::constant(ctx, unit);
  for (const auto& [g, e] : factors) acc = acc * pow(g, e);
  return acc;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  const Poly m = f.monic();
  if (m.degree() <= 0) return {};
  return m.ctx().is_finite() ? sqf_finite(m) : sqf_char0(m);
}

Factorization factorize(const Poly& f, const FactorOptions& opt) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  const FieldCtx& ctx = f.ctx();
  Factorization out{f.lead(), {}};
  std::vector<std::pair<Poly, unsigned>> raw;
  std::uint64_t seed = opt.seed;
  for (const auto& [g, e] : squarefree_decomposition(f)) {
    const auto parts = ctx.is_finite() ? detail::factor_squarefree_finite(g, seed++)
                                       : detail::factor_squarefree_rational(g, opt);
    for (const auto& h : parts) raw.emplace_back(h, e);
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first.canonical_less(b.first); });
  for (auto& [g, e] : raw) {
    if (!out.factors.empty() && out.factors.back().first == g)
      out.factors.back().second += e;
    else
      out.factors.emplace_back(std::move(g), e);
  }
  return out;
}

bool is_irreducible(const Poly& f, const FactorOptions& opt) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "irreducibility needs degree >= 1");
  if (f.degree() == 1) return true;
  const FieldCtx& ctx = f.ctx();
  if (!ctx.is_finite()) {
    const auto fac = factorize(f, opt);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
  }
  const Poly m = f.monic();
  const Poly x = Poly::x(ctx);
  const mpz_class q = ctx.order();
  Poly h = x;
  for (int d = 1; 2 * d <= m.degree(); ++d) {
    h = powmod(h, q, m);
    if (gcd(h - x, m).degree() > 0) return false;
  }
  return true;
}

Poly cyclotomic(unsigned n, const FieldCtx& ctx) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (ctx.is_finite() && n % ctx.characteristic() == 0)
    throw Error(ErrorCode::CharacteristicDividesN, "characteristic divides " + std::to_string(n));
  std::map<unsigned, Poly> memo;
  const Poly x = Poly::x(ctx);
  const Poly one = Poly::constant(ctx, ctx.one());
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Poly phi = pow(x, d) - one;
    for (const auto& [e, pe] : memo) {
      if (d % e == 0) phi = exact_div(phi, pe);
    }
    memo.emplace(d, std::move(phi));
  }
  return memo.at(n);
}

bool quotient_algebras_isomorphic(const Poly& f_in, const Poly& g_in, const FactorOptions& opt) {
  if (f_in.ctx() != g_in.ctx()) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
  const Poly f = f_in.monic(), g = g_in.monic();
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorCode::InvalidArgument, "isomorphism test needs positive degrees");
  if (f.degree() != g.degree()) return false;
  const FieldCtx& ctx = f.ctx();
  // Finite fields of equal order are isomorphic.
  if (ctx.is_finite() || f.degree() == 1 || f == g) return true;

  const int m = f.degree();
  const unsigned norm_degree = static_cast<unsigned>(m * m);
  if (norm_degree > opt.degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "norm of degree " + std::to_string(norm_degree) + " exceeds the cap");

  // N_s(x) = Res_y(f(y), g(x - s*y)), interpolated from norm_degree + 1 values.
  const Poly y = Poly::x(ctx);
  for (long s : {1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L, 8L, -8L}) {
    std::vector<FieldElem> xs, vals;
    for (unsigned i = 0; i <= norm_degree; ++i) {
      const FieldElem x0 = ctx.from_int(static_cast<long>(i));
      const Poly shifted = Poly::constant(ctx, x0) - y * ctx.from_int(s);
      xs.push_back(x0);
      vals.push_back(resultant(f, g.compose(shifted)));
    }
    const Poly norm = interpolate(ctx, xs, vals);
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    for (const auto& h : detail::factor_squarefree_rational(norm, opt)) {
      if (h.degree() == m) return true;
    }
    return false;
  }
  throw Error(ErrorCode::InvariantViolation, "no squarefree Trager norm found for small shifts");
}

}  // namespace cma
