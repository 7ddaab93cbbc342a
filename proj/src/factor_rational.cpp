// Factorization over Q for squarefree inputs: Zassenhaus' algorithm.
//
// The polynomial is made primitive and integral, then monic by the
// substitution G(x) = lc^(n-1) F(x / lc). G is factored modulo a small prime
// where it stays squarefree, the modular factors are lifted linearly to
// p^a > 2B with B a Mignotte-type bound, and true factors are recovered by
// subset recombination with trial division over Z.

#include <algorithm>
#include <optional>

#include "cma/factor.hpp"

namespace cma::detail {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// Coefficients reduced into (-m/2, m/2].
ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly zmod_nonneg(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

// Quotient of a by a monic divisor h when the division is exact over Z.
std::optional<ZPoly> zdiv_monic(ZPoly a, const ZPoly& h) {
  const std::size_t dh = h.size() - 1;
  if (a.size() < h.size()) return std::nullopt;
  ZPoly q(a.size() - dh, 0);
  for (std::size_t i = a.size(); i-- > dh;) {
    const mpz_class c = a[i];
    if (c == 0) continue;
    const std::size_t shift = i - dh;
    q[shift] = c;
    for (std::size_t j = 0; j <= dh; ++j) a[shift + j] -= c * h[j];
  }
  for (std::size_t i = 0; i < dh; ++i) {
    if (a[i] != 0) return std::nullopt;
  }
  ztrim(q);
  return q;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly a) {
  const mpz_class g = content(a);
  if (g != 0 && g != 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

ZPoly to_integral(const Poly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.rational() * den;
    out.push_back(scaled.get_num());
  }
  return primitive_part(std::move(out));
}

Poly to_rational_monic(const ZPoly& a, const FieldCtx& q) {
  std::vector<FieldElem> c;
  for (const auto& x : a) c.push_back(q.from_mpz(x));
  return Poly(q, std::move(c)).monic();
}

Poly reduce_mod(const ZPoly& a, const FieldCtx& fp) {
  std::vector<FieldElem> c;
  for (const auto& x : a) c.push_back(fp.from_mpz(x));
  return Poly(fp, std::move(c));
}

ZPoly lift_residues(const Poly& a) {
  ZPoly out;
  for (const auto& c : a.coeffs()) out.emplace_back(static_cast<unsigned long>(c.residue()));
  return out;
}

struct ModularImage {
  std::uint64_t p = 0;
  std::vector<Poly> factors;
};

ModularImage choose_prime(const ZPoly& g, std::uint64_t seed) {
  ModularImage best;
  int good = 0;
  for (std::uint64_t p = 3; good < 4; p += 2) {
    if (!is_prime_u64(p)) continue;
    const FieldCtx fp = FieldCtx::prime(p);
    const Poly gp = reduce_mod(g, fp);
    if (gcd(gp, gp.derivative()).degree() > 0) continue;
    ++good;
    auto facs = factor_squarefree_finite(gp, seed);
    if (best.p == 0 || facs.size() < best.factors.size()) best = {p, std::move(facs)};
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Linear multifactor Hensel lifting of g == prod factors (mod p) to mod p^a.
std::vector<ZPoly> hensel_lift(const ZPoly& g, const std::vector<Poly>& factors, std::uint64_t p, unsigned a) {
  const FieldCtx& fp = factors.front().ctx();
  const Poly gbar = reduce_mod(g, fp);
  // s_i = (g / g_i)^(-1) mod g_i, so that sum s_i * g / g_i == 1 (mod p)
  std::vector<Poly> s;
  for (const auto& gi : factors) {
    const Poly cof = exact_div(gbar, gi) % gi;
    // invert cof modulo gi with the extended Euclidean algorithm
    Poly r0 = gi, r1 = cof, t0(fp), t1 = Poly::constant(fp, fp.one());
    while (!r1.is_zero()) {
      auto [q, r] = divrem(r0, r1);
      Poly t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    s.push_back((t0 * r0.lead().inv()) % gi);
  }

  std::vector<ZPoly> lifted;
  for (const auto& gi : factors) lifted.push_back(lift_residues(gi));
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class pj = pz;
  for (unsigned j = 1; j < a; ++j) {
    const mpz_class next = pj * pz;
    ZPoly prod{1};
    for (const auto& h : lifted) prod = zmod_nonneg(zmul(prod, h), next);
    ZPoly e = g;
    e.resize(std::max(e.size(), prod.size()), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ztrim(e);
    const Poly ebar = reduce_mod(e, fp);
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      const Poly delta = (ebar * s[i]) % factors[i];
      ZPoly d = lift_residues(delta);
      lifted[i].resize(std::max(lifted[i].size(), d.size()), 0);
      for (std::size_t k = 0; k < d.size(); ++k) lifted[i][k] += pj * d[k];
    }
    pj = next;
  }
  return lifted;
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Poly> factor_squarefree_rational(const Poly& f, const FactorOptions& opt) {
  const FieldCtx& q = f.ctx();
  if (f.degree() <= 1) return {f.monic()};
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n > opt.degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree " + std::to_string(n) + " exceeds the rational factorization cap " + std::to_string(opt.degree_cap));

  const ZPoly F = to_integral(f);
  const mpz_class lc = F.back();
  ZPoly G(n + 1);
  {
    mpz_class scale = 1;  // lc^(n-1-i), built from the top
    for (std::size_t i = n; i-- > 0;) {
      G[i] = F[i] * scale;
      scale *= lc;
    }
    G[n] = 1;
  }

  const ModularImage image = choose_prime(G, opt.seed);
  if (image.factors.size() <= 1) return {f.monic()};

  mpz_class norm2 = 0;
  for (const auto& c : G) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  const mpz_class pz(static_cast<unsigned long>(image.p));
  mpz_class modulus = pz;
  unsigned a = 1;
  while (modulus <= 2 * bound) {
    modulus *= pz;
    ++a;
  }

  std::vector<ZPoly> lifted = hensel_lift(G, image.factors, image.p, a);
  std::vector<ZPoly> found;
  ZPoly rest = G;
  for (std::size_t k = 1; 2 * k <= lifted.size();) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    bool hit = false;
    do {
      ZPoly h{1};
      for (std::size_t i : idx) h = zsymmetric(zmul(h, lifted[i]), modulus);
      if (rest[0] != 0 && (h[0] == 0 || !mpz_divisible_p(rest[0].get_mpz_t(), h[0].get_mpz_t()))) continue;
      if (auto quotient = zdiv_monic(rest, h)) {
        found.push_back(h);
        rest = std::move(*quotient);
        for (std::size_t i = k; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        hit = true;
        break;
      }
    } while (next_subset(idx, lifted.size()));
    if (!hit) ++k;
  }
  if (rest.size() > 1) found.push_back(rest);

  // Undo the monic substitution: a factor H(x) of G gives pp(H(lc * x)) for F.
  std::vector<Poly> out;
  for (const auto& h : found) {
    ZPoly back(h.size());
    mpz_class scale = 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
      back[i] = h[i] * scale;
      scale *= lc;
    }
    out.push_back(to_rational_monic(primitive_part(std::move(back)), q));
  }
  return out;
}

}  // namespace cma::detail
