#include "cma/matforms.hpp"

#include <algorithm>
#include <map>

namespace cma {

std::vector<Poly> ElemDivisorData::irreducibles() const {
  std::vector<Poly> out;
  for (const auto& it : items) {
    if (out.empty() || out.back() != it.p) out.push_back(it.p);
  }
  return out;
}

Poly ElemDivisorData::minimal_polynomial() const {
  if (invariant_factors.empty()) return Poly::constant(ctx, ctx.one());
  return invariant_factors.back();
}

ElemDivisorData make_elem_divisor_data(const FieldCtx& ctx, std::vector<ElementaryDivisor> items) {
  for (auto& it : items) {
    if (it.p.ctx() != ctx) throw Error(ErrorCode::CtxMismatch, "elementary divisor over another field");
    it.p = it.p.monic();
  }
  std::sort(items.begin(), items.end(), [](const ElementaryDivisor& a, const ElementaryDivisor& b) {
    if (a.p != b.p) return a.p.canonical_less(b.p);
    return a.exponent > b.exponent;
  });
  ElemDivisorData out{ctx, 0, {}, {}};
  for (auto& it : items) {
    if (it.multiplicity == 0 || it.exponent == 0) continue;
    if (it.p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "elementary divisor base must have positive degree");
    if (!out.items.empty() && out.items.back().p == it.p && out.items.back().exponent == it.exponent)
      out.items.back().multiplicity += it.multiplicity;
    else
      out.items.push_back(std::move(it));
  }
  // k-th largest exponent of every irreducible goes into d_{r-k+1}
  std::vector<std::pair<Poly, std::vector<unsigned>>> per;
  for (const auto& it : out.items) {
    out.n += static_cast<std::size_t>(it.multiplicity) * it.exponent * static_cast<std::size_t>(it.p.degree());
    if (per.empty() || per.back().first != it.p) per.emplace_back(it.p, std::vector<unsigned>{});
    for (unsigned m = 0; m < it.multiplicity; ++m) per.back().second.push_back(it.exponent);
  }
  std::size_t r = 0;
  for (const auto& [p, exps] : per) r = std::max(r, exps.size());
  out.invariant_factors.assign(r, Poly::constant(ctx, ctx.one()));
  for (const auto& [p, exps] : per) {
    for (std::size_t k = 0; k < exps.size(); ++k) {
      Poly& d = out.invariant_factors[r - 1 - k];
      d = d * pow(p, exps[k]);
    }
  }
  return out;
}

bool operator==(const ElemDivisorData& a, const ElemDivisorData& b) {
  if (a.ctx != b.ctx || a.n != b.n || a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    const auto& x = a.items[i];
    const auto& y = b.items[i];
    if (x.p != y.p || x.exponent != y.exponent || x.multiplicity != y.multiplicity) return false;
  }
  return true;
}

Matrix poly_eval(const Poly& g, const Matrix& c) {
  if (!c.is_square()) throw Error(ErrorCode::InvalidArgument, "polynomial of a non-square matrix");
  const Matrix id = Matrix::identity(c.ctx(), c.n());
  Matrix acc(c.ctx(), c.n());
  for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = acc * c + id * g.coeffs()[i];
  return acc;
}

Poly minimal_polynomial(const Matrix& c) {
  if (!c.is_square()) throw Error(ErrorCode::InvalidArgument, "minimal polynomial of a non-square matrix");
  const FieldCtx& ctx = c.ctx();
  const std::size_t n = c.n();
  Poly result = Poly::constant(ctx, ctx.one());
  for (std::size_t start = 0; start < n; ++start) {
    // Reduced Krylov vectors with pivots and their expressions in c^j e_start.
    std::vector<Vec> reduced;
    std::vector<std::size_t> pivot;
    std::vector<Vec> combo;
    Vec v(n, ctx.zero());
    v[start] = ctx.one();
    for (std::size_t k = 0;; ++k) {
      Vec w = v;
      Vec comb(k + 1, ctx.zero());
      comb[k] = ctx.one();
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        const FieldElem f = w[pivot[j]];
        if (f.is_zero()) continue;
        for (std::size_t t = 0; t < n; ++t) {
          if (!reduced[j][t].is_zero()) w[t] -= f * reduced[j][t];
        }
        for (std::size_t t = 0; t < combo[j].size(); ++t) comb[t] -= f * combo[j][t];
      }
      std::size_t piv = n;
      for (std::size_t t = 0; t < n; ++t) {
        if (!w[t].is_zero()) {
          piv = t;
          break;
        }
      }
      if (piv == n) {
        // comb expresses sum comb_t c^t e_start = 0 with comb_k = 1
        result = lcm(result, Poly(ctx, comb));
        break;
      }
      const FieldElem inv = w[piv].inv();
      for (auto& x : w) x *= inv;
      for (auto& x : comb) x *= inv;
      reduced.push_back(std::move(w));
      pivot.push_back(piv);
      combo.push_back(std::move(comb));
      v = c * v;
    }
  }
  return result.monic();
}

ElemDivisorData elementary_divisors(const Matrix& c, const FactorOptions& opt) {
  if (!c.is_square()) throw Error(ErrorCode::InvalidArgument, "elementary divisors of a non-square matrix");
  const FieldCtx& ctx = c.ctx();
  const std::size_t n = c.n();
  std::vector<ElementaryDivisor> items;
  if (n == 0) return make_elem_divisor_data(ctx, {});
  const Factorization fac = factorize(minimal_polynomial(c), opt);
  for (const auto& [p, emax] : fac.factors) {
    const std::size_t u = static_cast<std::size_t>(p.degree());
    const Matrix pc = poly_eval(p, c);
    // nullity[j] = dim ker p(c)^j for j = 0..emax+1
    std::vector<std::size_t> nullity(emax + 2, 0);
    Matrix power = Matrix::identity(ctx, n);
    for (unsigned j = 1; j <= emax; ++j) {
      power = power * pc;
      nullity[j] = n - rank(power);
    }
    nullity[emax + 1] = nullity[emax];
    auto at_least = [&](unsigned j) { return (nullity[j] - nullity[j - 1]) / u; };
    for (unsigned i = 1; i <= emax; ++i) {
      const std::size_t mult = at_least(i) - at_least(i + 1);
      if (mult > 0) items.push_back({p, i, static_cast<unsigned>(mult)});
    }
  }
  ElemDivisorData out = make_elem_divisor_data(ctx, std::move(items));
  if (out.n != n) throw Error(ErrorCode::InvariantViolation, "elementary divisor degrees do not sum to n");
  return out;
}

Matrix jordan(const FieldCtx& ctx, const FieldElem& eigen, std::size_t size) {
  Matrix m(ctx, size);
  for (std::size_t i = 0; i < size; ++i) {
    m(i, i) = eigen;
    if (i + 1 < size) m(i, i + 1) = ctx.one();
  }
  return m;
}

Matrix companion(const Poly& g) {
  if (g.degree() < 1) throw Error(ErrorCode::InvalidArgument, "companion matrix needs degree >= 1");
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "companion matrix of a non-monic polynomial");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  Matrix m(g.ctx(), n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = g.ctx().one();
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -g.coeffs()[i];
  return m;
}

Matrix companion_power(const Poly& f, unsigned k) { return companion(pow(f, k)); }

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "direct sum of no blocks");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw Error(ErrorCode::InvalidArgument, "direct sum of non-square block");
    if (b.ctx() != blocks[0].ctx()) throw Error(ErrorCode::CtxMismatch, "direct sum over different fields");
    n += b.n();
  }
  Matrix m(blocks[0].ctx(), n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) m(off + i, off + j) = b(i, j);
    off += b.n();
  }
  return m;
}

Matrix conjugate(const Matrix& c, const Matrix& g) { return g * c * inverse(g); }

Matrix permutation_matrix(const FieldCtx& ctx, const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n, false);
  Matrix m(ctx, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || seen[sigma[i]]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[sigma[i]] = true;
    m(i, sigma[i]) = ctx.one();
  }
  return m;
}

}  // namespace cma
