#include "cma/homology.hpp"

#include <algorithm>

namespace cma {

const char* to_string(GlDim g) {
  switch (g) {
    case GlDim::Zero: return "0";
    case GlDim::Two: return "2";
    case GlDim::Infinite: return "infinite";
  }
  return "?";
}

BlockReport block_report(const Poly& p, const IndexSet& t) {
  if (t.empty()) throw Error(ErrorCode::TooSmall, "block without power indices");
  BlockReport b{p, t.front(), t, {}, 1, GlDim::Zero, t.front() == 1, t.size(), t.front()};
  const std::size_t s = t.size();
  b.cartan.assign(s, std::vector<std::uint64_t>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) b.cartan[i][j] = std::min(t[i], t[j]);
  for (auto h : mset_H(t)) b.cartan_det *= static_cast<unsigned long>(h);
  if (t.front() == 1)
    b.gldim = GlDim::Zero;
  else if (t.size() == t.front())
    b.gldim = GlDim::Two;
  else
    b.gldim = GlDim::Infinite;
  return b;
}

std::vector<BlockReport> block_reports(const InvariantProfile& prof) {
  std::vector<BlockReport> out;
  for (const auto& g : prof.groups) out.push_back(block_report(g.p, g.pset));
  return out;
}

std::vector<SgBlock> sg_descriptor(const InvariantProfile& prof) {
  std::vector<SgBlock> out;
  for (const auto& cls : prof.classes) {
    for (auto j : cls.d) out.push_back({cls.rep, j});
  }
  return out;
}

mpz_class algebra_dimension(const ElemDivisorData& e) {
  mpz_class dim = 0;
  for (const auto& a : e.items) {
    for (const auto& b : e.items) {
      if (a.p != b.p) continue;
      mpz_class term = static_cast<unsigned long>(a.p.degree());
      term *= static_cast<unsigned long>(std::min(a.exponent, b.exponent));
      term *= static_cast<unsigned long>(a.multiplicity);
      term *= static_cast<unsigned long>(b.multiplicity);
      dim += term;
    }
  }
  return dim;
}

mpz_class algebra_dimension_from_invariant_factors(const ElemDivisorData& e) {
  std::vector<unsigned long> deg;
  for (const auto& d : e.invariant_factors) deg.push_back(static_cast<unsigned long>(d.degree()));
  std::sort(deg.begin(), deg.end(), std::greater<>());
  mpz_class dim = 0;
  for (std::size_t k = 0; k < deg.size(); ++k) dim += mpz_class(2 * k + 1) * deg[k];
  return dim;
}

HomologyReport homology_report(const InvariantProfile& prof, const ElemDivisorData& e) {
  HomologyReport rep;
  rep.blocks = block_reports(prof);
  rep.total_cartan_det = 1;
  for (const auto& b : rep.blocks) {
    rep.total_cartan_det *= b.cartan_det;
    if (static_cast<int>(b.gldim) > static_cast<int>(rep.gldim)) rep.gldim = b.gldim;
    if (!b.semisimple) ++rep.non_semisimple_block_count;
  }
  rep.quasi_hereditary = rep.gldim != GlDim::Infinite;
  rep.sg = sg_descriptor(prof);
  rep.dim = algebra_dimension(e);
  return rep;
}

ConjectureWitness conjecture_witnesses(const HomologyReport& rep) {
  ConjectureWitness w;
  w.cdc_applicable = rep.gldim != GlDim::Infinite;
  w.cartan_det = rep.total_cartan_det;
  w.cdc_holds = !w.cdc_applicable || rep.total_cartan_det == 1;
  w.cm_finite = rep.cm_finite;
  w.auslander_gorenstein_level = rep.minimal_ag_level;
  return w;
}

mpz_class integer_determinant(const std::vector<std::vector<std::uint64_t>>& m) {
  // Bareiss elimination
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<unsigned long>(m[i][j]);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace cma
