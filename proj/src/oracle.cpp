#include "cma/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cma/equiv.hpp"

namespace cma {

namespace {

Matrix vec_to_matrix(const FieldCtx& ctx, const Vec& v, std::size_t rows, std::size_t cols) {
  Matrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// Kernel of X -> A X - X B for X of shape rows(A) x rows(B).
std::vector<Vec> intertwiner_kernel(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.n(), n = b.n();
  const FieldCtx& ctx = a.ctx();
  Matrix sys(ctx, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < m; ++k) {
        if (!a(i, k).is_zero()) sys(row, k * n + j) = sys(row, k * n + j) + a(i, k);
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (!b(l, j).is_zero()) sys(row, i * n + l) = sys(row, i * n + l) - b(l, j);
      }
    }
  }
  return kernel_basis(sys);
}

std::string describe(const ElemDivisorData& e) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    const auto& it = e.items[i];
    os << (i ? ", " : "") << "(" << it.p.to_string() << ")^" << it.exponent;
    if (it.multiplicity > 1) os << " x" << it.multiplicity;
  }
  os << "} over " << e.ctx.name();
  return os.str();
}

FieldElem random_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
  if (!ctx.is_finite()) return ctx.from_int(static_cast<long>(rng() % 7) - 3);
  const std::uint64_t p = ctx.characteristic();
  if (ctx.kind() == FieldKind::Prime) return ctx.from_mpz(mpz_class(static_cast<unsigned long>(rng() % p)));
  std::vector<std::uint64_t> c(ctx.degree());
  for (auto& x : c) x = rng() % p;
  return ctx.from_coeffs(std::move(c));
}

Matrix random_invertible(const FieldCtx& ctx, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix g(ctx, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_elem(ctx, rng);
    if (!determinant(g).is_zero()) return g;
  }
}

// irreducible -> (exponent, multiplicity) pairs, exponents descending
using Groups = std::vector<std::pair<Poly, std::vector<std::pair<unsigned, unsigned>>>>;

Groups to_groups(const ElemDivisorData& e) {
  Groups g;
  for (const auto& it : e.items) {
    if (g.empty() || g.back().first != it.p) g.push_back({it.p, {}});
    g.back().second.emplace_back(it.exponent, it.multiplicity);
  }
  return g;
}

ElemDivisorData from_groups(const FieldCtx& ctx, const Groups& g) {
  std::vector<ElementaryDivisor> items;
  for (const auto& [p, ex] : g)
    for (auto [e, m] : ex) items.push_back({p, e, m});
  return make_elem_divisor_data(ctx, std::move(items));
}

std::size_t size_of(const Groups& g) {
  std::size_t n = 0;
  for (const auto& [p, ex] : g)
    for (auto [e, m] : ex) n += static_cast<std::size_t>(p.degree()) * e * m;
  return n;
}

bool contains(const Groups& g, const Poly& p) {
  return std::any_of(g.begin(), g.end(), [&](const auto& x) { return x.first == p; });
}

std::vector<unsigned> exps_of(const std::vector<std::pair<unsigned, unsigned>>& ex) {
  std::vector<unsigned> t;
  for (auto [e, m] : ex) t.push_back(e);
  return t;
}

// exponents (descending) from an H sequence read top-down
std::vector<std::pair<unsigned, unsigned>> from_h(const std::vector<unsigned>& h) {
  std::vector<std::pair<unsigned, unsigned>> ex(h.size());
  unsigned acc = 0;
  for (std::size_t i = h.size(); i-- > 0;) {
    acc += h[i];
    ex[i] = {acc, 1};
  }
  return ex;
}

std::vector<unsigned> h_of(const std::vector<unsigned>& t) {
  std::vector<unsigned> h;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) h.push_back(t[i] - t[i + 1]);
  h.push_back(t.back());
  return h;
}

// n-th candidate polynomial of degree d, monic, enumerated in base q
Poly candidate(const FieldCtx& ctx, unsigned d, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  for (unsigned i = 0; i < d; ++i) c.push_back(random_elem(ctx, rng));
  c.push_back(ctx.one());
  return Poly(ctx, std::move(c));
}

Poly iso_substitute(const FieldCtx& ctx, const Poly& p, const Groups& g, std::mt19937_64& rng, bool& ok) {
  ok = false;
  if (ctx.is_finite()) {
    for (int tries = 0; tries < 30; ++tries) {
      Poly q = random_irreducible(ctx, static_cast<unsigned>(p.degree()), rng);
      if (!contains(g, q)) {
        ok = true;
        return q;
      }
    }
    return p;
  }
  for (int tries = 0; tries < 6; ++tries) {
    long a = static_cast<long>(rng() % 5) - 2;
    if (a == 0) a = 3;
    Poly q = p.compose(Poly::from_ints(ctx, {a, 1})).monic();
    if (!contains(g, q)) {
      ok = true;
      return q;
    }
  }
  return p;
}

}  // namespace

CentralizerBasis centralizer_basis(const Matrix& c) {
  if (!c.is_square()) throw Error(ErrorCode::InvalidArgument, "centralizer of a non-square matrix");
  if (c.n() > 60) throw Error(ErrorCode::TooLarge, "centralizer oracle limited to n <= 60");
  CentralizerBasis out{c, {}};
  const std::size_t n = c.n();
  for (const auto& v : intertwiner_kernel(c, c)) out.basis.push_back(vec_to_matrix(c.ctx(), v, n, n));
  for (const auto& x : out.basis) {
    if (c * x != x * c) throw Error(ErrorCode::InvariantViolation, "centralizer basis element does not commute");
  }
  if (!out.basis.empty()) {
    Matrix stacked(c.ctx(), out.basis.size(), n * n);
    for (std::size_t r = 0; r < out.basis.size(); ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(r, i * n + j) = out.basis[r](i, j);
    if (rank(stacked) != out.basis.size())
      throw Error(ErrorCode::InvariantViolation, "centralizer basis is linearly dependent");
  }
  return out;
}

std::size_t hom_dim(const Poly& a, const Poly& b) {
  if (a.degree() < 1 || b.degree() < 1) throw Error(ErrorCode::InvalidArgument, "hom_dim needs positive degrees");
  const std::size_t dim = intertwiner_kernel(companion(b.monic()), companion(a.monic())).size();
  if (dim != static_cast<std::size_t>(gcd(a, b).degree()))
    throw Error(ErrorCode::InvariantViolation, "Hom dimension differs from deg gcd");
  return dim;
}

CartanCheck verify_cartan(const IndexSet& t, const Poly& f) {
  if (t.empty()) throw Error(ErrorCode::TooSmall, "empty power-index set");
  const std::uint64_t u = static_cast<std::uint64_t>(f.degree());
  std::uint64_t total = 0;
  for (auto x : t) total += u * x;
  if (total > 60) throw Error(ErrorCode::TooLarge, "Cartan oracle limited to matrices of size <= 60");
  CartanCheck out{t, f, {}, 1, 0, 0, 0, true, {}};
  const std::size_t s = t.size();
  std::vector<Poly> powers;
  for (auto x : t) powers.push_back(pow(f, static_cast<unsigned>(x)));
  out.cartan.assign(s, std::vector<std::uint64_t>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t h = hom_dim(powers[j], powers[i]);
      out.cartan[i][j] = h / u;
      if (h % u != 0 || out.cartan[i][j] != std::min(t[i], t[j])) {
        out.ok = false;
        out.failure = "Cartan entry mismatch";
      }
      out.expected_dim += u * std::min(t[i], t[j]);
    }
  }
  for (auto h : mset_H(t)) out.det_formula *= static_cast<unsigned long>(h);
  out.det_direct = integer_determinant(out.cartan);
  if (out.det_formula != out.det_direct) {
    out.ok = false;
    out.failure = "determinant mismatch";
  }
  std::vector<Matrix> blocks;
  for (auto x : t) blocks.push_back(companion_power(f, static_cast<unsigned>(x)));
  out.centralizer_dim = centralizer_basis(direct_sum(blocks)).dim();
  if (out.centralizer_dim != out.expected_dim) {
    out.ok = false;
    out.failure = "centralizer dimension mismatch";
  }
  return out;
}

std::vector<std::size_t> permutation_of_type(const CycleType& ct) {
  validate(ct);
  std::vector<std::size_t> sigma(ct.n());
  std::size_t start = 0;
  for (auto len : ct.parts) {
    for (std::size_t i = 0; i < len; ++i) sigma[start + i] = start + (i + 1) % len;
    start += len;
  }
  return sigma;
}

FastPathCheck verify_perm_fastpath(const CycleType& ct, const FieldCtx& ctx) {
  validate(ct);
  if (ct.n() > 40) throw Error(ErrorCode::TooLarge, "fast-path oracle limited to n <= 40");
  FastPathCheck out{elementary_divisors(permutation_matrix(ctx, permutation_of_type(ct))),
                    perm_elementary_divisors(ct, ctx), false};
  out.ok = out.from_matrix == out.from_cycles;
  return out;
}

Poly random_irreducible(const FieldCtx& ctx, unsigned degree, std::mt19937_64& rng) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "irreducibles have positive degree");
  for (;;) {
    Poly p = candidate(ctx, degree, rng);
    if (degree == 1 || is_irreducible(p)) return p;
  }
}

ElemDivisorData random_elem_divisors(const FieldCtx& ctx, std::mt19937_64& rng, const RandomSpec& spec) {
  Groups g;
  std::size_t budget = spec.max_n;
  const unsigned k = 1 + static_cast<unsigned>(rng() % spec.max_irreducibles);
  for (unsigned i = 0; i < k && budget > 0; ++i) {
    const unsigned d = 1 + static_cast<unsigned>(rng() % std::min<std::size_t>(spec.max_degree, budget));
    Poly p = random_irreducible(ctx, d, rng);
    if (contains(g, p)) continue;
    std::map<unsigned, unsigned, std::greater<>> ex;
    const unsigned tries = 1 + static_cast<unsigned>(rng() % 4);
    for (unsigned j = 0; j < tries; ++j) {
      const unsigned e = 1 + static_cast<unsigned>(rng() % spec.max_exponent);
      if (static_cast<std::size_t>(d) * e > budget) continue;
      ++ex[e];
      budget -= static_cast<std::size_t>(d) * e;
    }
    if (ex.empty()) continue;
    g.push_back({p, {ex.begin(), ex.end()}});
  }
  if (g.empty()) g.push_back({random_irreducible(ctx, 1, rng), {{1, 1}}});
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first.canonical_less(b.first); });
  return from_groups(ctx, g);
}

ElemDivisorData related_elem_divisors(const ElemDivisorData& e, std::mt19937_64& rng, const RandomSpec& spec) {
  const FieldCtx& ctx = e.ctx;
  const Groups base = to_groups(e);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Groups g = base;
    const unsigned ops = 1 + static_cast<unsigned>(rng() % 2);
    bool ok = true;
    for (unsigned o = 0; o < ops && ok; ++o) {
      auto& grp = g[rng() % g.size()];
      switch (rng() % 7) {
        case 0: {
          grp.first = iso_substitute(ctx, grp.first, g, rng, ok);
          break;
        }
        case 1: {
          const auto t = exps_of(grp.second);
          auto j = mset_J(make_index_set({t.begin(), t.end()}));
          std::vector<std::pair<unsigned, unsigned>> ex;
          for (std::size_t i = 0; i < j.size(); ++i)
            ex.emplace_back(static_cast<unsigned>(j[i]), i < grp.second.size() ? grp.second[i].second : 1);
          grp.second = ex;
          break;
        }
        case 2: {
          auto h = h_of(exps_of(grp.second));
          std::shuffle(h.begin(), h.end(), rng);
          grp.second = from_h(h);
          break;
        }
        case 3: {
          auto h = h_of(exps_of(grp.second));
          h.insert(h.begin() + static_cast<std::ptrdiff_t>(rng() % (h.size() + 1)), 1);
          grp.second = from_h(h);
          break;
        }
        case 4: {
          auto& slot = grp.second[rng() % grp.second.size()];
          if (slot.second > 1 && rng() % 2)
            --slot.second;
          else
            ++slot.second;
          break;
        }
        case 5: {
          Poly p = random_irreducible(ctx, 1 + static_cast<unsigned>(rng() % spec.max_degree), rng);
          if (contains(g, p)) {
            ok = false;
            break;
          }
          const unsigned top = 1 + static_cast<unsigned>(rng() % 3);
          std::vector<std::pair<unsigned, unsigned>> ex;
          for (unsigned x = top; x >= 1; --x) ex.emplace_back(x, 1);
          g.push_back({p, ex});
          break;
        }
        default: {
          return random_elem_divisors(ctx, rng, spec);
        }
      }
    }
    if (!ok || size_of(g) > spec.max_n) continue;
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first.canonical_less(b.first); });
    return from_groups(ctx, g);
  }
  return e;
}

Matrix realize(const ElemDivisorData& e, std::mt19937_64& rng) {
  std::vector<Matrix> blocks;
  for (const auto& it : e.items)
    for (unsigned m = 0; m < it.multiplicity; ++m) blocks.push_back(companion_power(it.p, it.exponent));
  Matrix c = direct_sum(blocks);
  return conjugate(c, random_invertible(e.ctx, c.n(), rng));
}

void corrupt_profile(InvariantProfile& prof) {
  if (prof.groups.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to corrupt");
  auto& g = prof.groups.front();
  g.pset.insert(g.pset.begin(), g.pset.front() + 1);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CorpusReport corpus_check(const CorpusOptions& opt) {
  CorpusReport rep;
  IsoOracle iso;
  std::vector<ElemDivisorData> data;
  std::vector<InvariantProfile> profs;
  std::vector<HomologyReport> homs;
  std::vector<std::uint64_t> seeds;
  auto fail = [&](const std::string& msg) {
    ++rep.failures;
    rep.messages.push_back(msg);
  };
  for (std::size_t k = 0; k < opt.count; ++k) {
    const std::uint64_t s = splitmix64(opt.seed + k);
    std::mt19937_64 rng(s);
    ElemDivisorData e = k % 2 == 1 ? related_elem_divisors(data[k - 1], rng, opt.spec)
                                   : random_elem_divisors(opt.field, rng, opt.spec);
    const std::string tag = "instance " + std::to_string(k) + " (seed " + std::to_string(s) + ") " + describe(e);
    InvariantProfile prof = build_profile(e, iso);
    HomologyReport hom = homology_report(prof, e);

    if (e.n <= opt.matrix_max_n) {
      Matrix c = realize(e, rng);
      ++rep.checks;
      if (elementary_divisors(c) != e) fail(tag + ": elementary divisors change under similarity");
      ++rep.checks;
      if (elementary_divisors(c.transpose()) != e) fail(tag + ": elementary divisors change under transpose");
      ++rep.checks;
      const std::size_t kernel = centralizer_basis(c).dim();
      if (mpz_class(static_cast<unsigned long>(kernel)) != hom.dim)
        fail(tag + ": centralizer dimension " + std::to_string(kernel) + " vs formula " + hom.dim.get_str());
    }
    ++rep.checks;
    if (hom.dim != algebra_dimension_from_invariant_factors(e)) fail(tag + ": dimension formulas disagree");

    // quasi-heredity six-way equivalence
    bool per_block = true, no_gaps = true;
    for (const auto& b : hom.blocks) per_block = per_block && b.gldim != GlDim::Infinite;
    for (const auto& g : prof.groups) no_gaps = no_gaps && g.pset.size() == g.n_f;
    const bool bits[6] = {hom.quasi_hereditary, hom.gldim != GlDim::Infinite, per_block,
                          prof.i_c().empty(), no_gaps, hom.total_cartan_det == 1};
    ++rep.checks;
    if (!std::all_of(std::begin(bits), std::end(bits), [&](bool b) { return b == bits[0]; }))
      fail(tag + ": quasi-heredity equivalences disagree");
    ++rep.checks;
    if (conjecture_witnesses(hom).cdc_applicable && !conjecture_witnesses(hom).cdc_holds)
      fail(tag + ": Cartan determinant witness fails");

    data.push_back(std::move(e));
    profs.push_back(std::move(prof));
    homs.push_back(std::move(hom));
    seeds.push_back(s);
  }
  rep.instances = data.size();

  for (std::size_t i = 0; i < profs.size(); ++i) {
    for (std::size_t j = i; j < profs.size(); ++j) {
      const auto& a = profs[i];
      const auto& b = profs[j];
      const std::string tag = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") seeds " +
                              std::to_string(seeds[i]) + ", " + std::to_string(seeds[j]);
      ++rep.pairs;
      LatticeReport lr = implication_lattice_check(a, b, iso);
      ++rep.checks;
      if (!lr.violations.empty()) {
        ++rep.lattice_violations;
        fail(tag + ": " + lr.violations.front());
      }
      if (i == j) {
        for (const auto& v : lr.verdicts) {
          if (!v.holds) fail(tag + ": " + to_string(v.relation) + " not reflexive");
        }
      }
      if (lr[Relation::I].holds) {
        ++rep.checks;
        if (data[i].n != data[j].n || data[i].minimal_polynomial().degree() != data[j].minimal_polynomial().degree())
          fail(tag + ": I-equivalent with different size or minimal polynomial degree");
      }
      if (lr[Relation::Sg].holds) {
        ++rep.sg_pairs;
        rep.checks += 3;
        if (a.u_c != b.u_c) fail(tag + ": Sg-equivalent with different U");
        if (homs[i].total_cartan_det != homs[j].total_cartan_det)
          fail(tag + ": Sg-equivalent with different Cartan determinants");
        if (homs[i].quasi_hereditary != homs[j].quasi_hereditary)
          fail(tag + ": Sg-equivalent with different quasi-heredity");
      }
    }
  }

  if (opt.corrupt && !profs.empty()) {
    InvariantProfile bad = profs.front();
    corrupt_profile(bad);
    ++rep.pairs;
    ++rep.checks;
    LatticeReport lr = implication_lattice_check(profs.front(), bad, iso);
    for (const auto& v : lr.violations) {
      ++rep.lattice_violations;
      fail("negative control: " + v);
    }
  }
  return rep;
}

}  // namespace cma
