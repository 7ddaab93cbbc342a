#include "cma/permkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cma {

std::uint64_t CycleType::n() const {
  std::uint64_t s = 0;
  for (auto x : parts) s += x;
  return s;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

void validate(const CycleType& ct) {
  if (ct.parts.empty()) throw Error(ErrorCode::InvalidArgument, "cycle type without parts");
  for (auto x : ct.parts) {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "cycle lengths must be positive");
  }
  if (ct.p != 0 && !detail::is_prime_u64(ct.p)) throw Error(ErrorCode::CompositeP, std::to_string(ct.p) + " is not prime");
}

unsigned nu_p(std::uint64_t n, std::uint64_t p) {
  if (p == 0 || n == 0) return 0;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) {
  if (p == 0) return n;
  while (n % p == 0) n /= p;
  return n;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::pair<CycleType, CycleType> regular_singular_split(const CycleType& ct) {
  validate(ct);
  CycleType reg{{}, ct.p}, sing{{}, ct.p};
  std::uint64_t reg_n = 0, sing_n = 0;
  for (auto x : ct.parts) {
    const bool singular = ct.p != 0 && x % ct.p == 0;
    if (singular) {
      sing.parts.push_back(x);
      sing_n += x;
    } else {
      reg.parts.push_back(x);
      reg_n += x;
    }
  }
  const std::uint64_t n = ct.n();
  // pad with fixed points so both stay in the same symmetric group
  reg.parts.insert(reg.parts.end(), n - reg_n, 1);
  sing.parts.insert(sing.parts.end(), n - sing_n, 1);
  return {reg, sing};
}

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_char(const CycleType& ct, const FieldCtx& ctx) {
  if (ctx.characteristic() != ct.p)
    throw Error(ErrorCode::CtxMismatch, "field characteristic differs from the cycle type's p");
}

}  // namespace

ElemDivisorData perm_elementary_divisors(const CycleType& ct, const FieldCtx& ctx, const FactorOptions& opt) {
  validate(ct);
  require_char(ct, ctx);
  std::map<std::uint64_t, std::vector<Poly>> phi_factors;
  auto factors_of_phi = [&](std::uint64_t d) -> const std::vector<Poly>& {
    auto it = phi_factors.find(d);
    if (it != phi_factors.end()) return it->second;
    const Poly phi = cyclotomic(static_cast<unsigned>(d), ctx);
    std::vector<Poly> fs;
    if (!ctx.is_finite()) {
      fs.push_back(phi);  // cyclotomic polynomials are irreducible over Q
    } else {
      for (const auto& [g, e] : factorize(phi, opt).factors) fs.push_back(g);
    }
    return phi_factors.emplace(d, std::move(fs)).first->second;
  };
  std::vector<ElementaryDivisor> items;
  for (auto lambda : ct.parts) {
    const std::uint64_t reduced = p_prime_part(lambda, ct.p);
    const auto exponent = static_cast<unsigned>(ipow(ct.p == 0 ? 1 : ct.p, nu_p(lambda, ct.p)));
    for (auto d : divisors(reduced)) {
      for (const auto& g : factors_of_phi(d)) items.push_back({g, exponent, 1});
    }
  }
  return make_elem_divisor_data(ctx, std::move(items));
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(p, m) != 1) throw Error(ErrorCode::InvalidArgument, "order of a non-unit");
  std::uint64_t x = p % m, k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * p % m);
    ++k;
  }
  return k;
}

namespace {

FieldCtx splitting_for_lcm(std::uint64_t p, std::uint64_t l) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "splitting fields need positive characteristic");
  const std::uint64_t k = multiplicative_order(p, l);
  if (k == 1) return FieldCtx::prime(p);
  return FieldCtx::extension_auto(p, static_cast<unsigned>(k));
}

std::uint64_t reduced_lcm(const CycleType& ct) {
  std::uint64_t l = 1;
  for (auto x : ct.parts) l = std::lcm(l, p_prime_part(x, ct.p));
  return l;
}

}  // namespace

FieldCtx splitting_context(const CycleType& ct) {
  validate(ct);
  return splitting_for_lcm(ct.p, reduced_lcm(ct));
}

FieldCtx splitting_context(const CycleType& a, const CycleType& b) {
  validate(a);
  validate(b);
  if (a.p != b.p) throw Error(ErrorCode::InvalidArgument, "cycle types read in different characteristics");
  return splitting_for_lcm(a.p, std::lcm(reduced_lcm(a), reduced_lcm(b)));
}

FieldElem primitive_element(const FieldCtx& ctx) {
  if (!ctx.is_finite()) throw Error(ErrorCode::InvalidArgument, "no primitive element over Q");
  const mpz_class q = ctx.order();
  if (!q.fits_ulong_p()) throw Error(ErrorCode::TooLarge, "field too large for a primitive element search");
  const std::uint64_t order = q.get_ui() - 1;
  if (order == 1) return ctx.one();
  const auto primes = prime_factors(order);
  const std::uint64_t p = ctx.characteristic();
  for (std::uint64_t t = 1;; ++t) {
    FieldElem cand;
    if (ctx.kind() == FieldKind::Prime) {
      cand = ctx.from_mpz(mpz_class(static_cast<unsigned long>(t)));
    } else {
      std::vector<std::uint64_t> c(ctx.degree(), 0);
      std::uint64_t v = t;
      for (unsigned i = 0; i < ctx.degree() && v; ++i, v /= p) c[i] = v % p;
      cand = ctx.from_coeffs(std::move(c));
    }
    if (cand.is_zero()) continue;
    bool generator = true;
    for (auto r : primes) {
      if (cand.pow(order / r).is_one()) {
        generator = false;
        break;
      }
    }
    if (generator) return cand;
  }
}

ElemDivisorData closed_form_divisors(const CycleType& ct, const FieldCtx& ctx) {
  validate(ct);
  require_char(ct, ctx);
  if (ct.p == 0) throw Error(ErrorCode::InvalidArgument, "closed form needs positive characteristic");
  const mpz_class q = ctx.order();
  if (!q.fits_ulong_p()) throw Error(ErrorCode::TooLarge, "field too large");
  const std::uint64_t order = q.get_ui() - 1;
  const std::uint64_t l = reduced_lcm(ct);
  if (order % l != 0) throw Error(ErrorCode::InvalidArgument, "field does not contain the needed roots of unity");
  const FieldElem g = primitive_element(ctx);
  std::set<std::uint64_t> orders;
  for (auto x : ct.parts)
    for (auto d : divisors(p_prime_part(x, ct.p))) orders.insert(d);
  std::vector<ElementaryDivisor> items;
  for (auto d : orders) {
    const FieldElem base = g.pow(order / d);
    for (std::uint64_t j = 1; j <= d; ++j) {
      if (std::gcd(j, d) != 1) continue;
      const FieldElem zeta = base.pow(j);
      const Poly lin(ctx, {-zeta, ctx.one()});
      for (auto x : ct.parts) {
        if (p_prime_part(x, ct.p) % d == 0)
          items.push_back({lin, static_cast<unsigned>(ipow(ct.p, nu_p(x, ct.p))), 1});
      }
    }
  }
  return make_elem_divisor_data(ctx, std::move(items));
}

InvariantProfile closed_form_profile(const CycleType& ct, const FieldCtx& ctx) {
  return build_profile(closed_form_divisors(ct, ctx));
}

InvariantProfile closed_form_profile(const CycleType& ct) { return closed_form_profile(ct, splitting_context(ct)); }

TildeSets tilde_sets(const InvariantProfile& prof, std::size_t class_index) {
  if (class_index >= prof.classes.size()) throw Error(ErrorCode::InvalidArgument, "class index out of range");
  TildeSets out;
  for (auto m : prof.classes[class_index].members) {
    const IndexSet& t = prof.groups[m].pset;
    if (t.back() != 1) continue;
    out.members.push_back(m);
    out.d_tilde = multiset_union(out.d_tilde, mset_D(last_two(t)));
  }
  return out;
}

const char* to_string(TransferStatus s) {
  switch (s) {
    case TransferStatus::Confirmed: return "confirmed";
    case TransferStatus::Violated: return "violated";
    case TransferStatus::HypothesisNotMet: return "hypothesis not met";
  }
  return "?";
}

SingularTransferReport check_singular_part_transfer(const CycleType& a, const CycleType& b, const FieldCtx& ctx,
                                                    const FactorOptions& opt) {
  validate(a);
  validate(b);
  if (a.p != b.p) throw Error(ErrorCode::InvalidArgument, "cycle types read in different characteristics");
  SingularTransferReport rep;
  rep.hypothesis_met = true;
  if (a.p == 2) {
    for (const auto* ct : {&a, &b})
      for (auto x : ct->parts) rep.hypothesis_met = rep.hypothesis_met && nu_p(x, 2) != 1;
  }
  rep.singular_a = regular_singular_split(a).second;
  rep.singular_b = regular_singular_split(b).second;
  IsoOracle iso(opt);
  auto profile = [&](const CycleType& ct) { return build_profile(perm_elementary_divisors(ct, ctx, opt), iso); };
  rep.pair_sg = decide_Sg(profile(a), profile(b), iso).holds;
  rep.singular_sg = decide_Sg(profile(rep.singular_a), profile(rep.singular_b), iso).holds;
  if (!rep.hypothesis_met)
    rep.status = TransferStatus::HypothesisNotMet;
  else if (rep.pair_sg && !rep.singular_sg)
    rep.status = TransferStatus::Violated;
  else
    rep.status = TransferStatus::Confirmed;
  return rep;
}

OneMoreReport check_one_more(const CycleType& base, std::uint64_t extra, const FieldCtx& ctx, const FactorOptions& opt) {
  validate(base);
  if (extra == 0) throw Error(ErrorCode::InvalidArgument, "cycle lengths must be positive");
  const std::uint64_t p = base.p;
  OneMoreReport rep;
  const std::uint64_t extra_red = p_prime_part(extra, p);
  const unsigned extra_nu = nu_p(extra, p);
  std::vector<std::uint64_t> j_elems;
  for (std::size_t j = 0; j < base.parts.size(); ++j) {
    const std::uint64_t lam = base.parts[j];
    if (p_prime_part(lam, p) % extra_red == 0) {
      rep.I.push_back(j + 1);
      j_elems.push_back(ipow(p == 0 ? 1 : p, nu_p(lam, p)));
      if (nu_p(lam, p) > 0) rep.case_iii = p == 2;
    }
    if (nu_p(lam, p) == extra_nu && p_prime_part(lam, p) % extra_red == 0) rep.condition5 = true;
  }
  rep.J = make_index_set(std::move(j_elems));
  rep.case_i = p != 2;
  rep.case_ii = p == 2 && extra_nu != 1;
  rep.hypothesis = !rep.I.empty() && (rep.case_i || rep.case_ii || rep.case_iii);

  CycleType plus = base;
  plus.parts.push_back(extra);
  IsoOracle iso(opt);
  const auto pa = build_profile(perm_elementary_divisors(base, ctx, opt), iso);
  const auto pb = build_profile(perm_elementary_divisors(plus, ctx, opt), iso);
  rep.m_equivalent = decide_M(pa, pb, iso).holds;
  rep.sg_equivalent = decide_Sg(pa, pb, iso).holds;
  rep.consistent = !rep.hypothesis || (rep.condition5 == rep.m_equivalent && rep.m_equivalent == rep.sg_equivalent);
  return rep;
}

}  // namespace cma
