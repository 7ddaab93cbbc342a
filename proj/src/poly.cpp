#include "cma/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cma {

namespace {

void check_ctx(const Poly& a, const Poly& b) {
  if (a.ctx() != b.ctx()) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field() != ctx_.data() && !(c.field() && c.field()->same_as(*ctx_.data())))
      throw Error(ErrorCode::CtxMismatch, "coefficient from another field");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& ctx, const FieldElem& c) { return Poly(ctx, {c}); }

Poly Poly::x(const FieldCtx& ctx) { return Poly(ctx, {ctx.zero(), ctx.one()}); }

Poly Poly::monomial(const FieldCtx& ctx, const FieldElem& c, std::size_t d) {
  std::vector<FieldElem> v(d + 1, ctx.zero());
  v[d] = c;
  return Poly(ctx, std::move(v));
}

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<long> coeffs) {
  return from_ints(ctx, std::vector<long>(coeffs));
}

Poly Poly::from_ints(const FieldCtx& ctx, const std::vector<long>& coeffs) {
  std::vector<FieldElem> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(ctx.from_int(c));
  return Poly(ctx, std::move(v));
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_.zero(); }

const FieldElem& Poly::lead() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * c_.back().inv();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ctx_);
  std::vector<FieldElem> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ctx_.from_int(static_cast<long>(i)));
  return Poly(ctx_, std::move(d));
}

FieldElem Poly::eval(const FieldElem& at) const {
  FieldElem acc = ctx_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  check_ctx(*this, g);
  Poly acc(ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(ctx_, c_[i]);
  return acc;
}

Poly Poly::operator+(const Poly& b) const {
  check_ctx(*this, b);
  std::vector<FieldElem> r(std::max(c_.size(), b.c_.size()), ctx_.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size() && i < b.c_.size())
      r[i] = c_[i] + b.c_[i];
    else
      r[i] = i < c_.size() ? c_[i] : b.c_[i];
  }
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<FieldElem> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& b) const { return *this + (-b); }

Poly Poly::operator*(const Poly& b) const {
  check_ctx(*this, b);
  if (c_.empty() || b.c_.empty()) return Poly(ctx_);
  std::vector<FieldElem> r(c_.size() + b.c_.size() - 1, ctx_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const FieldElem& s) const {
  std::vector<FieldElem> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return Poly(ctx_, std::move(r));
}

bool Poly::operator==(const Poly& b) const {
  return ctx_ == b.ctx_ && c_ == b.c_;
}

bool Poly::canonical_less(const Poly& b) const {
  check_ctx(*this, b);
  if (degree() != b.degree()) return degree() < b.degree();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != b.c_[i]) return c_[i].canonical_less(b.c_[i]);
  }
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  const bool rational = ctx_.kind() == FieldKind::Rationals;
  const bool ext = ctx_.kind() == FieldKind::Extension;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const FieldElem& c = c_[i];
    if (c.is_zero()) continue;
    bool negative = rational && sgn(c.rational()) < 0;
    std::string mag = negative ? FieldElem(-c).to_string() : c.to_string();
    if (ext && mag.find(' ') != std::string::npos) mag = "(" + mag + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  check_ctx(f, g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldCtx& ctx = f.ctx();
  if (f.degree() < g.degree()) return {Poly(ctx), f};
  std::vector<FieldElem> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const FieldElem lead_inv = g.lead().inv();
  std::vector<FieldElem> q(r.size() - dg, ctx.zero());
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i].is_zero()) continue;
    const FieldElem c = r[i] * lead_inv;
    const std::size_t shift = i - dg;
    q[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[shift + j] -= c * gc[j];
  }
  r.resize(dg);
  return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divrem(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw Error(ErrorCode::InvariantViolation, "inexact polynomial division");
  return q;
}

bool divides(const Poly& g, const Poly& f) { return (f % g).is_zero(); }

Poly gcd(const Poly& f, const Poly& g) {
  check_ctx(f, g);
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.ctx());
  return exact_div(f * g, gcd(f, g)).monic();
}

Poly pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.ctx(), f.ctx().one());
  Poly base = f;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly result = Poly::constant(m.ctx(), m.ctx().one()) % m;
  const Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

FieldElem resultant(const Poly& f, const Poly& g) {
  check_ctx(f, g);
  const FieldCtx& ctx = f.ctx();
  if (f.is_zero() || g.is_zero()) return ctx.zero();
  // res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r) with r = a mod b
  Poly a = f, b = g;
  FieldElem acc = ctx.one();
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return acc * b.lead().pow(static_cast<std::uint64_t>(da));
    if (da == 0) return acc * a.lead().pow(static_cast<std::uint64_t>(db));
    Poly r = a % b;
    if (r.is_zero()) return ctx.zero();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    acc = acc * b.lead().pow(static_cast<std::uint64_t>(da - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const FieldCtx& ctx, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::InvalidArgument, "interpolation needs matching data");
  // Newton divided differences, then Horner-style expansion of the Newton form
  const std::size_t n = xs.size();
  std::vector<FieldElem> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const FieldElem den = xs[i] - xs[i - j];
      if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "repeated interpolation abscissa");
      coef[i] = (coef[i] - coef[i - 1]) / den;
      if (i == j) break;
    }
  }
  Poly result(ctx);
  const Poly x = Poly::x(ctx);
  for (std::size_t i = n; i-- > 0;) {
    result = result * (x - Poly::constant(ctx, xs[i])) + Poly::constant(ctx, coef[i]);
  }
  return result;
}

}  // namespace cma
