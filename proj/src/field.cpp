#include "cma/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <random>
#include <sstream>

namespace cma {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace detail {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero residue");
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  raw_trim(r);
  return r;
}

RawPoly raw_rem(RawPoly a, const RawPoly& m, std::uint64_t p) {
  raw_trim(a);
  if (m.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial remainder by zero");
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t q = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    if (q != 0) {
      for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = submod(a[shift + j], mulmod(q, m[j], p), p);
    }
    a.pop_back();
    raw_trim(a);
  }
  return a;
}

RawPoly raw_sub(const RawPoly& a, const RawPoly& b, std::uint64_t p) {
  RawPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = submod(x, y, p);
  }
  raw_trim(r);
  return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    RawPoly r = raw_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

RawPoly raw_powmod(const RawPoly& base, const mpz_class& e, const RawPoly& m, std::uint64_t p) {
  RawPoly result = raw_rem(RawPoly{1}, m, p);
  RawPoly b = raw_rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = raw_rem(raw_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = raw_rem(raw_mul(result, b, p), m, p);
  }
  return result;
}

namespace {

RawPoly raw_inv_mod(const RawPoly& a, const RawPoly& m, std::uint64_t p) {
  // extended Euclid: track s with s*a == r (mod m)
  RawPoly r0 = m, r1 = a, s0, s1{1};
  raw_trim(r1);
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in extension field");
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    RawPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    RawPoly r = r0;
    const std::uint64_t lead_inv = invmod(r1.back(), p);
    while (r.size() >= r1.size() && !r.empty()) {
      const std::size_t shift = r.size() - r1.size();
      const std::uint64_t c = mulmod(r.back(), lead_inv, p);
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) r[shift + j] = submod(r[shift + j], mulmod(c, r1[j], p), p);
      r.pop_back();
      raw_trim(r);
    }
    raw_trim(q);
    RawPoly s2 = raw_sub(s0, raw_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant when gcd(a, m) = 1
  if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible modulo m");
  const std::uint64_t c = invmod(r0[0], p);
  for (auto& x : s0) x = mulmod(x, c, p);
  return raw_rem(s0, m, p);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool raw_is_irreducible(const RawPoly& f_in, std::uint64_t p) {
  RawPoly f = f_in;
  raw_trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  const mpz_class pz(static_cast<unsigned long>(p));
  const RawPoly x{0, 1};
  // frob[j] = x^{p^j} mod f
  std::vector<RawPoly> frob(k + 1);
  frob[0] = raw_rem(x, f, p);
  for (unsigned j = 1; j <= k; ++j) frob[j] = raw_powmod(frob[j - 1], pz, f, p);
  if (raw_sub(frob[k], frob[0], p) != RawPoly{}) return false;
  for (std::uint64_t r : prime_divisors(k)) {
    const RawPoly g = raw_gcd(raw_sub(frob[k / r], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

using detail::FieldData;

namespace {

void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field() == b.field()) return;
  if (a.field() && b.field() && a.field()->same_as(*b.field())) return;
  throw Error(ErrorCode::CtxMismatch, "field elements from different contexts");
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
  return r.get_ui();
}

std::string poly_in_y(const std::vector<std::uint64_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

// Contexts are interned so that elements never outlive their description
// and equal fields share one FieldData.
std::shared_ptr<const FieldData> intern(FieldData d) {
  using Key = std::tuple<int, std::uint64_t, unsigned, std::vector<std::uint64_t>>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const FieldData>> table;
  Key key{static_cast<int>(d.kind), d.p, d.k, d.modulus};
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto ptr = std::make_shared<const FieldData>(std::move(d));
  table.emplace(std::move(key), ptr);
  return ptr;
}

}  // namespace

FieldCtx FieldCtx::rationals() {
  static const auto q = std::make_shared<const FieldData>();
  return FieldCtx(q);
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
  if (!detail::is_prime_u64(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
  FieldData d;
  d.kind = FieldKind::Prime;
  d.p = p;
  d.k = 1;
  return FieldCtx(intern(std::move(d)));
}

FieldCtx FieldCtx::extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!detail::is_prime_u64(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be positive");
  for (auto& c : modulus) {
    if (c >= p) throw Error(ErrorCode::ParseError, "modulus coefficient out of range");
  }
  detail::raw_trim(modulus);
  if (modulus.size() != k + 1) throw Error(ErrorCode::DegreeMismatch, "modulus degree differs from k");
  if (modulus.back() != 1) throw Error(ErrorCode::NotMonic, "extension modulus must be monic");
  if (!detail::raw_is_irreducible(modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
  FieldData d;
  d.kind = FieldKind::Extension;
  d.p = p;
  d.k = k;
  d.modulus = std::move(modulus);
  return FieldCtx(intern(std::move(d)));
}

FieldCtx FieldCtx::extension_auto(std::uint64_t p, unsigned k) {
  if (!detail::is_prime_u64(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32), k};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> m(k + 1);
    for (unsigned i = 0; i < k; ++i) m[i] = dist(rng);
    m[k] = 1;
    if (detail::raw_is_irreducible(m, p)) return extension(p, k, std::move(m));
  }
}

FieldKind FieldCtx::kind() const { return d_->kind; }
std::uint64_t FieldCtx::characteristic() const { return d_->p; }
unsigned FieldCtx::degree() const { return d_->k; }
const std::vector<std::uint64_t>& FieldCtx::modulus() const { return d_->modulus; }

mpz_class FieldCtx::order() const {
  if (d_->kind == FieldKind::Rationals) return 0;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), d_->p, d_->k);
  return q;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(long v) const { return from_mpz(mpz_class(v)); }

FieldElem FieldCtx::from_mpz(const mpz_class& v) const {
  switch (d_->kind) {
    case FieldKind::Rationals: return FieldElem(d_.get(), mpq_class(v));
    case FieldKind::Prime: return FieldElem(d_.get(), reduce_mpz(v, d_->p));
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(d_->k, 0);
      c[0] = reduce_mpz(v, d_->p);
      return FieldElem(d_.get(), std::move(c));
    }
  }
  return {};
}

FieldElem FieldCtx::from_mpq(const mpq_class& v) const {
  if (d_->kind == FieldKind::Rationals) {
    mpq_class c = v;
    c.canonicalize();
    return FieldElem(d_.get(), std::move(c));
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

FieldElem FieldCtx::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  if (d_->kind != FieldKind::Extension) throw Error(ErrorCode::InvalidArgument, "coefficient vectors need an extension field");
  for (auto& c : coeffs) c %= d_->p;
  auto r = detail::raw_rem(std::move(coeffs), d_->modulus, d_->p);
  r.resize(d_->k, 0);
  return FieldElem(d_.get(), std::move(r));
}

FieldElem FieldCtx::generator() const {
  if (d_->kind != FieldKind::Extension) throw Error(ErrorCode::InvalidArgument, "generator() needs an extension field");
  return from_coeffs({0, 1});
}

FieldElem FieldCtx::parse(const std::string& text) const {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return from_mpz(mpz_class(text, 10));
    const mpz_class num(text.substr(0, slash), 10);
    const mpz_class den(text.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    if (d_->kind == FieldKind::Rationals) return from_mpq(mpq_class(num, den));
    return from_mpz(num) / from_mpz(den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "malformed field element '" + text + "'");
  }
}

std::string FieldCtx::name() const {
  switch (d_->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F_" + std::to_string(d_->p);
    case FieldKind::Extension: return "F_" + std::to_string(d_->p) + "^" + std::to_string(d_->k);
  }
  return "?";
}

bool FieldCtx::operator==(const FieldCtx& other) const {
  return d_ == other.d_ || d_->same_as(*other.d_);
}

bool FieldElem::is_zero() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return sgn(rational()) == 0;
    case FieldKind::Prime: return residue() == 0;
    case FieldKind::Extension:
      return std::all_of(coeffs().begin(), coeffs().end(), [](std::uint64_t c) { return c == 0; });
  }
  return false;
}

bool FieldElem::is_one() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return rational() == 1;
    case FieldKind::Prime: return residue() == 1;
    case FieldKind::Extension: {
      const auto& c = coeffs();
      return c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](std::uint64_t x) { return x == 0; });
    }
  }
  return false;
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
  check_same(*this, b);
  switch (f_->kind) {
    case FieldKind::Rationals: return FieldElem(f_, mpq_class(rational() + b.rational()));
    case FieldKind::Prime: return FieldElem(f_, detail::addmod(residue(), b.residue(), f_->p));
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(coeffs());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::addmod(c[i], b.coeffs()[i], f_->p);
      return FieldElem(f_, std::move(c));
    }
  }
  return {};
}

FieldElem FieldElem::operator-(const FieldElem& b) const {
  check_same(*this, b);
  switch (f_->kind) {
    case FieldKind::Rationals: return FieldElem(f_, mpq_class(rational() - b.rational()));
    case FieldKind::Prime: return FieldElem(f_, detail::submod(residue(), b.residue(), f_->p));
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(coeffs());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::submod(c[i], b.coeffs()[i], f_->p);
      return FieldElem(f_, std::move(c));
    }
  }
  return {};
}

FieldElem FieldElem::operator-() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return FieldElem(f_, mpq_class(-rational()));
    case FieldKind::Prime: return FieldElem(f_, detail::submod(0, residue(), f_->p));
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(coeffs());
      for (auto& x : c) x = detail::submod(0, x, f_->p);
      return FieldElem(f_, std::move(c));
    }
  }
  return {};
}

FieldElem FieldElem::operator*(const FieldElem& b) const {
  check_same(*this, b);
  switch (f_->kind) {
    case FieldKind::Rationals: return FieldElem(f_, mpq_class(rational() * b.rational()));
    case FieldKind::Prime: return FieldElem(f_, detail::mulmod(residue(), b.residue(), f_->p));
    case FieldKind::Extension: {
      auto c = detail::raw_rem(detail::raw_mul(coeffs(), b.coeffs(), f_->p), f_->modulus, f_->p);
      c.resize(f_->k, 0);
      return FieldElem(f_, std::move(c));
    }
  }
  return {};
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (f_->kind) {
    case FieldKind::Rationals: return FieldElem(f_, mpq_class(1 / rational()));
    case FieldKind::Prime: return FieldElem(f_, detail::invmod(residue(), f_->p));
    case FieldKind::Extension: {
      auto c = detail::raw_inv_mod(coeffs(), f_->modulus, f_->p);
      c.resize(f_->k, 0);
      return FieldElem(f_, std::move(c));
    }
  }
  return {};
}

FieldElem FieldElem::operator/(const FieldElem& b) const {
  check_same(*this, b);
  return *this * b.inv();
}

FieldElem FieldElem::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(mpz_class(-e));
  FieldElem base = *this;
  FieldElem result(f_, Repr{});
  switch (f_->kind) {
    case FieldKind::Rationals: result = FieldElem(f_, mpq_class(1)); break;
    case FieldKind::Prime: result = FieldElem(f_, std::uint64_t{1 % f_->p}); break;
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(f_->k, 0);
      c[0] = 1;
      result = FieldElem(f_, std::move(c));
      break;
    }
  }
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

bool FieldElem::operator==(const FieldElem& b) const {
  check_same(*this, b);
  return r_ == b.r_;
}

bool FieldElem::canonical_less(const FieldElem& b) const {
  check_same(*this, b);
  switch (f_->kind) {
    case FieldKind::Rationals: return rational() < b.rational();
    case FieldKind::Prime: return residue() < b.residue();
    case FieldKind::Extension: {
      const auto& x = coeffs();
      const auto& y = b.coeffs();
      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    }
  }
  return false;
}

std::string FieldElem::to_string() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::Prime: return std::to_string(residue());
    case FieldKind::Extension: return poly_in_y(coeffs());
  }
  return "?";
}

std::vector<std::string> FieldElem::encode() const {
  if (f_->kind != FieldKind::Extension) return {to_string()};
  std::vector<std::string> out;
  for (auto c : coeffs()) out.push_back(std::to_string(c));
  return out;
}

}  // namespace cma
