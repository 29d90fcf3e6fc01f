#include "vbcm/field.hpp"

#include <charconv>

namespace vbcm {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(u128(a) * b % p);
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
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(errc::not_invertible, "element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::fp(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 62) || !is_prime_u64(p))
    fail(errc::invalid_argument, "field characteristic must be a prime < 2^62");
  Field f;
  f.p_ = p;
  return f;
}

std::uint64_t Field::prime() const {
  if (!finite()) fail(errc::invalid_argument, "rational field has no finite characteristic");
  return p_;
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long n) const {
  if (!finite()) return FieldElem::rational(Rational(n));
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return FieldElem::residue(static_cast<std::uint64_t>(m), p_);
}

FieldElem Field::parse(const std::string& s) const {
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (num.empty() || den.empty()) fail(errc::invalid_argument, "empty coefficient string");
  auto check_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!check_int(num) || !check_int(den))
    fail(errc::invalid_argument, "bad coefficient string: " + s);
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) fail(errc::invalid_argument, "zero denominator in coefficient: " + s);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (!finite()) return FieldElem::rational(Rational(n, d));
  boost::multiprecision::cpp_int p(p_);
  boost::multiprecision::cpp_int nr = n % p, dr = d % p;
  if (nr < 0) nr += p;
  if (dr < 0) dr += p;
  if (dr == 0) fail(errc::invalid_argument, "denominator divisible by the characteristic: " + s);
  std::uint64_t nv = nr.convert_to<std::uint64_t>();
  std::uint64_t dv = dr.convert_to<std::uint64_t>();
  return FieldElem::residue(mulmod(nv, invmod(dv, p_), p_), p_);
}

std::string Field::name() const { return finite() ? "fp:" + std::to_string(p_) : "q"; }

Field Field::parse_name(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    auto body = s.substr(3);
    auto res = std::from_chars(body.data(), body.data() + body.size(), p);
    if (res.ec != std::errc() || res.ptr != body.data() + body.size())
      fail(errc::invalid_argument, "bad field spec: " + s);
    return fp(p);
  }
  fail(errc::invalid_argument, "bad field spec (expected q or fp:<prime>): " + s);
}

FieldElem FieldElem::residue(std::uint64_t v, std::uint64_t p) { return FieldElem(Fp{v % p, p}); }

Field FieldElem::field() const {
  if (rat()) return Field::rationals();
  return Field::fp(fp()->p);
}

bool FieldElem::is_zero() const {
  if (auto* q = rat()) return *q == 0;
  return fp()->v == 0;
}

bool FieldElem::is_one() const {
  if (auto* q = rat()) return *q == 1;
  return fp()->v == 1 % fp()->p;
}

void FieldElem::check_same(const FieldElem& a, const FieldElem& b) {
  bool ok = (a.rat() && b.rat()) || (a.fp() && b.fp() && a.fp()->p == b.fp()->p);
  if (!ok) fail(errc::field_mismatch, "mixed coefficient fields in one operation");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(*this, o);
  if (auto* q = rat()) return FieldElem(*q + *o.rat());
  auto [v, p] = *fp();
  return FieldElem(Fp{(v + o.fp()->v) % p, p});
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(*this, o);
  if (auto* q = rat()) return FieldElem(*q - *o.rat());
  auto [v, p] = *fp();
  return FieldElem(Fp{(v + p - o.fp()->v) % p, p});
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(*this, o);
  if (auto* q = rat()) return FieldElem(*q * *o.rat());
  auto [v, p] = *fp();
  return FieldElem(Fp{mulmod(v, o.fp()->v, p), p});
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(errc::not_invertible, "division by zero");
  if (auto* q = rat()) return FieldElem(Rational(1) / *q);
  auto [v, p] = *fp();
  return FieldElem(Fp{invmod(v, p), p});
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  if (auto* q = rat()) return FieldElem(-*q);
  auto [v, p] = *fp();
  return FieldElem(Fp{(p - v) % p, p});
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (rat() && o.rat()) return *rat() == *o.rat();
  if (fp() && o.fp()) return *fp() == *o.fp();
  return false;
}

std::string FieldElem::to_string() const {
  if (auto* q = rat()) {
    return boost::multiprecision::numerator(*q).str() + "/" +
           boost::multiprecision::denominator(*q).str();
  }
  return std::to_string(fp()->v);
}

}  // namespace vbcm
