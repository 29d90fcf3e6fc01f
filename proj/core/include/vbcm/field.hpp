#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "vbcm/error.hpp"

namespace vbcm {

using Rational = boost::multiprecision::cpp_rational;

class FieldElem;

/// Runtime choice of coefficient field: exact rationals (default) or F_p for a
/// prime p. Every arithmetic operation in the library is exact; there is no
/// floating point anywhere.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field fp(std::uint64_t p);

  bool finite() const { return p_ != 0; }
  std::uint64_t prime() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;

  /// Parses "p/q" or "p". Over F_p the value is reduced mod p; a denominator
  /// divisible by the characteristic is rejected.
  FieldElem parse(const std::string& s) const;

  std::string name() const;  // "q" or "fp:<p>"
  static Field parse_name(const std::string& s);

 private:
  std::uint64_t p_ = 0;  // 0 = rationals
};

bool is_prime_u64(std::uint64_t n);

/// One element of the configured field. Self-describing so that accidental
/// mixing of fields is caught at run time.
class FieldElem {
 public:
  FieldElem() : v_(Rational(0)) {}

  static FieldElem rational(Rational q) { return FieldElem(std::move(q)); }
  static FieldElem residue(std::uint64_t v, std::uint64_t p);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // errc::not_invertible on /0
  FieldElem operator-() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// "p/q" with q > 0 and gcd(p, q) = 1 over the rationals, a decimal residue
  /// over F_p.
  std::string to_string() const;

 private:
  struct Fp {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Fp& o) const = default;
  };

  explicit FieldElem(Rational q) : v_(std::move(q)) {}
  explicit FieldElem(Fp r) : v_(r) {}

  const Rational* rat() const { return std::get_if<Rational>(&v_); }
  const Fp* fp() const { return std::get_if<Fp>(&v_); }

  static void check_same(const FieldElem& a, const FieldElem& b);

  std::variant<Rational, Fp> v_;
};

}  // namespace vbcm
