#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "wreathkit/errors.hpp"

namespace wreathkit {

/// Ground field: ℚ or 𝔽_p for a prime p.
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t p = 0;  // set iff kind == Prime

  static FieldSpec rationals() { return FieldSpec{Kind::Rational, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  /// "q" or "fp:<p>", the CLI syntax.
  std::string str() const;
  static FieldSpec parse(const std::string& s);

  /// Characteristic (0 for ℚ).
  std::uint64_t characteristic() const { return is_rational() ? 0 : p; }
};

/// Exact field element. Rationals are kept canonical (gcd(num,den)=1, den>0),
/// prime-field values reduced into [0, p).
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long n);
  static Scalar from_ratio(const FieldSpec& f, long long num, long long den);
  /// Parses "n" or "n/d" over ℚ, or a residue over 𝔽_p.
  static Scalar from_string(const FieldSpec& f, const std::string& s);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;  // throws NotInvertible on zero
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Mod {
    std::uint64_t v;
    std::uint64_t p;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint64_t v, std::uint64_t p) : v_(Mod{v, p}) {}

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  const Mod& mod() const { return std::get<Mod>(v_); }
  bool is_rat() const { return std::holds_alternative<mpq_class>(v_); }

  static void check_same(const Scalar& a, const Scalar& b);

  std::variant<mpq_class, Mod> v_;
};

}  // namespace wreathkit
