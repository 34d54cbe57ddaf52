#include "wreathkit/field.hpp"

#include <cstdlib>

namespace wreathkit {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
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

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    char* end = nullptr;
    unsigned long long p = std::strtoull(s.c_str() + 3, &end, 10);
    if (end == nullptr || *end != '\0' || p == 0)
      throw Error("bad field spec: " + s);
    return prime(p);
  }
  throw Error("bad field spec: " + s + " (expected q or fp:<p>)");
}

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
  if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(f.p);
  if (r < 0) r += static_cast<long long>(f.p);
  return Scalar(static_cast<std::uint64_t>(r), f.p);
}

Scalar Scalar::from_ratio(const FieldSpec& f, long long num, long long den) {
  if (den == 0) throw Error("zero denominator");
  if (f.is_rational()) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
  }
  Scalar n = from_int(f, num);
  Scalar d = from_int(f, den);
  return n * d.inv();
}

Scalar Scalar::from_string(const FieldSpec& f, const std::string& s) {
  auto slash = s.find('/');
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  if (slash == std::string::npos) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw Error("bad integer literal: " + s);
    mpz_class r = z % static_cast<unsigned long>(f.p);
    if (r < 0) r += static_cast<unsigned long>(f.p);
    return Scalar(r.get_ui(), f.p);
  }
  Scalar n = from_string(f, s.substr(0, slash));
  Scalar d = from_string(f, s.substr(slash + 1));
  return n * d.inv();
}

FieldSpec Scalar::field() const {
  if (is_rat()) return FieldSpec::rationals();
  return FieldSpec{FieldSpec::Kind::Prime, mod().p};
}

bool Scalar::is_zero() const {
  if (is_rat()) return sgn(rat()) == 0;
  return mod().v == 0;
}

bool Scalar::is_one() const {
  if (is_rat()) return rat() == 1;
  return mod().v == 1 % mod().p;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.is_rat() != b.is_rat() || (!a.is_rat() && a.mod().p != b.mod().p))
    throw FieldMismatch(a.field().str() + " vs " + b.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (is_rat()) {
    mpq_class r = rat() + o.rat();
    r.canonicalize();
    return Scalar(std::move(r));
  }
  std::uint64_t p = mod().p;
  std::uint64_t s = mod().v + o.mod().v;
  if (s >= p) s -= p;
  return Scalar(s, p);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (is_rat()) {
    mpq_class r = rat() * o.rat();
    r.canonicalize();
    return Scalar(std::move(r));
  }
  return Scalar(mulmod(mod().v, o.mod().v, mod().p), mod().p);
}

Scalar Scalar::operator-() const {
  if (is_rat()) return Scalar(mpq_class(-rat()));
  std::uint64_t p = mod().p;
  return Scalar(mod().v == 0 ? 0 : p - mod().v, p);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw NotInvertible("scalar 0");
  if (is_rat()) return Scalar(mpq_class(1 / rat()));
  std::uint64_t p = mod().p;
  return Scalar(powmod(mod().v, p - 2, p), p);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(*this, o);
  if (is_rat()) return rat() == o.rat();
  return mod().v == o.mod().v;
}

std::string Scalar::str() const {
  if (is_rat()) return rat().get_str();
  return std::to_string(mod().v);
}

}  // namespace wreathkit
