#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "bsv/errors.hpp"
#include "bsv/jsonx.hpp"

namespace bsv {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Canonical form: the stored polynomial in zeta_n is reduced modulo the
/// n-th cyclotomic polynomial (power basis, every exponent < phi(n)), the
/// conductor n is minimal for the value, and zero coefficients are never
/// stored. Two values are equal iff their canonical forms are identical.
/// Values are immutable; all operations return fresh values.
class Cyclotomic {
public:
  using TermMap = std::map<long, Rat>;

  Cyclotomic() = default;  // zero, conductor 1
  Cyclotomic(long v);
  Cyclotomic(const Int& v);
  explicit Cyclotomic(const Rat& v);

  /// zeta_n^k
  static Cyclotomic root_of_unity(long n, long k = 1);
  /// Arbitrary exponent->coefficient data with a declared conductor;
  /// canonicalized on construction.
  static Cyclotomic from_terms(long conductor, TermMap terms);

  long conductor() const { return conductor_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rat> as_rational() const;
  std::optional<Int> as_integer() const;

  /// Complex conjugate: zeta_n -> zeta_n^(n-1).
  Cyclotomic conj() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  bool operator==(const Cyclotomic& o) const {
    return conductor_ == o.conductor_ && terms_ == o.terms_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string str() const;

  /// Serialized form used inside table files: integer literal, "p/q"
  /// string, or {"n":..., "terms":[[exponent,num,den],...]}.
  JsonValue to_json() const;
  static Cyclotomic from_json(const JsonValue& v);

private:
  long conductor_ = 1;
  TermMap terms_;  // exponent -> nonzero coefficient, exponents < phi(n)

  void canonicalize();
};

/// Conductor guard for lcm lifts (default 10^6).
long cyclotomic_conductor_limit();
void set_cyclotomic_conductor_limit(long limit);

/// phi(n) by trial-division factorization.
long euler_phi(long n);

}  // namespace bsv
