#pragma once

// Exact scalars for H(q).
//
// Two coefficient fields are supported:
//   * Generic: Q(q), the field of rational functions in an indeterminate q.
//     Values are reduced fractions of integer polynomials with primitive,
//     positively-led denominator, so equality is structural.
//   * Torsion: Q(zeta_p), q a primitive p-th root of unity. Values are
//     coordinate vectors over 1, q, ..., q^(phi(p)-1) modulo Phi_p.
//
// Contexts are interned: one immortal instance per mode/order, so context
// identity is pointer identity and per-context memo tables are shared.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qheis/poly.hpp"

namespace qheis {

enum class ScalarMode { Generic, Torsion };

class Scalar;

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ScalarContext {
 public:
  static const ScalarContext& generic();
  // Requires p >= 2.
  static const ScalarContext& torsion(int p);

  ~ScalarContext();
  ScalarContext(const ScalarContext&) = delete;
  ScalarContext& operator=(const ScalarContext&) = delete;

  ScalarMode mode() const { return mode_; }
  bool is_torsion() const { return mode_ == ScalarMode::Torsion; }
  // p for torsion contexts, 0 for the generic one.
  int order() const { return p_; }
  // phi(p) in torsion mode, 0 otherwise.
  int dimension() const { return static_cast<int>(modulus_.degree()); }
  const IntPoly& modulus() const { return modulus_; }
  const RatPoly& rational_modulus() const { return rat_modulus_; }
  std::string describe() const;

  friend bool operator==(const ScalarContext& a, const ScalarContext& b) { return &a == &b; }
  friend bool operator!=(const ScalarContext& a, const ScalarContext& b) { return &a != &b; }

  // Per-context memo table keyed by (kind, a, b); safe for concurrent use.
  Scalar memoized(int kind, long a, long b, const std::function<Scalar()>& compute) const;

 private:
  ScalarContext(ScalarMode mode, int p);

  ScalarMode mode_;
  int p_;
  IntPoly modulus_;
  RatPoly rat_modulus_;
  std::vector<RatPoly> q_powers_;  // q^j mod Phi_p for 0 <= j < p

  struct Memo;
  std::unique_ptr<Memo> memo_;

  friend class Scalar;
};

// Generic-mode value: num/den with num, den in Z[q], gcd 1, den primitive
// with positive leading coefficient.
struct RationalFunction {
  IntPoly num;
  IntPoly den;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

class Scalar {
 public:
  explicit Scalar(const ScalarContext& ctx);  // zero
  Scalar(const ScalarContext& ctx, const Rational& value);
  Scalar(const ScalarContext& ctx, long value) : Scalar(ctx, Rational(value)) {}

  static Scalar zero(const ScalarContext& ctx) { return Scalar(ctx); }
  static Scalar one(const ScalarContext& ctx) { return Scalar(ctx, 1); }
  // q^n for any integer n (negative allowed).
  static Scalar q_power(const ScalarContext& ctx, long n);
  // The polynomial p(q) with rational coefficients.
  static Scalar from_poly(const ScalarContext& ctx, const RatPoly& p);
  static Scalar from_fraction(const ScalarContext& ctx, const IntPoly& num, const IntPoly& den);

  const ScalarContext& context() const { return *ctx_; }

  bool is_zero() const;
  bool is_one() const;
  // True if the value lies in Q (no q dependence).
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(long n) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Generic -> torsion specialization q -> zeta_p. Throws if the
  // denominator vanishes at zeta_p.
  Scalar specialize(const ScalarContext& torsion_ctx) const;

  const RationalFunction& generic_value() const { return std::get<RationalFunction>(value_); }
  // Coordinates in the power basis, always of length phi(p).
  std::vector<Rational> torsion_coords() const;
  const RatPoly& torsion_poly() const { return std::get<RatPoly>(value_); }

  // Human-readable form: polynomial in q, or "(P)/(Q)".
  std::string to_string() const;

  // Wire format: generic as the string "(P)/(Q)"; torsion as a JSON array
  // of phi(p) strings "a/b".
  nlohmann::json to_json() const;
  static Scalar from_json(const ScalarContext& ctx, const nlohmann::json& j);

 private:
  Scalar(const ScalarContext& ctx, RationalFunction f);
  Scalar(const ScalarContext& ctx, RatPoly residue);
  void require_same(const Scalar& o) const;

  const ScalarContext* ctx_;
  std::variant<RationalFunction, RatPoly> value_;
};

}  // namespace qheis
