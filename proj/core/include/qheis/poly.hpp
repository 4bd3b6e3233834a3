#pragma once

// Dense univariate polynomials over Z and Q. Used as the backing store for
// both scalar modes: rational functions in q (integer coefficients) and
// residues modulo a cyclotomic polynomial (rational coefficients).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qheis {

using Integer = mpz_class;
using Rational = mpq_class;

template <class Coeff>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Coeff& c) { return Poly(std::vector<Coeff>{c}); }
  static Poly monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  const Coeff& lead() const { return c_.back(); }

  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Coeff& s) const {
    if (s == 0) return {};
    std::vector<Coeff> v = c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
  }

  // Multiply by x^n.
  Poly shifted(std::size_t n) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(n);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);

// Quotient and remainder of a / b over Q. Throws on b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact division over Z by a monic divisor; throws if the remainder is nonzero.
IntPoly exact_div(const IntPoly& a, const IntPoly& monic_divisor);

// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

// gcd of the integer coefficients (nonnegative); 0 for the zero polynomial.
Integer content(const IntPoly& p);

// p / content(p), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// Primitive gcd over Z (positive leading coefficient), by the primitive
// remainder sequence. Integer content is not included. Zero if both are zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// a / b over Z; throws if b does not divide a exactly.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

// Clears denominators and removes content; the leading coefficient is made positive.
IntPoly primitive_part(const RatPoly& p);

// Inverse of a modulo m over Q; requires gcd(a, m) = 1.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

RatPoly reduce_mod(const RatPoly& a, const RatPoly& monic_modulus);

// The n-th cyclotomic polynomial, via x^n - 1 divided by the product of
// Phi_d over proper divisors d of n.
IntPoly cyclotomic_poly(int n);

int euler_phi(int n);

// Sparse textual form in the variable `var`, descending degree, e.g. "3*q^2-q+1".
template <class Coeff>
std::string to_sparse_string(const Poly<Coeff>& p, const std::string& var = "q");

// Parses the output of to_sparse_string back (integer coefficients only).
IntPoly parse_int_poly(const std::string& text, const std::string& var = "q");

}  // namespace qheis
