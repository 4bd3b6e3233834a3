#include "qheis/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace qheis {

struct ScalarContext::Memo {
  std::mutex mutex;
  std::map<std::tuple<int, long, long>, Scalar> table;
};

namespace {

long floor_mod(long n, long p) {
  long r = n % p;
  return r < 0 ? r + p : r;
}

// Divides num and den by their joint integer content and makes the
// denominator's leading coefficient positive. Assumes no common polynomial
// factor remains.
RationalFunction scale_normalize(IntPoly num, IntPoly den) {
  if (num.is_zero()) return {IntPoly{}, IntPoly{1}};
  Integer g = content(den);
  for (const auto& c : num.coeffs()) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (den.lead() < 0) g = -g;
  if (g == 1) return {std::move(num), std::move(den)};
  auto divide = [&g](const IntPoly& p) {
    std::vector<Integer> v = p.coeffs();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
  };
  return {divide(num), divide(den)};
}

RationalFunction normalize(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return {IntPoly{}, IntPoly{1}};
  if (den.degree() > 0 && num.degree() >= 0) {
    IntPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  return scale_normalize(std::move(num), std::move(den));
}

RationalFunction normalize(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  Integer l = 1;
  for (const auto& c : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  auto clear = [&l](const RatPoly& p) {
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(Rational(c * Rational(l)).get_num());
    return IntPoly(std::move(v));
  };
  return normalize(clear(num), clear(den));
}

std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

ScalarContext::ScalarContext(ScalarMode mode, int p)
    : mode_(mode), p_(p), memo_(std::make_unique<Memo>()) {
  if (mode_ == ScalarMode::Torsion) {
    modulus_ = cyclotomic_poly(p);
    rat_modulus_ = to_rational(modulus_);
    q_powers_.reserve(p);
    for (int j = 0; j < p; ++j)
      q_powers_.push_back(reduce_mod(RatPoly::monomial(Rational(1), j), rat_modulus_));
  }
}

ScalarContext::~ScalarContext() = default;

const ScalarContext& ScalarContext::generic() {
  static const ScalarContext* instance = new ScalarContext(ScalarMode::Generic, 0);
  return *instance;
}

const ScalarContext& ScalarContext::torsion(int p) {
  if (p < 2) throw std::invalid_argument("torsion order must be at least 2, got " + std::to_string(p));
  static std::mutex mutex;
  static std::map<int, const ScalarContext*> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[p];
  if (!slot) slot = new ScalarContext(ScalarMode::Torsion, p);
  return *slot;
}

std::string ScalarContext::describe() const {
  return is_torsion() ? "torsion(p=" + std::to_string(p_) + ")" : "generic";
}

Scalar ScalarContext::memoized(int kind, long a, long b,
                               const std::function<Scalar()>& compute) const {
  const auto key = std::make_tuple(kind, a, b);
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->table.find(key); it != memo_->table.end()) return it->second;
  }
  // compute() may recurse into the memo, so it runs unlocked.
  Scalar value = compute();
  std::lock_guard lock(memo_->mutex);
  return memo_->table.try_emplace(key, std::move(value)).first->second;
}

Scalar::Scalar(const ScalarContext& ctx) : ctx_(&ctx) {
  if (ctx.is_torsion())
    value_ = RatPoly{};
  else
    value_ = RationalFunction{IntPoly{}, IntPoly{1}};
}

Scalar::Scalar(const ScalarContext& ctx, const Rational& value) : ctx_(&ctx) {
  if (ctx.is_torsion()) {
    value_ = RatPoly::constant(value);
  } else {
    IntPoly num = IntPoly(std::vector<Integer>{value.get_num()});
    IntPoly den = IntPoly(std::vector<Integer>{value.get_den()});
    value_ = RationalFunction{std::move(num), std::move(den)};
  }
}

Scalar::Scalar(const ScalarContext& ctx, RationalFunction f) : ctx_(&ctx), value_(std::move(f)) {}
Scalar::Scalar(const ScalarContext& ctx, RatPoly residue) : ctx_(&ctx), value_(std::move(residue)) {}

Scalar Scalar::q_power(const ScalarContext& ctx, long n) {
  if (ctx.is_torsion()) return Scalar(ctx, ctx.q_powers_[floor_mod(n, ctx.order())]);
  if (n >= 0)
    return Scalar(ctx, RationalFunction{IntPoly::monomial(Integer(1), n), IntPoly{1}});
  return Scalar(ctx, RationalFunction{IntPoly{1}, IntPoly::monomial(Integer(1), -n)});
}

Scalar Scalar::from_poly(const ScalarContext& ctx, const RatPoly& p) {
  if (ctx.is_torsion()) return Scalar(ctx, reduce_mod(p, ctx.rat_modulus_));
  return Scalar(ctx, normalize(p, RatPoly::constant(Rational(1))));
}

Scalar Scalar::from_fraction(const ScalarContext& ctx, const IntPoly& num, const IntPoly& den) {
  if (ctx.is_torsion()) return from_poly(ctx, to_rational(num)) / from_poly(ctx, to_rational(den));
  return Scalar(ctx, normalize(num, den));
}

void Scalar::require_same(const Scalar& o) const {
  if (ctx_ != o.ctx_)
    throw ContextMismatch("scalar context mismatch: " + ctx_->describe() + " vs " +
                          o.ctx_->describe());
}

bool Scalar::is_zero() const {
  if (ctx_->is_torsion()) return torsion_poly().is_zero();
  return generic_value().num.is_zero();
}

bool Scalar::is_one() const {
  if (ctx_->is_torsion()) return torsion_poly().is_one();
  const auto& f = generic_value();
  return f.num.is_one() && f.den.is_one();
}

bool Scalar::is_rational() const {
  if (ctx_->is_torsion()) return torsion_poly().degree() <= 0;
  const auto& f = generic_value();
  return f.num.degree() <= 0 && f.den.degree() == 0;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("scalar depends on q: " + to_string());
  if (ctx_->is_torsion()) return torsion_poly()[0];
  const auto& f = generic_value();
  Rational r(f.num[0], f.den[0]);
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-() const {
  if (ctx_->is_torsion()) return Scalar(*ctx_, -torsion_poly());
  const auto& f = generic_value();
  return Scalar(*ctx_, RationalFunction{-f.num, f.den});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (ctx_->is_torsion()) {
    std::get<RatPoly>(value_) += o.torsion_poly();
    return *this;
  }
  const auto& a = generic_value();
  const auto& b = o.generic_value();
  if (b.num.is_zero()) return *this;
  if (a.num.is_zero()) return *this = o;
  if (a.den == b.den) {
    IntPoly num = a.num + b.num;
    value_ = a.den.is_one() ? RationalFunction{std::move(num), a.den} : normalize(std::move(num), a.den);
    return *this;
  }
  // With g = gcd(den_a, den_b), only factors of g can cancel from the sum.
  const IntPoly g = gcd(a.den, b.den);
  if (g.degree() <= 0) {
    value_ = scale_normalize(a.num * b.den + b.num * a.den, a.den * b.den);
    return *this;
  }
  const IntPoly da = exact_quotient(a.den, g), db = exact_quotient(b.den, g);
  IntPoly num = a.num * db + b.num * da;
  IntPoly den = da * b.den;
  const IntPoly h = gcd(num, g);
  if (h.degree() > 0) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  value_ = scale_normalize(std::move(num), std::move(den));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (ctx_->is_torsion()) {
    value_ = reduce_mod(torsion_poly() * o.torsion_poly(), ctx_->rat_modulus_);
    return *this;
  }
  const auto& a = generic_value();
  const auto& b = o.generic_value();
  if (a.num.is_zero() || b.num.is_zero()) return *this = Scalar(*ctx_);
  if (a.den.is_one() && b.den.is_one()) {
    value_ = RationalFunction{a.num * b.num, IntPoly{1}};
    return *this;
  }
  // Cross-cancel: a.num against b.den and b.num against a.den.
  IntPoly an = a.num, ad = a.den, bn = b.num, bd = b.den;
  if (bd.degree() > 0) {
    const IntPoly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  if (ad.degree() > 0) {
    const IntPoly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  value_ = scale_normalize(an * bn, ad * bd);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar in " + ctx_->describe());
  if (ctx_->is_torsion()) return Scalar(*ctx_, inverse_mod(torsion_poly(), ctx_->rat_modulus_));
  const auto& f = generic_value();
  return Scalar(*ctx_, scale_normalize(f.den, f.num));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result = one(*ctx_);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  return a.value_ == b.value_;
}

Scalar Scalar::specialize(const ScalarContext& torsion_ctx) const {
  if (!torsion_ctx.is_torsion()) throw std::invalid_argument("specialize: target must be torsion");
  if (ctx_->is_torsion()) {
    if (ctx_ != &torsion_ctx) throw ContextMismatch("specialize: different torsion orders");
    return *this;
  }
  const auto& f = generic_value();
  Scalar den = from_poly(torsion_ctx, to_rational(f.den));
  if (den.is_zero())
    throw std::domain_error("specialize: denominator " + to_sparse_string(f.den) +
                            " vanishes at a primitive " + std::to_string(torsion_ctx.order()) +
                            "-th root of unity");
  return from_poly(torsion_ctx, to_rational(f.num)) / den;
}

std::vector<Rational> Scalar::torsion_coords() const {
  std::vector<Rational> out(ctx_->dimension());
  const auto& c = torsion_poly().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return out;
}

std::string Scalar::to_string() const {
  if (ctx_->is_torsion()) return to_sparse_string(torsion_poly());
  const auto& f = generic_value();
  if (f.den.is_one()) return to_sparse_string(f.num);
  return "(" + to_sparse_string(f.num) + ")/(" + to_sparse_string(f.den) + ")";
}

nlohmann::json Scalar::to_json() const {
  if (ctx_->is_torsion()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : torsion_coords()) arr.push_back(rational_str(c));
    return arr;
  }
  const auto& f = generic_value();
  return "(" + to_sparse_string(f.num) + ")/(" + to_sparse_string(f.den) + ")";
}

Scalar Scalar::from_json(const ScalarContext& ctx, const nlohmann::json& j) {
  if (ctx.is_torsion()) {
    if (!j.is_array() || static_cast<int>(j.size()) != ctx.dimension())
      throw std::invalid_argument("torsion scalar must be an array of " +
                                  std::to_string(ctx.dimension()) + " rational strings");
    std::vector<Rational> v;
    for (const auto& e : j) {
      if (!e.is_string()) throw std::invalid_argument("torsion scalar entries must be strings");
      Rational r;
      if (r.set_str(e.get<std::string>(), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational '" + e.get<std::string>() + "'");
      r.canonicalize();
      v.push_back(r);
    }
    return Scalar(ctx, RatPoly(std::move(v)));
  }
  if (!j.is_string()) throw std::invalid_argument("generic scalar must be a string \"(P)/(Q)\"");
  const auto s = j.get<std::string>();
  const auto mid = s.find(")/(");
  if (s.size() < 7 || s.front() != '(' || s.back() != ')' || mid == std::string::npos)
    throw std::invalid_argument("generic scalar must have the form \"(P)/(Q)\": " + s);
  IntPoly num = parse_int_poly(s.substr(1, mid - 1));
  IntPoly den = parse_int_poly(s.substr(mid + 3, s.size() - mid - 4));
  return Scalar(ctx, normalize(num, den));
}

}  // namespace qheis
