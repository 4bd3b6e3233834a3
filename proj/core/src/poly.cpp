#include "qheis/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace qheis {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.lead();
    quo[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& monic_divisor) {
  if (monic_divisor.is_zero() || monic_divisor.lead() != 1)
    throw std::invalid_argument("exact_div: divisor must be monic");
  if (a.degree() < monic_divisor.degree()) {
    if (!a.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return {};
  }
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = monic_divisor.coeffs();
  const long db = monic_divisor.degree();
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Integer f = rem[i];
    quo[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("exact_div: nonzero remainder");
  return IntPoly(std::move(quo));
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.lead());
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  if (g == 1) return p;
  std::vector<Integer> w = p.coeffs();
  for (auto& c : w) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(w));
}

namespace {

// lead(b)^(deg a - deg b + 1) * a mod b, computed in place over Z.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  const Integer& lb = b.lead();
  for (long i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const Integer f = r[i];
    for (long j = 0; j < i; ++j) r[j] *= lb;
    r[i] = 0;
    for (long j = 0; j < db; ++j) r[i - db + j] -= f * bc[j];
  }
  return IntPoly(std::move(r));
}

std::size_t trailing_zeros(const IntPoly& p) {
  std::size_t v = 0;
  while (v < p.coeffs().size() && p.coeffs()[v] == 0) ++v;
  return v;
}

IntPoly drop_low(const IntPoly& p, std::size_t v) {
  if (v == 0) return p;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(v), p.coeffs().end()));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  // Powers of the variable are split off first; they are the most common
  // common factor and cost nothing to find.
  const std::size_t va = trailing_zeros(a), vb = trailing_zeros(b);
  IntPoly x = primitive_part(drop_low(a, va)), y = primitive_part(drop_low(b, vb));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (y.degree() > 0) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  IntPoly g = y.is_zero() ? x : IntPoly{1};
  return g.shifted(std::min(va, vb));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
    return {};
  }
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db + 1));
  Integer f, r;
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), b.lead().get_mpz_t());
    if (r != 0) throw std::domain_error("exact_quotient: nonzero remainder");
    quo[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("exact_quotient: nonzero remainder");
  return IntPoly(std::move(quo));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational s = c * Rational(l);
    v.push_back(s.get_num());
  }
  IntPoly out(std::move(v));
  Integer g = content(out);
  if (out.lead() < 0) g = -g;
  std::vector<Integer> w = out.coeffs();
  for (auto& c : w) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(w));
}

RatPoly reduce_mod(const RatPoly& a, const RatPoly& monic_modulus) {
  if (a.degree() < monic_modulus.degree()) return a;
  return divmod(a, monic_modulus).second;
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPoly r0 = m, r1 = reduce_mod(a, m);
  RatPoly s0{}, s1 = RatPoly::constant(Rational(1));
  if (r1.is_zero()) throw std::domain_error("inverse_mod: zero is not invertible");
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    RatPoly s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("inverse_mod: not coprime to modulus");
  return divmod(s0.scaled(Rational(1) / r0.lead()), m).second;
}

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
  static thread_local std::map<int, IntPoly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly result = IntPoly::monomial(Integer(1), static_cast<std::size_t>(n)) - IntPoly{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) result = exact_div(result, cyclotomic_poly(d));
  memo.emplace(n, result);
  return result;
}

int euler_phi(int n) {
  int result = n;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

template <class Coeff>
std::string to_sparse_string(const Poly<Coeff>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.degree(); e >= 0; --e) {
    Coeff c = p.coeffs()[e];
    if (c == 0) continue;
    bool neg = c < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (neg)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

template std::string to_sparse_string<Integer>(const IntPoly&, const std::string&);
template std::string to_sparse_string<Rational>(const RatPoly&, const std::string&);

IntPoly parse_int_poly(const std::string& text, const std::string& var) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + text + "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected digits at offset " + std::to_string(start));
    return text.substr(start, i - start);
  };
  std::map<long, Integer> terms;
  if (text == "0") return {};
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (text[i] == '+') {
      if (first) fail("leading '+'");
      ++i;
    } else if (!first) {
      fail("expected sign at offset " + std::to_string(i));
    }
    first = false;
    Integer coeff = 1;
    long exp = 0;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = Integer(read_uint());
      if (i < n && text[i] == '*') {
        ++i;
        if (text.compare(i, var.size(), var) != 0) fail("expected variable");
        i += var.size();
        exp = 1;
      }
    } else if (text.compare(i, var.size(), var) == 0) {
      i += var.size();
      exp = 1;
    } else {
      fail("expected term at offset " + std::to_string(i));
    }
    if (exp == 1 && i < n && text[i] == '^') {
      ++i;
      exp = std::stol(read_uint());
    }
    terms[exp] += sign * coeff;
  }
  std::vector<Integer> v;
  for (auto& [e, c] : terms) {
    if (static_cast<long>(v.size()) <= e) v.resize(e + 1);
    v[e] += c;
  }
  return IntPoly(std::move(v));
}

}  // namespace qheis
