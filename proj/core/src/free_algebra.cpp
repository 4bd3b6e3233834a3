#include "qheis/free_algebra.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "qheis/qcombinatorics.hpp"

namespace qheis {

FreeWord::FreeWord(std::string s) : letters(std::move(s)) {
  for (char c : letters)
    if (c != 'A' && c != 'B') throw std::invalid_argument("free word letters must be A or B");
}

void FreePoly::add(const FreeWord& w, const Scalar& c) {
  if (c.context() != *ctx_) throw ContextMismatch("free polynomial coefficient context mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  if (a.context() != b.context()) throw ContextMismatch("free polynomial context mismatch");
  FreePoly out(a.context());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

namespace {

void accumulate(BANormalForm& nf, std::pair<long, long> key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = nf.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) nf.erase(it);
}

// Leftmost reduction, consuming letters left to right.
class LeftmostReducer {
 public:
  explicit LeftmostReducer(const ScalarContext& ctx) : ctx_(ctx) {}

  BANormalForm append(const BANormalForm& state, char letter) {
    BANormalForm out;
    if (letter == 'A') {
      for (const auto& [ab, c] : state) out.emplace(std::make_pair(ab.first, ab.second + 1), c);
      return out;
    }
    for (const auto& [ab, c] : state)
      for (const auto& [tail, t] : a_power_times_b(ab.second))
        accumulate(out, {ab.first + tail.first, tail.second}, c * t);
    return out;
  }

  // Sum over words of coeff * (start followed by word). Words arrive sorted,
  // so states of shared prefixes are reused.
  BANormalForm walk(const FreePoly& words, const BANormalForm& start) {
    BANormalForm total;
    std::vector<BANormalForm> stack{start};
    const std::string* prev = nullptr;
    for (const auto& [w, coeff] : words.terms()) {
      const std::string& s = w.letters;
      std::size_t lcp = 0;
      if (prev)
        while (lcp < prev->size() && lcp < s.size() && (*prev)[lcp] == s[lcp]) ++lcp;
      stack.resize(lcp + 1);
      for (std::size_t i = lcp; i < s.size(); ++i) stack.push_back(append(stack.back(), s[i]));
      for (const auto& [ab, c] : stack.back()) accumulate(total, ab, coeff * c);
      prev = &s;
    }
    return total;
  }

 private:
  // Normal form of A^b B. The only redex is the boundary AB:
  //   A^(b-1) (AB) -> q A^(b-1) B A + A^(b-1)
  // and A^(b-1) B A reduces as (A^(b-1) B) followed by A.
  const BANormalForm& a_power_times_b(long b) {
    if (auto it = cache_.find(b); it != cache_.end()) return it->second;
    BANormalForm nf;
    if (b == 0) {
      nf.emplace(std::make_pair(1L, 0L), Scalar::one(ctx_));
    } else {
      const Scalar q = Scalar::q_power(ctx_, 1);
      for (const auto& [ab, c] : a_power_times_b(b - 1))
        accumulate(nf, {ab.first, ab.second + 1}, q * c);
      accumulate(nf, {0, b - 1}, Scalar::one(ctx_));
    }
    return cache_.emplace(b, std::move(nf)).first->second;
  }

  const ScalarContext& ctx_;
  std::map<long, BANormalForm> cache_;
};

BANormalForm unit_state(const ScalarContext& ctx) {
  BANormalForm s;
  s.emplace(std::make_pair(0L, 0L), Scalar::one(ctx));
  return s;
}

}  // namespace

BANormalForm reduce_word(const FreePoly& w) {
  LeftmostReducer r(w.context());
  return r.walk(w, unit_state(w.context()));
}

BANormalForm reduce_word_product(const FreePoly& left, const FreePoly& right) {
  if (left.context() != right.context()) throw ContextMismatch("free polynomial context mismatch");
  LeftmostReducer r(left.context());
  return r.walk(right, r.walk(left, unit_state(left.context())));
}

BANormalForm reduce_word_explicit(const FreePoly& w, RewriteStrategy strategy, std::uint64_t seed) {
  const auto& ctx = w.context();
  const Scalar q = Scalar::q_power(ctx, 1);
  std::mt19937_64 rng(seed);
  std::map<std::string, Scalar> pending;
  BANormalForm done;

  auto push = [&](std::string s, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(s), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [word, c] : w.terms()) push(word.letters, c);

  while (!pending.empty()) {
    auto it = pending.begin();
    if (strategy == RewriteStrategy::Random)
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng));
    std::string s = it->first;
    Scalar c = it->second;
    pending.erase(it);

    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == 'A' && s[i + 1] == 'B') redexes.push_back(i);
    if (redexes.empty()) {
      long a = 0;
      while (a < static_cast<long>(s.size()) && s[a] == 'B') ++a;
      accumulate(done, {a, static_cast<long>(s.size()) - a}, c);
      continue;
    }
    std::size_t pos = redexes.front();
    if (strategy == RewriteStrategy::Rightmost)
      pos = redexes.back();
    else if (strategy == RewriteStrategy::Random)
      pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    std::string swapped = s;
    swapped[pos] = 'B';
    swapped[pos + 1] = 'A';
    push(std::move(swapped), q * c);
    push(s.substr(0, pos) + s.substr(pos + 2), c);
  }
  return done;
}

Element ba_to_cbasis(long a, long b, const ScalarContext& ctx) {
  if (a < 0 || b < 0) throw std::invalid_argument("ba_to_cbasis: exponents must be nonnegative");
  Element out(ctx);
  if (a == 0 || b == 0) {
    out.add_term({0, a - b}, Scalar::one(ctx));
    return out;
  }
  if (a <= b) {
    // B^a A^b = (B^a A^a) A^(b-a)
    for (long i = 0; i <= a; ++i) out.add_term(Monomial::c_a(i, b - a), struct_d(ctx, i, a));
  } else {
    // B^a A^b = B^(a-b) (B^b A^b)
    for (long i = 0; i <= b; ++i) out.add_term(Monomial::b_c(a - b, i), struct_d(ctx, i, b));
  }
  return out;
}

Element to_element(const BANormalForm& nf, const ScalarContext& ctx) {
  Element out(ctx);
  for (const auto& [ab, c] : nf) out += c * ba_to_cbasis(ab.first, ab.second, ctx);
  return out;
}

FreePoly cbasis_to_free(const Monomial& m, const ScalarContext& ctx) {
  FreePoly c(ctx, "AB");
  c -= FreePoly(ctx, "BA");
  FreePoly out(ctx, FreeWord{});
  for (long i = 0; i < m.k; ++i) out = out * c;
  if (m.d < 0) out = out * FreePoly(ctx, std::string(static_cast<std::size_t>(-m.d), 'A'));
  if (m.d > 0) out = FreePoly(ctx, std::string(static_cast<std::size_t>(m.d), 'B')) * out;
  return out;
}

FreePoly cbasis_to_free(const Element& x) {
  FreePoly out(x.context());
  for (const auto& [m, c] : x.terms()) out += c * cbasis_to_free(m, x.context());
  return out;
}

Element multiply_by_rewriting(const Element& x, const Element& y) {
  require_same_context(x, y);
  return to_element(reduce_word_product(cbasis_to_free(x), cbasis_to_free(y)), x.context());
}

}  // namespace qheis
