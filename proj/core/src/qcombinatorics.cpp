#include "qheis/qcombinatorics.hpp"

#include <stdexcept>
#include <string>

namespace qheis {

namespace {
enum MemoKind : int { kQInt = 1, kQBinomial, kInvQMinusOne, kStructC, kStructD };

void check_struct_args(long i, long l, const char* name) {
  if (l < 1 || i < 0 || i > l)
    throw std::invalid_argument(std::string(name) + ": need l >= 1 and 0 <= i <= l, got i=" +
                                std::to_string(i) + ", l=" + std::to_string(l));
}
}  // namespace

Scalar q_int(const ScalarContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  return ctx.memoized(kQInt, n, 0, [&] {
    Scalar acc = Scalar::zero(ctx);
    for (long j = 0; j < n; ++j) acc += Scalar::q_power(ctx, j);
    return acc;
  });
}

Scalar q_binomial(const ScalarContext& ctx, long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: arguments must be nonnegative");
  if (k == 0) return Scalar::one(ctx);
  if (k > n) return Scalar::zero(ctx);
  return ctx.memoized(kQBinomial, n, k, [&] {
    return q_binomial(ctx, n - 1, k - 1) + Scalar::q_power(ctx, k) * q_binomial(ctx, n - 1, k);
  });
}

Scalar inv_q_minus_one_pow(const ScalarContext& ctx, long l) {
  return ctx.memoized(kInvQMinusOne, l, 0, [&] {
    Scalar base = Scalar::q_power(ctx, 1) - Scalar::one(ctx);
    return base.pow(-l);
  });
}

Scalar struct_c(const ScalarContext& ctx, long i, long l) {
  check_struct_args(i, l, "struct_c");
  return ctx.memoized(kStructC, i, l, [&] {
    Scalar v = inv_q_minus_one_pow(ctx, l) * Scalar::q_power(ctx, choose2(i + 1)) *
               q_binomial(ctx, l, i);
    return (l - i) % 2 == 0 ? v : -v;
  });
}

Scalar struct_d(const ScalarContext& ctx, long i, long l) {
  check_struct_args(i, l, "struct_d");
  return ctx.memoized(kStructD, i, l, [&] {
    Scalar v = inv_q_minus_one_pow(ctx, l) *
               Scalar::q_power(ctx, choose2(l - i) - choose2(l)) * q_binomial(ctx, l, i);
    return (l - i) % 2 == 0 ? v : -v;
  });
}

}  // namespace qheis
