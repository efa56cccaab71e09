#include "polyfib/seqcore.hpp"

#include "polyfib/errors.hpp"

namespace polyfib {

namespace {

// Returns (F_n, F_{n+1}) for n >= 0.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
  mpz_class a = 0;  // F_k
  mpz_class b = 1;  // F_{k+1}
  int top = 63;
  while (top >= 0 && ((n >> top) & 1U) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    // F_{2k} = F_k (2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    mpz_class c = a * (2 * b - a);
    mpz_class d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

}  // namespace

std::pair<mpz_class, mpz_class> fib_lucas(SeqIndex n) {
  const std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  auto [f, f1] = fib_pair(m);
  mpz_class l = 2 * f1 - f;
  if (n < 0) {
    if (m % 2 == 0) f = -f;  // (-1)^{m-1}
    else l = -l;             // (-1)^m
  }
  return {f, l};
}

mpz_class fib(SeqIndex n) { return fib_lucas(n).first; }

mpz_class lucas(SeqIndex n) { return fib_lucas(n).second; }

GoldenConstants golden_constants(Bits prec) {
  if (prec < kMinPrecision) {
    throw PrecisionError("precision must be at least 64 bits");
  }
  const Bits wp = prec + kGuardBits;
  Real root5 = sqrt(Real(5L, wp));
  Real alpha = (root5 + 1) / 2;
  Real beta = (1 - root5) / 2;
  Real log_alpha = log(alpha);
  return GoldenConstants{alpha.rounded(prec), beta.rounded(prec), root5.rounded(prec),
                         log_alpha.rounded(prec), prec};
}

GoldenPowers power_split(SeqIndex m, const GoldenConstants& c) {
  const Bits wp = c.prec + kGuardBits;
  if (m == 0) return {Real(1L, c.prec), Real(1L, c.prec)};
  auto [f, l] = fib_lucas(m);
  Real f_root5 = Real(f, wp) * c.sqrt5;
  Real sign(m % 2 == 0 ? 1L : -1L, wp);
  if (m > 0) {
    Real a = (Real(l, wp) + f_root5) / 2;
    Real b = sign / a;
    return {a.rounded(c.prec), b.rounded(c.prec)};
  }
  Real b = (Real(l, wp) - f_root5) / 2;
  Real a = sign / b;
  return {a.rounded(c.prec), b.rounded(c.prec)};
}

mpz_class vajda_2f(SeqIndex r, SeqIndex s) {
  auto [fr, lr] = fib_lucas(r);
  auto [fs, ls] = fib_lucas(s);
  return fr * ls + fs * lr;
}

mpz_class vajda_2l(SeqIndex r, SeqIndex s) {
  auto [fr, lr] = fib_lucas(r);
  auto [fs, ls] = fib_lucas(s);
  return lr * ls + 5 * fr * fs;
}

}  // namespace polyfib
