#ifndef POLYFIB_SEQCORE_HPP
#define POLYFIB_SEQCORE_HPP

// Exact Fibonacci and Lucas numbers for every integer index, and the
// golden-ratio constants shared by all closed forms.

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "polyfib/real.hpp"

namespace polyfib {

using SeqIndex = std::int64_t;

/// F_n for any integer n; F_{-n} = (-1)^{n-1} F_n.
mpz_class fib(SeqIndex n);
/// L_n for any integer n; L_{-n} = (-1)^n L_n.
mpz_class lucas(SeqIndex n);
/// (F_n, L_n) from a single fast-doubling pass.
std::pair<mpz_class, mpz_class> fib_lucas(SeqIndex n);

/// alpha = (1+sqrt5)/2 and its companions, all rounded to `prec` bits.
struct GoldenConstants {
  Real alpha;
  Real beta;
  Real sqrt5;
  Real log_alpha;
  Bits prec;
};

/// Throws PrecisionError when prec < kMinPrecision.
GoldenConstants golden_constants(Bits prec);

struct GoldenPowers {
  Real alpha_pow;
  Real beta_pow;
};

/// alpha^m and beta^m from (L_m +/- F_m sqrt5)/2. The component that would
/// cancel is recovered through alpha*beta = -1 instead.
GoldenPowers power_split(SeqIndex m, const GoldenConstants& c);

/// F_r L_s + F_s L_r, which equals 2 F_{r+s}.
mpz_class vajda_2f(SeqIndex r, SeqIndex s);
/// L_r L_s + 5 F_r F_s, which equals 2 L_{r+s}.
mpz_class vajda_2l(SeqIndex r, SeqIndex s);

}  // namespace polyfib

#endif  // POLYFIB_SEQCORE_HPP
