#ifndef POLYFIB_BERNOULLI_HPP
#define POLYFIB_BERNOULLI_HPP

// Exact Bernoulli numbers, Bernoulli polynomials at complex arguments, and
// zeta at integer arguments.

#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "polyfib/real.hpp"

namespace polyfib {

/// B_0..B_K as exact rationals with B_1 = -1/2. Grown on demand under a
/// mutex; entries never move once computed, so readers can hold references.
class BernoulliCache {
 public:
  BernoulliCache() = default;
  BernoulliCache(const BernoulliCache&) = delete;
  BernoulliCache& operator=(const BernoulliCache&) = delete;

  const mpq_class& number(std::size_t k);
  /// Largest index computed so far.
  std::size_t max_index() const;

  /// Process-wide cache shared by every evaluation routine.
  static BernoulliCache& shared();

 private:
  void extend_locked(std::size_t k);

  mutable std::mutex mutex_;
  std::deque<mpq_class> numbers_;
  // Akiyama-Tanigawa working row; row_[j] holds the j-th entry after the
  // last completed step.
  std::vector<mpq_class> row_;
};

mpq_class bernoulli_number(std::size_t k);

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// B_k(x) by the explicit sum over C(k,j) B_j x^{k-j}. The result has the
/// precision of `x`.
Complex bernoulli_poly(std::size_t k, const Complex& x);
Real bernoulli_poly(std::size_t k, const Real& x);

/// zeta(m) for integer m != 1; throws PoleError at m = 1.
Real zeta_int(long m, Bits prec);

/// Sum_{j>=1} (-1)^{j-1} / j^s with a certified error bound, s >= 1.
struct EtaValue {
  Real value;
  Real error_bound;
};
EtaValue dirichlet_eta(long s, Bits prec);

}  // namespace polyfib

#endif  // POLYFIB_BERNOULLI_HPP
