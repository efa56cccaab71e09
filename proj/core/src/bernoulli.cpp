#include "polyfib/bernoulli.hpp"

#include <cmath>
#include <string>

#include "polyfib/errors.hpp"

namespace polyfib {

const mpq_class& BernoulliCache::number(std::size_t k) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (k >= numbers_.size()) extend_locked(k);
  return numbers_[k];
}

std::size_t BernoulliCache::max_index() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return numbers_.empty() ? 0 : numbers_.size() - 1;
}

BernoulliCache& BernoulliCache::shared() {
  static BernoulliCache cache;
  return cache;
}

void BernoulliCache::extend_locked(std::size_t k) {
  // Akiyama-Tanigawa: each step appends 1/(m+1) to the row and folds it
  // down; the head of the row is then B_m with the B_1 = +1/2 convention.
  for (std::size_t m = numbers_.size(); m <= k; ++m) {
    row_.emplace_back(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      row_[j - 1] = static_cast<unsigned long>(j) * (row_[j - 1] - row_[j]);
      row_[j - 1].canonicalize();
    }
    numbers_.push_back(m == 1 ? mpq_class(-1, 2) : row_[0]);
  }
}

mpq_class bernoulli_number(std::size_t k) { return BernoulliCache::shared().number(k); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Complex bernoulli_poly(std::size_t k, const Complex& x) {
  const Bits wp = x.prec() + kGuardBits;
  BernoulliCache& cache = BernoulliCache::shared();
  Complex xw(x, wp);
  Complex acc(wp);
  for (std::size_t j = 0; j <= k; ++j) {
    mpq_class c = mpq_class(binomial(k, j)) * cache.number(j);
    if (j > 0) acc *= xw;
    if (c != 0) acc.re() += Real(c, wp);
  }
  return acc.rounded(x.prec());
}

Real bernoulli_poly(std::size_t k, const Real& x) {
  const Bits wp = x.prec() + kGuardBits;
  BernoulliCache& cache = BernoulliCache::shared();
  Real xw(x, wp);
  Real acc(wp);
  for (std::size_t j = 0; j <= k; ++j) {
    mpq_class c = mpq_class(binomial(k, j)) * cache.number(j);
    if (j > 0) acc *= xw;
    if (c != 0) acc += Real(c, wp);
  }
  return acc.rounded(x.prec());
}

EtaValue dirichlet_eta(long s, Bits prec) {
  if (s < 1) throw DomainError("eta acceleration needs s >= 1");
  // Cohen-Rodriguez Villegas-Zagier: a_k = 1/(k+1)^s are moments of a
  // positive measure on [0,1], so the error is at most 2/d_n <= 4/(3+sqrt8)^n.
  const Bits wp = prec + kGuardBits;
  const double rate = std::log2(3.0 + std::sqrt(8.0));
  const long n = static_cast<long>(std::ceil((static_cast<double>(wp) + 10.0) / rate)) + 1;
  const Bits inner = wp + 16;

  Real d = pow(Real(3L, inner) + sqrt(Real(8L, inner)), n);
  d = (d + 1L / d) / 2;
  Real b(-1L, inner);
  Real c = -d;
  Real sum(inner);
  mpz_class denom;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(s));
    Real term = c;
    mpfr_div_z(term.get(), term.get(), denom.get_mpz_t(), MPFR_RNDN);
    sum += term;
    b *= 2 * (k + n);
    b *= (k - n);
    b /= (2 * k + 1);
    b /= (k + 1);
  }
  Real value = sum / d;
  Real bound = 4L / pow(Real(3L, 64) + sqrt(Real(8L, 64)), n);
  return {value.rounded(prec), bound};
}

Real zeta_int(long m, Bits prec) {
  if (m == 1) throw PoleError("zeta has a pole at 1");
  const Bits wp = prec + kGuardBits;
  if (m <= 0) {
    const auto n = static_cast<std::size_t>(-m);
    mpq_class v = bernoulli_number(n + 1) / static_cast<unsigned long>(n + 1);
    if (n % 2 == 1) v = -v;
    return Real(v, prec);
  }
  if (m % 2 == 0) {
    // zeta(2n) = |B_{2n}| (2 pi)^{2n} / (2 (2n)!)
    mpq_class b = abs(bernoulli_number(static_cast<std::size_t>(m)));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    Real v = pow(pi(wp) * 2L, m) * mpq_class(b / (2 * fact));
    return v.rounded(prec);
  }
  EtaValue eta = dirichlet_eta(m, wp);
  Real scale = 1L - Real::exp2i(1 - m, wp);
  return (eta.value / scale).rounded(prec);
}

}  // namespace polyfib
