#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include <mpfr.h>

#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"
#include "support.hpp"

using namespace polyfib;
using polyfib::testing::log2_rel;

namespace {

// B_k = -sum_{j<k} C(k+1, j) B_j / (k+1)
std::vector<mpq_class> recurrence_oracle(std::size_t n) {
  std::vector<mpq_class> b(n + 1);
  b[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), k + 1, j);
      acc += mpq_class(c) * b[j];
    }
    b[k] = -acc / static_cast<unsigned long>(k + 1);
    b[k].canonicalize();
  }
  return b;
}

Real mpfr_zeta_oracle(unsigned long m, Bits prec) {
  Real out(prec);
  mpfr_zeta_ui(out.get(), m, MPFR_RNDN);
  return out;
}

// zeta(3) = 5/2 sum (-1)^{n+1} / (n^3 C(2n, n))
Real apery_oracle(Bits prec) {
  Real sum(0L, prec + 16);
  for (unsigned long n = 1; n < prec; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    mpz_class den = c * n * n * n;
    Real term(mpq_class(1, den), prec + 16);
    if (n % 2 == 1) sum += term;
    else sum -= term;
  }
  return sum * 5L / 2L;
}

}  // namespace

TEST_CASE("bernoulli numbers match the recurrence oracle") {
  const auto oracle = recurrence_oracle(120);
  for (std::size_t k = 0; k <= 120; ++k) CHECK(bernoulli_number(k) == oracle[k]);
  CHECK(bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
  CHECK(bernoulli_number(13) == 0);
}

TEST_CASE("the shared cache is safe to grow from several threads") {
  std::vector<std::thread> pool;
  std::vector<mpq_class> seen(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &seen] { seen[t] = bernoulli_number(150 + 10 * t); });
  }
  for (auto& th : pool) th.join();
  const auto oracle = recurrence_oracle(220);
  for (int t = 0; t < 8; ++t) CHECK(seen[t] == oracle[150 + 10 * t]);
}

TEST_CASE("bernoulli polynomial identities at random complex points") {
  const Bits prec = 160;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + trial % 14;
    Complex x(Real::from_double(u(rng), prec), Real::from_double(u(rng), prec));
    // symmetry: B_k(1-x) = (-1)^k B_k(x)
    Complex left = bernoulli_poly(k, Complex(Real(1L, prec) - x, prec));
    Complex right = bernoulli_poly(k, x);
    if (k % 2 == 1) right = -right;
    CHECK(log2_rel(left, right) < -(prec - 24));
    // difference: B_k(x+1) - B_k(x) = k x^{k-1}
    Complex diff = bernoulli_poly(k, Complex(x + Real(1L, prec), prec)) - bernoulli_poly(k, x);
    Complex expect = pow(x, static_cast<long>(k) - 1) * Real(static_cast<long>(k), prec);
    CHECK(log2_rel(diff, expect) < -(prec - 24));
  }
}

TEST_CASE("bernoulli polynomials satisfy the shift recurrence") {
  const Bits prec = 128;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    double re = unit(rng), im = unit(rng);
    const double n = std::hypot(re, im);
    if (n > 1.0) { re /= n; im /= n; }
    Complex x(Real::from_double(4.0 * re, prec), Real::from_double(4.0 * im, prec));
    for (std::size_t k = 0; k <= 12; ++k) {
      Complex sum(Real(0L, prec));
      for (std::size_t j = 0; j <= k; ++j) sum += bernoulli_poly(j, x) * Real(binomial(k, j), prec);
      CHECK(log2_rel(bernoulli_poly(k, x + Real(1L, prec)), sum) < -(prec - 20));
    }
  }
}

TEST_CASE("bernoulli polynomial derivative by central differences") {
  const Bits prec = 192;
  const Real h = Real::exp2i(-prec / 3, prec);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-4.0, 4.0);
  for (int trial = 0; trial < 40; ++trial) {
    Complex x(Real::from_double(unit(rng), prec), Real::from_double(unit(rng), prec));
    for (std::size_t k = 1; k <= 12; ++k) {
      Complex fd = (bernoulli_poly(k, x + h) - bernoulli_poly(k, x - h)) / (h * 2L);
      Complex exact = bernoulli_poly(k - 1, x) * static_cast<long>(k);
      CHECK(log2_rel(fd, exact) < -(2.0 * prec / 3 - 24));
    }
  }
}

TEST_CASE("bernoulli polynomial at rational points") {
  const Bits prec = 128;
  // B_k(0) = B_k, B_k(1/2) = (2^{1-k} - 1) B_k
  for (std::size_t k = 2; k <= 30; ++k) {
    Real zero = bernoulli_poly(k, Real(0L, prec));
    CHECK(log2_rel(zero, Real(bernoulli_number(k), prec)) < -(prec - 4));
    Real half = bernoulli_poly(k, Real(mpq_class(1, 2), prec));
    mpq_class expect = (mpq_class(1, 1) / (mpz_class(1) << (k - 1)) - 1) * bernoulli_number(k);
    CHECK(log2_rel(half, Real(expect, prec)) < -(prec - 8));
  }
}

TEST_CASE("zeta at integers") {
  const Bits prec = 256;
  CHECK(zeta_int(0, prec) == Real(mpq_class(-1, 2), prec));
  CHECK(zeta_int(-1, prec) == Real(mpq_class(-1, 12), prec));
  CHECK(zeta_int(-2, prec).is_zero());
  CHECK(zeta_int(-3, prec) == Real(mpq_class(1, 120), prec));
  CHECK_THROWS_AS(zeta_int(1, prec), PoleError);
  Real pi2 = pi(prec) * pi(prec);
  CHECK(log2_rel(zeta_int(2, prec), pi2 / 6L) < -(prec - 2));
  CHECK(log2_rel(zeta_int(3, prec), apery_oracle(prec)) < -(prec - 4));
  for (long m = 2; m <= 25; ++m) {
    CHECK(log2_rel(zeta_int(m, prec), mpfr_zeta_oracle(static_cast<unsigned long>(m), prec)) <
          -(prec - 2));
  }
}

TEST_CASE("eta carries a certified bound") {
  EtaValue e = dirichlet_eta(1, 128);
  CHECK(log2_rel(e.value, log2_const(128)) < -124);
  CHECK(e.error_bound < Real::exp2i(-150, 64));
}
