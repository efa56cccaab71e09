#include "polyfib/polylog.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"
#include "polyfib/seqcore.hpp"

namespace polyfib {

namespace {

// Upper limit on the number of terms any direct summation may take.
constexpr long kMaxSeriesTerms = 4'000'000;

std::string format_k(long k) { return "Li_" + std::to_string(k); }

bool is_one(const Complex& z) { return z.im().is_zero() && z.re() == 1L; }

// Compares |z|^2 with 1 exactly: squares and their sum are formed at a
// precision wide enough to be exact for operands of z's precision.
int compare_modulus_to_one(const Complex& z) {
  const Bits exact = 4 * z.prec() + 64;
  Real re(z.re(), exact);
  Real im(z.im(), exact);
  Real n = re * re + im * im;
  auto c = n <=> 1L;
  if (c < 0) return -1;
  if (c > 0) return 1;
  return 0;
}

// 1 / j^k for j >= 1, k >= 0, divided into `x` in place.
void divide_by_power(Real& x, unsigned long j, long k, mpz_class& scratch) {
  if (k == 0) return;
  if (k == 1) {
    mpfr_div_ui(x.get(), x.get(), j, MPFR_RNDN);
    return;
  }
  mpz_ui_pow_ui(scratch.get_mpz_t(), j, static_cast<unsigned long>(k));
  mpfr_div_z(x.get(), x.get(), scratch.get_mpz_t(), MPFR_RNDN);
}

// Smallest N with (N+1) log2 r - k log2(N+1) - log2(1-r) < -target, r < 1.
long geometric_terms(double log2_r, double log2_one_minus_r, long k, double target) {
  auto excess = [&](double n) {
    return (n + 1.0) * log2_r - static_cast<double>(k) * std::log2(n + 1.0) - log2_one_minus_r + target;
  };
  double hi = 1.0;
  while (excess(hi) >= 0.0) {
    hi *= 2.0;
    if (hi > static_cast<double>(kMaxSeriesTerms)) {
      throw ConvergenceError("series needs more than " + std::to_string(kMaxSeriesTerms) +
                             " terms; argument too close to the unit circle");
    }
  }
  double lo = hi / 2.0;
  if (excess(lo) < 0.0) return static_cast<long>(lo);
  while (hi - lo > 1.0) {
    double mid = std::floor((lo + hi) / 2.0);
    if (excess(mid) < 0.0) hi = mid;
    else lo = mid;
  }
  return static_cast<long>(hi);
}

// -(2 pi i)^k / k! * B_k(w)
Complex inversion_bernoulli_term(long k, const Complex& w, Bits wp) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  Real scale = pow(pi(wp) * 2L, k);
  mpfr_div_z(scale.get(), scale.get(), fact.get_mpz_t(), MPFR_RNDN);
  Complex b = bernoulli_poly(static_cast<std::size_t>(k), w);
  // i^k
  Complex ik(wp);
  switch (((k % 4) + 4) % 4) {
    case 0: ik = Complex(Real(1L, wp), Real(0L, wp)); break;
    case 1: ik = Complex(Real(0L, wp), Real(1L, wp)); break;
    case 2: ik = Complex(Real(-1L, wp), Real(0L, wp)); break;
    default: ik = Complex(Real(0L, wp), Real(-1L, wp)); break;
  }
  return -(ik * b * scale);
}

}  // namespace

std::string_view to_string(PolylogPath path) {
  switch (path) {
    case PolylogPath::Rational: return "rational";
    case PolylogPath::ClosedLog: return "closed_log";
    case PolylogPath::DirectSeries: return "direct_series";
    case PolylogPath::LogExpansion: return "log_expansion";
    case PolylogPath::Inversion: return "inversion";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::Upper ? "upper" : "lower"; }

std::vector<mpz_class> li_nonpositive_numerator(long n) {
  if (n < 0) throw DomainError("li_nonpositive needs n >= 0");
  static std::mutex mutex;
  static std::vector<std::vector<mpz_class>> table{{mpz_class(0), mpz_class(1)}};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long>(table.size()) <= n) {
    // P_{m+1} = z(1-z) P_m' + (m+1) z P_m, with q_i = i p_i + (m+2-i) p_{i-1}.
    const auto m = static_cast<long>(table.size()) - 1;
    const std::vector<mpz_class>& p = table.back();
    std::vector<mpz_class> q(p.size() + 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      mpz_class v = 0;
      if (i < p.size()) v += static_cast<long>(i) * p[i];
      if (i >= 1) v += (m + 2 - static_cast<long>(i)) * p[i - 1];
      q[i] = v;
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    table.push_back(std::move(q));
  }
  return table[static_cast<std::size_t>(n)];
}

Complex li_nonpositive(long n, const Complex& z, Bits prec) {
  if (n < 0) throw DomainError("li_nonpositive needs n >= 0");
  if (is_one(z)) throw PoleError("Li_" + std::to_string(-n) + " has a pole at z = 1");
  const Bits wp = prec + kGuardBits;
  const std::vector<mpz_class> coeffs = li_nonpositive_numerator(n);
  Complex zw(z, wp);
  Complex num(wp);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    num *= zw;
    num.re() += Real(*it, wp);
  }
  Complex one_minus = Real(1L, wp) - zw;
  Complex den = pow(one_minus, n + 1);
  return (num / den).rounded(prec);
}

Complex li1(const Complex& z, Bits prec) {
  if (is_one(z)) throw PoleError("Li_1 has a pole at z = 1");
  const Bits wp = prec + kGuardBits;
  Complex zw(z, wp);
  Complex v = -log(Real(1L, wp) - zw);
  return v.rounded(prec);
}

PolylogValue li_series(long k, const Complex& z, Bits prec) {
  if (k < 1) throw DomainError("li_series needs k >= 1");
  const Bits wp = prec + kGuardBits;
  if (z.is_zero()) return {Complex(prec), PolylogPath::DirectSeries, Real(0L, 64)};

  const int modulus = compare_modulus_to_one(z);
  if (modulus > 0) throw DivergenceError(format_k(k) + " series diverges for |z| > 1");

  if (modulus == 0) {
    if (k == 1) throw DivergenceError("Li_1 series is not absolutely convergent on |z| = 1; use li1");
    if (is_one(z)) {
      Real v = zeta_int(k, wp);
      return {Complex(v.rounded(prec), Real(0L, prec)), PolylogPath::DirectSeries, Real(0L, 64)};
    }
    if (z.im().is_zero()) {
      // z = -1: Li_k(-1) = -eta(k)
      EtaValue eta = dirichlet_eta(k, wp);
      return {Complex((-eta.value).rounded(prec), Real(0L, prec)), PolylogPath::DirectSeries,
              eta.error_bound};
    }
    // Integral comparison: sum_{j>N} j^{-k} <= N^{1-k}/(k-1).
    const double target = static_cast<double>(wp + 8);
    const double need = (target - std::log2(static_cast<double>(k - 1))) / static_cast<double>(k - 1);
    if (need > std::log2(static_cast<double>(kMaxSeriesTerms))) {
      throw ConvergenceError(format_k(k) + " on |z| = 1 needs too many terms at this precision");
    }
    const auto n_terms = static_cast<long>(std::ceil(std::exp2(need)));
    Complex zw(z, wp);
    Complex power(Real(1L, wp));
    Complex sum(wp);
    mpz_class scratch;
    for (long j = 1; j <= n_terms; ++j) {
      power *= zw;
      Complex term = power;
      divide_by_power(term.re(), static_cast<unsigned long>(j), k, scratch);
      divide_by_power(term.im(), static_cast<unsigned long>(j), k, scratch);
      sum += term;
    }
    Real bound = pow(Real(n_terms, 64), 1 - k) / (k - 1);
    return {sum.rounded(prec), PolylogPath::DirectSeries, bound};
  }

  const Real r = abs(Complex(z, 64 + z.prec()));
  const double log2_r = log2_abs(r);
  const double log2_gap = log2_abs(1L - r);
  const long n_terms = geometric_terms(log2_r, log2_gap, k, static_cast<double>(wp + 8));

  mpz_class scratch;
  Real r64(r, 64);
  Real bound = pow(r64, n_terms + 1) / (1L - r64);
  for (long i = 0; i < k; ++i) bound /= (n_terms + 1);
  bound *= Real::from_double(1.0 + 1e-12, 64);

  if (z.is_real()) {
    Real zw(z.re(), wp);
    Real power(1L, wp);
    Real sum(wp);
    for (long j = 1; j <= n_terms; ++j) {
      power *= zw;
      Real term = power;
      divide_by_power(term, static_cast<unsigned long>(j), k, scratch);
      sum += term;
    }
    return {Complex(sum.rounded(prec), Real(0L, prec)), PolylogPath::DirectSeries, bound};
  }
  Complex zw(z, wp);
  Complex power(Real(1L, wp));
  Complex sum(wp);
  for (long j = 1; j <= n_terms; ++j) {
    power *= zw;
    Complex term = power;
    divide_by_power(term.re(), static_cast<unsigned long>(j), k, scratch);
    divide_by_power(term.im(), static_cast<unsigned long>(j), k, scratch);
    sum += term;
  }
  return {sum.rounded(prec), PolylogPath::DirectSeries, bound};
}

PolylogValue li_log_expansion(long k, const Complex& z, Bits prec, Side side) {
  if (k < 2) throw DomainError("li_log_expansion needs k >= 2");
  if (z.is_zero()) throw DomainError("li_log_expansion undefined at z = 0");
  Bits wp = prec + kGuardBits;

  if (is_one(z)) {
    Real v = zeta_int(k, wp);
    return {Complex(v.rounded(prec), Real(0L, prec)), PolylogPath::LogExpansion, Real(0L, 64)};
  }

  // Magnitude of u decides the cancellation headroom.
  Complex u0 = log(Complex(z, wp));
  const double mag = abs(u0).to_double();
  if (!(mag < 2.0 * M_PI)) throw DomainError("li_log_expansion needs |log z| < 2 pi");
  wp += static_cast<Bits>(std::ceil(mag * 1.4427)) + 8;

  Complex zw(z, wp);
  Complex u = log(zw);
  Complex log_minus_u(wp);
  const Real pi_w = pi(wp);
  if (z.is_real() && z.re() > 1L) {
    // u > 0 on the cut; z + i0 gives -u - i0.
    Real lu = log(u.re());
    log_minus_u = Complex(lu, side == Side::Upper ? -pi_w : pi_w);
  } else {
    log_minus_u = log(-u);
  }

  const double q = mag / (2.0 * M_PI);
  // Tail from n = N+1 is at most 4 |u|^{k-1} q^{N+2-k} / (1-q).
  const double lead = 2.0 + static_cast<double>(k - 1) * std::log2(std::max(mag, 1e-300)) -
                      std::log2(1.0 - q);
  const double per = std::log2(q);
  long n_max = k;
  const double target = -static_cast<double>(wp + 8);
  while (lead + per * static_cast<double>(n_max + 2 - k) >= target) {
    ++n_max;
    if (n_max > 100000) throw ConvergenceError("li_log_expansion: too many terms");
  }

  Complex sum(wp);
  Complex u_pow(Real(1L, wp));  // u^n / n!
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) {
      u_pow *= u;
      u_pow /= Real(n, wp);
    }
    if (n == k - 1) {
      Real harmonic(0L, wp);
      for (long j = 1; j <= k - 1; ++j) harmonic += Real(1L, wp) / j;
      sum += u_pow * (Complex(harmonic) - log_minus_u);
      continue;
    }
    const long arg = k - n;
    if (arg <= 0 && (-arg) % 2 == 0 && arg != 0) continue;  // trivial zeros
    Real zeta = zeta_int(arg, wp);
    if (zeta.is_zero()) continue;
    sum += u_pow * zeta;
  }

  Real bound = Real::exp2i(2, 64) * pow(Real::from_double(mag, 64), k - 1) *
               pow(Real::from_double(q, 64), n_max + 2 - k) / (1L - Real::from_double(q, 64));
  Complex out = sum.rounded(prec);
  // real below the cut
  if (z.im().is_zero() && z.re() < 1L) out.im() = Real(0L, prec);
  return {out, PolylogPath::LogExpansion, bound};
}

PolylogValue li_inversion(long k, const Real& z, Bits prec, Side side) {
  if (k < 1) throw DomainError("li_inversion needs k >= 1");
  if (!(abs(z) > 1L)) throw DomainError("li_inversion needs |z| > 1");
  const Bits wp = prec + kGuardBits;
  Real zw(z, wp);
  const Real two_pi = pi(wp) * 2L;
  Complex w(wp);
  if (zw.sign() < 0) {
    // log(-|z| ) = log|z| + i pi  =>  w = 1/2 + log|z|/(2 pi i)
    w = Complex(Real(1L, wp) / 2L, -log(-zw) / two_pi);
  } else {
    Real im = -log(zw) / two_pi;
    w = Complex(Real(side == Side::Upper ? 0L : 1L, wp), im);
  }
  Complex b_term = inversion_bernoulli_term(k, w, wp);
  PolylogValue inner = li_series(k, Complex(Real(1L, wp) / zw), wp);
  Complex value = (k % 2 == 0) ? b_term - inner.value : b_term + inner.value;
  Complex out = value.rounded(prec);
  if (z.sign() < 0) {
    Real limit = Real::exp2i(16 - prec, 64) * abs(out.re());
    if (abs(out.im()) > limit) {
      throw std::logic_error("li_inversion: non-real value for z < -1");
    }
    out.im() = Real(0L, prec);
  }
  return {out, PolylogPath::Inversion, inner.tail_bound};
}

PolylogValue li(long k, const Complex& z, Bits prec, Side side) {
  if (k <= 0) {
    return {li_nonpositive(-k, z, prec), PolylogPath::Rational, Real(0L, 64)};
  }
  const bool real_axis = z.im().is_zero();
  if (real_axis && z.re() > 1L) return li_inversion(k, z.re(), prec, side);
  if (k == 1) return {li1(z, prec), PolylogPath::ClosedLog, Real(0L, 64)};
  const int modulus = compare_modulus_to_one(z);
  if (real_axis) {
    if (modulus <= 0) return li_series(k, z, prec);
    return li_inversion(k, z.re(), prec, side);
  }
  // Off the axis the log expansion covers the annulus up to the circle,
  // including points that are unimodular only up to rounding.
  const Real n = norm(Complex(z, 64));
  if (n >= Real::from_double(0.5625, 64) &&
      n <= 1L + Real::exp2i(8 - static_cast<long>(z.prec()), 64)) {
    return li_log_expansion(k, z, prec, side);
  }
  if (modulus < 0) return li_series(k, z, prec);
  throw DomainError(format_k(k) + " is only continued along the real axis for |z| > 1");
}

Real re_li_on_imaginary_axis(long k, const Real& y, Bits prec) {
  if (k < 1) throw DomainError("re_li_on_imaginary_axis needs k >= 1");
  const Bits wp = prec + kGuardBits;
  Real yw(y, wp);
  Real arg = -(yw * yw);
  if (arg.is_zero()) return Real(0L, prec);
  PolylogValue v = li(k, arg, wp);
  return ldexp(v.value.re(), -k).rounded(prec);
}

std::pair<Real, Real> li1_polar_parts(const Real& z, const Real& x, Bits prec) {
  if (!(abs(z) < 1L)) throw DomainError("li1_polar_parts needs |z| < 1");
  const Bits wp = prec + kGuardBits;
  Real zw(z, wp);
  Real xw(x, wp);
  Real c = cos(xw);
  Real s = sin(xw);
  Real re = -log(1L - 2L * zw * c + zw * zw) / 2L;
  Real im = atan(zw * s / (1L - zw * c));
  return {re.rounded(prec), im.rounded(prec)};
}

std::string_view to_string(DilogIdentity id) {
  switch (id) {
    case DilogIdentity::Landen: return "landen";
    case DilogIdentity::ShiftedInverse: return "shifted_inverse";
    case DilogIdentity::Duplication: return "duplication";
    case DilogIdentity::Inversion: return "inversion";
    case DilogIdentity::Reflection: return "reflection";
    case DilogIdentity::TwoVariable: return "two_variable";
    case DilogIdentity::FiveTerm: return "five_term";
  }
  return "?";
}

std::string_view to_string(TrilogIdentity id) {
  return id == TrilogIdentity::Duplication ? "duplication" : "inversion";
}

bool in_domain(DilogIdentity id, const Real& x, const Real& y) {
  switch (id) {
    case DilogIdentity::Landen: return x < 1L;
    case DilogIdentity::ShiftedInverse: return x > 0L;
    case DilogIdentity::Duplication: return abs(x) < 1L;
    case DilogIdentity::Inversion: return x > 0L;
    case DilogIdentity::Reflection: return x > 0L && x < 1L;
    case DilogIdentity::TwoVariable: {
      if (!(x < 1L && y < 1L)) return false;
      Real xy = x * y;
      if (!(xy < 1L)) return false;
      Real d = 1L - xy;
      return x * (1L - y) / d < 1L && y * (1L - x) / d < 1L;
    }
    case DilogIdentity::FiveTerm: {
      if (!(x < 1L && y < 1L)) return false;
      return (x / (1L - x)) * (y / (1L - y)) < 1L && x / (1L - y) < 1L && y / (1L - x) < 1L;
    }
  }
  return false;
}

bool in_domain(TrilogIdentity id, const Real& x) {
  return id == TrilogIdentity::Duplication ? abs(x) < 1L : x > 0L;
}

Real dilog_functional_equation(DilogIdentity id, const Real& x, const Real& y, Bits prec) {
  if (!in_domain(id, x, y)) {
    throw DomainError(std::string("argument outside the domain of the ") +
                      std::string(to_string(id)) + " dilogarithm identity");
  }
  const Bits wp = prec + kGuardBits;
  auto li2 = [wp](const Real& t) { return li(2, Real(t, wp), wp).value.re(); };
  Real xw(x, wp);
  Real yw(y, wp);
  const Real pi2 = pi(wp) * pi(wp);
  Real lhs(wp);
  Real rhs(wp);
  switch (id) {
    case DilogIdentity::Landen: {
      lhs = li2(xw) + li2(xw / (xw - 1L));
      Real l = log(1L - xw);
      rhs = -(l * l) / 2L;
      break;
    }
    case DilogIdentity::ShiftedInverse: {
      lhs = li2(1L / (xw + 1L)) - li2(-xw);
      rhs = pi2 / 6L - log(xw + 1L) * log((xw + 1L) / (xw * xw)) / 2L;
      break;
    }
    case DilogIdentity::Duplication:
      lhs = li2(xw) + li2(-xw);
      rhs = li2(xw * xw) / 2L;
      break;
    case DilogIdentity::Inversion: {
      lhs = li2(-xw) + li2(-(1L / xw));
      Real l = log(xw);
      rhs = -pi2 / 6L - l * l / 2L;
      break;
    }
    case DilogIdentity::Reflection:
      lhs = li2(xw) + li2(1L - xw);
      rhs = pi2 / 6L - log(xw) * log(1L - xw);
      break;
    case DilogIdentity::TwoVariable: {
      Real xy = xw * yw;
      Real d = 1L - xy;
      lhs = li2(xy);
      rhs = li2(xw) + li2(yw) - li2(xw * (1L - yw) / d) - li2(yw * (1L - xw) / d) -
            log((1L - xw) / d) * log((1L - yw) / d);
      break;
    }
    case DilogIdentity::FiveTerm: {
      Real a = xw / (1L - xw);
      Real b = yw / (1L - yw);
      lhs = li2(a * b);
      rhs = li2(xw / (1L - yw)) + li2(yw / (1L - xw)) - li2(xw) - li2(yw) -
            log(1L - xw) * log(1L - yw);
      break;
    }
  }
  return abs(lhs - rhs).rounded(prec);
}

Real trilog_functional_equation(TrilogIdentity id, const Real& x, Bits prec) {
  if (!in_domain(id, x)) {
    throw DomainError(std::string("argument outside the domain of the ") +
                      std::string(to_string(id)) + " trilogarithm identity");
  }
  const Bits wp = prec + kGuardBits;
  auto li3 = [wp](const Real& t) { return li(3, Real(t, wp), wp).value.re(); };
  Real xw(x, wp);
  Real lhs(wp);
  Real rhs(wp);
  if (id == TrilogIdentity::Duplication) {
    lhs = li3(xw) + li3(-xw);
    rhs = li3(xw * xw) / 4L;
  } else {
    lhs = li3(-xw) - li3(-(1L / xw));
    Real l = log(xw);
    rhs = -(pi(wp) * pi(wp)) * l / 6L - l * l * l / 6L;
  }
  return abs(lhs - rhs).rounded(prec);
}

std::vector<SpecialValue> all_special_values() {
  return {SpecialValue::Li2_minus_beta,
          SpecialValue::Li2_beta,
          SpecialValue::Li2_beta_squared,
          SpecialValue::Li2_minus_alpha,
          SpecialValue::Li2_sum_minus_alpha_minus_beta,
          SpecialValue::Li2_diff_minus_alpha_minus_beta,
          SpecialValue::Li2_beta_plus_beta_squared,
          SpecialValue::Li2_minus_beta_minus_beta,
          SpecialValue::Li2_sum_minus_alpha2_minus_beta2,
          SpecialValue::Li2_sum_minus_alpha3_minus_beta3,
          SpecialValue::Li2_sum_half_alpha_half_beta,
          SpecialValue::Li3_beta_squared,
          SpecialValue::Li3_beta_minus_minus_alpha,
          SpecialValue::Li3_sum_minus_alpha_minus_beta};
}

std::string_view to_string(SpecialValue v) {
  switch (v) {
    case SpecialValue::Li2_minus_beta: return "Li2_minus_beta";
    case SpecialValue::Li2_beta: return "Li2_beta";
    case SpecialValue::Li2_beta_squared: return "Li2_beta_squared";
    case SpecialValue::Li2_minus_alpha: return "Li2_minus_alpha";
    case SpecialValue::Li2_sum_minus_alpha_minus_beta: return "Li2_sum_minus_alpha_minus_beta";
    case SpecialValue::Li2_diff_minus_alpha_minus_beta: return "Li2_diff_minus_alpha_minus_beta";
    case SpecialValue::Li2_beta_plus_beta_squared: return "Li2_beta_plus_beta_squared";
    case SpecialValue::Li2_minus_beta_minus_beta: return "Li2_minus_beta_minus_beta";
    case SpecialValue::Li2_sum_minus_alpha2_minus_beta2: return "Li2_sum_minus_alpha2_minus_beta2";
    case SpecialValue::Li2_sum_minus_alpha3_minus_beta3: return "Li2_sum_minus_alpha3_minus_beta3";
    case SpecialValue::Li2_sum_half_alpha_half_beta: return "Li2_sum_half_alpha_half_beta";
    case SpecialValue::Li3_beta_squared: return "Li3_beta_squared";
    case SpecialValue::Li3_beta_minus_minus_alpha: return "Li3_beta_minus_minus_alpha";
    case SpecialValue::Li3_sum_minus_alpha_minus_beta: return "Li3_sum_minus_alpha_minus_beta";
  }
  return "?";
}

SpecialValue special_value_from_string(std::string_view name) {
  for (SpecialValue v : all_special_values()) {
    if (to_string(v) == name) return v;
  }
  throw UnknownIdError("unknown special value: " + std::string(name));
}

Real special_value(SpecialValue v, Bits prec) {
  const Bits wp = prec + kGuardBits;
  const GoldenConstants g = golden_constants(wp);
  const Real& la = g.log_alpha;
  const Real la2 = la * la;
  const Real la3 = la2 * la;
  const Real p = pi(wp);
  const Real p2 = p * p;
  Real out(wp);
  switch (v) {
    case SpecialValue::Li2_minus_beta: out = p2 / 10L - la2; break;
    case SpecialValue::Li2_beta: out = -p2 / 15L + la2 / 2L; break;
    case SpecialValue::Li2_beta_squared: out = p2 / 15L - la2; break;
    case SpecialValue::Li2_minus_alpha: out = -p2 / 10L - la2; break;
    case SpecialValue::Li2_sum_minus_alpha_minus_beta: out = -2L * la2; break;
    case SpecialValue::Li2_diff_minus_alpha_minus_beta: out = -p2 / 5L; break;
    case SpecialValue::Li2_beta_plus_beta_squared: out = -la2 / 2L; break;
    case SpecialValue::Li2_minus_beta_minus_beta: out = p2 / 6L - 3L * la2 / 2L; break;
    case SpecialValue::Li2_sum_minus_alpha2_minus_beta2: out = -p2 / 6L - 2L * la2; break;
    case SpecialValue::Li2_sum_minus_alpha3_minus_beta3: out = -p2 / 12L - 6L * la2; break;
    case SpecialValue::Li2_sum_half_alpha_half_beta: {
      Real l2 = log2_const(wp);
      out = p2 / 12L + 2L * la2 - l2 * l2;
      break;
    }
    case SpecialValue::Li3_beta_squared:
      out = 4L * zeta_int(3, wp) / 5L - 2L * p2 * la / 15L + 2L * la3 / 3L;
      break;
    case SpecialValue::Li3_beta_minus_minus_alpha: out = p2 * la / 6L + la3 / 6L; break;
    case SpecialValue::Li3_sum_minus_alpha_minus_beta:
      out = zeta_int(3, wp) / 5L - p2 * la / 5L;
      break;
  }
  return out.rounded(prec);
}

}  // namespace polyfib
