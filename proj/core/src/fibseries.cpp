#include "polyfib/fibseries.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"

namespace polyfib {

namespace {

constexpr long kMaxDirectTerms = 2'000'000;
constexpr long kMaxAbelTerms = 4000;

long parity(SeqIndex n) { return ((n % 2) + 2) % 2; }
long sign_pow(SeqIndex n) { return parity(n) == 0 ? 1 : -1; }  // (-1)^n

bool is_fib(Family f) { return f == Family::F; }

void require_linear(const SeriesSpec& spec, const char* what) {
  if (spec.is_product()) {
    throw DomainError(std::string(what) + " is only defined for the F and L families");
  }
}

// X_{n} for the F or L sequence.
mpz_class seq(bool fibonacci, SeqIndex n) { return fibonacci ? fib(n) : lucas(n); }

// Y_j = X_{rj+s} by Y_{j+1} = L_r Y_j - (-1)^r Y_{j-1}.
class LinearStepper {
 public:
  LinearStepper(bool fibonacci, SeqIndex r, SeqIndex s)
      : lr_(lucas(r)), sr_(sign_pow(r)), prev_(seq(fibonacci, s - r)), cur_(seq(fibonacci, s)) {}

  const mpz_class& current() const { return cur_; }
  void advance() {
    mpz_class next = lr_ * cur_ - sr_ * prev_;
    prev_ = std::move(cur_);
    cur_ = std::move(next);
  }

 private:
  mpz_class lr_;
  long sr_;
  mpz_class prev_;
  mpz_class cur_;
};

// Produces X_j for j = 0, 1, 2, ...
class TermStepper {
 public:
  TermStepper(Family family, SeqIndex r, SeqIndex s)
      : product_(family == Family::FF || family == Family::FL || family == Family::LL),
        first_(family != Family::L && family != Family::LL, r, product_ ? 0 : s),
        second_(family == Family::FF, s, 0) {
    update();
  }

  const mpz_class& value() const { return value_; }
  void advance() {
    first_.advance();
    if (product_) second_.advance();
    update();
  }

 private:
  void update() { value_ = product_ ? first_.current() * second_.current() : first_.current(); }

  bool product_;
  LinearStepper first_;
  LinearStepper second_;
  mpz_class value_;
};

// Multiplies x by j^{-k} in place (k may be negative).
void scale_by_index_power(Real& x, unsigned long j, long k, mpz_class& scratch) {
  if (k == 0) return;
  const auto e = static_cast<unsigned long>(k > 0 ? k : -k);
  mpz_ui_pow_ui(scratch.get_mpz_t(), j, e);
  if (k > 0) mpfr_div_z(x.get(), x.get(), scratch.get_mpz_t(), MPFR_RNDN);
  else mpfr_mul_z(x.get(), x.get(), scratch.get_mpz_t(), MPFR_RNDN);
}

// Coefficients c_i and real ratios q_i with sum_j z^j j^{-k} X_j = sum_i c_i Li_k(q_i z).
struct LiTerm {
  Real coef;
  Real ratio;
};

std::vector<LiTerm> polylog_terms(const SeriesSpec& spec, Bits wp) {
  const GoldenConstants g = golden_constants(wp);
  const SeqIndex r = spec.r;
  const SeqIndex s = spec.s;
  std::vector<LiTerm> out;
  if (!spec.is_product()) {
    const GoldenPowers p = power_split(r, g);
    auto [fs, ls] = fib_lucas(s);
    Real f(fs, wp);
    Real l(ls, wp);
    Real even, odd;
    if (is_fib(spec.family)) {
      even = f / 2L;
      odd = l / (g.sqrt5 * 2L);
    } else {
      even = l / 2L;
      odd = f * g.sqrt5 / 2L;
    }
    out.push_back({even + odd, p.alpha_pow});
    out.push_back({even - odd, p.beta_pow});
    return out;
  }
  const GoldenPowers sum = power_split(s + r, g);
  const GoldenPowers diff = power_split(s - r, g);
  const long sr = sign_pow(r);
  Real cross_a = diff.alpha_pow * sr;
  Real cross_b = diff.beta_pow * sr;
  Real one(1L, wp);
  switch (spec.family) {
    case Family::FF: {
      Real fifth = one / 5L;
      out.push_back({fifth, sum.alpha_pow});
      out.push_back({fifth, sum.beta_pow});
      out.push_back({-fifth, cross_a});
      out.push_back({-fifth, cross_b});
      break;
    }
    case Family::FL: {
      Real inv = one / g.sqrt5;
      out.push_back({inv, sum.alpha_pow});
      out.push_back({-inv, sum.beta_pow});
      if (s == r) break;  // the cross terms cancel
      out.push_back({-inv, cross_a});
      out.push_back({inv, cross_b});
      break;
    }
    default:
      out.push_back({one, sum.alpha_pow});
      out.push_back({one, sum.beta_pow});
      out.push_back({one, cross_a});
      out.push_back({one, cross_b});
      break;
  }
  return out;
}

// (2 pi i)^k / k!
Complex two_pi_i_power(long k, Bits wp, long divide_pow2 = 0) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  Real m = pow(pi(wp) * 2L, k);
  mpfr_div_z(m.get(), m.get(), fact.get_mpz_t(), MPFR_RNDN);
  m = ldexp(m, -divide_pow2);
  switch (k % 4) {
    case 0: return Complex(m, Real(0L, wp));
    case 1: return Complex(Real(0L, wp), m);
    case 2: return Complex(-m, Real(0L, wp));
    default: return Complex(Real(0L, wp), -m);
  }
}

Complex real_or_throw(const Complex& v, Bits prec, const char* what) {
  Real scale = max(Real(1L, 64), abs(v.re()));
  if (abs(v.im()) > Real::exp2i(16 - static_cast<long>(prec), 64) * scale) {
    throw std::logic_error(std::string(what) + ": closed form is not real");
  }
  return Complex(v.re(), Real(0L, v.re().prec()));
}

Real log_alpha(Bits wp) { return golden_constants(wp).log_alpha; }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::L: return "L";
    case Family::FF: return "FF";
    case Family::FL: return "FL";
    case Family::LL: return "LL";
  }
  return "?";
}

std::string_view to_string(Weight w) {
  switch (w) {
    case Weight::Plain: return "plain";
    case Weight::Alternating: return "alternating";
    case Weight::Quarter: return "quarter";
    case Weight::TrigCos: return "cos";
    case Weight::TrigSin: return "sin";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::PolylogForm: return "polylog_form";
    case Method::BernoulliForm: return "bernoulli_form";
    case Method::RationalGf: return "rational_gf";
    case Method::LogForm: return "log_form";
    case Method::TrigForm: return "trig_form";
    case Method::AbelOracle: return "abel_oracle";
    case Method::NamedConstant: return "named_constant";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::F, Family::L, Family::FF, Family::FL, Family::LL}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family: " + std::string(name));
}

Weight weight_from_string(std::string_view name) {
  for (Weight w : {Weight::Plain, Weight::Alternating, Weight::Quarter, Weight::TrigCos, Weight::TrigSin}) {
    if (to_string(w) == name) return w;
  }
  throw DomainError("unknown weight: " + std::string(name));
}

mpz_class family_term(Family family, SeqIndex r, SeqIndex s, SeqIndex j) {
  switch (family) {
    case Family::F: return fib(r * j + s);
    case Family::L: return lucas(r * j + s);
    case Family::FF: return fib(r * j) * fib(s * j);
    case Family::FL: return fib(r * j) * lucas(s * j);
    case Family::LL: return lucas(r * j) * lucas(s * j);
  }
  return 0;
}

Real growth_ratio(const SeriesSpec& spec, Bits prec) {
  const Bits wp = std::max<Bits>(prec, kMinPrecision);
  const GoldenConstants g = golden_constants(wp);
  const SeqIndex e = spec.is_product() ? std::llabs(spec.r) + std::llabs(spec.s) : std::llabs(spec.r);
  Real base(1L, wp);
  if (spec.weight == Weight::Plain || spec.weight == Weight::TrigCos || spec.weight == Weight::TrigSin) {
    base = abs(Complex(spec.z, wp));
  }
  return base * power_split(e, g).alpha_pow;
}

SeriesValue direct_sum(const SeriesSpec& spec, Bits prec) {
  const Bits wp = prec + kGuardBits;
  if (spec.start != 0 && spec.start != 1) throw DomainError("series start must be 0 or 1");
  if (spec.start == 0 && spec.k != 0) throw DomainError("the j = 0 term needs k = 0");
  const bool trig = spec.weight == Weight::TrigCos || spec.weight == Weight::TrigSin;
  if (trig && !spec.z.is_real()) throw DomainError("trigonometric weights need real z");

  const bool plain_zero = (spec.weight == Weight::Plain || trig) && spec.z.is_zero();
  const Real rho = growth_ratio(spec, 64);
  if (!plain_zero && !(rho < 1L)) {
    throw DivergenceError("series diverges: growth ratio " + rho.to_string(6) +
                          " >= 1; use a closed form or the Abel oracle");
  }

  // Tail: |t_j| <= C rho^j j^{-k}.
  const double log2_rho = plain_zero ? -1e9 : log2_abs(rho);
  double log2_c = 0.0;
  const double log2_alpha = 0.6942419136306174;
  switch (spec.family) {
    case Family::F: log2_c = std::fabs(static_cast<double>(spec.s)) * log2_alpha; break;
    case Family::L: log2_c = 1.0 + std::fabs(static_cast<double>(spec.s)) * log2_alpha; break;
    case Family::FF: log2_c = 0.0; break;
    case Family::FL: log2_c = 1.0; break;
    case Family::LL: log2_c = 2.0; break;
  }
  const double target = -static_cast<double>(wp + 8);
  const double kabs = std::fabs(static_cast<double>(spec.k));
  auto log2_bound = [&](double n) -> double {
    const double head = log2_c + (n + 1.0) * log2_rho;
    if (spec.k >= 0) {
      return head - static_cast<double>(spec.k) * std::log2(n + 1.0) - std::log2(1.0 - std::exp2(log2_rho));
    }
    const double log2_q = log2_rho + kabs * std::log2((n + 2.0) / (n + 1.0));
    if (log2_q >= -1e-12) return 1e9;
    return head + kabs * std::log2(n + 1.0) - std::log2(1.0 - std::exp2(log2_q));
  };
  long n_terms = 0;
  if (!plain_zero) {
    double hi = 1.0;
    while (log2_bound(hi) >= target) {
      hi *= 2.0;
      if (hi > static_cast<double>(kMaxDirectTerms)) {
        throw ConvergenceError("direct summation needs more than " + std::to_string(kMaxDirectTerms) + " terms");
      }
    }
    double lo = std::floor(hi / 2.0);
    while (hi - lo > 1.0) {
      const double mid = std::floor((lo + hi) / 2.0);
      if (log2_bound(mid) < target) hi = mid;
      else lo = mid;
    }
    n_terms = static_cast<long>(hi);
  }

  TermStepper stepper(spec.family, spec.r, spec.s);
  mpz_class scratch;
  Complex sum(wp);

  Complex step(wp);  // multiplier for the weight power
  if (spec.weight == Weight::Plain) step = Complex(spec.z, wp);
  if (trig) step = polar(Real(spec.x, wp)) * Real(spec.z.re(), wp);
  Complex power(Real(1L, wp));

  auto weighted = [&](long j, const Real& magnitude) -> Complex {
    switch (spec.weight) {
      case Weight::Plain: return power * magnitude;
      case Weight::Alternating: return Complex(j % 2 == 1 ? magnitude : -magnitude);
      case Weight::Quarter: {
        const long m = j % 4;
        if (m == 1 || m == 3) return Complex(wp);
        return Complex(m == 2 ? magnitude : -magnitude);
      }
      case Weight::TrigCos: return Complex(power.re() * magnitude);
      case Weight::TrigSin: return Complex(power.im() * magnitude);
    }
    return Complex(wp);
  };

  if (spec.start == 0) sum += weighted(0, Real(stepper.value(), wp));
  for (long j = 1; j <= n_terms; ++j) {
    stepper.advance();
    if (spec.weight == Weight::Plain || trig) power *= step;
    Real magnitude(stepper.value(), wp);
    scale_by_index_power(magnitude, static_cast<unsigned long>(j), spec.k, scratch);
    sum += weighted(j, magnitude);
  }

  Real bound = plain_zero ? Real(0L, 64)
                          : Real::exp2i(static_cast<long>(std::ceil(std::min(log2_bound(static_cast<double>(n_terms)), 0.0))), 64);
  return {sum.rounded(prec), Method::Direct, bound};
}

SeriesValue polylog_form(const SeriesSpec& spec, Bits prec) {
  const Bits wp = prec + kGuardBits;
  const std::vector<LiTerm> terms = polylog_terms(spec, wp);
  const long k = spec.k;
  Complex total(wp);
  Real err(0L, 64);

  auto accumulate = [&](const Real& coef, const PolylogValue& v) {
    total += v.value * coef;
    err += abs(Real(coef, 64)) * v.tail_bound;
  };

  switch (spec.weight) {
    case Weight::Plain:
    case Weight::Alternating: {
      Complex z = spec.weight == Weight::Plain ? Complex(spec.z, wp) : Complex(Real(-1L, wp));
      for (const LiTerm& t : terms) accumulate(t.coef, li(k, z * t.ratio, wp, spec.side));
      if (spec.weight == Weight::Alternating) total = -total;
      break;
    }
    case Weight::Quarter: {
      for (const LiTerm& t : terms) total += Complex(re_li_on_imaginary_axis(k, t.ratio, wp) * t.coef);
      total = Complex(-total.re(), Real(0L, wp));
      break;
    }
    case Weight::TrigCos:
    case Weight::TrigSin: {
      if (!spec.z.is_real()) throw DomainError("trigonometric weights need real z");
      Complex w = polar(Real(spec.x, wp)) * Real(spec.z.re(), wp);
      for (const LiTerm& t : terms) accumulate(t.coef, li(k, w * t.ratio, wp, spec.side));
      total = spec.weight == Weight::TrigCos ? Complex(total.re(), Real(0L, wp))
                                             : Complex(total.im(), Real(0L, wp));
      break;
    }
  }
  err += Real::exp2i(-static_cast<long>(wp) + 8, 64) * max(Real(1L, 64), abs(Complex(total, 64)));
  return {total.rounded(prec), Method::PolylogForm, err};
}

SeriesValue bernoulli_form(const SeriesSpec& spec, Bits prec) {
  if (spec.weight != Weight::Alternating) {
    throw DomainError("Bernoulli closed forms exist only for the alternating weight");
  }
  const long k = spec.k;
  if (k < 0) throw DomainError("Bernoulli closed forms need k >= 0");
  const SeqIndex r = spec.r;
  const SeqIndex s = spec.s;
  const Bits wp = prec + kGuardBits;
  const Real la = log_alpha(wp);
  const Real two_pi = pi(wp) * 2L;
  const Complex pref = two_pi_i_power(k, wp);
  const Real root5 = sqrt(Real(5L, wp));
  const auto uk = static_cast<std::size_t>(k);

  // 1/2 + m log(alpha) / (2 pi i), or the unshifted variant.
  auto arg = [&](SeqIndex m, bool shifted) {
    return Complex(shifted ? Real(1L, wp) / 2L : Real(0L, wp), -(la * static_cast<long>(m)) / two_pi);
  };

  if (!spec.is_product()) {
    if (s != 0) throw DomainError("Bernoulli closed form covers the unshifted series only (s = 0)");
    if (parity(r) != 0) throw ParityError("Bernoulli closed form needs r even");
    const bool fibonacci = is_fib(spec.family);
    if (fibonacci && parity(k) != 1) throw ParityError("F series Bernoulli form needs k odd");
    if (!fibonacci && parity(k) != 0) throw ParityError("L series Bernoulli form needs k even");
    Complex v = pref * bernoulli_poly(uk, arg(r, true));
    if (fibonacci) v /= root5;
    return {real_or_throw(v, prec, "bernoulli_form").rounded(prec), Method::BernoulliForm,
            Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Complex(v, 64)))};
  }

  if (parity(r) != parity(s)) throw ParityError("product Bernoulli forms need r and s of the same parity");
  const long want_k = spec.family == Family::FL ? 1 : 0;
  if (parity(k) != want_k) {
    throw ParityError(spec.family == Family::FL ? "FL Bernoulli form needs k odd" : "FF/LL Bernoulli forms need k even");
  }
  const bool r_even = parity(r) == 0;
  if (!r_even && s > r) throw DomainError("r odd, s > r is not covered by the Bernoulli closed form");

  Complex first = bernoulli_poly(uk, arg(s + r, true));
  Complex second(wp);
  if (s == r && spec.family == Family::FL) {
    // F_{rj} L_{rj} = F_{2rj}: no constant term
    second = Complex(Real(0L, wp));
  } else if (s == r) {
    mpq_class b = bernoulli_number(uk);
    if (r_even) {
      mpq_class two_pow = mpq_class(1, 1);
      if (k == 0) two_pow = 2;
      else two_pow = mpq_class(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(k - 1));
      b *= (two_pow - 1);
    }
    second = Complex(Real(b, wp));
  } else {
    second = bernoulli_poly(uk, arg(s - r, r_even));
  }
  Complex v(wp);
  switch (spec.family) {
    case Family::FF: v = pref * (first - second) / 5L; break;
    case Family::FL: v = pref * (first - second) / root5; break;
    default: v = pref * (first + second); break;
  }
  Real err = Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Complex(v, 64)));
  if (r_even || s == r) v = real_or_throw(v, prec, "bernoulli_form");
  return {v.rounded(prec), Method::BernoulliForm, err};
}

SeriesValue quarter_series_form(Family family, SeqIndex r, long k, Bits prec) {
  if (family != Family::F && family != Family::L) throw DomainError("quarter form covers F and L only");
  if (k < 1) throw DomainError("quarter form needs k >= 1");
  const bool fibonacci = family == Family::F;
  if (fibonacci && parity(k) != 1) throw ParityError("F quarter form needs k odd");
  if (!fibonacci && parity(k) != 0) throw ParityError("L quarter form needs k even");
  if (fibonacci && r == 0) return {Complex(prec), Method::BernoulliForm, Real(0L, 64)};
  const Bits wp = prec + kGuardBits;
  const Real la = log_alpha(wp);
  Complex x(Real(1L, wp) / 2L, -(la * static_cast<long>(r)) / pi(wp));
  Complex v = two_pi_i_power(k, wp, k) * bernoulli_poly(static_cast<std::size_t>(k), x);
  if (fibonacci) v /= sqrt(Real(5L, wp));
  Real err = Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Complex(v, 64)));
  return {real_or_throw(v, prec, "quarter_series_form").rounded(prec), Method::BernoulliForm, err};
}

SeriesValue generating_function(const SeriesSpec& spec, Bits prec) {
  require_linear(spec, "generating_function");
  if (spec.k != 0) throw DomainError("generating function needs k = 0");
  if (spec.weight != Weight::Plain && spec.weight != Weight::Alternating) {
    throw DomainError("generating function supports plain and alternating weights");
  }
  const Bits wp = prec + kGuardBits;
  const bool fibonacci = is_fib(spec.family);
  const SeqIndex r = spec.r;
  const SeqIndex s = spec.s;
  Complex z = spec.weight == Weight::Plain ? Complex(spec.z, wp) : Complex(Real(-1L, wp));
  const long sr = sign_pow(r);
  Complex z2 = z * z;
  Complex den = Real(1L, wp) - z * Real(lucas(r), wp) + z2 * Real(sr, wp);
  if (den.is_zero()) throw PoleError("generating function denominator vanishes");
  Complex num(wp);
  if (spec.start == 1) {
    num = z * Real(seq(fibonacci, r + s), wp) - z2 * Real(mpz_class(seq(fibonacci, s) * sr), wp);
  } else if (spec.start == 0) {
    num = Complex(Real(seq(fibonacci, s), wp)) - z * Real(mpz_class(seq(fibonacci, s - r) * sr), wp);
  } else {
    throw DomainError("series start must be 0 or 1");
  }
  Complex v = num / den;
  if (spec.weight == Weight::Alternating) v = -v;
  Real err = Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Complex(v, 64)));
  return {v.rounded(prec), Method::RationalGf, err};
}

SeriesValue log_series_form(const SeriesSpec& spec, Bits prec) {
  require_linear(spec, "log_series_form");
  if (spec.k != 1) throw DomainError("logarithmic closed form needs k = 1");
  if (spec.weight != Weight::Plain && spec.weight != Weight::Alternating) {
    throw DomainError("logarithmic closed form supports plain and alternating weights");
  }
  if (!(growth_ratio(spec, 64) < 1L)) throw DivergenceError("logarithmic closed form needs |z| < alpha^{-|r|}");
  const Bits wp = prec + kGuardBits;
  const GoldenConstants g = golden_constants(wp);
  const GoldenPowers p = power_split(spec.r, g);
  Complex z = spec.weight == Weight::Plain ? Complex(spec.z, wp) : Complex(Real(-1L, wp));
  const long sr = sign_pow(spec.r);
  Complex den = Real(1L, wp) - z * Real(lucas(spec.r), wp) + z * z * Real(sr, wp);
  Complex ratio = (Real(1L, wp) - z * p.alpha_pow) / (Real(1L, wp) - z * p.beta_pow);
  auto [fs, ls] = fib_lucas(spec.s);
  Real f(fs, wp);
  Real l(ls, wp);
  Complex v(wp);
  if (is_fib(spec.family)) {
    v = -(log(den) * f / 2L) - log(ratio) * (l / (g.sqrt5 * 2L));
  } else {
    v = -(log(den) * l / 2L) - log(ratio) * (f * g.sqrt5 / 2L);
  }
  if (spec.weight == Weight::Alternating) v = -v;
  Real err = Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Complex(v, 64)));
  return {v.rounded(prec), Method::LogForm, err};
}

SeriesValue trig_series_form(const SeriesSpec& spec, Bits prec) {
  require_linear(spec, "trig_series_form");
  if (spec.k != 1) throw DomainError("trigonometric closed forms need k = 1");
  if (spec.weight != Weight::TrigCos && spec.weight != Weight::TrigSin) {
    throw DomainError("trigonometric closed forms need a cos or sin weight");
  }
  if (!spec.z.is_real()) throw DomainError("trigonometric closed forms need real z");
  if (!(growth_ratio(spec, 64) < 1L)) throw DivergenceError("trigonometric closed form needs |z| < alpha^{-|r|}");
  const Bits wp = prec + kGuardBits;
  const GoldenConstants g = golden_constants(wp);
  const SeqIndex r = spec.r;
  const GoldenPowers p = power_split(r, g);
  const Real z(spec.z.re(), wp);
  const Real x(spec.x, wp);
  const Real c = cos(x);
  const Real sn = sin(x);
  const long sr = sign_pow(r);
  const Real lr(lucas(r), wp);
  const Real fr(fib(r), wp);
  auto [fs_z, ls_z] = fib_lucas(spec.s);
  const Real fs(fs_z, wp);
  const Real ls(ls_z, wp);
  const bool fibonacci = is_fib(spec.family);
  const Real z2 = z * z;
  Real v(wp);
  if (spec.weight == Weight::TrigCos) {
    Real q = z2 * z2 - z2 * z * lr * c * (2 * sr) + (Real(lucas(2 * r), wp) + c * c * (4 * sr)) * z2 -
             lr * z * c * 2L + 1L;
    Real nb = p.beta_pow * p.beta_pow * z2 - p.beta_pow * z * c * 2L + 1L;
    Real na = p.alpha_pow * p.alpha_pow * z2 - p.alpha_pow * z * c * 2L + 1L;
    Real lq = log(q);
    Real lratio = log(nb / na);
    if (fibonacci) v = -(fs * lq / 4L) + ls / (g.sqrt5 * 4L) * lratio;
    else v = -(ls * lq / 4L) + fs * g.sqrt5 / 4L * lratio;
  } else {
    Real x2 = x * 2L;
    Real t1 = atan2(z * lr * sn - z2 * sin(x2) * sr, 1L - z * lr * c + z2 * cos(x2) * sr);
    Real t2 = atan2(z * fr * g.sqrt5 * sn, 1L - lr * z * c + z2 * sr);
    if (fibonacci) v = fs / 2L * t1 + ls / (g.sqrt5 * 2L) * t2;
    else v = ls / 2L * t1 + fs * g.sqrt5 / 2L * t2;
  }
  Real err = Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Real(v, 64)));
  return {Complex(v.rounded(prec), Real(0L, prec)), Method::TrigForm, err};
}

std::vector<NamedConstant> all_named_constants() {
  return {NamedConstant::AltFShiftK2, NamedConstant::AltLShiftK2,  NamedConstant::AltL2K2,
          NamedConstant::AltL3K2,     NamedConstant::LHalfK2,      NamedConstant::LOverLrK2,
          NamedConstant::LOverLrK2Reflected, NamedConstant::AltLK3, NamedConstant::AltF2F4K4,
          NamedConstant::AltF2F4K6,   NamedConstant::AltF2SqK2,    NamedConstant::AltF4SqK6,
          NamedConstant::AltF1SqK6,   NamedConstant::AltF3SqK6,    NamedConstant::AltF2L4K1,
          NamedConstant::AltF2L4K3,   NamedConstant::AltL2L4K2,    NamedConstant::AltL2L4K4,
          NamedConstant::AltL2SqK2,   NamedConstant::AltL2SqK4,    NamedConstant::AltL1SqK6};
}

std::string_view to_string(NamedConstant c) {
  switch (c) {
    case NamedConstant::AltFShiftK2: return "alt_F_shift_k2";
    case NamedConstant::AltLShiftK2: return "alt_L_shift_k2";
    case NamedConstant::AltL2K2: return "alt_L2_k2";
    case NamedConstant::AltL3K2: return "alt_L3_k2";
    case NamedConstant::LHalfK2: return "L_half_k2";
    case NamedConstant::LOverLrK2: return "L_over_Lr_k2";
    case NamedConstant::LOverLrK2Reflected: return "L_over_Lr_k2_reflected";
    case NamedConstant::AltLK3: return "alt_L_k3";
    case NamedConstant::AltF2F4K4: return "alt_F2F4_k4";
    case NamedConstant::AltF2F4K6: return "alt_F2F4_k6";
    case NamedConstant::AltF2SqK2: return "alt_F2sq_k2";
    case NamedConstant::AltF4SqK6: return "alt_F4sq_k6";
    case NamedConstant::AltF1SqK6: return "alt_F1sq_k6";
    case NamedConstant::AltF3SqK6: return "alt_F3sq_k6";
    case NamedConstant::AltF2L4K1: return "alt_F2L4_k1";
    case NamedConstant::AltF2L4K3: return "alt_F2L4_k3";
    case NamedConstant::AltL2L4K2: return "alt_L2L4_k2";
    case NamedConstant::AltL2L4K4: return "alt_L2L4_k4";
    case NamedConstant::AltL2SqK2: return "alt_L2sq_k2";
    case NamedConstant::AltL2SqK4: return "alt_L2sq_k4";
    case NamedConstant::AltL1SqK6: return "alt_L1sq_k6";
  }
  return "?";
}

NamedConstant named_constant_from_string(std::string_view name) {
  for (NamedConstant c : all_named_constants()) {
    if (to_string(c) == name) return c;
  }
  throw UnknownIdError("unknown named constant: " + std::string(name));
}

SeriesValue named_constant(NamedConstant c, SeqIndex index, Bits prec) {
  const Bits wp = prec + kGuardBits;
  const GoldenConstants g = golden_constants(wp);
  const Real& la = g.log_alpha;
  const Real p2 = pi(wp) * pi(wp);
  // sum of q * pi^{2a} * log^{2b} alpha
  struct Term {
    mpq_class q;
    int pi_sq;
    int la_sq;
  };
  auto poly = [&](std::initializer_list<Term> terms) {
    Real acc(0L, wp);
    const Real la2 = la * la;
    for (const Term& t : terms) acc += pow(p2, t.pi_sq) * pow(la2, t.la_sq) * t.q;
    return acc;
  };
  Real v(wp);
  switch (c) {
    case NamedConstant::AltFShiftK2: {
      auto [fs, ls] = fib_lucas(index);
      v = Real(fs, wp) * la * la + p2 / 50L * Real(ls, wp) * g.sqrt5;
      break;
    }
    case NamedConstant::AltLShiftK2: {
      auto [fs, ls] = fib_lucas(index);
      v = Real(ls, wp) * la * la + p2 * g.sqrt5 / 10L * Real(fs, wp);
      break;
    }
    case NamedConstant::AltL2K2: v = poly({{mpq_class(1, 6), 1, 0}, {2, 0, 1}}); break;
    case NamedConstant::AltL3K2: v = poly({{mpq_class(1, 12), 1, 0}, {6, 0, 1}}); break;
    case NamedConstant::LHalfK2: {
      Real l2 = log2_const(wp);
      v = poly({{mpq_class(1, 12), 1, 0}, {2, 0, 1}}) - l2 * l2;
      break;
    }
    case NamedConstant::LOverLrK2:
    case NamedConstant::LOverLrK2Reflected: {
      if (parity(index) != 0) throw ParityError("this constant needs r even");
      Real lr(lucas(index), wp);
      if (c == NamedConstant::LOverLrK2) {
        Real llr = log(lr);
        Real r_la = la * static_cast<long>(index);
        v = p2 / 6L + r_la * r_la - llr * llr;
      } else {
        const GoldenPowers p = power_split(index, g);
        v = p2 / 6L - log(p.alpha_pow / lr) * log(p.beta_pow / lr);
      }
      break;
    }
    case NamedConstant::AltLK3: v = (p2 * la - zeta_int(3, wp)) / 5L; break;
    case NamedConstant::AltF2F4K4: v = poly({{mpq_class(8, 15), 1, 1}, {mpq_class(32, 3), 0, 2}}); break;
    case NamedConstant::AltF2F4K6:
      v = poly({{mpq_class(14, 225), 2, 1}, {mpq_class(16, 9), 1, 2}, {mpq_class(2912, 225), 0, 3}});
      break;
    case NamedConstant::AltF2SqK2: v = poly({{mpq_class(8, 5), 0, 1}}); break;
    case NamedConstant::AltF4SqK6:
      v = poly({{mpq_class(28, 225), 2, 1}, {mpq_class(1280, 225), 1, 2}, {mpq_class(16384, 225), 0, 3}});
      break;
    case NamedConstant::AltF1SqK6:
      v = poly({{mpq_class(1, 1200), 3, 0}, {mpq_class(7, 900), 2, 1}, {mpq_class(1, 45), 1, 2},
                {mpq_class(4, 225), 0, 3}});
      break;
    case NamedConstant::AltF3SqK6:
      v = poly({{mpq_class(1, 1200), 3, 0}, {mpq_class(7, 100), 2, 1}, {mpq_class(9, 5), 1, 2},
                {mpq_class(324, 25), 0, 3}});
      break;
    case NamedConstant::AltF2L4K1: v = la * 4L / g.sqrt5; break;
    case NamedConstant::AltF2L4K3: v = (p2 + la * la * 52L) * la * 2L / (g.sqrt5 * 3L); break;
    case NamedConstant::AltL2L4K2: v = poly({{mpq_class(1, 3), 1, 0}, {20, 0, 1}}); break;
    case NamedConstant::AltL2L4K4:
      v = poly({{mpq_class(7, 180), 2, 0}, {mpq_class(10, 3), 1, 1}, {mpq_class(164, 3), 0, 2}});
      break;
    case NamedConstant::AltL2SqK2: v = poly({{mpq_class(1, 3), 1, 0}, {8, 0, 1}}); break;
    case NamedConstant::AltL2SqK4:
      v = poly({{mpq_class(7, 180), 2, 0}, {mpq_class(4, 3), 1, 1}, {mpq_class(32, 3), 0, 2}});
      break;
    case NamedConstant::AltL1SqK6:
      v = poly({{mpq_class(-1, 15120), 3, 0}, {mpq_class(7, 180), 2, 1}, {mpq_class(1, 9), 1, 2},
                {mpq_class(4, 45), 0, 3}});
      break;
  }
  return {Complex(v.rounded(prec), Real(0L, prec)), Method::NamedConstant,
          Real::exp2i(8 - static_cast<long>(wp), 64) * max(Real(1L, 64), abs(Real(v, 64)))};
}

SeriesValue abel_regularized_sum(const SeriesSpec& spec, int levels, Bits prec) {
  if (levels < 4) throw DomainError("Abel oracle needs at least 4 levels");
  if (spec.start != 1) throw DomainError("Abel oracle sums from j = 1");
  using cd = std::complex<double>;

  cd target;
  switch (spec.weight) {
    case Weight::Plain: target = cd(spec.z.re().to_double(), spec.z.im().to_double()); break;
    case Weight::Alternating: target = cd(-1.0, 0.0); break;
    case Weight::Quarter: target = cd(0.0, 1.0); break;
    default: throw DomainError("Abel oracle supports plain, alternating and quarter weights");
  }

  // Plan in double precision: singularities sit at z = 1/q for each ratio q.
  const std::vector<LiTerm> terms = polylog_terms(spec, 64);
  double lambda = 0.0;
  for (const LiTerm& t : terms) lambda = std::max(lambda, std::fabs(t.ratio.to_double()));
  const double c = -2.0 / lambda;
  const cd u_star = target / (c + target);
  double rho = 1.0;
  for (const LiTerm& t : terms) {
    if (t.coef.is_zero()) continue;
    const double zs = 1.0 / t.ratio.to_double();
    if (std::fabs(c + zs) < 1e-300) continue;
    rho = std::min(rho, std::fabs(zs / (c + zs)));
  }
  const double reach = std::abs(u_star) / rho;
  if (!(reach < 0.98)) throw DomainError("Abel oracle: target lies outside the mapped disk of convergence");
  const long n_terms = static_cast<long>(std::ceil(64.0 / -std::log2(reach))) + 10;
  if (n_terms > kMaxAbelTerms) throw ConvergenceError("Abel oracle needs too many coefficients");
  const Bits wp = std::max<Bits>(prec + kGuardBits, 96 + static_cast<Bits>(std::ceil(1.6 * static_cast<double>(n_terms))));

  Real lam(0L, wp);
  for (const LiTerm& t : polylog_terms(spec, wp)) lam = max(lam, abs(t.ratio));
  const Real c_w = Real(-2L, wp) / lam;

  // d_j = c^j a_j with a_j = X_j j^{-k}
  std::vector<Real> d(static_cast<std::size_t>(n_terms + 1), Real(wp));
  {
    TermStepper stepper(spec.family, spec.r, spec.s);
    mpz_class scratch;
    Real c_pow(1L, wp);
    for (long j = 1; j <= n_terms; ++j) {
      stepper.advance();
      c_pow *= c_w;
      Real a(stepper.value(), wp);
      scale_by_index_power(a, static_cast<unsigned long>(j), spec.k, scratch);
      d[static_cast<std::size_t>(j)] = a * c_pow;
    }
  }
  // b_n = sum_{j=1}^{n} C(n-1, j-1) d_j
  std::vector<Real> b(static_cast<std::size_t>(n_terms + 1), Real(wp));
  mpz_class binom;
  for (long n = 1; n <= n_terms; ++n) {
    Real acc(0L, wp);
    binom = 1;
    for (long j = 1; j <= n; ++j) {
      Real t = d[static_cast<std::size_t>(j)];
      mpfr_mul_z(t.get(), t.get(), binom.get_mpz_t(), MPFR_RNDN);
      acc += t;
      // C(n-1, j) = C(n-1, j-1) (n-j) / j
      binom *= (n - j);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
    }
    b[static_cast<std::size_t>(n)] = std::move(acc);
  }

  Complex target_w(Real::from_double(target.real(), wp), Real::from_double(target.imag(), wp));
  const Complex u_target = target_w / (target_w + c_w);

  const int count = levels;
  std::vector<Complex> means;
  std::vector<Real> hs;
  for (int m = 2; m <= levels + 1; ++m) {
    Real h = Real::exp2i(-m, wp);
    Complex u = u_target * (1L - h);
    Complex acc(wp);
    for (long n = n_terms; n >= 1; --n) {
      acc += Complex(b[static_cast<std::size_t>(n)]);
      acc *= u;
    }
    means.push_back(acc);
    hs.push_back(h);
  }
  // Neville table towards h = 0.
  std::vector<std::vector<Complex>> table(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    table[i].push_back(means[i]);
    for (int j = 1; j <= i; ++j) {
      const Real& hij = hs[i - j];
      const Real& hi = hs[i];
      table[i].push_back((table[i][j - 1] * hij - table[i - 1][j - 1] * hi) / (hij - hi));
    }
  }
  std::vector<Complex> diag;
  for (int i = 0; i < count; ++i) diag.push_back(table[i][i]);
  const Real first_diff = abs(diag[1] - diag[0]);
  const Real last_diff = abs(diag[count - 1] - diag[count - 2]);
  if (!(last_diff <= first_diff)) throw ConvergenceError("Abel oracle: extrapolation differences are not decreasing");

  // Truncation of the u-series at the outermost radius.
  Real trunc = abs(Real(b[static_cast<std::size_t>(n_terms)], 64)) *
               Real::from_double(std::pow(std::abs(u_star), static_cast<double>(n_terms)) / (1.0 - reach), 64);
  Complex value = diag[count - 1];
  switch (spec.weight) {
    case Weight::Alternating: value = -value; break;
    case Weight::Quarter: value = Complex(-value.re(), Real(0L, wp)); break;
    default: break;
  }
  Real estimate = Real(last_diff, 64) + trunc;
  return {value.rounded(prec), Method::AbelOracle, estimate};
}

}  // namespace polyfib
