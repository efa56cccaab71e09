#include "polyfib/real.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace polyfib {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Bits wider(const Real& a, const Real& b) { return a.prec() > b.prec() ? a.prec() : b.prec(); }

}  // namespace

Real::Real(Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, kRnd);
}

Real::Real(const mpz_class& value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

Real::Real(const Real& value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set(value_, value.value_, kRnd);
}

Real Real::from_double(double value, Bits prec) {
  Real r(prec);
  mpfr_set_d(r.value_, value, kRnd);
  return r;
}

Real Real::from_string(std::string_view text, Bits prec) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
    q.canonicalize();
    return Real(q, prec);
  }
  Real r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("bad numeric literal: " + s);
  }
  return r;
}

Real Real::exp2i(long e, Bits prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.value_, r.value_, e, kRnd);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

long Real::exponent() const {
  if (mpfr_zero_p(value_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(value_, rhs.prec(), kRnd);
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(value_, rhs.prec(), kRnd);
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(value_, rhs.prec(), kRnd);
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(value_, rhs.prec(), kRnd);
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

Real operator-(const Real& x) {
  Real r(x.prec());
  mpfr_neg(r.value_, x.value_, kRnd);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.value_, a.value_, b, kRnd);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.value_, a.value_, b, kRnd);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.value_, a, b.value_, kRnd);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.value_, a.value_, b, kRnd);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.value_, a.value_, b, kRnd);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.value_, a, b.value_, kRnd);
  return r;
}

Real operator*(const Real& a, const mpz_class& b) {
  Real r(a.prec());
  mpfr_mul_z(r.value_, a.value_, b.get_mpz_t(), kRnd);
  return r;
}

Real operator*(const Real& a, const mpq_class& b) {
  Real r(a.prec());
  mpfr_mul_q(r.value_, a.value_, b.get_mpq_t(), kRnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), kRnd);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), kRnd);
  return r;
}

Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.get(), x.get(), kRnd);
  return r;
}

Real log1p(const Real& x) {
  Real r(x.prec());
  mpfr_log1p(r.get(), x.get(), kRnd);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.get(), x.get(), kRnd);
  return r;
}

Real sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.get(), x.get(), kRnd);
  return r;
}

Real cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.get(), x.get(), kRnd);
  return r;
}

Real atan(const Real& x) {
  Real r(x.prec());
  mpfr_atan(r.get(), x.get(), kRnd);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(wider(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real log2_const(Bits prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), kRnd);
  return r;
}

double log2_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.get(), kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  if (rhs.is_real()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  Real den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  Real im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), kRnd);
  return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z) {
  if (z.im().is_zero()) {
    return z.re().sign() < 0 ? pi(z.prec()) : Real(0L, z.prec());
  }
  return atan2(z.im(), z.re());
}

Complex log(const Complex& z) {
  if (z.im().is_zero() && z.re().sign() > 0) {
    return Complex(log(z.re()), Real(0L, z.prec()));
  }
  return Complex(log(abs(z)), arg(z));
}

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (z.im().is_zero()) return Complex(m, Real(0L, z.prec()));
  return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    Complex one(Real(1L, z.prec()));
    return one / pow(z, -n);
  }
  Complex result(Real(1L, z.prec()));
  Complex base = z;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Complex polar(const Real& theta) { return Complex(cos(theta), sin(theta)); }

}  // namespace polyfib
