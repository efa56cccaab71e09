#ifndef POLYFIB_REAL_HPP
#define POLYFIB_REAL_HPP

// Arbitrary-precision real and complex values on top of MPFR.
//
// Every Real carries its own precision. Binary operations produce a result at
// the larger of the operand precisions, rounded to nearest. Library routines
// take an explicit target precision, work at target + kGuardBits and round
// the result back on the way out.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace polyfib {

using Bits = mpfr_prec_t;

inline constexpr Bits kGuardBits = 32;
inline constexpr Bits kMinPrecision = 64;

class Real {
 public:
  explicit Real(Bits prec = kMinPrecision);
  Real(long value, Bits prec);
  Real(const mpz_class& value, Bits prec);
  Real(const mpq_class& value, Bits prec);
  Real(const Real& value, Bits prec);

  static Real from_double(double value, Bits prec);
  /// Parses a decimal (or "a/b" rational) literal, correctly rounded.
  static Real from_string(std::string_view text, Bits prec);
  /// 2^e at the given precision.
  static Real exp2i(long e, Bits prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits prec() const { return mpfr_get_prec(value_); }
  Real rounded(Bits prec) const { return Real(*this, prec); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Scientific notation with the requested number of significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);
  friend Real operator*(const Real& a, const mpz_class& b);
  friend Real operator*(const Real& a, const mpq_class& b);

  // Doubles would silently narrow to long; go through from_double instead.
  template <std::floating_point D> friend Real operator+(const Real&, D) = delete;
  template <std::floating_point D> friend Real operator-(const Real&, D) = delete;
  template <std::floating_point D> friend Real operator*(const Real&, D) = delete;
  template <std::floating_point D> friend Real operator/(const Real&, D) = delete;
  template <std::floating_point D> friend Real operator*(D, const Real&) = delete;
  template <std::floating_point D> friend Real operator/(D, const Real&) = delete;

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi(Bits prec);
Real log2_const(Bits prec);

/// log2 of |x| as a double; -inf for zero. Cheap magnitude comparisons.
double log2_abs(const Real& x);

class Complex {
 public:
  explicit Complex(Bits prec = kMinPrecision) : re_(prec), im_(prec) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(0L, re_.prec()) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(const Complex& z, Bits prec) : re_(z.re_, prec), im_(z.im_, prec) {}

  static Complex i(Bits prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  Bits prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
  Complex rounded(Bits prec) const { return Complex(*this, prec); }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);

  friend Complex operator-(const Complex& z) { return Complex(-z.re_, -z.im_); }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
  friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }
  friend Complex operator+(const Complex& a, const Real& b) { return Complex(a.re_ + b, a.im_); }
  friend Complex operator+(const Real& a, const Complex& b) { return b + a; }
  friend Complex operator-(const Complex& a, const Real& b) { return Complex(a.re_ - b, a.im_); }
  friend Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re_, -b.im_); }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
/// Principal branch; a zero imaginary part of either sign counts as the upper side.
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
/// Unit circle point e^{i theta}.
Complex polar(const Real& theta);

}  // namespace polyfib

#endif  // POLYFIB_REAL_HPP
