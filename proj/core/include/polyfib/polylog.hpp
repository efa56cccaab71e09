#ifndef POLYFIB_POLYLOG_HPP
#define POLYFIB_POLYLOG_HPP

// Integer-order polylogarithms Li_k(z) with continuation along the real axis,
// the dilogarithm and trilogarithm functional equations, and a catalog of
// closed-form special values at golden-ratio arguments.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyfib/real.hpp"

namespace polyfib {

enum class PolylogPath { Rational, ClosedLog, DirectSeries, LogExpansion, Inversion };

/// Which side of the branch cut [1, inf) a real argument is taken on.
enum class Side { Upper, Lower };

std::string_view to_string(PolylogPath path);
std::string_view to_string(Side side);

struct PolylogValue {
  Complex value;
  PolylogPath path;
  /// Certified bound on the truncation error; zero for closed forms.
  Real tail_bound;
};

/// Li_{-n}(z) = (z d/dz)^n z/(1-z), an exact rational function of z.
Complex li_nonpositive(long n, const Complex& z, Bits prec);

/// Integer numerator coefficients of Li_{-n}(z) * (1-z)^{n+1}, lowest degree first.
std::vector<mpz_class> li_nonpositive_numerator(long n);

/// Defining series for k >= 1 and |z| < 1 (any k >= 1), or |z| = 1 with k >= 2.
PolylogValue li_series(long k, const Complex& z, Bits prec);

/// -log(1 - z), principal branch.
Complex li1(const Complex& z, Bits prec);

/// Li_k(e^u) as a power series in u = log z with zeta(k-n) coefficients,
/// valid for |log z| < 2 pi. Real z > 1 needs the side hint.
PolylogValue li_log_expansion(long k, const Complex& z, Bits prec, Side side = Side::Upper);

/// Li_k(z) for real |z| > 1 through the Bernoulli-polynomial inversion
/// relation. For z < -1 the value is real; z > 1 depends on `side`.
PolylogValue li_inversion(long k, const Real& z, Bits prec, Side side = Side::Upper);

/// Dispatcher over the paths above.
PolylogValue li(long k, const Complex& z, Bits prec, Side side = Side::Upper);
inline PolylogValue li(long k, const Real& z, Bits prec, Side side = Side::Upper) {
  return li(k, Complex(z), prec, side);
}

/// Re Li_k(i y) = 2^{-k} Li_k(-y^2).
Real re_li_on_imaginary_axis(long k, const Real& y, Bits prec);

/// (Re, Im) of Li_1(z e^{ix}) for |z| < 1.
std::pair<Real, Real> li1_polar_parts(const Real& z, const Real& x, Bits prec);

enum class DilogIdentity {
  Landen,          // Li2(x) + Li2(x/(x-1)) = -1/2 log^2(1-x),             x < 1
  ShiftedInverse,  // Li2(1/(1+x)) - Li2(-x) = pi^2/6 - 1/2 log(1+x) log((1+x)/x^2), x > 0
  Duplication,     // Li2(x) + Li2(-x) = 1/2 Li2(x^2),                     |x| < 1
  Inversion,       // Li2(-x) + Li2(-1/x) = -pi^2/6 - 1/2 log^2 x,          x > 0
  Reflection,      // Li2(x) + Li2(1-x) = pi^2/6 - log x log(1-x),          0 < x < 1
  TwoVariable,     // Li2(xy) = Li2(x) + Li2(y) - Li2(x(1-y)/(1-xy)) - Li2(y(1-x)/(1-xy)) - ...
  FiveTerm,        // Li2(x/(1-x) * y/(1-y)) = Li2(x/(1-y)) + Li2(y/(1-x)) - Li2(x) - Li2(y) - ...
};

enum class TrilogIdentity {
  Duplication,  // Li3(x) + Li3(-x) = 1/4 Li3(x^2),                        |x| < 1
  Inversion,    // Li3(-x) - Li3(-1/x) = -pi^2/6 log x - 1/6 log^3 x,      x > 0
};

inline constexpr DilogIdentity kAllDilogIdentities[] = {
    DilogIdentity::Landen,     DilogIdentity::ShiftedInverse, DilogIdentity::Duplication,
    DilogIdentity::Inversion,  DilogIdentity::Reflection,     DilogIdentity::TwoVariable,
    DilogIdentity::FiveTerm};
inline constexpr TrilogIdentity kAllTrilogIdentities[] = {TrilogIdentity::Duplication,
                                                          TrilogIdentity::Inversion};

std::string_view to_string(DilogIdentity id);
std::string_view to_string(TrilogIdentity id);

/// True when (x, y) lies in the identity's domain; y is ignored by the
/// one-variable identities.
bool in_domain(DilogIdentity id, const Real& x, const Real& y);
bool in_domain(TrilogIdentity id, const Real& x);

/// |LHS - RHS| at real arguments; DomainError outside the identity's domain.
Real dilog_functional_equation(DilogIdentity id, const Real& x, const Real& y, Bits prec);
Real trilog_functional_equation(TrilogIdentity id, const Real& x, Bits prec);

/// Closed-form constants for polylogarithms at golden-ratio arguments.
enum class SpecialValue {
  Li2_minus_beta,                  // pi^2/10 - log^2 a
  Li2_beta,                        // -pi^2/15 + 1/2 log^2 a
  Li2_beta_squared,                // pi^2/15 - log^2 a
  Li2_minus_alpha,                 // -pi^2/10 - log^2 a
  Li2_sum_minus_alpha_minus_beta,  // -2 log^2 a
  Li2_diff_minus_alpha_minus_beta, // -pi^2/5
  Li2_beta_plus_beta_squared,      // -1/2 log^2 a
  Li2_minus_beta_minus_beta,       // pi^2/6 - 3/2 log^2 a   (Li2(-b) - Li2(b))
  Li2_sum_minus_alpha2_minus_beta2,// -pi^2/6 - 2 log^2 a
  Li2_sum_minus_alpha3_minus_beta3,// -pi^2/12 - 6 log^2 a
  Li2_sum_half_alpha_half_beta,    // pi^2/12 + 2 log^2 a - log^2 2
  Li3_beta_squared,                // 4/5 zeta3 - 2pi^2/15 log a + 2/3 log^3 a
  Li3_beta_minus_minus_alpha,      // pi^2/6 log a + 1/6 log^3 a  (Li3(b) - Li3(-a))
  Li3_sum_minus_alpha_minus_beta,  // 1/5 zeta3 - pi^2/5 log a
};

std::vector<SpecialValue> all_special_values();
std::string_view to_string(SpecialValue v);
/// Throws UnknownIdError for unrecognised names.
SpecialValue special_value_from_string(std::string_view name);
Real special_value(SpecialValue v, Bits prec);

}  // namespace polyfib

#endif  // POLYFIB_POLYLOG_HPP
