#ifndef POLYFIB_FIBSERIES_HPP
#define POLYFIB_FIBSERIES_HPP

// Weighted Fibonacci and Lucas series: direct summation with certified
// tails, the polylogarithm and Bernoulli-polynomial closed forms, the
// rational, logarithmic and trigonometric closed forms for k = 0 and k = 1,
// and an Abel-summation oracle for series that diverge classically.

#include <string>
#include <string_view>
#include <vector>

#include "polyfib/polylog.hpp"
#include "polyfib/real.hpp"
#include "polyfib/seqcore.hpp"

namespace polyfib {

/// F: F_{rj+s}, L: L_{rj+s}; products use s as the second multiplier,
/// e.g. FL: F_{rj} L_{sj}.
enum class Family { F, L, FF, FL, LL };

/// Weight w_j multiplying the j-th term.
///   Plain:       z^j
///   Alternating: (-1)^{j-1}
///   Quarter:     -cos(j pi / 2), i.e. f(4j) - f(4j-2) summed over j
///   TrigCos:     z^j cos(j x), z real
///   TrigSin:     z^j sin(j x), z real
enum class Weight { Plain, Alternating, Quarter, TrigCos, TrigSin };

enum class Method {
  Direct,
  PolylogForm,
  BernoulliForm,
  RationalGf,
  LogForm,
  TrigForm,
  AbelOracle,
  NamedConstant,
};

std::string_view to_string(Family f);
std::string_view to_string(Weight w);
std::string_view to_string(Method m);
Family family_from_string(std::string_view name);
Weight weight_from_string(std::string_view name);

/// sum_{j >= start} w_j j^{-k} X_j with X_j given by the family.
struct SeriesSpec {
  Family family = Family::F;
  Weight weight = Weight::Plain;
  SeqIndex r = 1;
  SeqIndex s = 0;
  long k = 0;
  Complex z{Real(0L, 128)};
  Real x{0L, 128};
  /// 1 for the usual j >= 1 sums; 0 adds the j = 0 term (k = 0 only).
  int start = 1;
  /// Side of the cut for polylog arguments that land on (1, inf).
  Side side = Side::Upper;

  bool is_product() const { return family == Family::FF || family == Family::FL || family == Family::LL; }
};

struct SeriesValue {
  Complex value;
  Method method;
  /// Certified tail bound for Direct; a rounding or extrapolation
  /// estimate otherwise.
  Real error_estimate;
};

/// The exact family term X_j (without weight or j^{-k}).
mpz_class family_term(Family family, SeqIndex r, SeqIndex s, SeqIndex j);

/// Growth rate of |w_j X_j|: |z| alpha^{|r|} (|r|+|s| for products); 1 for
/// alternating and quarter weights combined with the same powers of alpha.
Real growth_ratio(const SeriesSpec& spec, Bits prec);

/// Partial sum with a certified tail bound; DivergenceError unless the
/// growth ratio is below 1.
SeriesValue direct_sum(const SeriesSpec& spec, Bits prec);

/// Linear combination of Li_k at alpha/beta-scaled arguments.
SeriesValue polylog_form(const SeriesSpec& spec, Bits prec);

/// Bernoulli-polynomial closed forms for the alternating weight. Throws
/// ParityError when r, s, k violate the parity hypotheses and DomainError
/// for odd r with s > r.
SeriesValue bernoulli_form(const SeriesSpec& spec, Bits prec);

/// Closed form of the quarter-weight series for F (k odd) or L (k even).
SeriesValue quarter_series_form(Family family, SeqIndex r, long k, Bits prec);

/// Rational closed form for k = 0 (plain or alternating weight); honours
/// spec.start. PoleError when the denominator vanishes.
SeriesValue generating_function(const SeriesSpec& spec, Bits prec);

/// Closed form for k = 1 inside the convergence region.
SeriesValue log_series_form(const SeriesSpec& spec, Bits prec);

/// Closed forms for k = 1 with TrigCos / TrigSin weights.
SeriesValue trig_series_form(const SeriesSpec& spec, Bits prec);

enum class NamedConstant {
  AltFShiftK2,        // F_s log^2 a + pi^2/50 L_s sqrt5
  AltLShiftK2,        // L_s log^2 a + pi^2 sqrt5/10 F_s
  AltL2K2,            // pi^2/6 + 2 log^2 a
  AltL3K2,            // pi^2/12 + 6 log^2 a
  LHalfK2,            // pi^2/12 + 2 log^2 a - log^2 2
  LOverLrK2,          // pi^2/6 + r^2 log^2 a - log^2 L_r        (r even)
  LOverLrK2Reflected, // pi^2/6 - log(a^r/L_r) log(b^r/L_r)       (r even)
  AltLK3,             // (pi^2 log a - zeta3)/5
  AltF2F4K4,
  AltF2F4K6,
  AltF2SqK2,
  AltF4SqK6,
  AltF1SqK6,
  AltF3SqK6,
  AltF2L4K1,
  AltF2L4K3,
  AltL2L4K2,
  AltL2L4K4,
  AltL2SqK2,
  AltL2SqK4,
  AltL1SqK6,
};

std::vector<NamedConstant> all_named_constants();
std::string_view to_string(NamedConstant c);
/// Throws UnknownIdError.
NamedConstant named_constant_from_string(std::string_view name);
/// `index` is s for the shifted constants and r for the L_r constants;
/// ignored otherwise.
SeriesValue named_constant(NamedConstant c, SeqIndex index, Bits prec);

/// Abel-summation oracle. The power series in z is re-expanded in u through
/// z = -(2/lambda) u/(1-u), which moves the target inside the disk of
/// convergence; Abel means at radii 1 - 2^{-m}, m = 2..levels+1, are then
/// extrapolated to the boundary. The result is accurate to roughly the
/// returned estimate, not to `prec`.
SeriesValue abel_regularized_sum(const SeriesSpec& spec, int levels, Bits prec);

}  // namespace polyfib

#endif  // POLYFIB_FIBSERIES_HPP
