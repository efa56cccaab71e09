#include <doctest.h>

#include <cmath>
#include <random>

#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"
#include "polyfib/polylog.hpp"
#include "polyfib/seqcore.hpp"
#include "support.hpp"

using namespace polyfib;
using polyfib::testing::log2_rel;
using polyfib::testing::parse;

namespace {

Complex cplx(const char* re, const char* im, Bits prec) {
  return Complex(parse(re, prec), parse(im, prec));
}

// Reference values to 50 digits from an independent arbitrary-precision
// library; real z > 1 there is taken from below the cut.
constexpr const char* kLi2AtMinus2 = "-1.4367463668836809463629020238935833542499564356549";
constexpr const char* kLi3At3Re = "3.7421225942407316353785295503164083131275808295968";
constexpr const char* kLi3At3Im = "-1.895870994273321393905500031884442425682343854348";
constexpr const char* kLi4Re = "0.29398330480553136451883674081772635665857631497728";
constexpr const char* kLi4Im = "0.41535593703709469626402460061623269987281268527696";
constexpr const char* kLi5UnitRe = "0.52282080764209424313138105959042580741345760425897";
constexpr const char* kLi5UnitIm = "0.86945073618622114457190623925182001465903366420458";
constexpr const char* kLiM3Re = "-0.8631350442911662756906270788837925842932670424705";
constexpr const char* kLiM3Im = "2.2892755855887398900598718532264276460908231504499";
constexpr const char* kLi2At5Re = "1.7837191612666306277435597347216504134956516565548";
constexpr const char* kLi2At5Im = "-5.0561983221118626819893576520241771802637008077533";

constexpr double kDigits50 = -160.0;  // 50 decimal digits is about 166 bits

}  // namespace

TEST_CASE("nonpositive orders are rational") {
  CHECK(li_nonpositive_numerator(0) == std::vector<mpz_class>{0, 1});
  CHECK(li_nonpositive_numerator(1) == std::vector<mpz_class>{0, 1});
  CHECK(li_nonpositive_numerator(2) == std::vector<mpz_class>{0, 1, 1});
  CHECK(li_nonpositive_numerator(3) == std::vector<mpz_class>{0, 1, 4, 1});
  const Bits prec = 192;
  Complex z = cplx("0.25", "-0.5", prec);
  CHECK(log2_rel(li(-3, z, prec).value, cplx(kLiM3Re, kLiM3Im, prec)) < kDigits50);
  CHECK(li(-2, z, prec).path == PolylogPath::Rational);
  CHECK_THROWS_AS(li(-1, Real(1L, prec), prec), PoleError);
  // Li_0(z) = z/(1-z) anywhere off the pole
  Complex w = cplx("3", "2", prec);
  CHECK(log2_rel(li(0, w, prec).value, w / (Real(1L, prec) - w)) < -(prec - 4));
}

TEST_CASE("series inside the disk") {
  const Bits prec = 192;
  PolylogValue v = li(4, cplx("0.3", "0.4", prec), prec);
  CHECK(v.path == PolylogPath::DirectSeries);
  CHECK(log2_rel(v.value, cplx(kLi4Re, kLi4Im, prec)) < kDigits50);
  CHECK(v.tail_bound < Real::exp2i(-(prec + 8), 64));
  // Li_2(1/2) = pi^2/12 - log^2(2)/2
  Real l2 = log2_const(prec);
  Real expect = pi(prec) * pi(prec) / 12L - l2 * l2 / 2L;
  CHECK(log2_rel(li(2, parse("0.5", prec), prec).value.re(), expect) < -(prec - 4));
  CHECK_THROWS_AS(li_series(2, Complex(Real(2L, prec)), prec), DivergenceError);
}

TEST_CASE("unit circle") {
  const Bits prec = 192;
  CHECK(log2_rel(li(3, Real(1L, prec), prec).value.re(), zeta_int(3, prec)) < -(prec - 2));
  // Li_k(-1) = -(1 - 2^{1-k}) zeta(k)
  for (long k = 2; k <= 9; ++k) {
    Real expect = -(1L - Real::exp2i(1 - k, prec)) * zeta_int(k, prec);
    CHECK(log2_rel(li(k, Real(-1L, prec), prec).value.re(), expect) < -(prec - 4));
  }
  Complex e1 = polar(Real(1L, prec));
  PolylogValue v = li(5, e1, prec);
  CHECK(v.path == PolylogPath::LogExpansion);
  CHECK(log2_rel(v.value, cplx(kLi5UnitRe, kLi5UnitIm, prec)) < kDigits50);
  // the bounded direct sum on the circle agrees for large enough k
  const Bits low = 64;
  Complex i_low = Complex::i(low);
  CHECK(log2_rel(li_series(9, i_low, low).value, li_log_expansion(9, i_low, low).value) < -56);
  CHECK_THROWS_AS(li_series(3, Complex::i(prec), prec), ConvergenceError);
}

TEST_CASE("continuation along the real axis") {
  const Bits prec = 192;
  PolylogValue neg = li(2, Real(-2L, prec), prec);
  CHECK(neg.path == PolylogPath::Inversion);
  CHECK(neg.value.im().is_zero());
  CHECK(log2_rel(neg.value.re(), parse(kLi2AtMinus2, prec)) < kDigits50);

  Complex lower = li(3, Real(3L, prec), prec, Side::Lower).value;
  CHECK(log2_rel(lower, cplx(kLi3At3Re, kLi3At3Im, prec)) < kDigits50);
  Complex upper = li(3, Real(3L, prec), prec, Side::Upper).value;
  CHECK(log2_rel(upper, conj(lower)) < -(prec - 8));

  Complex at5 = li(2, Real(5L, prec), prec, Side::Lower).value;
  CHECK(log2_rel(at5, cplx(kLi2At5Re, kLi2At5Im, prec)) < kDigits50);

  // Li_1(2 + i0) = i pi
  Complex one = li(1, Real(2L, prec), prec).value;
  CHECK(log2_abs(one.re()) < -(prec - 8));
  CHECK(log2_rel(one.im(), pi(prec)) < -(prec - 4));

  CHECK_THROWS_AS(li(2, cplx("2", "1", prec), prec), DomainError);
}

TEST_CASE("log expansion agrees with the other paths") {
  const Bits prec = 160;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.3, 0.9);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const long k = 2 + trial % 5;
    Complex z = polar(Real::from_double(angle(rng), prec)) * Real::from_double(radius(rng), prec);
    CHECK(log2_rel(li_series(k, z, prec).value, li_log_expansion(k, z, prec).value) < -(prec - 16));
  }
  for (long k = 2; k <= 6; ++k) {
    for (Side side : {Side::Upper, Side::Lower}) {
      Real z = parse("2.5", prec);
      CHECK(log2_rel(li_inversion(k, z, prec, side).value, li_log_expansion(k, Complex(z), prec, side).value) <
            -(prec - 16));
    }
    Real zn = parse("-3", prec);
    CHECK(log2_rel(li_inversion(k, zn, prec).value, li_log_expansion(k, Complex(zn), prec).value) <
          -(prec - 16));
  }
}

TEST_CASE("imaginary axis and polar parts") {
  const Bits prec = 160;
  Real y = parse("0.7", prec);
  for (long k = 1; k <= 5; ++k) {
    Complex iy(Real(0L, prec), y);
    CHECK(log2_rel(re_li_on_imaginary_axis(k, y, prec), li(k, iy, prec).value.re()) < -(prec - 8));
  }
  Real r = parse("0.6", prec);
  Real x = parse("1.1", prec);
  auto [re, im] = li1_polar_parts(r, x, prec);
  Complex direct = li1(polar(x) * r, prec);
  CHECK(log2_rel(re, direct.re()) < -(prec - 8));
  CHECK(log2_rel(im, direct.im()) < -(prec - 8));
}

TEST_CASE("dilogarithm and trilogarithm functional equations at random points") {
  const Bits prec = 128;
  const Real tol = Real::exp2i(-(prec - 20), 64);
  std::mt19937_64 rng(1234567);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (DilogIdentity id : kAllDilogIdentities) {
    int accepted = 0;
    while (accepted < 25) {
      Real x = Real::from_double(u(rng), prec);
      Real y = Real::from_double(u(rng), prec);
      if (!in_domain(id, x, y)) continue;
      try {
        Real residual = dilog_functional_equation(id, x, y, prec);
        CHECK_MESSAGE(residual < tol, to_string(id));
        ++accepted;
      } catch (const ConvergenceError&) {
        // argument too close to the unit circle for a bounded series; resample
      }
    }
  }
  for (TrilogIdentity id : kAllTrilogIdentities) {
    for (int n = 0; n < 25; ++n) {
      Real x = Real::from_double(u(rng), prec);
      if (!in_domain(id, x)) continue;
      CHECK_MESSAGE(trilog_functional_equation(id, x, prec) < tol, to_string(id));
    }
  }
  CHECK_THROWS_AS(dilog_functional_equation(DilogIdentity::Reflection, Real(2L, prec), Real(0L, prec), prec),
                  DomainError);
}

TEST_CASE("golden-ratio special values") {
  const Bits prec = 192;
  const GoldenConstants g = golden_constants(prec);
  auto L2 = [&](const Real& x) { return li(2, x, prec).value.re(); };
  auto L3 = [&](const Real& x) { return li(3, x, prec).value.re(); };
  const Real& a = g.alpha;
  const Real& b = g.beta;
  struct Case {
    SpecialValue id;
    Real lhs;
  };
  const Case cases[] = {
      {SpecialValue::Li2_minus_beta, L2(-b)},
      {SpecialValue::Li2_beta, L2(b)},
      {SpecialValue::Li2_beta_squared, L2(b * b)},
      {SpecialValue::Li2_minus_alpha, L2(-a)},
      {SpecialValue::Li2_sum_minus_alpha_minus_beta, L2(-a) + L2(-b)},
      {SpecialValue::Li2_diff_minus_alpha_minus_beta, L2(-a) - L2(-b)},
      {SpecialValue::Li2_beta_plus_beta_squared, L2(b) + L2(b * b)},
      {SpecialValue::Li2_minus_beta_minus_beta, L2(-b) - L2(b)},
      {SpecialValue::Li2_sum_minus_alpha2_minus_beta2, L2(-(a * a)) + L2(-(b * b))},
      {SpecialValue::Li2_sum_minus_alpha3_minus_beta3, L2(-(a * a * a)) + L2(-(b * b * b))},
      {SpecialValue::Li2_sum_half_alpha_half_beta, L2(a / 2L) + L2(b / 2L)},
      {SpecialValue::Li3_beta_squared, L3(b * b)},
      {SpecialValue::Li3_beta_minus_minus_alpha, L3(b) - L3(-a)},
      {SpecialValue::Li3_sum_minus_alpha_minus_beta, L3(-a) + L3(-b)},
  };
  for (const Case& c : cases) {
    CHECK_MESSAGE(log2_rel(c.lhs, special_value(c.id, prec)) < -(prec - 16), to_string(c.id));
    CHECK(special_value_from_string(to_string(c.id)) == c.id);
  }
  CHECK_THROWS_AS(special_value_from_string("nope"), UnknownIdError);
}

TEST_CASE("nonpositive orders match the truncated power series") {
  const Bits prec = 128;
  const Bits wp = prec + 32;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  for (long n = 0; n <= 3; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const double rad = radius(rng);
      const double th = angle(rng);
      Complex z(Real::from_double(rad * std::cos(th), prec), Real::from_double(rad * std::sin(th), prec));
      // Terms j^n |z|^j decrease geometrically past j = 4n / (1 - |z|); stop once the
      // tail bound N^n |z|^N / (1 - q) is far below the target.
      Complex acc(Real(0L, wp));
      Complex zj(Real(1L, wp));
      const double q = std::pow(2.0, 1.0 / 64) * rad;
      long j = 1;
      for (;; ++j) {
        zj *= z;
        acc += zj * pow(Real(j, wp), n);
        const double log2_tail = n * std::log2(double(j)) + j * std::log2(rad) - std::log2(1.0 - q);
        if (j > 64 * n + 8 && log2_tail < -(double(prec) + 16)) break;
      }
      INFO("n=" << n << " |z|=" << rad << " terms=" << j);
      CHECK(log2_rel(li_nonpositive(n, z, prec), acc) < -(prec - 8));
    }
  }
}

TEST_CASE("z d/dz Li_k = Li_{k-1} by central differences") {
  const Bits prec = 192;
  const Real h = Real::exp2i(-prec / 3, prec);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> radius(0.05, 0.95);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  for (int trial = 0; trial < 50; ++trial) {
    const double rad = radius(rng);
    const double th = angle(rng);
    Complex z(Real::from_double(rad * std::cos(th), prec), Real::from_double(rad * std::sin(th), prec));
    for (long k = 1; k <= 3; ++k) {
      Complex up = li(k, z + h, prec).value;
      Complex down = li(k, z - h, prec).value;
      Complex derivative = z * (up - down) / (h * 2L);
      INFO("k=" << k << " trial " << trial);
      // O(h^2) truncation plus 2^-prec / h rounding
      CHECK(log2_rel(derivative, li(k - 1, z, prec).value) < -(2.0 * prec / 3 - 24));
    }
  }
  // also across the continuation
  for (const char* x : {"-3.5", "2.5", "-1.7"}) {
    Complex z(parse(x, prec));
    for (long k = 2; k <= 4; ++k) {
      Complex derivative = z * (li(k, z + h, prec).value - li(k, z - h, prec).value) / (h * 2L);
      CHECK(log2_rel(derivative, li(k - 1, z, prec).value) < -(2.0 * prec / 3 - 24));
    }
  }
}

TEST_CASE("series and log expansion agree on the real segment") {
  const Bits prec = 128;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Complex z(Real::from_double(u(rng), prec));
    if (z.is_zero()) continue;
    const long k = 2 + trial % 5;
    // |log z| < 2 pi
    const double lz = std::log(std::fabs(z.re().to_double()));
    if (lz * lz + (z.re().sign() < 0 ? 9.8697 : 0.0) >= 4 * 9.8696) continue;
    ++compared;
    CHECK(log2_rel(li_series(k, z, prec).value, li_log_expansion(k, z, prec).value) < -(prec - 20));
  }
  CHECK(compared > 150);
}

TEST_CASE("continuation is real left of -1") {
  const Bits prec = 160;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-40.0, -1.01);
  for (int trial = 0; trial < 30; ++trial) {
    Real z = Real::from_double(u(rng), prec);
    for (long k = 1; k <= 6; ++k) {
      PolylogValue v = li_inversion(k, z, prec);
      CHECK(v.value.im().is_zero());
    }
  }
}

TEST_CASE("the dispatcher returns exactly what the chosen path returns") {
  const Bits prec = 128;
  const char* points[][2] = {{"0.3", "0.2"}, {"-0.7", "0"}, {"0.8", "0.55"}, {"-3.5", "0"}, {"2.5", "0"},
                             {"1", "0"},     {"-1", "0"},  {"0", "1"},      {"0.1", "-0.05"}};
  for (const auto& p : points) {
    Complex z = cplx(p[0], p[1], prec);
    for (long k = -2; k <= 5; ++k) {
      if (k <= 1 && z == Complex(Real(1L, prec))) {
        CHECK_THROWS_AS(li(k, z, prec), PoleError);
        continue;
      }
      for (Side side : {Side::Upper, Side::Lower}) {
        PolylogValue v = li(k, z, prec, side);
        Complex routed(prec);
        switch (v.path) {
          case PolylogPath::Rational: routed = li_nonpositive(-k, z, prec); break;
          case PolylogPath::ClosedLog: routed = li1(z, prec); break;
          case PolylogPath::DirectSeries: routed = li_series(k, z, prec).value; break;
          case PolylogPath::LogExpansion: routed = li_log_expansion(k, z, prec, side).value; break;
          case PolylogPath::Inversion: routed = li_inversion(k, z.re(), prec, side).value; break;
        }
        INFO("k=" << k << " z=" << p[0] << "," << p[1] << " path " << to_string(v.path));
        CHECK(v.value == routed);
        CHECK(v.tail_bound < Real::exp2i(8 - prec, 64) * max(Real(1L, 64), abs(v.value)));
      }
    }
  }
}
