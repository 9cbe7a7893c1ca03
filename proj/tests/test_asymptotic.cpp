#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "brouncker/asymptotic.hpp"
#include "brouncker/brouncker.hpp"
#include "brouncker/logderiv.hpp"
#include "doctest.h"

using namespace brouncker;

TEST_CASE("rational parsing accepts fractions, integers, and decimals") {
  CHECK(asym::parse_rational("3/2") == mpq_class(3, 2));
  CHECK(asym::parse_rational("1.5") == mpq_class(3, 2));
  CHECK(asym::parse_rational("2") == 2);
  CHECK(asym::parse_rational("-5/10") == mpq_class(-1, 2));
  CHECK(asym::parse_rational(" 7 / 4 ") == mpq_class(7, 4));
  CHECK(asym::parse_rational("0.125") == mpq_class(1, 8));
  CHECK_THROWS_AS((void)asym::parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS((void)asym::parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS((void)asym::parse_rational("1.5/2"), InvalidArgument);
  CHECK_THROWS_AS((void)asym::parse_rational("1/0"), InvalidArgument);
}

TEST_CASE("coefficients collapse to Euler numbers at r = 1") {
  const auto a = asym::asym_coeffs(mpq_class(1), 6);
  const long expect[] = {-1, 5, -61, 1385, -50521, 2702765};
  REQUIRE(a.size() == 6);
  for (int n = 0; n < 6; ++n) CHECK(a[static_cast<std::size_t>(n)] == expect[n]);
}

TEST_CASE("coefficients at r = 2 match the frozen exact values") {
  const auto a = asym::asym_coeffs(mpq_class(2), 6);
  const char* expect[] = {"-3", "57", "-2763", "250737", "-36581523", "7828053417"};
  REQUIRE(a.size() == 6);
  for (int n = 0; n < 6; ++n) CHECK(a[static_cast<std::size_t>(n)] == mpq_class(expect[n]));
}

TEST_CASE("leading coefficient is 1 - 2r for any rational r") {
  for (const char* rt : {"3/2", "7/4", "2", "5", "0.6"}) {
    const mpq_class r = asym::parse_rational(rt);
    CAPTURE(rt);
    CHECK(asym::asym_coeffs(r, 1)[0] == 1 - 2 * r);
  }
}

TEST_CASE("floating fallback tracks the exact coefficients") {
  const auto exact = asym::asym_coeffs(mpq_class(4, 5), 5);
  const auto approx = asym::asym_coeffs_double(0.8, 5);
  for (int n = 0; n < 5; ++n) {
    const double e = exact[static_cast<std::size_t>(n)].get_d();
    CAPTURE(n);
    CHECK(std::fabs(approx[static_cast<std::size_t>(n)] - e) <= 1e-12 * std::fabs(e));
  }
}

TEST_CASE("composed Laurent coefficients match frozen exact values") {
  const asym::AsymSeries one = asym::make_series(mpq_class(1), 6);
  const char* expect1[] = {"1", "1/2", "-9/8", "153/16", "-21429/128", "1268343/256",
                           "-227803437/1024"};
  REQUIRE(one.laurent.size() == 7);
  for (int m = 0; m <= 6; ++m)
    CHECK(one.laurent[static_cast<std::size_t>(m)] == mpq_class(expect1[m]));

  const asym::AsymSeries two = asym::make_series(mpq_class(2), 6);
  const char* expect2[] = {"1",           "3/2",          "-105/8",         "7035/16",
                           "-3912405/128", "922941285/256", "-661855350765/1024"};
  REQUIRE(two.laurent.size() == 7);
  for (int m = 0; m <= 6; ++m)
    CHECK(two.laurent[static_cast<std::size_t>(m)] == mpq_class(expect2[m]));
}

TEST_CASE("composition agrees numerically with exponentiating the sum") {
  const asym::AsymSeries ser = asym::make_series(mpq_class(5, 3), 6);
  const double s = 50.0;
  double expo = 0.0;
  for (int n = 1; n <= 6; ++n)
    expo -= ser.A[static_cast<std::size_t>(n - 1)].get_d() /
            (2.0 * n * std::pow(s, 2.0 * n));
  const double direct = s * std::exp(expo);
  const double composed = asym::y_asymptotic(s, ser, 6).value;
  CHECK(std::fabs(direct - composed) <= 1e-12);
}

TEST_CASE("log-derivative expansion carries the same coefficients") {
  // (ln y)' = 1/s + sum_n A_n s^{-(2n+1)}; truncating after A_3 leaves a
  // remainder led by A_4 / s^9.
  const asym::AsymSeries ser = asym::make_series(mpq_class(3, 2), 5);
  auto remainder = [&](double s) {
    double trunc = 1.0 / s;
    for (int n = 1; n <= 3; ++n)
      trunc += ser.A[static_cast<std::size_t>(n - 1)].get_d() / std::pow(s, 2.0 * n + 1.0);
    return logd::dlog_y(DomainPoint{s, 1.5}, 1e-12) - trunc;
  };
  const double r15 = remainder(15.0);
  const double r30 = remainder(30.0);
  const double lead15 = ser.A[3].get_d() / std::pow(15.0, 9.0);
  const double lead30 = ser.A[3].get_d() / std::pow(30.0, 9.0);
  CHECK(r15 / lead15 > 0.6);
  CHECK(r15 / lead15 < 1.1);
  CHECK(r30 / lead30 > 0.6);
  CHECK(r30 / lead30 < 1.1);
  // Halving 1/s should shrink the remainder by roughly 2^9 = 512.
  CHECK(r15 / r30 > 358.0);
  CHECK(r15 / r30 < 563.0);
}

TEST_CASE("one-term truncation error scales like the first omitted term") {
  for (const char* rt : {"1", "3/2"}) {
    const asym::AsymSeries ser = asym::make_series(asym::parse_rational(rt), 4);
    const double r = asym::parse_rational(rt).get_d();
    const double c3 = std::fabs(ser.laurent[2].get_d());
    double prev = 0.0;
    for (double s : {100.0, 200.0, 400.0, 800.0}) {
      const double err =
          std::fabs(asym::y_asymptotic(s, ser, 1).value - y_gamma(DomainPoint{s, r}));
      CAPTURE(rt);
      CAPTURE(s);
      CHECK(err * s * s * s / c3 > 0.8);
      CHECK(err * s * s * s / c3 < 1.2);
      if (prev > 0.0) {
        const double ratio = prev / err;
        CHECK(ratio > 6.0);
        CHECK(ratio < 10.0);
      }
      prev = err;
    }
  }
}

TEST_CASE("more terms help while the argument is large") {
  const asym::AsymSeries ser = asym::make_series(mpq_class(2), 6);
  const double ref = y_gamma(DomainPoint{30.0, 2.0});
  double prev = 1e300;
  for (int m = 0; m <= 3; ++m) {
    const double err = std::fabs(asym::y_asymptotic(30.0, ser, m).value - ref);
    CAPTURE(m);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("reported error estimate is the first omitted term") {
  const asym::AsymSeries ser = asym::make_series(mpq_class(2), 4);
  const double s = 25.0;
  const cf::Evaluation ev = asym::y_asymptotic(s, ser, 2);
  const double expect = std::fabs(ser.laurent[3].get_d()) * s / std::pow(s, 6.0);
  CHECK(ev.err_estimate == doctest::Approx(expect).epsilon(1e-14));
  CHECK(ev.iterations == 2);
}

TEST_CASE("argument and order validation") {
  const asym::AsymSeries ser = asym::make_series(mpq_class(2), 3);
  CHECK_THROWS_AS((void)asym::y_asymptotic(-1.0, ser, 2), DomainError);
  CHECK_THROWS_AS((void)asym::y_asymptotic(10.0, ser, 7), InvalidArgument);
  CHECK_THROWS_AS((void)asym::asym_coeffs(mpq_class(2), 0), InvalidArgument);

  asym::AsymSeries empty;
  CHECK_THROWS_AS(asym::exp_compose(empty, 2), InvalidArgument);
}
