#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "brouncker/brouncker.hpp"
#include "doctest.h"

using namespace brouncker;

namespace {

// Reference values computed with 30-digit arbitrary precision arithmetic and
// rounded to double.
constexpr double kFourOverPi = 1.2732395447351627;   // y(1, 1)
constexpr double kPi = 3.1415926535897932;           // y(3, 1)
constexpr double kY_2_15 = 2.3191905339278567;       // y(2, 3/2)
constexpr double kY_1_06 = 1.0711882232522240;       // y(1, 3/5)
constexpr double kY_5_2 = 5.2441151085842396;        // y(5, 2)
constexpr double kY_025_075 = 0.50306042766753310;   // y(1/4, 3/4)
constexpr double kYZero1 = 0.45694658104446363;      // 8 pi^2 / Gamma^4(1/4)
constexpr double kYZero2 = 0.70021867810599153;

}  // namespace

TEST_CASE("closed form reproduces frozen reference values") {
  struct Point { double s, r, expect; };
  const Point pts[] = {
      {1.0, 1.0, kFourOverPi}, {3.0, 1.0, kPi},         {2.0, 1.5, kY_2_15},
      {1.0, 0.6, kY_1_06},     {5.0, 2.0, kY_5_2},      {0.25, 0.75, kY_025_075},
  };
  for (const Point& p : pts) {
    CAPTURE(p.s);
    CAPTURE(p.r);
    const double v = y_gamma(DomainPoint{p.s, p.r});
    CHECK(std::fabs(v - p.expect) <= 5e-14 * p.expect);
  }
}

TEST_CASE("functional equation residual is tiny through the closed form") {
  for (const DomainPoint& p : {DomainPoint{1.0, 1.0}, DomainPoint{2.0, 1.5},
                               DomainPoint{0.7, 3.0}}) {
    CHECK(check_functional(p) <= 1e-13);
  }
}

TEST_CASE("functional equation holds on random points") {
  std::mt19937_64 rng(0x5eed0bcdULL);
  std::uniform_real_distribution<double> us(0.01, 30.0), ur(0.51, 5.0);
  for (int i = 0; i < 50; ++i) {
    const DomainPoint p{us(rng), ur(rng)};
    CAPTURE(p.s);
    CAPTURE(p.r);
    CHECK(check_functional(p) <= 1e-11);
  }
}

TEST_CASE("classic fraction brackets its limit") {
  const cf::Evaluation ev = b(1.0, 1e-10, 1'000'000);
  CHECK(std::fabs(ev.value - kFourOverPi) <= ev.err_estimate);

  const cf::Evaluation fast = b(3.0, 1e-10, 1'000'000);
  CHECK(fast.converged);
  CHECK(std::fabs(fast.value - kPi) <= 1e-10);
}

TEST_CASE("fraction agrees with the closed form where it converges") {
  const DomainPoint p{5.0, 2.0};
  const cf::Evaluation ev = y_cf(p, 1e-9, 1'000'000);
  CHECK(std::fabs(ev.value - y_gamma(p)) <= ev.err_estimate + 1e-13);
}

TEST_CASE("fraction bracket narrows monotonically with depth") {
  double prev = 1e300;
  for (std::int64_t depth : {1'000, 10'000, 100'000}) {
    const cf::Evaluation ev = y_cf(DomainPoint{1.0, 1.0}, 1e-30, depth);
    CHECK(ev.err_estimate < prev);
    prev = ev.err_estimate;
  }
}

TEST_CASE("partial product with tail correction hits the closed form") {
  const cf::Evaluation ev = y_product(DomainPoint{3.0, 1.0}, 200'000);
  CHECK(ev.converged);
  CHECK(std::fabs(ev.value - kPi) <= 3.0 * ev.err_estimate);
}

TEST_CASE("product error decreases with the number of factors") {
  const DomainPoint p{2.0, 1.5};
  const double ref = y_gamma(p);
  double prev = 1e300;
  for (std::int64_t n : {100, 1'000, 10'000}) {
    const double err = std::fabs(y_product(p, n).value - ref);
    CAPTURE(n);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("product at s = 0 meets the closed-form value there") {
  for (double r : {0.7, 1.0, 2.0}) {
    const cf::Evaluation ev = y_product(DomainPoint{0.0, r}, 100'000);
    CAPTURE(r);
    CHECK(std::fabs(ev.value - y_zero(r)) <= std::max(3.0 * ev.err_estimate, 1e-12));
  }
}

TEST_CASE("empty product reports an estimate that covers the truth") {
  for (const DomainPoint& p : {DomainPoint{1.0, 1.0}, DomainPoint{4.0, 2.0}}) {
    const cf::Evaluation ev = y_product(p, 0);
    CAPTURE(p.s);
    CHECK_FALSE(ev.converged);
    CHECK(ev.value == p.s + 1.0);
    CHECK(std::fabs(y_gamma(p) - ev.value) <= 1.5 * ev.err_estimate);
  }
}

TEST_CASE("value at s = 0 matches its closed form") {
  CHECK(std::fabs(y_zero(1.0) - kYZero1) <= 1e-13);
  CHECK(std::fabs(y_zero(2.0) - kYZero2) <= 1e-13);
  for (double r : {0.6, 1.0, 2.5}) {
    CAPTURE(r);
    CHECK(std::fabs(y_zero(r) - y_gamma(DomainPoint{0.0, r})) <=
          5e-14 * std::fabs(y_zero(r)));
  }
}

TEST_CASE("exponential form integrates the log derivative correctly") {
  const cf::Evaluation ev = y_exponential(DomainPoint{2.0, 1.5}, 1e-10);
  CHECK(ev.converged);
  CHECK(std::fabs(ev.value - kY_2_15) <= 1e-9);

  // s = 0 short-circuits to the closed-form anchor.
  const cf::Evaluation zero = y_exponential(DomainPoint{0.0, 2.0}, 1e-10);
  CHECK(zero.value == y_zero(2.0));

  const DomainPoint q{7.0, 0.8};
  const cf::Evaluation far = y_exponential(q, 1e-10);
  CHECK(std::fabs(far.value - y_gamma(q)) <= std::max(3.0 * far.err_estimate, 1e-9));
}

TEST_CASE("domain hypotheses are enforced") {
  CHECK_THROWS_AS((void)y_cf(DomainPoint{0.0, 1.0}, 1e-8), DomainError);
  CHECK_THROWS_AS((void)y_cf(DomainPoint{1.0, 0.5}, 1e-8), DomainError);
  CHECK_THROWS_AS((void)y_gamma(DomainPoint{-0.1, 1.0}), DomainError);
  CHECK_THROWS_AS((void)y_zero(0.5), DomainError);
  CHECK_THROWS_AS((void)y_product(DomainPoint{1.0, 1.0}, -1), InvalidArgument);
  CHECK_THROWS_AS((void)y_exponential(DomainPoint{1.0, 1.0}, 0.0), InvalidArgument);
}

TEST_CASE("all representations are deterministic") {
  const DomainPoint p{2.0, 1.5};
  CHECK(y_gamma(p) == y_gamma(p));
  CHECK(y_cf(p, 1e-9).value == y_cf(p, 1e-9).value);
  CHECK(y_product(p, 10'000).value == y_product(p, 10'000).value);
  CHECK(y_exponential(p, 1e-9).value == y_exponential(p, 1e-9).value);
}
