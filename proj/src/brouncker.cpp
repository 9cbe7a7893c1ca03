#include "brouncker/brouncker.hpp"

#include <cmath>
#include <sstream>

#include "brouncker/logderiv.hpp"
#include "brouncker/quadrature.hpp"
#include "brouncker/specfun.hpp"

namespace brouncker {

namespace {

[[noreturn]] void domain_fail(const char* need, const DomainPoint& p) {
  std::ostringstream os;
  os << "domain violation: requires " << need << " (got s=" << p.s << ", r=" << p.r << ")";
  throw DomainError(os.str());
}

}  // namespace

void require_basic(const DomainPoint& p) {
  if (!(p.r > 0.5) || !(p.s > 0.0))
    domain_fail("s > 0 and r > 1/2 (generalized Brouncker fraction hypothesis)", p);
}

void require_nonnegative_s(const DomainPoint& p) {
  if (!(p.r > 0.5) || !(p.s >= 0.0))
    domain_fail("s >= 0 and r > 1/2 (generalized Brouncker family hypothesis)", p);
}

void require_second_derivative(const DomainPoint& p) {
  if (!(p.r > 0.5) || !(p.s > std::max(1.0, 2.0 * p.r - 1.0)))
    domain_fail("s > max(1, 2r-1) and r > 1/2 (second log-derivative hypothesis)", p);
}

cf::Evaluation y_cf(const DomainPoint& p, double tol, std::int64_t max_depth) {
  require_basic(p);
  const double s = p.s, r = p.r;
  const double shift2 = (r - 1.0) * (r - 1.0);
  cf::CfSpec spec;
  spec.b0 = s;
  spec.a = [r, shift2](std::int64_t n) {
    const double odd = static_cast<double>(2 * n - 1);
    return odd * odd * r * r - shift2;
  };
  spec.b = [s](std::int64_t) { return 2.0 * s; };
  return cf::eval_forward(spec, tol, max_depth);
}

cf::Evaluation y_product(const DomainPoint& p, std::int64_t n_terms) {
  require_nonnegative_s(p);
  if (n_terms < 0) throw InvalidArgument("y_product requires n_terms >= 0");
  const double s = p.s, r = p.r;

  cf::Evaluation ev;
  ev.method = cf::Method::Product;
  ev.iterations = n_terms;

  if (n_terms == 0) {
    // Empty product; cover the whole tail with a crude but honest estimate
    // built from the first few true factors plus an integral remainder.
    double tail = 0.0;
    for (std::int64_t n = 0; n < 10; ++n) {
      const double x = s + 3.0 * r + 4.0 * static_cast<double>(n) * r;
      tail += -std::log1p(-(r + 1.0) * (r + 1.0) / (x * x)) +
              std::log1p(-(r - 1.0) * (r - 1.0) / (x * x));
    }
    tail += 1.0 / (4.0 * r * 10.0 + s + r);
    ev.value = s + 1.0;
    ev.err_estimate = (s + 1.0) * std::expm1(tail);
    ev.converged = false;
    return ev;
  }

  // ln of factor n: ln(x^2 - (r+1)^2) - ln(x^2 - (r-1)^2), x = s + 3r + 4nr.
  double log_acc = std::log(s + 1.0);
  for (std::int64_t n = 0; n < n_terms; ++n) {
    const double x = s + 3.0 * r + 4.0 * static_cast<double>(n) * r;
    const double inv2 = 1.0 / (x * x);
    log_acc += std::log1p(-(r + 1.0) * (r + 1.0) * inv2) -
               std::log1p(-(r - 1.0) * (r - 1.0) * inv2);
  }

  // Remaining factors: sum_{n>=N} ln(...) ~ -sum 4r/x^2, estimated by the
  // midpoint integral; its own error is O(X^-3).
  const double X = 4.0 * r * static_cast<double>(n_terms) + s + r;  // x at n = N - 1/2
  const double correction = -1.0 / X;
  const double corr_err = (5.0 * r * r + 1.0) / (3.0 * X * X * X);
  // Rounding floor of the accumulated log sum, random-walk model.
  const double round_err =
      std::sqrt(static_cast<double>(n_terms)) * 2.3e-16 * (1.0 + std::fabs(log_acc));

  ev.value = std::exp(log_acc + correction);
  ev.err_estimate = ev.value * (corr_err + round_err);
  ev.converged = true;
  return ev;
}

double y_gamma(const DomainPoint& p) {
  require_nonnegative_s(p);
  const double s = p.s, r = p.r;
  const double q = 1.0 / (4.0 * r);
  const double lg = sf::ln_gamma((s + 2.0 * r + 1.0) * q) + sf::ln_gamma((s + 4.0 * r - 1.0) * q) -
                    sf::ln_gamma((s + 1.0) * q) - sf::ln_gamma((s + 2.0 * r - 1.0) * q);
  return 4.0 * r * std::exp(lg);
}

cf::Evaluation b(double s, double tol, std::int64_t max_depth) {
  return y_cf(DomainPoint{s, 1.0}, tol, max_depth);
}

double y_zero(double r) {
  if (!(r > 0.5)) {
    std::ostringstream os;
    os << "domain violation: requires r > 1/2 (generalized Brouncker family hypothesis), got r=" << r;
    throw DomainError(os.str());
  }
  const double pi = 3.14159265358979323846264338327950288;
  const double q = 1.0 / (4.0 * r);
  const double lg = std::log(8.0 * pi * r) + (1.0 - 1.0 / r) * std::log(2.0) +
                    2.0 * sf::ln_gamma(2.0 * q) - 4.0 * sf::ln_gamma(q);
  return std::exp(lg) / std::tan(pi * q);
}

cf::Evaluation y_exponential(const DomainPoint& p, double tol) {
  require_nonnegative_s(p);
  if (!(tol > 0.0)) throw InvalidArgument("y_exponential requires tol > 0");
  const double r = p.r;

  cf::Evaluation ev;
  ev.method = cf::Method::Quadrature;
  if (p.s == 0.0) {
    ev.value = y_zero(r);
    ev.err_estimate = ev.value * 1e-13;
    ev.converged = true;
    return ev;
  }

  // (ln y)'(t) = (1/2r) [ L((1-r+t)/r) + L((r-1+t)/r) ], L = laplace_sech;
  // both arguments stay above -1 for t >= 0, r > 1/2.
  const double inner_tol = 1e-13;
  auto integrand = [r, inner_tol](double t) {
    return 0.5 / r *
           (logd::laplace_sech((1.0 - r + t) / r, inner_tol) +
            logd::laplace_sech((r - 1.0 + t) / r, inner_tol));
  };
  const double log_tol = 0.5 * tol;
  quad::QuadResult q = quad::integrate(integrand, 0.0, p.s, log_tol);

  ev.value = y_zero(r) * std::exp(q.value);
  ev.iterations = q.panels;
  // Error on the log scale: outer quadrature estimate plus accumulated inner
  // tolerance over the interval length.
  const double log_err = q.err_estimate + p.s * inner_tol / r + 1e-14;
  ev.err_estimate = ev.value * log_err;
  ev.converged = log_err <= tol;
  return ev;
}

double check_functional(const DomainPoint& p) {
  require_basic(p);
  const double lhs = y_gamma(p) * y_gamma(DomainPoint{p.s + 2.0 * p.r, p.r});
  const double rhs = (p.s + 1.0) * (p.s + 2.0 * p.r - 1.0);
  return std::fabs(lhs - rhs) / rhs;
}

}  // namespace brouncker
