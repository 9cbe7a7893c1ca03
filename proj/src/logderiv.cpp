#include "brouncker/logderiv.hpp"

#include <cmath>
#include <sstream>

#include "brouncker/quadrature.hpp"

namespace brouncker::logd {

namespace {

constexpr double kTailTarget = 1e-14;

// e^{-a x} sech x written to stay finite for large x and a in (-1, 0].
double exp_sech(double a, double x) {
  return 2.0 * std::exp(-(a + 1.0) * x) / (1.0 + std::exp(-2.0 * x));
}

void require_a(double a, const char* fn) {
  if (!(a > -1.0)) {
    std::ostringstream os;
    os << fn << " requires a > -1 (got a=" << a << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

double laplace_sech(double a, double abs_tol) {
  require_a(a, "laplace_sech");
  // Cutoff from the bound integrand <= 2 e^{-(a+1)x} for x >= 0.
  const double ap1 = a + 1.0;
  const double X = std::log(2.0 / (kTailTarget * ap1)) / ap1;
  quad::QuadResult q =
      quad::integrate([a](double x) { return exp_sech(a, x); }, 0.0, X, abs_tol);
  return q.value + 2.0 * std::exp(-ap1 * X) / ap1;
}

double euler_integral(double s, double abs_tol) {
  if (!(s > -1.0)) {
    std::ostringstream os;
    os << "euler_integral requires s > -1 (got s=" << s << ")";
    throw DomainError(os.str());
  }
  auto f = [s](double x) { return 2.0 * std::pow(x, s) / (1.0 + x * x); };
  if (s >= 0.0) {
    return quad::integrate(f, 0.0, 1.0, abs_tol).value;
  }
  // Singular head handled by the convergent expansion
  //   2 int_0^eps x^s/(1+x^2) dx = 2 sum_k (-1)^k eps^{s+2k+1}/(s+2k+1).
  const double eps = 0.25;
  double head = 0.0;
  double p = std::pow(eps, s + 1.0);
  double sign = 1.0;
  for (int k = 0; k < 40; ++k) {
    const double term = 2.0 * sign * p / (s + 2.0 * k + 1.0);
    head += term;
    if (std::fabs(term) < 1e-18) break;
    p *= eps * eps;
    sign = -sign;
  }
  return head + quad::integrate(f, eps, 1.0, abs_tol).value;
}

double laplace_x_sech(double a, double abs_tol) {
  require_a(a, "laplace_x_sech");
  const double ap1 = a + 1.0;
  // Solve 2 e^{-(a+1)X} (X/(a+1) + 1/(a+1)^2) <= target by iteration.
  double X = std::log(2.0 / (kTailTarget * ap1)) / ap1;
  for (int i = 0; i < 4; ++i) {
    const double poly = X / ap1 + 1.0 / (ap1 * ap1);
    X = std::log(2.0 * poly / kTailTarget) / ap1;
  }
  quad::QuadResult q =
      quad::integrate([a](double x) { return x * exp_sech(a, x); }, 0.0, X, abs_tol);
  const double tail = 2.0 * std::exp(-ap1 * X) * (X / ap1 + 1.0 / (ap1 * ap1));
  return q.value + tail;
}

cf::Evaluation cf_phi(const ShiftedArgument& arg, double s, double tol,
                      std::int64_t max_depth) {
  const double phi = s + arg.shift;
  const double r = arg.r;
  if (!(r > 0.0) || !(phi > 0.0)) {
    std::ostringstream os;
    os << "cf_phi requires r > 0 and phi = s + shift > 0 (got phi=" << phi << ", r=" << r
       << ")";
    throw DomainError(os.str());
  }
  cf::CfSpec spec;
  spec.b0 = phi;
  spec.a = [r](std::int64_t n) {
    const double dn = static_cast<double>(n);
    return dn * dn * r * r;
  };
  spec.b = [phi](std::int64_t) { return phi; };
  cf::Evaluation inner = cf::eval_forward(spec, tol, max_depth);

  cf::Evaluation out = inner;
  out.value = 0.5 / inner.value;
  out.err_estimate = 0.5 * inner.err_estimate / (inner.value * inner.value);
  return out;
}

namespace {

double f_half(const DomainPoint& p, double shift, double tol) {
  if (!(p.r > 0.5) || !(p.s >= 0.0)) {
    std::ostringstream os;
    os << "log-derivative requires s >= 0 and r > 1/2 (got s=" << p.s << ", r=" << p.r << ")";
    throw DomainError(os.str());
  }
  const double boundary = std::fabs(p.r - 1.0) + 0.1;
  if (p.s > boundary) {
    cf::Evaluation ev = cf_phi(ShiftedArgument{shift, p.r}, p.s, tol);
    if (ev.converged && ev.err_estimate <= tol) return ev.value;
  }
  return 0.5 / p.r * laplace_sech((shift + p.s) / p.r, 1e-13);
}

}  // namespace

double f1(const DomainPoint& p, double tol) { return f_half(p, 1.0 - p.r, tol); }
double f2(const DomainPoint& p, double tol) { return f_half(p, p.r - 1.0, tol); }

double f1_via_cf(const DomainPoint& p, double tol, std::int64_t max_depth) {
  return cf_phi(ShiftedArgument{1.0 - p.r, p.r}, p.s, tol, max_depth).value;
}
double f2_via_cf(const DomainPoint& p, double tol, std::int64_t max_depth) {
  return cf_phi(ShiftedArgument{p.r - 1.0, p.r}, p.s, tol, max_depth).value;
}
double f1_via_integral(const DomainPoint& p, double abs_tol) {
  return 0.5 / p.r * laplace_sech((1.0 - p.r + p.s) / p.r, abs_tol);
}
double f2_via_integral(const DomainPoint& p, double abs_tol) {
  return 0.5 / p.r * laplace_sech((p.r - 1.0 + p.s) / p.r, abs_tol);
}

double dlog_y(const DomainPoint& p, double tol) { return f1(p, tol) + f2(p, tol); }

namespace {

double h_half(const DomainPoint& p, double u, double v, double phi, double tol,
              std::int64_t max_depth) {
  // u v = phi^2 - r^2 for phi the shifted argument of this half.
  const double r = p.r;
  const double prefix = u * v;
  cf::CfSpec spec = cf::tk_to_cf(
      prefix,
      [r](std::int64_t n) {
        const double dn = static_cast<double>(n);
        return 4.0 * dn * dn * r * r;
      },
      1.0, [prefix](std::int64_t) { return prefix; });
  cf::Evaluation inner = cf::eval_forward(spec, tol, max_depth);
  const double err = 0.5 * inner.err_estimate / (inner.value * inner.value);
  if (inner.converged && err <= tol) return 0.5 / inner.value;
  return 0.5 / (r * r) * laplace_x_sech(phi / r, 1e-13);
}

}  // namespace

double h1(const DomainPoint& p, double tol, std::int64_t max_depth) {
  require_second_derivative(p);
  return h_half(p, 1.0 - 2.0 * p.r + p.s, 1.0 + p.s, 1.0 - p.r + p.s, tol, max_depth);
}

double h2(const DomainPoint& p, double tol, std::int64_t max_depth) {
  require_second_derivative(p);
  return h_half(p, 2.0 * p.r - 1.0 + p.s, p.s - 1.0, p.r - 1.0 + p.s, tol, max_depth);
}

double d2log_y(const DomainPoint& p, double tol) { return -(h1(p, tol) + h2(p, tol)); }

double h1_via_integral(const DomainPoint& p, double abs_tol) {
  require_second_derivative(p);
  return 0.5 / (p.r * p.r) * laplace_x_sech((1.0 - p.r + p.s) / p.r, abs_tol);
}
double h2_via_integral(const DomainPoint& p, double abs_tol) {
  require_second_derivative(p);
  return 0.5 / (p.r * p.r) * laplace_x_sech((p.r - 1.0 + p.s) / p.r, abs_tol);
}

}  // namespace brouncker::logd
