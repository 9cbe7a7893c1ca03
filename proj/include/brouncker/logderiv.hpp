#ifndef BRK_LOGDERIV_HPP
#define BRK_LOGDERIV_HPP

#include <cstdint>

#include "brouncker/brouncker.hpp"
#include "brouncker/cf.hpp"

namespace brouncker::logd {

// phi(s) = s + shift, paired with the family parameter r.
struct ShiftedArgument {
  double shift = 0.0;
  double r = 1.0;
};

// int_0^inf e^{-a x} / cosh x dx, a > -1.  Finite panel plus the analytic
// tail estimate 2 e^{-(a+1)X} / (a+1).
double laplace_sech(double a, double abs_tol = 1e-13);

// 2 int_0^1 x^s / (1 + x^2) dx, s > -1; equals laplace_sech(s).
double euler_integral(double s, double abs_tol = 1e-13);

// int_0^inf x e^{-a x} / cosh x dx, a > -1.
double laplace_x_sech(double a, double abs_tol = 1e-13);

// 1 / (2 phi + 2 K(n^2 r^2 / phi)) for phi = s + shift > 0, evaluated by the
// forward bracket.  Identity: equals (1/2r) laplace_sech(phi/r), the bracket
// midpoint carrying the usual extra order of accuracy.
cf::Evaluation cf_phi(const ShiftedArgument& arg, double s, double tol,
                      std::int64_t max_depth = 1'000'000);

// Halves of the logarithmic derivative: f1 solves
//   f1(s) + f1(s+2r) = 1/(s+1)       (shift 1-r),
// f2 solves
//   f2(s) + f2(s+2r) = 1/(s+2r-1)    (shift r-1).
// Continued fraction path for s > |r-1| + 0.1, Laplace integral below (the
// fraction converges like n^(-phi/r), uselessly slow near phi = 0).  When the
// fraction fails to bracket within tol at the depth cap, the integral path is
// used for the result anyway; both paths cover the full domain.
double f1(const DomainPoint& p, double tol = 1e-10);
double f2(const DomainPoint& p, double tol = 1e-10);

// Path-pinned variants, exposed so the overlap band can be cross-checked.
double f1_via_cf(const DomainPoint& p, double tol, std::int64_t max_depth = 1'000'000);
double f1_via_integral(const DomainPoint& p, double abs_tol = 1e-13);
double f2_via_cf(const DomainPoint& p, double tol, std::int64_t max_depth = 1'000'000);
double f2_via_integral(const DomainPoint& p, double abs_tol = 1e-13);

// (ln y)'(s, r) = f1 + f2; satisfies
//   dlog_y(s) + dlog_y(s+2r) = 2(s+r) / ((s+1)(s+2r-1)).
double dlog_y(const DomainPoint& p, double tol = 1e-10);

// Second-derivative halves, s > max(1, 2r-1):
//   h1 = 1 / (2 (1-2r+s)(1+s) + 2 TK(4 n^2 r^2; 1, (1-2r+s)(1+s)))
// and h2 with (2r-1+s)(s-1); each equals (1/2r^2) laplace_x_sech(phi/r) for
// phi = s+1-r resp. s+r-1.  Near the domain boundary the fraction brackets
// slowly; if it misses tol at the depth cap the integral value is returned.
double h1(const DomainPoint& p, double tol = 1e-10, std::int64_t max_depth = 100'000);
double h2(const DomainPoint& p, double tol = 1e-10, std::int64_t max_depth = 100'000);

// (ln y)''(s, r) = -(h1 + h2) < 0.
double d2log_y(const DomainPoint& p, double tol = 1e-10);

// Integral-path variants of the second-derivative pieces (oracles).
double h1_via_integral(const DomainPoint& p, double abs_tol = 1e-13);
double h2_via_integral(const DomainPoint& p, double abs_tol = 1e-13);

}  // namespace brouncker::logd

#endif
