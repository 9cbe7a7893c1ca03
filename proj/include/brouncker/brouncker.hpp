#ifndef BRK_BROUNCKER_HPP
#define BRK_BROUNCKER_HPP

#include <cstdint>

#include "brouncker/cf.hpp"

namespace brouncker {

// Argument pair of y(s, r).  The family is defined for r > 1/2 and solves
//   y(s, r) y(s + 2r, r) = (s + 1)(s + 2r - 1),   y(s, r)/s -> 1 as s -> inf.
struct DomainPoint {
  double s = 0.0;
  double r = 1.0;
};

// Throwing validators; `what` names the violated hypothesis.
void require_basic(const DomainPoint& p);        // s > 0, r > 1/2
void require_nonnegative_s(const DomainPoint& p);  // s >= 0, r > 1/2 (product/exponential/closed forms)
void require_second_derivative(const DomainPoint& p);  // s > max(1, 2r-1), r > 1/2

// Continued fraction s + K((2n-1)^2 r^2 - (r-1)^2 / 2s), bracket evaluation.
// Self-reported err_estimate is the bracket half-width; the returned midpoint
// is typically one order better.
cf::Evaluation y_cf(const DomainPoint& p, double tol, std::int64_t max_depth = 1'000'000);

// Partial product
//   y = (s+1) prod_{n=0}^{N-1} (s+2r-1+4nr)(s+4r+1+4nr) / ((s+2r+1+4nr)(s+4r-1+4nr))
// accumulated in log space, with a first-order integral tail correction for
// N >= 1; err_estimate reports the correction's own leading error.
cf::Evaluation y_product(const DomainPoint& p, std::int64_t n_terms);

// Closed form 4r G((s+2r+1)/4r) G((s+4r-1)/4r) / (G((s+1)/4r) G((s+2r-1)/4r))
// via ln_gamma differences; the precision reference for every other path.
double y_gamma(const DomainPoint& p);

// Classic case b(s) = y(s, 1), b(s) b(s+2) = (s+1)^2, b(1) = 4/pi.
cf::Evaluation b(double s, double tol, std::int64_t max_depth = 1'000'000);

// y(0, r) = 8 pi r 2^(1-1/r) G^2(1/2r) / G^4(1/4r) * cot(pi/4r).
double y_zero(double r);

// y = y(0, r) exp( int_0^s (f1 + f2) dt ) with the integrand taken from the
// Laplace-type representations of the logarithmic derivative, valid for all
// s >= 0 when r > 1/2.
cf::Evaluation y_exponential(const DomainPoint& p, double tol);

// Relative residual |y(s,r) y(s+2r,r) - (s+1)(s+2r-1)| / (s+1)(s+2r-1),
// evaluated through the closed form.
double check_functional(const DomainPoint& p);

}  // namespace brouncker

#endif
