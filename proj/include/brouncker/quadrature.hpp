#ifndef BRK_QUADRATURE_HPP
#define BRK_QUADRATURE_HPP

#include <functional>

#include "brouncker/errors.hpp"

namespace brouncker::quad {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels = 0;
};

// 15-point Gauss-Kronrod rule on [a, b]; err_estimate from the embedded
// 7-point Gauss rule.
QuadResult gk15(const std::function<double(double)>& f, double a, double b);

// Adaptive bisection of [a, b] until the summed panel error is below abs_tol.
// Deterministic: panels are visited depth-first left to right.  Throws
// QuadratureFailure when the panel budget runs out with the error above tol.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_panels = 20000);

}  // namespace brouncker::quad

#endif
