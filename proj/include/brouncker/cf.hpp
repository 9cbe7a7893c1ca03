#ifndef BRK_CF_HPP
#define BRK_CF_HPP

#include <cstdint>
#include <functional>

#include "brouncker/errors.hpp"

namespace brouncker::cf {

// A continued fraction b0 + K_{n>=1}(a(n)/b(n)), elements supplied lazily.
// Indexing starts at n = 1 for both element callbacks.
struct CfSpec {
  double b0 = 0.0;
  std::function<double(std::int64_t)> a;
  std::function<double(std::int64_t)> b;
};

enum class Method {
  ForwardBracket,
  Lentz,
  Backward,
  Product,
  Quadrature,
  Closed,
  Series,
};

struct Evaluation {
  double value = 0.0;
  std::int64_t iterations = 0;
  double err_estimate = 0.0;
  bool converged = false;
  Method method = Method::ForwardBracket;
};

struct EvalOptions {
  double tol = 1e-12;
  std::int64_t max_depth = 1'000'000;
  // Convergent numerators/denominators are rescaled by 2^-512 past this
  // magnitude; a power-of-two scale leaves every quotient bit-identical.
  double renorm_threshold = 1e150;
};

// Three-term forward recurrence.  Requires a(n) >= 0 and b(n) > 0: even
// convergents then increase, odd convergents decrease, and the limit lies
// between them.  Returns the bracket midpoint with err_estimate = half the
// final gap; a zero numerator terminates the fraction exactly.  When the
// bracket is still wider than tol at max_depth the best value is returned
// with converged = false.
Evaluation eval_forward(const CfSpec& cf, const EvalOptions& opts);
Evaluation eval_forward(const CfSpec& cf, double tol, std::int64_t max_depth = 1'000'000);

// Bottom-up evaluation of the depth-truncated fraction (tail set to zero).
// Works for any sign pattern; used as an independent oracle for the forward
// recurrence.
double eval_backward(const CfSpec& cf, std::int64_t depth);

// Modified Lentz iteration.  No bracketing, so err_estimate is the last
// relative step times the value; secondary path for specs whose elements are
// not all positive.
Evaluation eval_lentz(const CfSpec& cf, double tol, std::int64_t max_depth = 1'000'000);

// Element-wise rescaling a'(n) = r(n) r(n-1) a(n), b'(n) = r(n) b(n) with
// r(0) = r0 and b0' = r0 b0.  Every convergent of the result equals r0 times
// the corresponding convergent of the input, so the value is preserved
// exactly when r0 = 1; general r0 absorbs a constant factor into the
// fraction, which is how the reciprocal identities in logderiv are rewritten.
CfSpec equivalence_transform(const CfSpec& cf,
                             std::function<double(std::int64_t)> r_seq,
                             double r0 = 1.0);

// Period-two composed fraction
//   prefix + num(1)/(alt1 + num(1)/(alt2(1) + num(2)/(alt1 + num(2)/(alt2(2) + ...
// i.e. each num(n) appears twice, with denominators alternating between alt1
// and alt2(n).  This is the shape taken by the second-derivative fractions.
CfSpec tk_to_cf(double prefix,
                std::function<double(std::int64_t)> num,
                double alt1,
                std::function<double(std::int64_t)> alt2);

}  // namespace brouncker::cf

#endif
