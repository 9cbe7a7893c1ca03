#include "brouncker/cf.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace brouncker::cf {

namespace {

// 2^-512: exact in binary floating point, so rescaling shifts exponents only.
constexpr double kRescale = 7.4583407312002067432909653e-155;

[[noreturn]] void throw_element(const char* kind, std::int64_t n, double v) {
  std::ostringstream os;
  os << kind << " at n=" << n << " (value " << v << "); fraction elements must stay positive";
  throw NonPositiveElement(os.str());
}

}  // namespace

Evaluation eval_forward(const CfSpec& cf, const EvalOptions& opts) {
  Evaluation ev;
  ev.method = Method::ForwardBracket;
  ev.value = cf.b0;
  ev.err_estimate = std::numeric_limits<double>::infinity();

  // A_{-1} = 1, B_{-1} = 0, A_0 = b0, B_0 = 1.
  double Am1 = 1.0, Bm1 = 0.0;
  double A = cf.b0, B = 1.0;

  double even = cf.b0;  // f_0
  double odd = std::numeric_limits<double>::quiet_NaN();

  for (std::int64_t n = 1; n <= opts.max_depth; ++n) {
    const double an = cf.a(n);
    const double bn = cf.b(n);
    if (an < 0.0) throw_element("non-positive numerator", n, an);
    if (bn <= 0.0) throw_element("non-positive denominator", n, bn);
    if (an == 0.0) {
      // Tail is exactly zero from here on: the previous convergent is exact.
      ev.value = A / B;
      ev.err_estimate = 0.0;
      ev.iterations = n - 1;
      ev.converged = true;
      return ev;
    }

    const double An = bn * A + an * Am1;
    const double Bn = bn * B + an * Bm1;
    Am1 = A;
    Bm1 = B;
    A = An;
    B = Bn;
    if (std::fabs(A) > opts.renorm_threshold || std::fabs(B) > opts.renorm_threshold) {
      Am1 *= kRescale;
      Bm1 *= kRescale;
      A *= kRescale;
      B *= kRescale;
    }

    const double fn = A / B;
    if (n % 2 == 0) {
      even = fn;
    } else {
      odd = fn;
    }
    ev.iterations = n;

    if (n >= 1 && odd == odd) {  // both sides of the bracket seen
      const double gap = odd - even;
      ev.err_estimate = 0.5 * std::fabs(gap);
      ev.value = even + 0.5 * gap;
      if (ev.err_estimate <= opts.tol) {
        ev.converged = true;
        return ev;
      }
    }
  }
  ev.converged = false;
  return ev;
}

Evaluation eval_forward(const CfSpec& cf, double tol, std::int64_t max_depth) {
  EvalOptions opts;
  opts.tol = tol;
  opts.max_depth = max_depth;
  return eval_forward(cf, opts);
}

double eval_backward(const CfSpec& cf, std::int64_t depth) {
  double tail = 0.0;
  for (std::int64_t n = depth; n >= 1; --n) {
    const double den = cf.b(n) + tail;
    if (den == 0.0) {
      std::ostringstream os;
      os << "zero denominator at n=" << n << " during backward evaluation";
      throw DivisionByZeroDenominator(os.str());
    }
    tail = cf.a(n) / den;
  }
  return cf.b0 + tail;
}

Evaluation eval_lentz(const CfSpec& cf, double tol, std::int64_t max_depth) {
  // Thompson-Barnett modified Lentz; `tiny` floors vanishing partials.
  constexpr double tiny = 1e-300;
  Evaluation ev;
  ev.method = Method::Lentz;

  double f = cf.b0 != 0.0 ? cf.b0 : tiny;
  double C = f;
  double D = 0.0;
  for (std::int64_t n = 1; n <= max_depth; ++n) {
    const double an = cf.a(n);
    const double bn = cf.b(n);
    D = bn + an * D;
    if (D == 0.0) D = tiny;
    C = bn + an / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    ev.iterations = n;
    ev.value = f;
    ev.err_estimate = std::fabs(delta - 1.0) * std::fabs(f);
    if (std::fabs(delta - 1.0) <= tol) {
      ev.converged = true;
      return ev;
    }
  }
  ev.converged = false;
  return ev;
}

CfSpec equivalence_transform(const CfSpec& cf,
                             std::function<double(std::int64_t)> r_seq,
                             double r0) {
  if (r0 == 0.0) throw ZeroParameter("equivalence transform requires r0 != 0");
  CfSpec out;
  out.b0 = r0 * cf.b0;
  auto a_in = cf.a;
  auto b_in = cf.b;
  out.a = [a_in, r_seq, r0](std::int64_t n) {
    const double rn = r_seq(n);
    const double rprev = n == 1 ? r0 : r_seq(n - 1);
    if (rn == 0.0 || rprev == 0.0) throw ZeroParameter("equivalence transform requires r(n) != 0");
    return rn * rprev * a_in(n);
  };
  out.b = [b_in, r_seq](std::int64_t n) { return r_seq(n) * b_in(n); };
  return out;
}

CfSpec tk_to_cf(double prefix,
                std::function<double(std::int64_t)> num,
                double alt1,
                std::function<double(std::int64_t)> alt2) {
  CfSpec out;
  out.b0 = prefix;
  out.a = [num](std::int64_t n) { return num((n + 1) / 2); };
  out.b = [alt1, alt2](std::int64_t n) { return n % 2 == 1 ? alt1 : alt2(n / 2); };
  return out;
}

}  // namespace brouncker::cf
