#include "brouncker/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace brouncker::sf {

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "ln_gamma requires x > 0 (got " << x << ")";
    throw DomainError(os.str());
  }
  // Lanczos, g = 607/128.
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
      0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;  // g + 1/2
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

EulerTable::EulerTable(int n_max) {
  if (n_max < 0) throw InvalidArgument("EulerTable requires n_max >= 0");
  e_.assign(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
  e_[0] = 1;
  mpz_class binom, acc;
  for (int n = 1; 2 * n <= n_max; ++n) {
    // E_{2n} = - sum_{k=0}^{n-1} C(2n, 2k) E_{2k}
    acc = 0;
    for (int k = 0; k < n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n),
                   static_cast<unsigned long>(2 * k));
      acc += binom * e_[static_cast<std::size_t>(2 * k)];
    }
    e_[static_cast<std::size_t>(2 * n)] = -acc;
  }
}

const mpz_class& EulerTable::at(int n) const {
  if (n < 0 || n > n_max()) throw InvalidArgument("Euler number index out of range");
  return e_[static_cast<std::size_t>(n)];
}

double lemma1_solve(const Lemma1Problem& p, double s, double tol, std::int64_t max_terms) {
  if (!(p.a > 0.0)) throw InvalidArgument("lemma1_solve requires shift a > 0");
  if (!(tol > 0.0)) throw InvalidArgument("lemma1_solve requires tol > 0");

  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double sign = 1.0;
  for (std::int64_t n = 0; n < max_terms; ++n) {
    const double term = p.g(s + static_cast<double>(n) * p.a);
    if (term < 0.0 || term > prev) {
      std::ostringstream os;
      os << "g must be non-negative and non-increasing along s + n*a; violated at n=" << n;
      throw MonotonicityViolated(os.str());
    }
    // Partial sums bracket the limit; the bracket midpoint sum + sign*term/2
    // misses it by at most half the difference of consecutive terms (convex
    // decreasing g), which is one order better than the term itself.
    const double mid_err = n == 0 ? term : 0.5 * (prev - term);
    if (term <= tol || mid_err <= tol) {
      return sum + sign * 0.5 * term;
    }
    sum += sign * term;
    sign = -sign;
    prev = term;
  }
  throw NotConverged("lemma1_solve: alternating bracket still wider than tol at max_terms");
}

}  // namespace brouncker::sf
