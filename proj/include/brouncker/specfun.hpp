#ifndef BRK_SPECFUN_HPP
#define BRK_SPECFUN_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "brouncker/errors.hpp"

namespace brouncker::sf {

// log Gamma(x) for x > 0 via a fixed Lanczos coefficient set (g = 607/128,
// 15 terms).  Relative accuracy ~1e-14 over (0, 1e4].
double ln_gamma(double x);

// Euler numbers E_0..E_n from the defining recurrence
//   sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0,   E_0 = 1,
// exact integers; odd indices are zero.
class EulerTable {
public:
  explicit EulerTable(int n_max);
  const mpz_class& at(int n) const;  // E_n, 0 <= n <= n_max
  int n_max() const { return static_cast<int>(e_.size()) - 1; }

private:
  std::vector<mpz_class> e_;
};

struct Lemma1Problem {
  std::function<double(double)> g;  // positive, decreasing to 0
  double a = 0.0;                   // shift step, > 0
};

// Unique vanishing-at-infinity solution f of f(s) + f(s + a) = g(s),
//   f(s) = sum_{n>=0} (-1)^n g(s + n a),
// summed until the first omitted term is <= tol; returns the midpoint of the
// two partial-sum brackets (error <= tol/2, typically far smaller).  Throws
// NotConverged past max_terms and MonotonicityViolated when the sampled g
// fails to be non-negative and non-increasing.
double lemma1_solve(const Lemma1Problem& p, double s, double tol,
                    std::int64_t max_terms = 10'000'000);

}  // namespace brouncker::sf

#endif
