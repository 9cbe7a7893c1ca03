#ifndef BRK_ASYMPTOTIC_HPP
#define BRK_ASYMPTOTIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "brouncker/cf.hpp"

namespace brouncker::asym {

// Exact asymptotic data for y(s, r) ~ s exp(-sum_{n>=1} A_n(r) / (2n s^{2n})):
//   A_n = sum_{k=0}^{n} C(2n, 2k) (r-1)^{2k} r^{2(n-k)} E_{2(n-k)},
// and the Laurent expansion s + c_1/s + c_3/s^3 + ... obtained by exact
// re-expansion of the exponential; laurent[m] is the coefficient of s^{1-2m}.
struct AsymSeries {
  mpq_class r;
  bool exact = true;              // false marks the double-precision fallback
  std::vector<mpq_class> A;       // A[n-1] = A_n, n = 1..order
  std::vector<mpq_class> laurent; // laurent[0] = 1 once composed
};

// Exact coefficients A_1..A_n for rational r.
std::vector<mpq_class> asym_coeffs(const mpq_class& r, int n_max);

// Clearly-flagged floating fallback of the same recurrence.
std::vector<double> asym_coeffs_double(double r, int n_max);

// Build the exact series (A plus Laurent coefficients through s^{1-2*order}).
AsymSeries make_series(const mpq_class& r, int order);

// Fill series.laurent up to index `order` from series.A by exponentiating the
// formal power series in u = 1/s^2 (needs A_1..A_order present).
void exp_compose(AsymSeries& series, int order);

// Evaluate the Laurent polynomial through the 1/s^{2M-1} term; err_estimate
// is the magnitude of the first omitted term.
cf::Evaluation y_asymptotic(double s, const AsymSeries& series, int m_terms);

// "p/q", integer, or decimal literal -> exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace brouncker::asym

#endif
