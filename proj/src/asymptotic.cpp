#include "brouncker/asymptotic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "brouncker/specfun.hpp"

namespace brouncker::asym {

std::vector<mpq_class> asym_coeffs(const mpq_class& r, int n_max) {
  if (n_max < 1) throw InvalidArgument("asym_coeffs requires n_max >= 1");
  const sf::EulerTable euler(2 * n_max);
  const mpq_class t = r - 1;
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(n_max));
  mpz_class binom;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class acc = 0;
    mpq_class t_pow = 1;  // (r-1)^{2k}
    for (int k = 0; k <= n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n),
                   static_cast<unsigned long>(2 * k));
      mpq_class r_pow = 1;  // r^{2(n-k)}
      for (int j = 0; j < n - k; ++j) r_pow *= r * r;
      acc += mpq_class(binom) * t_pow * r_pow * mpq_class(euler.at(2 * (n - k)));
      t_pow *= t * t;
    }
    acc.canonicalize();
    out.push_back(acc);
  }
  return out;
}

std::vector<double> asym_coeffs_double(double r, int n_max) {
  if (n_max < 1) throw InvalidArgument("asym_coeffs_double requires n_max >= 1");
  const sf::EulerTable euler(2 * n_max);
  const double t2 = (r - 1.0) * (r - 1.0);
  std::vector<double> out;
  mpz_class binom;
  for (int n = 1; n <= n_max; ++n) {
    double acc = 0.0;
    double t_pow = 1.0;
    for (int k = 0; k <= n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n),
                   static_cast<unsigned long>(2 * k));
      acc += binom.get_d() * t_pow * std::pow(r * r, n - k) * euler.at(2 * (n - k)).get_d();
      t_pow *= t2;
    }
    out.push_back(acc);
  }
  return out;
}

void exp_compose(AsymSeries& series, int order) {
  if (order < 0) throw InvalidArgument("exp_compose requires order >= 0");
  if (static_cast<int>(series.A.size()) < order)
    throw InvalidArgument("exp_compose needs A_1..A_order before composing");
  // g(u) = -sum_j A_j/(2j) u^j; h = exp(g) solves m h_m = sum_j j g_j h_{m-j}.
  std::vector<mpq_class> g(static_cast<std::size_t>(order) + 1, mpq_class(0));
  for (int j = 1; j <= order; ++j) {
    g[static_cast<std::size_t>(j)] = -series.A[static_cast<std::size_t>(j - 1)] / (2 * j);
    g[static_cast<std::size_t>(j)].canonicalize();
  }
  std::vector<mpq_class> h(static_cast<std::size_t>(order) + 1, mpq_class(0));
  h[0] = 1;
  for (int m = 1; m <= order; ++m) {
    mpq_class acc = 0;
    for (int j = 1; j <= m; ++j) {
      acc += j * g[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(m - j)];
    }
    acc /= m;
    acc.canonicalize();
    h[static_cast<std::size_t>(m)] = acc;
  }
  series.laurent = std::move(h);
}

AsymSeries make_series(const mpq_class& r, int order) {
  AsymSeries s;
  s.r = r;
  s.exact = true;
  s.A = asym_coeffs(r, order);
  exp_compose(s, order);
  return s;
}

cf::Evaluation y_asymptotic(double s, const AsymSeries& series, int m_terms) {
  if (!(s > 0.0)) throw DomainError("y_asymptotic requires s > 0 (asymptotic regime)");
  if (m_terms < 0 || series.laurent.empty())
    throw InvalidArgument("y_asymptotic needs a composed series and m_terms >= 0");
  const int avail = static_cast<int>(series.laurent.size()) - 1;
  if (m_terms > avail) throw InvalidArgument("m_terms exceeds composed Laurent order");

  cf::Evaluation ev;
  ev.method = cf::Method::Series;
  const double u = 1.0 / (s * s);
  double acc = 0.0;
  double u_pow = 1.0;
  for (int m = 0; m <= m_terms; ++m) {
    acc += series.laurent[static_cast<std::size_t>(m)].get_d() * u_pow;
    u_pow *= u;
  }
  ev.value = s * acc;
  ev.iterations = m_terms;
  if (m_terms + 1 <= avail) {
    ev.err_estimate =
        std::fabs(series.laurent[static_cast<std::size_t>(m_terms + 1)].get_d()) * s * u_pow;
  } else {
    // No composed term beyond the truncation; fall back to the last kept one.
    ev.err_estimate = std::fabs(series.laurent[static_cast<std::size_t>(m_terms)].get_d()) * s *
                      u_pow / u;
  }
  ev.converged = true;
  return ev;
}

mpq_class parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InvalidArgument("empty rational literal");

  const auto dot = t.find('.');
  if (dot != std::string::npos) {
    if (t.find('/') != std::string::npos)
      throw InvalidArgument("rational literal mixes '.' and '/': " + text);
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const std::size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw InvalidArgument("malformed decimal literal: " + text);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw InvalidArgument("malformed decimal literal: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw InvalidArgument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

}  // namespace brouncker::asym
