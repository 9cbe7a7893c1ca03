#include "brouncker.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "brouncker/asymptotic.hpp"
#include "brouncker/brouncker.hpp"
#include "brouncker/logderiv.hpp"
#include "brouncker/specfun.hpp"

namespace {

constexpr std::int64_t kDefaultDepth = 1'000'000;

int to_status(const brouncker::Error& e) {
  switch (e.code()) {
    case brouncker::ErrorCode::Ok: return BRK_OK;
    case brouncker::ErrorCode::DomainError: return BRK_EDOMAIN;
    case brouncker::ErrorCode::NonPositiveElement: return BRK_ENONPOSITIVE;
    case brouncker::ErrorCode::DivisionByZeroDenominator: return BRK_EDIVZERO;
    case brouncker::ErrorCode::ZeroParameter: return BRK_EZEROPARAM;
    case brouncker::ErrorCode::NotConverged: return BRK_ENOCONV;
    case brouncker::ErrorCode::QuadratureFailure: return BRK_EQUADRATURE;
    case brouncker::ErrorCode::MonotonicityViolated: return BRK_EMONOTONE;
    case brouncker::ErrorCode::InvalidArgument: return BRK_EINVAL;
  }
  return BRK_EINTERNAL;
}

thread_local std::string g_last_error;

template <typename Fn>
brk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BRK_OK;
  } catch (const brouncker::Error& e) {
    g_last_error = e.what();
    return static_cast<brk_status>(to_status(e));
  } catch (const std::bad_alloc&) {
    g_last_error = "allocation failure";
    return BRK_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BRK_EINTERNAL;
  }
}

void fill(brk_eval* out, const brouncker::cf::Evaluation& ev) {
  out->value = ev.value;
  out->err_estimate = ev.err_estimate;
  out->iterations = ev.iterations;
  out->converged = ev.converged ? 1 : 0;
}

brk_status copy_str(const std::string& s, char* buf, size_t bufsize) {
  if (buf == nullptr || bufsize < s.size() + 1) return BRK_EBUFFER;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return BRK_OK;
}

std::int64_t depth_or_default(long long max_depth) {
  return max_depth > 0 ? static_cast<std::int64_t>(max_depth) : kDefaultDepth;
}

double ln_y(double s, double r) { return std::log(brouncker::y_gamma(brouncker::DomainPoint{s, r})); }

}  // namespace

extern "C" {

struct brk_series {
  brouncker::asym::AsymSeries data;
};

const char* brk_strerror(int status) {
  switch (status) {
    case BRK_OK: return "ok";
    case BRK_EDOMAIN: return "argument outside the defining hypothesis";
    case BRK_ENONPOSITIVE: return "non-positive continued fraction element";
    case BRK_EDIVZERO: return "zero denominator";
    case BRK_EZEROPARAM: return "zero equivalence-transform parameter";
    case BRK_ENOCONV: return "iteration budget exhausted";
    case BRK_EQUADRATURE: return "quadrature failure";
    case BRK_EMONOTONE: return "monotonicity hypothesis violated";
    case BRK_EINVAL: return "invalid argument";
    case BRK_EBUFFER: return "buffer too small";
    default: return "internal error";
  }
}

const char* brk_last_error(void) { return g_last_error.c_str(); }

const char* brk_version(void) { return "1.0.0"; }

brk_status brk_y_cf(double s, double r, double tol, long long max_depth, brk_eval* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] {
    fill(out, brouncker::y_cf(brouncker::DomainPoint{s, r}, tol, depth_or_default(max_depth)));
  });
}

brk_status brk_y_product(double s, double r, long long n_terms, brk_eval* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { fill(out, brouncker::y_product(brouncker::DomainPoint{s, r}, n_terms)); });
}

brk_status brk_y_gamma(double s, double r, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::y_gamma(brouncker::DomainPoint{s, r}); });
}

brk_status brk_y_exponential(double s, double r, double tol, brk_eval* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { fill(out, brouncker::y_exponential(brouncker::DomainPoint{s, r}, tol)); });
}

brk_status brk_b(double s, double tol, long long max_depth, brk_eval* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { fill(out, brouncker::b(s, tol, depth_or_default(max_depth))); });
}

brk_status brk_y_zero(double r, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::y_zero(r); });
}

brk_status brk_f1(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::f1(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_f2(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::f2(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_dlog_y(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::dlog_y(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_h1(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::h1(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_h2(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::h2(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_d2log_y(double s, double r, double tol, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::d2log_y(brouncker::DomainPoint{s, r}, tol); });
}

brk_status brk_ln_gamma(double x, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::sf::ln_gamma(x); });
}

brk_status brk_laplace_sech(double a, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::laplace_sech(a); });
}

brk_status brk_laplace_x_sech(double a, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::laplace_x_sech(a); });
}

brk_status brk_euler_integral(double s, double* out) {
  if (out == nullptr) return BRK_EINVAL;
  return guarded([&] { *out = brouncker::logd::euler_integral(s); });
}

brk_status brk_euler_number(int n, char* buf, size_t bufsize) {
  if (n < 0) return BRK_EINVAL;
  brk_status rc = BRK_OK;
  const brk_status guard = guarded([&] {
    brouncker::sf::EulerTable table(n);
    rc = copy_str(table.at(n).get_str(), buf, bufsize);
  });
  return guard != BRK_OK ? guard : rc;
}

brk_status brk_check_functional(double s, double r, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] { *residual = brouncker::check_functional(brouncker::DomainPoint{s, r}); });
}

brk_status brk_check_f1_equation(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double lhs = brouncker::logd::f1(brouncker::DomainPoint{s, r}, tol) +
                       brouncker::logd::f1(brouncker::DomainPoint{s + 2.0 * r, r}, tol);
    *residual = std::fabs(lhs - 1.0 / (s + 1.0));
  });
}

brk_status brk_check_f2_equation(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double lhs = brouncker::logd::f2(brouncker::DomainPoint{s, r}, tol) +
                       brouncker::logd::f2(brouncker::DomainPoint{s + 2.0 * r, r}, tol);
    *residual = std::fabs(lhs - 1.0 / (s + 2.0 * r - 1.0));
  });
}

brk_status brk_check_h1_equation(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double lhs = brouncker::logd::h1(brouncker::DomainPoint{s, r}, tol) +
                       brouncker::logd::h1(brouncker::DomainPoint{s + 2.0 * r, r}, tol);
    *residual = std::fabs(lhs - 1.0 / ((s + 1.0) * (s + 1.0)));
  });
}

brk_status brk_check_h2_equation(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double lhs = brouncker::logd::h2(brouncker::DomainPoint{s, r}, tol) +
                       brouncker::logd::h2(brouncker::DomainPoint{s + 2.0 * r, r}, tol);
    const double target = s + 2.0 * r - 1.0;
    *residual = std::fabs(lhs - 1.0 / (target * target));
  });
}

brk_status brk_check_dlog_fd(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double h = 1e-4;
    const double fd = (ln_y(s + h, r) - ln_y(s - h, r)) / (2.0 * h);
    *residual = std::fabs(brouncker::logd::dlog_y(brouncker::DomainPoint{s, r}, tol) - fd);
  });
}

brk_status brk_check_d2log_fd(double s, double r, double tol, double* residual) {
  if (residual == nullptr) return BRK_EINVAL;
  return guarded([&] {
    const double h = 1e-3;
    const double fd = (ln_y(s + h, r) - 2.0 * ln_y(s, r) + ln_y(s - h, r)) / (h * h);
    *residual = std::fabs(brouncker::logd::d2log_y(brouncker::DomainPoint{s, r}, tol) - fd);
  });
}

brk_series* brk_series_create(const char* r_text, int order, int* status) {
  auto set_status = [status](int rc) {
    if (status != nullptr) *status = rc;
  };
  if (r_text == nullptr || order < 1) {
    set_status(BRK_EINVAL);
    return nullptr;
  }
  brk_series* handle = nullptr;
  const brk_status rc = guarded([&] {
    const mpq_class r = brouncker::asym::parse_rational(r_text);
    if (!(r > mpq_class(1, 2))) {
      throw brouncker::DomainError("series requires r > 1/2 (generalized Brouncker family)");
    }
    handle = new brk_series{brouncker::asym::make_series(r, order)};
  });
  set_status(rc);
  return handle;
}

void brk_series_free(brk_series* series) { delete series; }

int brk_series_order(const brk_series* series) {
  return series == nullptr ? 0 : static_cast<int>(series->data.A.size());
}

brk_status brk_series_coeff(const brk_series* series, int n, char* buf, size_t bufsize) {
  if (series == nullptr || n < 1 || n > static_cast<int>(series->data.A.size()))
    return BRK_EINVAL;
  return copy_str(series->data.A[static_cast<std::size_t>(n - 1)].get_str(), buf, bufsize);
}

brk_status brk_series_laurent(const brk_series* series, int m, char* buf, size_t bufsize) {
  if (series == nullptr || m < 0 || m >= static_cast<int>(series->data.laurent.size()))
    return BRK_EINVAL;
  return copy_str(series->data.laurent[static_cast<std::size_t>(m)].get_str(), buf, bufsize);
}

brk_status brk_series_eval(const brk_series* series, double s, int m_terms, brk_eval* out) {
  if (series == nullptr || out == nullptr) return BRK_EINVAL;
  return guarded([&] { fill(out, brouncker::asym::y_asymptotic(s, series->data, m_terms)); });
}

}  // extern "C"
