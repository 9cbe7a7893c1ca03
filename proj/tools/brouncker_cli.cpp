// Batch front end over the shared library's C interface.
//
// Subcommands: eval, compare, series, table, check.  Formats: text, json,
// csv.  JSON objects always carry {command, inputs, results, residuals,
// status}; CSV value rows always carry s,r,representation,value,
// err_estimate,iterations.  All floats print with 17 significant digits so
// doubles round-trip.  Identical requests produce bit-identical output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brouncker.h"

namespace {

// Rounding model for the closed-form path: a handful of log-Gamma calls at
// ~1 ulp each.  Reported as err_estimate where no bracket exists.
constexpr double kGammaRelErr = 1e-14;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    return num / den;
  }
  return std::stod(text);
}

struct Row {
  double s = 0.0;
  double r = 0.0;
  std::string rep;
  brk_eval ev{};
  bool ok = false;
  std::string skip_reason;
};

struct Residual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  enum class State { Pass, Fail, Skipped } state = State::Skipped;
  std::string note;
};

struct Settings {
  double tol = 1e-10;
  int order = 3;
  long long terms = 100000;
  long long max_depth = 0;  // 0: library default / env override
};

int eval_rep(const std::string& rep, double s, const std::string& r_text, double r,
             const Settings& cfg, Row* row) {
  row->s = s;
  row->r = r;
  row->rep = rep;
  row->ev = brk_eval{};
  int rc = BRK_EINVAL;
  if (rep == "cf") {
    rc = brk_y_cf(s, r, cfg.tol, cfg.max_depth, &row->ev);
  } else if (rep == "product") {
    rc = brk_y_product(s, r, cfg.terms, &row->ev);
  } else if (rep == "gamma") {
    double v = 0.0;
    rc = brk_y_gamma(s, r, &v);
    row->ev.value = v;
    row->ev.err_estimate = std::fabs(v) * kGammaRelErr;
    row->ev.iterations = 0;
    row->ev.converged = 1;
  } else if (rep == "exponential") {
    rc = brk_y_exponential(s, r, cfg.tol, &row->ev);
  } else if (rep == "asymptotic") {
    int st = BRK_OK;
    brk_series* ser = brk_series_create(r_text.c_str(), cfg.order, &st);
    if (ser == nullptr) return st;
    rc = brk_series_eval(ser, s, cfg.order, &row->ev);
    brk_series_free(ser);
  } else if (rep == "dlog") {
    double v = 0.0;
    rc = brk_dlog_y(s, r, cfg.tol, &v);
    row->ev.value = v;
    row->ev.err_estimate = cfg.tol;
    row->ev.converged = 1;
  } else if (rep == "d2log") {
    double v = 0.0;
    rc = brk_d2log_y(s, r, cfg.tol, &v);
    row->ev.value = v;
    row->ev.err_estimate = cfg.tol;
    row->ev.converged = 1;
  }
  row->ok = rc == BRK_OK;
  if (!row->ok) row->skip_reason = brk_last_error();
  return rc;
}

void print_rows_csv(const std::vector<Row>& rows) {
  std::printf("s,r,representation,value,err_estimate,iterations\n");
  for (const auto& row : rows) {
    if (!row.ok) continue;
    std::printf("%s,%s,%s,%s,%s,%lld\n", fmt17(row.s).c_str(), fmt17(row.r).c_str(),
                row.rep.c_str(), fmt17(row.ev.value).c_str(),
                fmt17(row.ev.err_estimate).c_str(), row.ev.iterations);
  }
}

void print_rows_text(const std::vector<Row>& rows) {
  for (const auto& row : rows) {
    if (!row.ok) {
      std::printf("%-12s skipped: %s\n", row.rep.c_str(), row.skip_reason.c_str());
      continue;
    }
    std::printf("%-12s value=%-24s err_estimate=%-13s iterations=%-8lld%s\n",
                row.rep.c_str(), fmt17(row.ev.value).c_str(),
                fmt17(row.ev.err_estimate).c_str(), row.ev.iterations,
                row.ev.converged ? "" : " (not converged)");
  }
}

std::string rows_json(const std::vector<Row>& rows) {
  std::string out = "[";
  bool first = true;
  for (const auto& row : rows) {
    if (!first) out += ",";
    first = false;
    out += "{\"s\":" + fmt17(row.s) + ",\"r\":" + fmt17(row.r) + ",\"representation\":\"" +
           row.rep + "\"";
    if (row.ok) {
      out += ",\"value\":" + fmt17(row.ev.value) +
             ",\"err_estimate\":" + fmt17(row.ev.err_estimate) +
             ",\"iterations\":" + std::to_string(row.ev.iterations) +
             ",\"converged\":" + (row.ev.converged ? "true" : "false");
    } else {
      out += ",\"skipped\":\"" + json_escape(row.skip_reason) + "\"";
    }
    out += "}";
  }
  return out + "]";
}

std::string residuals_json(const std::vector<Residual>& res) {
  std::string out = "[";
  bool first = true;
  for (const auto& q : res) {
    if (!first) out += ",";
    first = false;
    out += "{\"name\":\"" + q.name + "\"";
    if (q.state == Residual::State::Skipped) {
      out += ",\"status\":\"skipped\",\"note\":\"" + json_escape(q.note) + "\"";
    } else {
      out += ",\"residual\":" + fmt17(q.value) + ",\"tolerance\":" + fmt17(q.tolerance) +
             ",\"status\":\"" +
             (q.state == Residual::State::Pass ? "pass" : "fail") + "\"";
    }
    out += "}";
  }
  return out + "]";
}

void print_json_doc(const std::string& command, const std::string& inputs,
                    const std::string& results, const std::string& residuals,
                    const std::string& status) {
  std::printf("{\"command\":\"%s\",\"inputs\":%s,\"results\":%s,\"residuals\":%s,\"status\":\"%s\"}\n",
              command.c_str(), inputs.c_str(), results.c_str(), residuals.c_str(),
              status.c_str());
}

std::string inputs_json(double s, const std::string& r_text, const std::string& rep,
                        const Settings& cfg) {
  return "{\"s\":" + fmt17(s) + ",\"r\":\"" + json_escape(r_text) + "\",\"representation\":\"" +
         rep + "\",\"tol\":" + fmt17(cfg.tol) + ",\"order\":" + std::to_string(cfg.order) +
         ",\"terms\":" + std::to_string(cfg.terms) +
         ",\"max_depth\":" + std::to_string(cfg.max_depth) + "}";
}

int fail_with(int rc, const std::string& context) {
  const char* msg = brk_last_error();
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(),
               *msg ? msg : brk_strerror(rc));
  return rc == BRK_EDOMAIN ? 2 : 1;
}

// start:stop:step inclusive of stop up to a relative slack.
bool parse_range(const std::string& text, std::vector<double>* out) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    out->push_back(parse_real(text));
    return true;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) return false;
  const double start = parse_real(text.substr(0, c1));
  const double stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = parse_real(text.substr(c2 + 1));
  if (!(step > 0.0) || stop < start) return false;
  const double slack = 1e-9 * std::max(1.0, std::fabs(stop));
  for (long long k = 0;; ++k) {
    const double s = start + static_cast<double>(k) * step;
    if (s > stop + slack) break;
    out->push_back(s);
  }
  return true;
}

const char* kAllReps[] = {"cf", "product", "gamma", "exponential", "asymptotic"};

int run_eval(const std::string& rep, double s, const std::string& r_text,
             const Settings& cfg, const std::string& format) {
  Row row;
  const int rc = eval_rep(rep, s, r_text, parse_real(r_text), cfg, &row);
  if (rc != BRK_OK) return fail_with(rc, "eval " + rep);
  std::vector<Row> rows{row};
  if (format == "json") {
    print_json_doc("eval", inputs_json(s, r_text, rep, cfg), rows_json(rows), "[]", "ok");
  } else if (format == "csv") {
    print_rows_csv(rows);
  } else {
    print_rows_text(rows);
  }
  return 0;
}

int run_compare(double s, const std::string& r_text, const Settings& cfg,
                const std::string& format) {
  std::vector<Row> rows;
  for (const char* rep : kAllReps) {
    Row row;
    eval_rep(rep, s, r_text, parse_real(r_text), cfg, &row);
    rows.push_back(row);
  }
  struct Delta { std::string a, b; double d; };
  std::vector<Delta> deltas;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].ok && rows[j].ok)
        deltas.push_back({rows[i].rep, rows[j].rep,
                          std::fabs(rows[i].ev.value - rows[j].ev.value)});
  if (format == "json") {
    std::string res = rows_json(rows);
    // pairwise deltas ride in the residuals slot so the document schema stays
    // identical across subcommands
    std::string residuals = "[";
    for (size_t i = 0; i < deltas.size(); ++i) {
      if (i) residuals += ",";
      residuals += "{\"name\":\"|" + deltas[i].a + " - " + deltas[i].b +
                   "|\",\"residual\":" + fmt17(deltas[i].d) +
                   ",\"tolerance\":null,\"status\":\"info\"}";
    }
    residuals += "]";
    print_json_doc("compare", inputs_json(s, r_text, "all", cfg), res, residuals, "ok");
  } else if (format == "csv") {
    print_rows_csv(rows);
  } else {
    print_rows_text(rows);
    for (const auto& d : deltas)
      std::printf("|%s - %s| = %s\n", d.a.c_str(), d.b.c_str(), fmt17(d.d).c_str());
  }
  return 0;
}

int run_series(const std::string& r_text, int order, const std::string& format) {
  int st = BRK_OK;
  brk_series* ser = brk_series_create(r_text.c_str(), order, &st);
  if (ser == nullptr) return fail_with(st, "series");
  char buf[4096];
  std::vector<std::string> a_vals, l_vals;
  for (int n = 1; n <= order; ++n) {
    if (brk_series_coeff(ser, n, buf, sizeof buf) == BRK_OK) a_vals.push_back(buf);
  }
  for (int m = 0; m <= order; ++m) {
    if (brk_series_laurent(ser, m, buf, sizeof buf) == BRK_OK) l_vals.push_back(buf);
  }
  brk_series_free(ser);
  if (format == "json") {
    std::string res = "[";
    for (size_t i = 0; i < a_vals.size(); ++i) {
      if (i) res += ",";
      res += "{\"kind\":\"A\",\"index\":" + std::to_string(i + 1) + ",\"value\":\"" +
             a_vals[i] + "\"}";
    }
    for (size_t m = 0; m < l_vals.size(); ++m) {
      res += ",{\"kind\":\"laurent\",\"power\":" + std::to_string(1 - 2 * (int)m) +
             ",\"value\":\"" + l_vals[m] + "\"}";
    }
    res += "]";
    std::string inputs = "{\"r\":\"" + json_escape(r_text) +
                         "\",\"order\":" + std::to_string(order) + "}";
    print_json_doc("series", inputs, res, "[]", "ok");
  } else if (format == "csv") {
    std::printf("kind,index,value\n");
    for (size_t i = 0; i < a_vals.size(); ++i)
      std::printf("A,%zu,%s\n", i + 1, a_vals[i].c_str());
    for (size_t m = 0; m < l_vals.size(); ++m)
      std::printf("laurent,%d,%s\n", 1 - 2 * (int)m, l_vals[m].c_str());
  } else {
    for (size_t i = 0; i < a_vals.size(); ++i)
      std::printf("A_%zu = %s\n", i + 1, a_vals[i].c_str());
    for (size_t m = 0; m < l_vals.size(); ++m)
      std::printf("laurent s^%d = %s\n", 1 - 2 * (int)m, l_vals[m].c_str());
  }
  return 0;
}

int run_table(const std::string& rep, const std::string& s_text, const std::string& r_text,
              const Settings& cfg, const std::string& format) {
  std::vector<double> grid;
  if (!parse_range(s_text, &grid)) {
    std::fprintf(stderr, "error: bad range '%s' (want start:stop:step with step > 0)\n",
                 s_text.c_str());
    return 1;
  }
  std::vector<Row> rows;
  const double r = parse_real(r_text);
  for (double s : grid) {
    Row row;
    const int rc = eval_rep(rep, s, r_text, r, cfg, &row);
    if (rc != BRK_OK) return fail_with(rc, "table at s=" + fmt17(s));
    rows.push_back(row);
  }
  if (format == "json") {
    print_json_doc("table", inputs_json(grid.empty() ? 0.0 : grid.front(), r_text, rep, cfg),
                   rows_json(rows), "[]", "ok");
  } else if (format == "text") {
    print_rows_text(rows);
  } else {
    print_rows_csv(rows);
  }
  return 0;
}

int run_check(double s, const std::string& r_text, const Settings& cfg,
              const std::string& format) {
  const double r = parse_real(r_text);
  std::vector<Residual> res;
  bool hard_error = false;
  int hard_rc = BRK_OK;
  std::string hard_ctx;

  auto add = [&](const std::string& name, int rc, double value, double tolerance) {
    Residual q;
    q.name = name;
    if (rc != BRK_OK) {
      hard_error = true;
      hard_rc = rc;
      hard_ctx = name;
      return;
    }
    q.value = value;
    q.tolerance = tolerance;
    q.state = value <= tolerance ? Residual::State::Pass : Residual::State::Fail;
    res.push_back(q);
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    Residual q;
    q.name = name;
    q.state = Residual::State::Skipped;
    q.note = why;
    res.push_back(q);
  };

  double v = 0.0;
  if (s > 0.0) {
    add("functional_product", brk_check_functional(s, r, &v), v, std::max(cfg.tol, 1e-11));
  } else {
    skip("functional_product", "requires s > 0");
  }
  add("f1_shift_equation", brk_check_f1_equation(s, r, cfg.tol, &v), v, cfg.tol);
  add("f2_shift_equation", brk_check_f2_equation(s, r, cfg.tol, &v), v, cfg.tol);
  const double h_floor = std::max(1.0, 2.0 * r - 1.0);
  if (s > h_floor) {
    add("h1_shift_equation", brk_check_h1_equation(s, r, cfg.tol, &v), v, cfg.tol);
    add("h2_shift_equation", brk_check_h2_equation(s, r, cfg.tol, &v), v, cfg.tol);
  } else {
    const std::string why = "requires s > max(1, 2r-1)";
    skip("h1_shift_equation", why);
    skip("h2_shift_equation", why);
  }
  if (s > 1e-4) {
    add("dlog_finite_difference", brk_check_dlog_fd(s, r, cfg.tol, &v), v,
        std::max(cfg.tol, 1e-6));
  } else {
    skip("dlog_finite_difference", "requires s > finite-difference step 1e-4");
  }
  if (s > h_floor + 1e-3) {
    add("d2log_finite_difference", brk_check_d2log_fd(s, r, cfg.tol, &v), v,
        std::max(cfg.tol, 1e-5));
  } else {
    skip("d2log_finite_difference", "requires s > max(1, 2r-1) + finite-difference step");
  }

  if (hard_error) return fail_with(hard_rc, "check " + hard_ctx);

  bool all_pass = true;
  for (const auto& q : res)
    if (q.state == Residual::State::Fail) all_pass = false;

  if (format == "json") {
    std::string inputs = "{\"s\":" + fmt17(s) + ",\"r\":\"" + json_escape(r_text) +
                         "\",\"tol\":" + fmt17(cfg.tol) + "}";
    print_json_doc("check", inputs, "[]", residuals_json(res), all_pass ? "pass" : "fail");
  } else if (format == "csv") {
    std::printf("name,residual,tolerance,status\n");
    for (const auto& q : res) {
      if (q.state == Residual::State::Skipped) {
        std::printf("%s,,,skipped\n", q.name.c_str());
      } else {
        std::printf("%s,%s,%s,%s\n", q.name.c_str(), fmt17(q.value).c_str(),
                    fmt17(q.tolerance).c_str(),
                    q.state == Residual::State::Pass ? "pass" : "fail");
      }
    }
  } else {
    for (const auto& q : res) {
      if (q.state == Residual::State::Skipped) {
        std::printf("%-24s skipped: %s\n", q.name.c_str(), q.note.c_str());
      } else {
        std::printf("%-24s residual=%-13s tol=%-13s %s\n", q.name.c_str(),
                    fmt17(q.value).c_str(), fmt17(q.tolerance).c_str(),
                    q.state == Residual::State::Pass ? "pass" : "FAIL");
      }
    }
    std::printf("overall: %s\n", all_pass ? "pass" : "fail");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Brouncker continued fraction toolkit"};
  app.require_subcommand(1);

  Settings cfg;
  if (const char* env = std::getenv("BROUNCKER_MAX_DEPTH")) {
    char* end = nullptr;
    const long long depth = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && depth > 0) cfg.max_depth = depth;
  }

  std::string rep = "gamma", r_text = "1", s_text = "1", format = "text";
  double s_val = 1.0;
  int order = 3;

  auto add_common = [&](CLI::App* cmd, bool with_rep) {
    cmd->add_option("--r", r_text, "family parameter r (> 1/2), real or p/q");
    cmd->add_option("--tol", cfg.tol, "evaluation tolerance");
    cmd->add_option("--order", cfg.order, "asymptotic truncation order M");
    cmd->add_option("--terms", cfg.terms, "product partial terms");
    cmd->add_option("--max-depth", cfg.max_depth,
                    "continued fraction depth cap (env BROUNCKER_MAX_DEPTH)");
    cmd->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_rep)
      cmd->add_option("--rep", rep,
                      "cf | product | gamma | exponential | asymptotic | dlog | d2log")
          ->check(CLI::IsMember(
              {"cf", "product", "gamma", "exponential", "asymptotic", "dlog", "d2log"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one representation at (s, r)");
  eval->add_option("--s", s_val, "argument s")->required();
  add_common(eval, true);

  CLI::App* compare =
      app.add_subcommand("compare", "all applicable y representations side by side");
  compare->add_option("--s", s_val, "argument s")->required();
  add_common(compare, false);

  CLI::App* series = app.add_subcommand("series", "exact asymptotic coefficients");
  series->add_option("--r", r_text, "family parameter r as p/q or decimal")->required();
  series->add_option("--order", order, "number of coefficients")->required();
  series->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* table = app.add_subcommand("table", "sweep s over start:stop:step");
  table->add_option("--s", s_text, "s value or range start:stop:step")->required();
  add_common(table, true);

  CLI::App* check = app.add_subcommand("check", "functional equation residuals at (s, r)");
  check->add_option("--s", s_val, "argument s")->required();
  add_common(check, false);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(table) && !table->get_option("--format")->count()) format = "csv";

  if (app.got_subcommand(eval)) return run_eval(rep, s_val, r_text, cfg, format);
  if (app.got_subcommand(compare)) return run_compare(s_val, r_text, cfg, format);
  if (app.got_subcommand(series)) return run_series(r_text, order, format);
  if (app.got_subcommand(table)) return run_table(rep, s_text, r_text, cfg, format);
  if (app.got_subcommand(check)) return run_check(s_val, r_text, cfg, format);
  return 1;
}
