#include "relucrit_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "relucrit/error.hpp"
#include "relucrit/objective.hpp"
#include "relucrit/reports.hpp"
#include "relucrit/verify.hpp"

using namespace relucrit;

struct rc_context {
  std::vector<SeedRecord> seeds = default_seeds();
  NewtonConfig cfg;
  std::string last_error;
};

struct rc_point {
  double k = 0, residual = 0, objective = 0;
  std::vector<double> xi;
  std::string csv;
};

namespace {

template <class F>
rc_status guarded(rc_context* ctx, F&& f) {
  if (!ctx) return RC_BAD_INPUT;
  try {
    f();
    ctx->last_error.clear();
    return RC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return static_cast<rc_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return RC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string need(const char* s, const char* what) {
  if (!s) throw Error(ErrorCode::BadInput, std::string(what) + " is NULL");
  return s;
}

// Families are reported for k >= 3 only, whatever the chart would permit.
void check_family_k(Family f, double k) {
  if (!(k >= 3)) throw Error(ErrorCode::BadInput, "k must be >= 3");
  check_chart_k(chart_for(f), k);
}

// Reads the single data row of a record table back into a point.
rc_point* make_point(const Table& t, double k, std::size_t first_xi, std::size_t m, double residual, double objective) {
  auto* p = new rc_point;
  p->k = k;
  for (std::size_t i = 0; i < m; ++i) p->xi.push_back(std::strtod(t.rows[0][first_xi + i].c_str(), nullptr));
  p->residual = residual;
  p->objective = objective;
  p->csv = t.csv();
  return p;
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i)
    if (t.header[i] == name) return i;
  throw Error(ErrorCode::BadInput, "missing column " + name);
}

}  // namespace

extern "C" {

rc_status rc_context_create(rc_context** out) {
  if (!out) return RC_BAD_INPUT;
  try {
    *out = new rc_context;
    return RC_OK;
  } catch (...) {
    *out = nullptr;
    return RC_INTERNAL;
  }
}

void rc_context_destroy(rc_context* ctx) { delete ctx; }

const char* rc_last_error(const rc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

rc_status rc_context_load_seeds(rc_context* ctx, const char* path) {
  return guarded(ctx, [&] { ctx->seeds = load_seed_file(need(path, "path")); });
}

rc_status rc_context_set_newton(rc_context* ctx, int max_iters, double tol_residual, double fd_step, int damping) {
  return guarded(ctx, [&] {
    if (max_iters < 1 || !(tol_residual > 0) || !(fd_step > 0)) throw Error(ErrorCode::BadInput, "invalid Newton settings");
    ctx->cfg.max_iters = max_iters;
    ctx->cfg.tol_residual = tol_residual;
    ctx->cfg.fd_step = fd_step;
    ctx->cfg.damping = damping != 0;
  });
}

rc_status rc_solve_consistency(rc_context* ctx, const char* family, double k, rc_point** out) {
  return guarded(ctx, [&] {
    if (!out) throw Error(ErrorCode::BadInput, "out is NULL");
    const Family f = parse_family(need(family, "family"));
    check_family_k(f, k);
    const Table t = consistency_record(f, k, ctx->seeds, ctx->cfg);
    const std::size_t x0 = column(t, "xi_1");
    const Chart c = chart_for(f);
    const double res = std::strtod(t.rows[0][column(t, "residual")].c_str(), nullptr);
    rc_point* p = make_point(t, k, x0, std::size_t(c.m), res, 0);
    p->objective = objective_reduced(c, p->xi, k, 1);
    *out = p;
  });
}

rc_status rc_solve_critical(rc_context* ctx, const char* family, double k, const char* method, double lam_inc,
                            rc_point** out) {
  return guarded(ctx, [&] {
    if (!out) throw Error(ErrorCode::BadInput, "out is NULL");
    const Family f = parse_family(need(family, "family"));
    check_family_k(f, k);
    const std::string m = need(method, "method");
    if (m != "jump" && m != "path") throw Error(ErrorCode::BadInput, "method must be jump or path");
    const Table t = critical_record(f, k, m == "jump" ? Method::Jump : Method::Path, lam_inc, ctx->seeds, ctx->cfg);
    const auto& row = t.rows[0];
    *out = make_point(t, k, column(t, "xi_1"), std::size_t(chart_for(f).m),
                      std::strtod(row[column(t, "gradient_norm")].c_str(), nullptr),
                      std::strtod(row[column(t, "objective")].c_str(), nullptr));
  });
}

size_t rc_point_dim(const rc_point* p) { return p ? p->xi.size() : 0; }

size_t rc_point_coords(const rc_point* p, double* buf, size_t n) {
  if (!p || !buf) return 0;
  const size_t m = std::min(n, p->xi.size());
  std::memcpy(buf, p->xi.data(), m * sizeof(double));
  return m;
}

double rc_point_residual(const rc_point* p) { return p ? p->residual : 0; }
double rc_point_objective(const rc_point* p) { return p ? p->objective : 0; }
double rc_point_k(const rc_point* p) { return p ? p->k : 0; }
const char* rc_point_csv(const rc_point* p) { return p ? p->csv.c_str() : ""; }
void rc_point_destroy(rc_point* p) { delete p; }

rc_status rc_table_csv(rc_context* ctx, const char* which, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw Error(ErrorCode::BadInput, "out is NULL");
    *out = dup(build_table(need(which, "which"), ctx->seeds, ctx->cfg).csv());
  });
}

rc_status rc_decay_csv(rc_context* ctx, const char* family, double k_min, double k_max, double factor, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw Error(ErrorCode::BadInput, "out is NULL");
    const Family f = parse_family(need(family, "family"));
    *out = dup(decay_table(f, k_min, k_max, factor, ctx->seeds, ctx->cfg).csv());
  });
}

rc_status rc_verify(rc_context* ctx, const char* only, const char* seed_path, char** ledger, int* all_passed) {
  return guarded(ctx, [&] {
    if (!ledger || !all_passed) throw Error(ErrorCode::BadInput, "output pointer is NULL");
    const auto r = run_verify(only ? only : "", seed_path ? seed_path : "");
    *all_passed = 1;
    for (const auto& c : r) *all_passed &= c.passed ? 1 : 0;
    *ledger = dup(verify_ledger(r));
  });
}

void rc_string_free(char* s) { std::free(s); }

}  // extern "C"
