#include <cstring>
#include <string>

#include "doctest.h"
#include "relucrit_c.h"

TEST_CASE("C API happy path") {
  rc_context* ctx = nullptr;
  REQUIRE(rc_context_create(&ctx) == RC_OK);
  rc_point* p = nullptr;
  REQUIRE(rc_solve_consistency(ctx, "a", 6, &p) == RC_OK);
  CHECK(rc_point_dim(p) == 2);
  double xi[2];
  CHECK(rc_point_coords(p, xi, 2) == 2);
  CHECK(xi[0] == doctest::Approx(-0.66063967).epsilon(1e-8));
  CHECK(rc_point_k(p) == 6.0);
  CHECK(std::string(rc_point_csv(p)).find("xi_1") != std::string::npos);
  rc_point_destroy(p);

  REQUIRE(rc_solve_critical(ctx, "ii", 6, "path", 0.05, &p) == RC_OK);
  CHECK(rc_point_residual(p) <= 1e-12);
  CHECK(rc_point_objective(p) > 0);
  rc_point_destroy(p);

  char* csv = nullptr;
  REQUIRE(rc_table_csv(ctx, "inftable4", &csv) == RC_OK);
  CHECK(std::strncmp(csv, "family,", 7) == 0);
  rc_string_free(csv);
  REQUIRE(rc_decay_csv(ctx, "ii", 100, 400, 2, &csv) == RC_OK);
  rc_string_free(csv);

  char* ledger = nullptr;
  int ok = 0;
  REQUIRE(rc_verify(ctx, "symmetry", nullptr, &ledger, &ok) == RC_OK);
  CHECK(ok == 1);
  rc_string_free(ledger);
  rc_context_destroy(ctx);
}

TEST_CASE("C API error codes") {
  rc_context* ctx = nullptr;
  REQUIRE(rc_context_create(&ctx) == RC_OK);
  rc_point* p = nullptr;
  CHECK(rc_solve_consistency(ctx, "zz", 6, &p) == RC_UNKNOWN_FAMILY);
  CHECK(std::strlen(rc_last_error(ctx)) > 0);
  CHECK(rc_solve_consistency(ctx, "a", 2, &p) == RC_BAD_INPUT);
  CHECK(rc_solve_critical(ctx, "a", 6, "walk", 0.01, &p) == RC_BAD_INPUT);
  char* s = nullptr;
  CHECK(rc_table_csv(ctx, "nope", &s) == RC_BAD_INPUT);
  CHECK(rc_context_load_seeds(ctx, "/nonexistent/seeds.txt") == RC_IO_ERROR);
  CHECK(rc_context_create(nullptr) != RC_OK);
  rc_context_destroy(ctx);
}
