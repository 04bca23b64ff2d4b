#include <cstring>
#include <string>

#include "condlab/condlab.h"
#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cl_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("rings and ideals through the C API") {
  cl_ring* r = nullptr;
  REQUIRE(cl_ring_parse("ring p=32003 vars=x0,x1,x2", 0, &r) == CL_OK);
  CHECK(cl_ring_prime(r) == 32003);
  CHECK(cl_ring_num_vars(r) == 3);

  const char* gens[] = {"x0^2", "x0*x1"};
  cl_ideal* I = nullptr;
  REQUIRE(cl_ideal_create(r, gens, 2, &I) == CL_OK);
  CHECK(cl_ideal_num_generators(I) == 2);
  int in = -1;
  REQUIRE(cl_ideal_contains(I, "x0^3 + x0*x1*x2", &in) == CL_OK);
  CHECK(in == 1);
  REQUIRE(cl_ideal_contains(I, "x1^2", &in) == CL_OK);
  CHECK(in == 0);

  const char* lin[] = {"x0", "x1"};
  cl_ideal* J = nullptr;
  REQUIRE(cl_ideal_create(r, lin, 2, &J) == CL_OK);
  cl_ideal* Q = nullptr;
  REQUIRE(cl_ideal_quotient(I, J, &Q) == CL_OK);
  const char* x0[] = {"x0"};
  cl_ideal* X0 = nullptr;
  REQUIRE(cl_ideal_create(r, x0, 1, &X0) == CL_OK);
  int eq = 0;
  REQUIRE(cl_ideal_equal(Q, X0, &eq) == CL_OK);
  CHECK(eq == 1);

  cl_ideal* S = nullptr;
  REQUIRE(cl_ideal_saturate(I, &S) == CL_OK);
  REQUIRE(cl_ideal_equal(S, I, &eq) == CL_OK);
  CHECK(eq == 1);
  int codim = 0;
  REQUIRE(cl_ideal_codimension(J, &codim) == CL_OK);
  CHECK(codim == 2);

  cl_ideal *sum = nullptr, *prod = nullptr, *meet = nullptr;
  CHECK(cl_ideal_sum(I, J, &sum) == CL_OK);
  CHECK(cl_ideal_product(I, J, &prod) == CL_OK);
  CHECK(cl_ideal_intersect(I, J, &meet) == CL_OK);
  REQUIRE(cl_ideal_equal(meet, I, &eq) == CL_OK);
  CHECK(eq == 1);

  std::string betti = take([&] { char* s = nullptr; cl_ideal_betti(J, 0, &s); return s; }());
  CHECK(betti.find("reg = 1") != std::string::npos);

  for (cl_ideal* h : {I, J, Q, X0, S, sum, prod, meet}) cl_ideal_free(h);
  cl_ring_free(r);
}

TEST_CASE("status codes and last error") {
  cl_ring* r = nullptr;
  CHECK(cl_ring_parse("ring p=12 vars=x", 0, &r) == CL_ERR_PARSE);
  CHECK(r == nullptr);
  CHECK(std::strlen(cl_last_error()) > 0);
  CHECK(cl_ring_parse(nullptr, 0, &r) == CL_ERR_ARGUMENT);
  REQUIRE(cl_ring_standard(3, 0, 0, &r) == CL_OK);
  CHECK(std::string(cl_last_error()).empty());
  const char* bad[] = {"x0 + x1^2"};
  cl_ideal* I = nullptr;
  CHECK(cl_ideal_create(r, bad, 1, &I) == CL_ERR_PRECONDITION);
  cl_ideal_free(I);
  CHECK(cl_ideal_load("/no/such/file", 0, &I) == CL_ERR_IO);
  CHECK(std::string(cl_status_name(CL_ERR_LIMIT)) == "computation limit");
  cl_ring_free(r);
}

TEST_CASE("degree cap surfaces as a limit status") {
  cl_ideal* I = nullptr;
  REQUIRE(cl_ideal_parse("ring vars=x0,x1,x2\ngenerator: x0^3 + x1^3 + x2^3\ngenerator: x0*x1*x2\n", 4, &I) ==
          CL_OK);
  char* out = nullptr;
  CHECK(cl_ideal_groebner(I, 0, 0, &out) == CL_ERR_LIMIT);
  CHECK(out == nullptr);
  cl_ideal_free(I);
}

TEST_CASE("curves, conductors and reports") {
  cl_curve* c = nullptr;
  REQUIRE(cl_curve_parse("ring vars=x0,x1,x2\ncomponent: x0\ncomponent: x1\ncomponent: x2\n", "triangle", 0, &c) ==
          CL_OK);
  CHECK(cl_curve_degree(c) == 3);
  CHECK(cl_curve_num_components(c) == 3);
  std::string text = take([&] { char* s = nullptr; cl_curve_conductor(c, 1, 0, &s); return s; }());
  CHECK(text.find("delta = 3") != std::string::npos);
  std::string js = take([&] { char* s = nullptr; cl_curve_conductor(c, 1, 1, &s); return s; }());
  CHECK(js.find("\"regularity\": 2") != std::string::npos);

  cl_reports* r = nullptr;
  REQUIRE(cl_verify_curve(c, 1, &r) == CL_OK);
  CHECK(cl_reports_count(r) > 3);
  CHECK(cl_reports_all_pass(r) == 1);

  cl_curve* moved = nullptr;
  REQUIRE(cl_curve_with_prime(c, 32009, &moved) == CL_OK);
  cl_reports* r2 = nullptr;
  REQUIRE(cl_verify_curve(moved, 1, &r2) == CL_OK);
  CHECK(cl_report_prime(r2, 0) == 32009);
  size_t n = cl_reports_count(r) + cl_reports_count(r2);
  REQUIRE(cl_reports_append(r, r2) == CL_OK);
  CHECK(cl_reports_count(r) == n);
  CHECK(cl_reports_count(r2) == 0);
  std::string doc = take([&] { char* s = nullptr; cl_reports_json(r, &s); return s; }());
  CHECK(doc.find("\"schema\": 1") != std::string::npos);

  cl_reports_free(r);
  cl_reports_free(r2);
  cl_curve_free(moved);
  cl_curve_free(c);

  cl_curve* cusp = nullptr;
  REQUIRE(cl_curve_parse("ring vars=x0,x1,x2\nimplicit: x1^2*x2 - x0^3\n", nullptr, 0, &cusp) == CL_OK);
  char* s = nullptr;
  CHECK(cl_curve_conductor(cusp, 1, 0, &s) == CL_ERR_CERTIFICATE);
  CHECK(std::string(cl_last_error()).find("non-nodal") != std::string::npos);
  cl_curve_free(cusp);
}

TEST_CASE("statements through the C API") {
  CHECK(cl_statement_count() == 16);
  CHECK(std::string(cl_statement_id(0)) == "example1");
  CHECK(cl_statement_id(99) == nullptr);
  cl_options o{};
  o.lines = 4;
  cl_reports* r = nullptr;
  REQUIRE(cl_verify_statement("example1", &o, &r) == CL_OK);
  CHECK(cl_reports_count(r) == 1);
  CHECK(cl_report_pass(r, 0) == 1);
  CHECK(std::string(cl_report_statement(r, 0)) == "example1");
  cl_reports_free(r);
  r = nullptr;
  CHECK(cl_verify_statement("unknown", &o, &r) == CL_ERR_ARGUMENT);
}
