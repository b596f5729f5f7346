#include "doctest.h"

#include <cstring>
#include <string>

#include "fpchaos/fpchaos.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  fpc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(fpc_status_name(FPC_OK)) == "OK");
  CHECK(std::string(fpc_status_name(FPC_SIZE_LIMIT)) == "SIZE_LIMIT");
  CHECK(std::string(fpc_status_name(FPC_INTERNAL)) == "INTERNAL");
  CHECK(std::string(fpc_status_name(static_cast<fpc_status>(99))) == "UNKNOWN");
  CHECK(std::string(fpc_version()) == "0.1.0");
}

TEST_CASE("kernel handles") {
  fpc_kernel* k = nullptr;
  REQUIRE(fpc_kernel_indicator(1, 2, 1.0, 2.0, &k) == FPC_OK);
  double n2 = 0;
  CHECK(fpc_kernel_norm2(k, &n2) == FPC_OK);
  CHECK(n2 == 8.0);
  int q = 0, bins = 0;
  double w = 0;
  CHECK(fpc_kernel_info(k, &q, &bins, &w) == FPC_OK);
  CHECK(q == 1);
  CHECK(bins == 2);
  CHECK(w == 1.0);
  double re = 0, im = 1;
  CHECK(fpc_moment(k, 3, FPC_METHOD_TRACE, FPC_MEASURE_POISSON, &re, &im) == FPC_OK);
  CHECK(re == 16.0);
  CHECK(im == 0.0);
  char* json = nullptr;
  REQUIRE(fpc_kernel_to_json(k, &json) == FPC_OK);
  fpc_kernel* back = nullptr;
  CHECK(fpc_kernel_parse(json, &back) == FPC_OK);
  fpc_string_free(json);
  CHECK(fpc_kernel_norm2(back, &n2) == FPC_OK);
  CHECK(n2 == 8.0);
  fpc_kernel_free(back);
  fpc_kernel_free(k);
  fpc_kernel_free(nullptr);
}

TEST_CASE("errors map to status codes") {
  fpc_kernel* k = nullptr;
  CHECK(fpc_kernel_parse("{", &k) == FPC_PARSE);
  CHECK(k == nullptr);
  CHECK(std::strlen(fpc_last_error()) > 0);
  CHECK(fpc_kernel_load("/nonexistent.json", &k) == FPC_IO);
  CHECK(fpc_kernel_indicator(3, 1000, 1.0, 1.0, &k) == FPC_SIZE_LIMIT);
  CHECK(fpc_kernel_parse(R"({"q":2,"bins":2,"cell_width":1,"entries":[[0,1,1,0]]})", &k) == FPC_OK);
  double re = 0;
  CHECK(fpc_moment(k, 3, FPC_METHOD_PRODUCT, FPC_MEASURE_POISSON, &re, nullptr) == FPC_NOT_MIRROR_SYMMETRIC);
  CHECK(fpc_moment(nullptr, 3, FPC_METHOD_PRODUCT, FPC_MEASURE_POISSON, &re, nullptr) == FPC_INVALID_ARGUMENT);
  CHECK(fpc_moment(k, 3, static_cast<fpc_method>(7), FPC_MEASURE_POISSON, &re, nullptr) == FPC_INVALID_ARGUMENT);
  fpc_kernel_free(k);
  uint64_t c = 0;
  CHECK(fpc_nc_count(17, &c) == FPC_SIZE_LIMIT);
  CHECK(fpc_nc_count(5, nullptr) == FPC_INVALID_ARGUMENT);
  CHECK(fpc_nc_count(5, &c) == FPC_OK);
  CHECK(std::string(fpc_last_error()).empty());
  CHECK(c == 42);
}

TEST_CASE("counts and oracles") {
  uint64_t p = 0, l = 0, a = 0;
  CHECK(fpc_nc0_counts(4, 1, &p, &l, &a) == FPC_OK);
  CHECK(a == 3);
  CHECK(p + l == a);
  uint64_t counts[4] = {9, 9, 9, 9};
  uint64_t total = 0;
  CHECK(fpc_riordan_counts(6, counts, 4, &total) == FPC_OK);
  CHECK(counts[0] == 0);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 9);
  CHECK(counts[3] == 5);
  CHECK(total == 15);
  double v = 0;
  CHECK(fpc_free_poisson_moment(8.0, 3, &v) == FPC_OK);
  CHECK(v == 8.0);
  CHECK(fpc_semicircular_moment(1.0, 6, &v) == FPC_OK);
  CHECK(v == 5.0);
  CHECK(fpc_free_poisson_moment(-1.0, 3, &v) == FPC_INVALID_ARGUMENT);
}

TEST_CASE("reports through the C API") {
  char* out = nullptr;
  REQUIRE(fpc_report_nc(4, 0, FPC_FORMAT_TEXT, &out) == FPC_OK);
  CHECK(take(out) == "14 non-crossing of 15 total\n");
  REQUIRE(fpc_report_riordan(4, FPC_FORMAT_TEXT, &out) == FPC_OK);
  CHECK(take(out) == "R_{4,1}=1 R_{4,2}=2 R_4=3\n");

  fpc_kernel* k = nullptr;
  REQUIRE(fpc_kernel_random(2, 3, 0.5, 7, &k) == FPC_OK);
  const fpc_method methods[] = {FPC_METHOD_PRODUCT, FPC_METHOD_DIAGRAM, FPC_METHOD_TRACE};
  REQUIRE(fpc_report_moments(k, 4, methods, 3, FPC_MEASURE_POISSON, FPC_FORMAT_CSV, &out) == FPC_OK);
  const auto csv = take(out);
  CHECK(csv.rfind("q,m,lambda", 0) == 0);
  CHECK(fpc_report_moments(k, 4, methods, 0, FPC_MEASURE_POISSON, FPC_FORMAT_CSV, &out) == FPC_INVALID_ARGUMENT);
  REQUIRE(fpc_report_identity(k, 1e-9, FPC_FORMAT_JSON, &out) == FPC_OK);
  CHECK(take(out).find("\"holds\": true") != std::string::npos);
  REQUIRE(fpc_report_transfer(k, 4, 1e-12, FPC_FORMAT_JSON, &out) == FPC_OK);
  take(out);
  CHECK(fpc_report_indicator(k, 4, 1e-12, FPC_FORMAT_JSON, &out) == FPC_DOMAIN);
  CHECK(fpc_report_identity(k, 1e-9, static_cast<fpc_format>(9), &out) == FPC_INVALID_ARGUMENT);
  fpc_kernel_free(k);

  fpc_family_params params;
  fpc_family_params_init(&params);
  params.kind = FPC_FAMILY_PERTURBED_INDICATOR;
  REQUIRE(fpc_report_converge(&params, 8, 5, 1e-2, FPC_FORMAT_JSON, &out) == FPC_OK);
  CHECK(take(out).find("\"final_within_tolerance\": true") != std::string::npos);
  params.kind = FPC_FAMILY_HYPERDIAGONAL;
  params.q = 2;
  REQUIRE(fpc_report_tamedness(&params, 3, 2, 1e6, FPC_FORMAT_CSV, &out) == FPC_OK);
  CHECK(take(out).rfind("sigma,max,bounded", 0) == 0);
  CHECK(fpc_report_converge(nullptr, 8, 5, 1e-2, FPC_FORMAT_JSON, &out) == FPC_INVALID_ARGUMENT);
}

TEST_CASE("identical inputs give identical bytes") {
  auto run = [] {
    fpc_kernel* k = nullptr;
    fpc_kernel_random(2, 3, 0.5, 7, &k);
    const fpc_method methods[] = {FPC_METHOD_PRODUCT, FPC_METHOD_DIAGRAM, FPC_METHOD_TRACE};
    char* out = nullptr;
    fpc_report_moments(k, 4, methods, 3, FPC_MEASURE_POISSON, FPC_FORMAT_JSON, &out);
    fpc_kernel_free(k);
    return take(out);
  };
  CHECK(run() == run());
}
