// Exercises the library strictly through the C surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "monopole_spectra.h"

namespace {

struct ParamsHandle {
  ms_params* p = nullptr;
  ~ParamsHandle() { ms_params_destroy(p); }
};

}  // namespace

TEST_CASE("params lifecycle") {
  ParamsHandle h;
  REQUIRE(ms_params_preset("micz", &h.p) == MS_OK);
  double c[8];
  REQUIRE(ms_params_get(h.p, c) == MS_OK);
  CHECK(c[0] == 0.0);  // a
  CHECK(c[1] == 1.0);  // b
  CHECK(c[3] == -2.0); // c1
  CHECK(c[7] == 1.0);  // d
  CHECK(ms_params_set(h.p, "c0", -8.0) == MS_OK);
  REQUIRE(ms_params_get(h.p, c) == MS_OK);
  CHECK(c[2] == -8.0);
  CHECK(ms_params_set(h.p, "zz", 1.0) == MS_ERR_INVALID_ARGUMENT);

  ms_params* bad = nullptr;
  CHECK(ms_params_preset("foo", &bad) == MS_ERR_UNKNOWN_PRESET);
  CHECK(bad == nullptr);
}

TEST_CASE("validation through the C API") {
  ParamsHandle h;
  const double c[8] = {1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  REQUIRE(ms_params_create(c, &h.p) == MS_OK);
  int valid = 1;
  char msg[128];
  REQUIRE(ms_params_validate(h.p, &valid, msg, sizeof msg) == MS_OK);
  CHECK(valid == 0);
  CHECK(std::strlen(msg) > 0);
}

TEST_CASE("metric and gauge") {
  ParamsHandle h;
  REQUIRE(ms_params_preset("kaluza-klein", &h.p) == MS_OK);
  double v = 0.0;
  REQUIRE(ms_metric_f(h.p, 1.0, &v) == MS_OK);
  CHECK(v == doctest::Approx(2.0));
  CHECK(ms_metric_f(h.p, 0.0, &v) == MS_ERR_DOMAIN);
  REQUIRE(ms_metric_g(h.p, 1.0, &v) == MS_OK);
  CHECK(v == doctest::Approx(0.5));

  double a[3];
  REQUIRE(ms_gauge_potential(1.0, 0.0, 0.0, a) == MS_OK);
  CHECK(a[1] == doctest::Approx(1.0));
  CHECK(ms_gauge_potential(0.0, 0.0, -1.0, a) == MS_ERR_DOMAIN);
}

TEST_CASE("sector and solvers") {
  ParamsHandle h;
  REQUIRE(ms_params_preset("micz", &h.p) == MS_OK);
  REQUIRE(ms_params_set(h.p, "c0", -8.0) == MS_OK);

  double s[6];
  REQUIRE(ms_sector(h.p, 0.0, 0.5, s) == MS_OK);
  CHECK(s[0] == doctest::Approx(1.0));   // delta1
  CHECK(s[1] == doctest::Approx(0.0));   // delta2
  CHECK(s[4] == doctest::Approx(-0.5));  // q1
  CHECK(s[5] == doctest::Approx(0.5));   // q2

  ms_level lvl;
  REQUIRE(ms_solve_parabolic(h.p, 0.0, 0.5, 0, 0, &lvl) == MS_OK);
  CHECK(lvl.energy == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(lvl.t == doctest::Approx(1.5));
  REQUIRE(ms_solve_parabolic_bisect(h.p, 0.0, 0.5, 0, 0, &lvl) == MS_OK);
  CHECK(lvl.energy == doctest::Approx(-1.0).epsilon(1e-11));
  REQUIRE(ms_solve_spherical(h.p, 0.0, 0.5, 1, 0, &lvl) == MS_OK);
  CHECK(lvl.energy == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(lvl.epsilon == doctest::Approx(2.0 * lvl.t));

  double energy = 0.0, u = 0.0;
  REQUIRE(ms_solve_algebraic(h.p, 0.0, 0.5, 0, 1, 1, 1, &energy, &u) == MS_OK);
  CHECK(energy == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(u == doctest::Approx(1.0));
  CHECK(ms_solve_algebraic(h.p, 0.0, 0.5, 0, 1, 1, 2, &energy, &u) ==
        MS_ERR_INVALID_ARGUMENT);  // set 2 with a = 0

  // no bound state without the attractive c0
  ParamsHandle bare;
  REQUIRE(ms_params_preset("kaluza-klein", &bare.p) == MS_OK);
  CHECK(ms_solve_parabolic(bare.p, 0.0, 0.5, 0, 0, &lvl) == MS_ERR_NO_BOUND_STATE);
}

TEST_CASE("finite-difference oracles through the C API") {
  ParamsHandle h;
  REQUIRE(ms_params_preset("micz", &h.p) == MS_OK);
  REQUIRE(ms_params_set(h.p, "c0", -8.0) == MS_OK);
  double ev[2];
  REQUIRE(ms_radial_eigen(h.p, 0.0, 0.5, 0.75, 2000, 40.0, 2, ev) == MS_OK);
  CHECK(std::abs(ev[0] - -1.0) <= 1e-4);
  REQUIRE(ms_angular_eigen(h.p, 0.0, 0.5, 2000, 2, ev) == MS_OK);
  CHECK(std::abs(ev[0] - 0.75) <= 1e-4);
}

TEST_CASE("ms_run dispatches full commands") {
  const char* argv[] = {"spectrum", "--preset", "micz",  "--set", "c0=-8",
                        "--nu2",    "0.5",      "--nmax", "1"};
  char* out = nullptr;
  char* err = nullptr;
  const int code = ms_run(9, argv, &out, &err);
  CHECK(code == 0);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("-1") != std::string::npos);
  CHECK(err == nullptr);
  ms_string_free(out);
  ms_string_free(err);

  const char* bad[] = {"spectrum", "--preset", "foo"};
  out = err = nullptr;
  CHECK(ms_run(3, bad, &out, &err) == 2);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("foo") != std::string::npos);
  ms_string_free(out);
  ms_string_free(err);
}

TEST_CASE("ms_run is deterministic") {
  const char* argv[] = {"verify", "--suite", "phi", "--trials", "8",
                        "--seed", "5",       "--format", "json"};
  char* out1 = nullptr;
  char* out2 = nullptr;
  CHECK(ms_run(9, argv, &out1, nullptr) == 0);
  CHECK(ms_run(9, argv, &out2, nullptr) == 0);
  REQUIRE(out1 != nullptr);
  REQUIRE(out2 != nullptr);
  CHECK(std::string(out1) == std::string(out2));
  ms_string_free(out1);
  ms_string_free(out2);
}

TEST_CASE("version and status names") {
  CHECK(std::string(ms_version()).find('.') != std::string::npos);
  CHECK(std::string(ms_status_name(MS_OK)) == "ok");
  CHECK(std::string(ms_status_name(MS_ERR_NO_BOUND_STATE)) == "no bound state");
}
