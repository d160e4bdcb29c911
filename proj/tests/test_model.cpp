#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "monopole/model.hpp"

using namespace monopole;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t& s, double lo, double hi) {
  return lo + (hi - lo) * (splitmix(s) >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("validate_params") {
  CHECK(validate_params(preset("kaluza-klein")).ok);
  CHECK(validate_params(preset("hartmann-taubnut")).ok);

  // micz sits exactly on the domain boundary: c1 = -2 sqrt(d), so the metric
  // denominator (1-r)^2 vanishes at r = 1 and strict positivity fails there.
  const auto micz_rep = validate_params(preset("micz"));
  CHECK_FALSE(micz_rep.ok);
  REQUIRE(micz_rep.issues.size() == 1);
  REQUIRE(micz_rep.issues[0].witness.has_value());
  CHECK(*micz_rep.issues[0].witness == doctest::Approx(1.0));

  ModelParams bad;
  bad.a = 1.0;
  bad.b = -1.0;
  const auto rep = validate_params(bad);
  CHECK_FALSE(rep.ok);
  bool found_b = false;
  for (const auto& issue : rep.issues) found_b |= issue.condition == "b > 0";
  CHECK(found_b);

  // 1 - 3r + r^2 dips negative between its roots; a witness is reported.
  ModelParams quad;
  quad.a = 0.0;
  quad.b = 1.0;
  quad.c1 = -3.0;
  quad.d = 1.0;
  const auto rep2 = validate_params(quad);
  CHECK_FALSE(rep2.ok);
  REQUIRE(rep2.issues.size() == 1);
  REQUIRE(rep2.issues[0].witness.has_value());
  const double r = *rep2.issues[0].witness;
  CHECK(r > 0.0);
  CHECK(1.0 - 3.0 * r + r * r <= 0.0);
}

TEST_CASE("metric functions") {
  ModelParams p;
  p.a = 1.0;
  p.b = 1.0;
  CHECK(metric_f(p, 1.0) == doctest::Approx(2.0));
  ModelParams flat;
  flat.a = 0.0;
  flat.b = 1.0;
  CHECK(metric_f(flat, 0.37) == doctest::Approx(1.0));
  ModelParams q;
  q.a = 2.0;
  q.b = 3.0;
  CHECK(metric_f(q, 4.0) == doctest::Approx(3.5));
  CHECK_THROWS(metric_f(p, 0.0));

  // Kaluza-Klein: g(r) = r(1+r)/(1+r)^2 = r/(1+r).
  const ModelParams kk = preset("kaluza-klein");
  CHECK(metric_g(kk, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  ModelParams m;
  m.a = 0.0;
  m.b = 1.0;
  m.c1 = -2.0;
  m.d = 1.0;
  CHECK(metric_g(m, 2.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(metric_g(kk, 1e-14) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_THROWS(metric_g(m, 1.0));  // denominator (1-r)^2 vanishes at r=1
}

TEST_CASE("metric_f times r is exactly a + b r") {
  std::uint64_t s = 3;
  const ModelParams kk = preset("kaluza-klein");
  for (int i = 0; i < 1000; ++i) {
    const double r = uniform(s, 1e-6, 100.0);
    CHECK(metric_f(kk, r) * r ==
          doctest::Approx(kk.a + kk.b * r).epsilon(1e-14));
  }
}

TEST_CASE("gauge potential") {
  const auto on_axis = gauge_potential(0.0, 0.0, 1.0);
  CHECK(on_axis[0] == 0.0);
  CHECK(on_axis[1] == 0.0);
  CHECK(on_axis[2] == 0.0);
  const auto equator = gauge_potential(1.0, 0.0, 0.0);
  CHECK(equator[0] == doctest::Approx(0.0));
  CHECK(equator[1] == doctest::Approx(1.0));
  CHECK(equator[2] == 0.0);
  CHECK_THROWS(gauge_potential(0.0, 0.0, -1.0));  // Dirac string
  CHECK_THROWS(gauge_potential(0.0, 0.0, 0.0));
}

TEST_CASE("presets") {
  const ModelParams kk = preset("kaluza-klein");
  CHECK(kk.a == 1.0);
  CHECK(kk.b == 1.0);
  CHECK(kk.c1 == 2.0);
  CHECK(kk.d == 1.0);
  CHECK(kk.c0 == 0.0);
  CHECK(kk.c2 == 0.0);
  CHECK(kk.c3 == 0.0);
  CHECK(kk.c4 == 0.0);
  const ModelParams micz = preset("micz");
  CHECK(micz.a == 0.0);
  CHECK(micz.b == 1.0);
  CHECK(micz.c1 == -2.0);
  CHECK(micz.d == 1.0);
  CHECK(micz.c2 == 0.0);
  CHECK(micz.c3 == 0.0);
  CHECK_THROWS(preset("foo"));
}

TEST_CASE("derived sector") {
  ModelParams p;
  p.c2 = 3.0;
  const Sector s1 = derived_sector(p, 1.0, 0.5);
  CHECK(s1.delta1 == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-12));
  CHECK(s1.delta1 == doctest::Approx(0.7320508).epsilon(1e-7));

  ModelParams zero;
  const Sector s2 = derived_sector(zero, 0.0, 0.5);
  CHECK(s2.delta1 == doctest::Approx(1.0));
  CHECK(s2.delta2 == doctest::Approx(0.0));
  CHECK(s2.m1 == doctest::Approx(1.0));
  CHECK(s2.m2 == doctest::Approx(0.0));

  const Sector s3 = derived_sector(zero, 2.0, 0.0);
  CHECK(s3.delta1 == doctest::Approx(0.0));
  CHECK(s3.delta2 == doctest::Approx(0.0));
  CHECK(s3.m1 == doctest::Approx(2.0));
  CHECK(s3.m2 == doctest::Approx(2.0));
}

TEST_CASE("derived sector invariants on random draws") {
  std::uint64_t s = 5;
  for (int i = 0; i < 1000; ++i) {
    ModelParams p;
    p.c2 = uniform(s, 0.0, 10.0);
    p.c3 = uniform(s, 0.0, 10.0);
    const double nu1 = uniform(s, 0.0, 5.0);
    const double nu2 = uniform(s, -3.0, 3.0);
    const Sector sec = derived_sector(p, nu1, nu2);
    const double lhs1 = sec.m1 * sec.m1 - (nu1 - 2.0 * nu2) * (nu1 - 2.0 * nu2);
    const double lhs2 = sec.m2 * sec.m2 - nu1 * nu1;
    CHECK(lhs1 == doctest::Approx(p.c2).epsilon(1e-12).scale(std::max(1.0, p.c2)));
    CHECK(lhs2 == doctest::Approx(p.c3).epsilon(1e-12).scale(std::max(1.0, p.c3)));
    // q1, q2 reconciliation: both section-4 forms hold at once.
    CHECK(sec.m1 * sec.m1 ==
          doctest::Approx(p.c2 + (sec.q1 - sec.q2) * (sec.q1 - sec.q2))
              .epsilon(1e-12)
              .scale(std::max(1.0, p.c2)));
    CHECK(sec.m2 * sec.m2 ==
          doctest::Approx(p.c3 + (sec.q1 + sec.q2) * (sec.q1 + sec.q2))
              .epsilon(1e-12)
              .scale(std::max(1.0, p.c3)));
  }
}

TEST_CASE("alpha_beta") {
  ModelParams zero;
  const auto ab0 = alpha_beta(zero, 1.0, 0.0);
  CHECK(ab0.alpha == 0.0);
  CHECK(ab0.beta == 0.0);

  ModelParams micz = preset("micz");
  micz.c0 = -8.0;
  const auto ab = alpha_beta(micz, -1.0, 0.5);
  CHECK(ab.alpha == doctest::Approx(-2.25));
  CHECK(ab.beta == doctest::Approx(4.5));

  ModelParams b1;
  b1.b = 1.0;
  const auto ab2 = alpha_beta(b1, 3.0, 0.0);
  CHECK(ab2.alpha == doctest::Approx(6.0));
}

TEST_CASE("classification of the dynamical algebra") {
  ModelParams p;
  p.a = 1.0;
  CHECK(classify_dynamical_algebra(p, -1.0, 0.0) == DynamicalAlgebra::O4);
  CHECK(classify_dynamical_algebra(p, 1.0, 0.0) == DynamicalAlgebra::O31);
  ModelParams free_p;
  CHECK(classify_dynamical_algebra(free_p, 123.0, 4.0) ==
        DynamicalAlgebra::Contracted);

  // Output depends only on the sign of c1 q2^2/2 - a E.
  std::uint64_t s = 9;
  for (int i = 0; i < 500; ++i) {
    ModelParams q;
    q.a = uniform(s, 0.0, 3.0);
    q.c1 = uniform(s, -3.0, 3.0);
    const double energy = uniform(s, -5.0, 5.0);
    const double q2 = uniform(s, -2.0, 2.0);
    const double sign = 0.5 * q.c1 * q2 * q2 - q.a * energy;
    const auto got = classify_dynamical_algebra(q, energy, q2);
    if (sign > 1e-14)
      CHECK(got == DynamicalAlgebra::O4);
    else if (sign < -1e-14)
      CHECK(got == DynamicalAlgebra::O31);
    else
      CHECK(got == DynamicalAlgebra::Contracted);
  }
}

TEST_CASE("coordinate maps") {
  const auto top = spherical_to_cartesian(2.0, 0.0, 0.0);
  CHECK(top[0] == doctest::Approx(0.0));
  CHECK(top[1] == doctest::Approx(0.0));
  CHECK(top[2] == doctest::Approx(2.0));

  const auto pb = parabolic_to_cartesian(1.0, 1.0, 0.0);
  CHECK(pb.x == doctest::Approx(1.0));
  CHECK(pb.z == doctest::Approx(0.0));
  CHECK(pb.r == doctest::Approx(1.0));
  CHECK_THROWS(parabolic_to_cartesian(4.0, 0.0, 0.0));
  CHECK_THROWS(spherical_to_cartesian(-1.0, 0.0, 0.0));
  CHECK_THROWS(spherical_to_cartesian(1.0, 4.0, 0.0));  // theta > pi

  // Round trip: |(x,y,z)| = (xi+eta)/2 to 1e-14 relative.
  std::uint64_t s = 21;
  for (int i = 0; i < 500; ++i) {
    const double xi = uniform(s, 1e-3, 50.0);
    const double eta = uniform(s, 1e-3, 50.0);
    const double phi = uniform(s, 0.0, 6.28);
    const auto q = parabolic_to_cartesian(xi, eta, phi);
    const double r = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    CHECK(r == doctest::Approx(q.r).epsilon(1e-14));
  }
}
