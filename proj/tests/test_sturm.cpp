#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "monopole/model.hpp"
#include "monopole/rational.hpp"
#include "monopole/spectrum.hpp"
#include "monopole/sturm.hpp"

using namespace monopole;
using namespace monopole::sturm;

namespace {

constexpr double kPi = 3.14159265358979323846;

ModelParams micz_c0() {
  ModelParams p = preset("micz");
  p.c0 = -8.0;
  return p;
}

ModelParams kk_c0() {
  ModelParams p = preset("kaluza-klein");
  p.c0 = -8.0;
  return p;
}

}  // namespace

TEST_CASE("eigen_sym_tridiag tiny cases") {
  {
    const std::vector<double> d = {1.0, 2.0};
    const std::vector<double> e = {0.0};
    const auto ev = eigen_sym_tridiag(d, e);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-13));
  }
  {
    const std::vector<double> d = {0.0, 0.0};
    const std::vector<double> e = {1.0};
    const auto ev = eigen_sym_tridiag(d, e);
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("eigen_sym_tridiag toeplitz closed form") {
  const int n = 64;
  const std::vector<double> d(n, 2.0);
  const std::vector<double> e(n - 1, -1.0);
  const auto ev = eigen_sym_tridiag(d, e, 5);
  for (int k = 0; k < 5; ++k) {
    const double want = 2.0 - 2.0 * std::cos((k + 1) * kPi / (n + 1));
    CHECK(ev[k] == doctest::Approx(want).epsilon(1e-12));
  }
  const auto top = eigen_sym_tridiag_largest(d, e, 2);
  CHECK(top[1] == doctest::Approx(2.0 - 2.0 * std::cos(n * kPi / (n + 1)))
                      .epsilon(1e-12));
}

TEST_CASE("characteristic sign count vs direct roots on a tiny matrix") {
  // 3x3 with known spectrum: diag(2,2,2), off(1,1):
  // eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2).
  const std::vector<double> d = {2.0, 2.0, 2.0};
  const std::vector<double> e = {1.0, 1.0};
  const auto ev = eigen_sym_tridiag(d, e);
  CHECK(ev[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ev[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("reduced eigenvalues match an exact rational sign count") {
  // Tiny generalized problem with rational data: T y = lambda W y for the
  // box operator p = 1, w = 2, on n = 8 cells of width h = 1/8 (T, W exact
  // rationals). The float path solves the W^(1/2)-reduced tridiagonal; the
  // oracle counts eigenvalues below rational probes x via the exact Sturm
  // sequence of leading principal minors of T - x W.
  using monopole::exact::Rational;
  const int n = 8;
  const Rational h = Rational::of(1, 8);
  const Rational inv_h2 = Rational(64);
  std::vector<Rational> t_diag(n, Rational(2) * inv_h2), t_off(n - 1, -inv_h2);
  t_diag[n - 1] = t_diag[n - 1] + Rational(2) * inv_h2;  // Dirichlet ghost
  const Rational w(2);

  auto count_below_exact = [&](const Rational& x) {
    // minor recurrence D_k = (t_kk - x w) D_{k-1} - t_off^2 D_{k-2};
    // eigenvalues below x = sign agreements lost, i.e. negative ratios.
    std::vector<Rational> dets(n + 1);
    dets[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
      Rational d = (t_diag[k - 1] - x * w) * dets[k - 1];
      if (k >= 2) d = d - t_off[k - 2] * t_off[k - 2] * dets[k - 2];
      dets[k] = d;
    }
    int count = 0;
    for (int k = 1; k <= n; ++k) {
      const bool prev_neg = dets[k - 1] < Rational(0);
      const bool cur_neg = dets[k] < Rational(0);
      if (prev_neg != cur_neg) ++count;
    }
    return count;
  };

  // float path
  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = t_diag[i].to_double() / 2.0;
  for (int i = 0; i + 1 < n; ++i) off[i] = t_off[i].to_double() / 2.0;
  const auto ev = eigen_sym_tridiag(diag, off);
  REQUIRE(ev.size() == static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // rational brackets tight around the float eigenvalue
    const Rational x_lo(static_cast<std::int64_t>(std::floor(ev[i] * 1024.0 - 1.0)));
    const Rational x_hi(static_cast<std::int64_t>(std::ceil(ev[i] * 1024.0 + 1.0)));
    CHECK(count_below_exact(x_lo / Rational(1024)) == i);
    CHECK(count_below_exact(x_hi / Rational(1024)) == i + 1);
  }
}

TEST_CASE("free particle in a box sanity value") {
  // a = 0, b = 1, everything else 0, k1 = 0: lowest E = pi^2/(2 R^2) + O(h^2).
  ModelParams p;
  p.b = 1.0;
  const Sector sec = derived_sector(p, 0.0, 0.0);
  Grid g{GridKind::UniformR, 2000, 10.0};
  const auto res = radial_eigen(p, sec, 0.0, g, 2);
  const double want = kPi * kPi / (2.0 * g.x_max * g.x_max);
  CHECK(res.eigenvalues[0] == doctest::Approx(want).epsilon(2e-5));
  CHECK(res.residuals[0] <= 1e-8);
}

TEST_CASE("micz radial ground state at the acceptance resolution") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  Grid g{GridKind::UniformR, 4000, 40.0};
  // plain ladder: pure h^2 with constant ~0.21, so ~2e-5 at h = 0.01
  const auto plain = radial_eigen(p, sec, 0.75, g, 1);
  CHECK(std::abs(plain.eigenvalues[0] - -1.0) <= 5e-5);
  CHECK(plain.residuals[0] <= 1e-8);
  CHECK_FALSE(plain.cutoff_suspect);
  // the Richardson step removes the h^2 term and lands well inside 1e-5
  const auto res = radial_eigen(p, sec, 0.75, g, 1, true);
  CHECK(std::abs(res.eigenvalues[0] - -1.0) <= 1e-5);
}

TEST_CASE("kaluza-klein radial ground state") {
  const ModelParams p = kk_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  Grid g{GridKind::UniformR, 4000, 40.0};
  const auto res = radial_eigen(p, sec, 0.75, g, 1);
  CHECK(std::abs(res.eigenvalues[0] - -0.32576538582523313) <= 1e-4);
}

TEST_CASE("radial eigensolver in a fractional-exponent sector") {
  // hartmann-taubnut: delta2 = sqrt(2) - 1 makes k1 and the indicial
  // exponent irrational; the FD value must still track the closed form.
  const ModelParams p = preset("hartmann-taubnut");
  const Sector sec = derived_sector(p, 1.0, 0.5);
  const double k1 = spectrum::separation_constant_k1(sec, 1);
  spectrum::LevelSpec spec;
  spec.mode = spectrum::Mode::Spherical;
  spec.n = 2;
  spec.l = 1;
  const auto lvl = spectrum::solve_energy(p, sec, spec);
  REQUIRE(lvl.has_value());
  Grid g{GridKind::UniformR, 4000, 40.0};
  const auto res = radial_eigen(p, sec, k1, g, 1, true);
  CHECK(std::abs(res.eigenvalues[0] - lvl->energy) <=
        1e-5 * std::max(1.0, std::abs(lvl->energy)));
}

TEST_CASE("radial eigen rejects indefinite weight") {
  ModelParams p;
  p.a = -1.0;  // weight 2r(a+br) < 0 near the origin
  p.b = 0.1;
  const Sector sec = derived_sector(p, 0.0, 0.0);
  Grid g{GridKind::UniformR, 64, 10.0};
  CHECK_THROWS_AS((void)radial_eigen(p, sec, 0.0, g, 1), std::domain_error);
}

TEST_CASE("angular eigensolver reproduces the Legendre spectrum") {
  ModelParams p;  // c2 = c3 = 0
  const Sector sec = derived_sector(p, 0.0, 0.0);
  Grid g{GridKind::UniformTheta, 4000, kPi};
  const auto res = angular_eigen(p, sec, g, 3);
  const double want[3] = {0.0, 2.0, 6.0};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(res.eigenvalues[i] - want[i]) <=
          1e-5 * std::max(1.0, want[i]));
}

TEST_CASE("angular eigensolver micz sector and closed form k1") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);  // delta1=1, delta2=0
  Grid g{GridKind::UniformTheta, 4000, kPi};
  const auto res = angular_eigen(p, sec, g, 3);
  // k1(l) = (l + 1/2)(l + 3/2): 0.75, 3.75, 8.75
  for (int l = 0; l < 3; ++l) {
    const double want = spectrum::separation_constant_k1(sec, l);
    CHECK(std::abs(res.eigenvalues[l] - want) <= 1e-5 * std::max(1.0, want));
  }
}

TEST_CASE("angular eigensolver in a delta1 = delta2 = 1 sector") {
  // c2 = c3 = 1, nu1 = 0, nu2 = 0: delta1 = delta2 = 1, k1 = (l+1)(l+2).
  ModelParams p;
  p.c2 = 1.0;
  p.c3 = 1.0;
  const Sector sec = derived_sector(p, 0.0, 0.0);
  Grid g{GridKind::UniformTheta, 4000, kPi};
  const auto res = angular_eigen(p, sec, g, 2);
  CHECK(std::abs(res.eigenvalues[0] - 2.0) <= 2e-5 * 2.0);
  CHECK(std::abs(res.eigenvalues[1] - 6.0) <= 2e-5 * 6.0);
}

TEST_CASE("parabolic eigensolver finds the worked k_xi") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  Grid g{GridKind::UniformXi, 4000, 60.0};
  const auto res = parabolic_eigen_k2(p, sec, -1.0, g, 3, false, true);
  // top of the reported (ascending) list is the n1 = 0 value -0.375
  CHECK(std::abs(res.eigenvalues.back() - -0.375) <= 1e-5);
  // next one down sits at -0.375 - eps = -1.875
  CHECK(std::abs(res.eigenvalues[1] - -1.875) <= 1e-4);
  // eta side carries the -k2 spectrum, top value +0.375
  const auto res_eta = parabolic_eigen_k2(p, sec, -1.0, g, 3, true, true);
  CHECK(std::abs(res_eta.eigenvalues.back() - 0.375) <= 1e-5);
  CHECK_THROWS_AS(
      (void)parabolic_eigen_k2(p, sec, 10.0, g, 3, false),  // alpha > 0
      std::domain_error);
}

TEST_CASE("xi and eta spectra coincide for symmetric sectors") {
  ModelParams p = kk_c0();
  const Sector sec = derived_sector(p, 0.0, 0.0);  // delta1 = delta2
  spectrum::LevelSpec spec;
  spec.mode = spectrum::Mode::Parabolic;
  spec.n1 = 1;
  spec.n2 = 1;
  const auto lvl = spectrum::solve_energy(p, sec, spec);
  REQUIRE(lvl.has_value());
  Grid g{GridKind::UniformXi, 2000, 60.0};
  const auto xi = parabolic_eigen_k2(p, sec, lvl->energy, g, 3, false);
  const auto eta = parabolic_eigen_k2(p, sec, lvl->energy, g, 3, true);
  // identical operators, identical assembled matrices: bitwise equal lists
  for (int i = 0; i < 3; ++i) CHECK(xi.eigenvalues[i] == eta.eigenvalues[i]);
  // pairing at the (1,1) energy: k_xi(0) = -k_eta(2) up to FD error
  CHECK(xi.eigenvalues.back() ==
        doctest::Approx(-eta.eigenvalues[0]).epsilon(1e-4).scale(1.0));
}

TEST_CASE("perturbed energy breaks the xi/eta pairing") {
  // At the true E the xi and eta spectra pair as k_xi(n1) = -k_eta(n2);
  // off-spectrum energies leave no pairing within tolerance.
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  Grid g{GridKind::UniformXi, 2000, 60.0};
  auto closest_pairing = [&](double energy) {
    const auto xi = parabolic_eigen_k2(p, sec, energy, g, 3, false, true);
    const auto eta = parabolic_eigen_k2(p, sec, energy, g, 3, true, true);
    double best = 1e300;
    for (double kx : xi.eigenvalues)
      for (double ke : eta.eigenvalues)
        best = std::min(best, std::abs(kx + ke));
    return best;
  };
  CHECK(closest_pairing(-1.0) <= 1e-4);
  CHECK(closest_pairing(-1.01) > 1e-3);
}

TEST_CASE("grid refinement keeps eigenvalue ordering for the lowest modes") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  std::vector<double> prev;
  for (int n : {500, 1000, 2000}) {
    Grid g{GridKind::UniformR, n, 40.0};
    const auto res = radial_eigen(p, sec, 0.75, g, 3);
    CHECK(res.eigenvalues[0] < res.eigenvalues[1]);
    CHECK(res.eigenvalues[1] < res.eigenvalues[2]);
    if (!prev.empty())
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(res.eigenvalues[i] - prev[i]) <
              0.05 * std::max(1.0, std::abs(prev[i])));
    prev = res.eigenvalues;
  }
}

TEST_CASE("dirichlet cutoff sensitivity") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  // eps R = 1.5 * 20 = 30 > 25 already; doubling R moves E by < 1e-7 rel.
  Grid g1{GridKind::UniformR, 4000, 20.0};
  Grid g2{GridKind::UniformR, 8000, 40.0};  // same h, doubled box
  const auto r1 = radial_eigen(p, sec, 0.75, g1, 1);
  const auto r2 = radial_eigen(p, sec, 0.75, g2, 1);
  CHECK(std::abs(r1.eigenvalues[0] - r2.eigenvalues[0]) <=
        1e-7 * std::abs(r2.eigenvalues[0]));
}

TEST_CASE("convergence order is two") {
  const ModelParams p = micz_c0();
  const Sector sec = derived_sector(p, 0.0, 0.5);
  std::vector<double> values, spacings;
  for (int n : {500, 1000, 2000, 4000}) {
    Grid g{GridKind::UniformR, n, 40.0};
    values.push_back(radial_eigen(p, sec, 0.75, g, 1).eigenvalues[0]);
    spacings.push_back(40.0 / n);
  }
  const auto order = convergence_order(values, spacings, -1.0);
  REQUIRE(order.has_value());
  CHECK(std::abs(*order - 2.0) <= 0.2);

  const auto self_order = convergence_order(values, spacings);
  REQUIRE(self_order.has_value());
  CHECK(std::abs(*self_order - 2.0) <= 0.3);

  // Toeplitz eigenvalue error law is exactly h^2 to leading order.
  std::vector<double> tvals, tsp;
  for (int n : {32, 64, 128, 256}) {
    const std::vector<double> d(n, 2.0);
    const std::vector<double> e(n - 1, -1.0);
    const double h = 1.0 / (n + 1);
    tvals.push_back(eigen_sym_tridiag(d, e, 1)[0] / (h * h));
    tsp.push_back(h);
  }
  const auto torder = convergence_order(tvals, tsp, kPi * kPi);
  REQUIRE(torder.has_value());
  CHECK(std::abs(*torder - 2.0) <= 0.2);

  // error path: non-monotone input
  const std::vector<double> bad = {1.0, 3.0, 2.0};
  const std::vector<double> hs = {0.4, 0.2, 0.1};
  CHECK_FALSE(convergence_order(bad, hs, 0.0).has_value());
}
