#include "monopole/model.hpp"

#include <cmath>
#include <stdexcept>

namespace monopole {

namespace {

constexpr double kContractedTol = 1e-14;

// Positivity of q(r) = 1 + c1 r + d r^2 on r > 0. Exact test: for d > 0 the
// minimum over r > 0 is interior only when c1 < 0, giving c1 > -2 sqrt(d);
// for d = 0 it needs c1 >= 0; d < 0 always fails at large r.
bool quadratic_positive(double c1, double d) {
  if (d > 0.0) return c1 >= 0.0 || c1 > -2.0 * std::sqrt(d);
  if (d == 0.0) return c1 >= 0.0;
  return false;
}

// Some r > 0 with 1 + c1 r + d r^2 <= 0, assuming quadratic_positive failed.
double quadratic_witness(double c1, double d) {
  if (d > 0.0) return -c1 / (2.0 * d);  // interior minimum, value 1 - c1^2/(4d)
  if (d == 0.0) return 2.0 / -c1;       // value -1
  // d < 0: walk right from the vertex until the value goes nonpositive.
  double r = std::max(1.0, -c1 / (2.0 * d) + 1.0);
  while (1.0 + c1 * r + d * r * r > 0.0) r *= 2.0;
  return r;
}

}  // namespace

ValidationReport validate_params(const ModelParams& p) {
  ValidationReport rep;
  auto fail = [&rep](std::string cond, std::optional<double> witness = {}) {
    rep.ok = false;
    rep.issues.push_back({std::move(cond), witness});
  };
  if (!(p.a >= 0.0)) {
    // f(r) = a/r + b < 0 close to the origin for a < 0
    fail("a >= 0", p.b > 0.0 ? std::min(1.0, -p.a / (2.0 * p.b)) : 1.0);
  }
  if (!(p.b > 0.0)) {
    // f(r) -> b at large r
    fail("b > 0", p.b < 0.0 ? std::max(1.0, -2.0 * p.a / p.b) : std::optional<double>());
  }
  if (!(p.c2 >= 0.0)) fail("c2 >= 0");
  if (!(p.c3 >= 0.0)) fail("c3 >= 0");
  if (!quadratic_positive(p.c1, p.d)) {
    const double r = quadratic_witness(p.c1, p.d);
    fail("1 + c1 r + d r^2 > 0 for all r > 0", r);
  }
  return rep;
}

double metric_f(const ModelParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("metric_f: r must be positive");
  return p.a / r + p.b;
}

double metric_g(const ModelParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("metric_g: r must be positive");
  const double den = 1.0 + p.c1 * r + p.d * r * r;
  if (den == 0.0) throw std::domain_error("metric_g: metric denominator vanishes");
  return r * (p.a + p.b * r) / den;
}

std::array<double, 3> gauge_potential(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r == 0.0) throw std::domain_error("gauge_potential: undefined at the origin");
  const double rpz = r + z;
  if (rpz <= 0.0)
    throw std::domain_error("gauge_potential: on the Dirac string (r + z = 0)");
  return {-y / (r * rpz), x / (r * rpz), 0.0};
}

ModelParams preset(std::string_view name) {
  if (name == "kaluza-klein") {
    ModelParams p;
    p.a = 1.0;
    p.b = 1.0;
    p.c1 = 2.0;
    p.d = 1.0;
    return p;
  }
  if (name == "micz") {
    ModelParams p;
    p.a = 0.0;
    p.b = 1.0;
    p.c1 = -2.0;
    p.d = 1.0;
    return p;
  }
  if (name == "hartmann-taubnut") {
    // Kaluza-Klein metric with a binding Coulomb strength and ring-shaped
    // deformation couplings switched on (see the config reference in the
    // README).
    ModelParams p;
    p.a = 1.0;
    p.b = 1.0;
    p.c1 = 2.0;
    p.d = 1.0;
    p.c0 = -8.0;
    p.c2 = 1.0;
    p.c3 = 1.0;
    return p;
  }
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

std::vector<std::string> preset_names() {
  return {"kaluza-klein", "micz", "hartmann-taubnut"};
}

Sector derived_sector(const ModelParams& p, double nu1, double nu2) {
  const double arg1 = p.c2 + (nu1 - 2.0 * nu2) * (nu1 - 2.0 * nu2);
  const double arg2 = p.c3 + nu1 * nu1;
  if (arg1 < 0.0 || arg2 < 0.0)
    throw std::domain_error("derived_sector: negative radicand (invalid params)");
  Sector s;
  s.nu1 = nu1;
  s.nu2 = nu2;
  s.m1 = std::sqrt(arg1);
  s.m2 = std::sqrt(arg2);
  s.delta1 = s.m1 - nu1;
  s.delta2 = s.m2 - nu1;
  s.q1 = nu1 - nu2;
  s.q2 = nu2;
  return s;
}

AlphaBeta alpha_beta(const ModelParams& p, double energy, double nu2) {
  AlphaBeta ab;
  ab.alpha = 2.0 * p.b * energy - p.d * nu2 * nu2 - p.c4;
  ab.beta = 2.0 * p.a * energy - p.c1 * nu2 * nu2 - 0.5 * p.c0;
  return ab;
}

DynamicalAlgebra classify_dynamical_algebra(const ModelParams& p, double energy,
                                            double q2) {
  const double s = 0.5 * p.c1 * q2 * q2 - p.a * energy;
  if (std::abs(s) <= kContractedTol) return DynamicalAlgebra::Contracted;
  return s > 0.0 ? DynamicalAlgebra::O4 : DynamicalAlgebra::O31;
}

std::array<double, 3> spherical_to_cartesian(double r, double theta, double phi) {
  if (!(r > 0.0)) throw std::invalid_argument("spherical_to_cartesian: r must be positive");
  if (!(theta >= 0.0 && theta <= 3.14159265358979323846 + 1e-15) ||
      !std::isfinite(phi))
    throw std::invalid_argument("spherical_to_cartesian: angle out of range");
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
          r * std::cos(theta)};
}

ParabolicPoint parabolic_to_cartesian(double xi, double eta, double phi) {
  if (!(xi > 0.0)) throw std::invalid_argument("parabolic_to_cartesian: xi must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("parabolic_to_cartesian: eta must be positive");
  if (!std::isfinite(phi))
    throw std::invalid_argument("parabolic_to_cartesian: phi out of range");
  ParabolicPoint q;
  const double rho = std::sqrt(xi * eta);
  q.x = rho * std::cos(phi);
  q.y = rho * std::sin(phi);
  q.z = 0.5 * (xi - eta);
  q.r = 0.5 * (xi + eta);
  return q;
}

}  // namespace monopole
