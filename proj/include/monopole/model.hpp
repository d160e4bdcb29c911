#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Model definition: metric functions, potential couplings, quantum sectors
// and the dynamical-algebra classification. Natural units, hbar = 1; all
// couplings dimensionless.

namespace monopole {

// The eight couplings of the metric and potential:
//   f(r) = a/r + b,  g(r) = r(a+br) / (1 + c1 r + d r^2)
// plus the potential constants c0, c2, c3, c4.
struct ModelParams {
  double a = 0.0;
  double b = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double d = 0.0;
};

struct ValidationIssue {
  std::string condition;          // violated condition, human readable
  std::optional<double> witness;  // r > 0 where a positivity condition fails
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Physical-domain predicate: a >= 0, b > 0, c2 >= 0, c3 >= 0 and
// 1 + c1 r + d r^2 > 0 for all r > 0 (exact test: d > 0 and c1 > -2 sqrt(d),
// or d >= 0 and c1 >= 0). On failure the report carries each violated
// condition and, for the quadratic, a witness r.
ValidationReport validate_params(const ModelParams& p);

// f(r) = a/r + b. Requires r > 0.
double metric_f(const ModelParams& p, double r);

// g(r) = r(a+br) / (1 + c1 r + d r^2). Requires r > 0 and nonzero denominator.
double metric_g(const ModelParams& p, double r);

// Monopole vector potential A = (-y, x, 0) / (r (r+z)).
// Undefined on the Dirac string (negative z axis, r + z = 0) and at the
// origin; both are reported as domain errors.
std::array<double, 3> gauge_potential(double x, double y, double z);

// Named parameter sets. Known names: "kaluza-klein", "micz",
// "hartmann-taubnut". Throws std::invalid_argument for unknown names.
ModelParams preset(std::string_view name);
std::vector<std::string> preset_names();

// Quantum-sector data derived from (nu1, nu2):
//   delta1 = sqrt(c2 + (nu1 - 2 nu2)^2) - nu1
//   delta2 = sqrt(c3 + nu1^2) - nu1
//   m1 = delta1 + nu1,  m2 = delta2 + nu1
//   q1 = nu1 - nu2 (eigenvalue of L3),  q2 = nu2 (eigenvalue of Q)
struct Sector {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
};

Sector derived_sector(const ModelParams& p, double nu1, double nu2);

// The two linear-in-E constants of the separated equations:
//   alpha = 2 b E - d nu2^2 - c4,  beta = 2 a E - c1 nu2^2 - c0/2.
struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

AlphaBeta alpha_beta(const ModelParams& p, double energy, double nu2);

// Dynamical algebra closed by L and M at fixed (E, q2):
// o(4) for c1 q2^2/2 - a E > 0, o(3,1) for < 0, contracted at 0
// (|value| <= 1e-14 counts as contracted).
enum class DynamicalAlgebra { O4, O31, Contracted };

DynamicalAlgebra classify_dynamical_algebra(const ModelParams& p, double energy,
                                            double q2);

// Coordinate maps. Spherical requires r > 0 and theta in [0, pi]; phi is
// periodic and accepted as any finite value. Parabolic requires xi, eta > 0.
std::array<double, 3> spherical_to_cartesian(double r, double theta, double phi);

struct ParabolicPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double r = 0.0;  // (xi + eta)/2
};

ParabolicPoint parabolic_to_cartesian(double xi, double eta, double phi);

}  // namespace monopole
