#pragma once

#include "monopole/model.hpp"
#include "monopole/spectrum.hpp"

// Analytic eigenfunctions of the separated equations, their normalization by
// quadrature, and ODE residuals used as the eigen-action verification of the
// integrals of motion. All derivatives entering the residuals come from
// polynomial identities, never finite differences.

namespace monopole::wavefn {

// Angular factor (unnormalized unless scaled by a constant):
//   (1+cos t)^((delta1+nu1)/2) (1-cos t)^((delta2+nu1)/2)
//     * P^(delta2+nu1, delta1+nu1)_{l-nu1}(cos t).
// l - nu1 must be a nonnegative integer (within 1e-9).
double angular_theta(const Sector& sector, int l, double theta);

// Radial factor for n >= l+1:
//   (eps r)^(l+(delta1+delta2)/2) e^(-eps r/2)
//     * 1F1(-n+l+1, 2l+delta1+delta2+2; eps r).
double radial_R(const Sector& sector, int n, int l, double eps, double r);

// Parabolic factor of Eq.-type f_{n_i nu1}(t; delta_i): includes the Gamma
// ratio prefactor, so that  int_0^inf f^2 dt = 1/eps  exactly.
double parabolic_f(int n_i, double delta_i, double nu1, double eps, double t);

// A spherical bound state: level data plus normalization constants
// (1 until normalize() has run).
struct SphericalState {
  ModelParams params;
  Sector sector;
  int n = 1;
  int l = 0;
  spectrum::EnergyLevel level;
  double angular_const = 1.0;
  double radial_const = 1.0;
};

SphericalState make_spherical_state(const ModelParams& p, const Sector& sector,
                                    int n, int l);

// A parabolic bound state; factor constants scale parabolic_f.
struct ParabolicState {
  ModelParams params;
  Sector sector;
  int n1 = 0;
  int n2 = 0;
  spectrum::EnergyLevel level;
  double xi_const = 1.0;
  double eta_const = 1.0;
};

ParabolicState make_parabolic_state(const ModelParams& p, const Sector& sector,
                                    int n1, int n2);

double eval_angular(const SphericalState& s, double theta);
double eval_radial(const SphericalState& s, double r);
double eval_f_xi(const ParabolicState& s, double xi);
double eval_f_eta(const ParabolicState& s, double eta);

// Max over a grid of |LHS| of the respective separated ODE applied to the
// analytic solution, normalized by the local term scale. The angular
// residual doubles as the eigen-action check A psi = k1 psi and the
// parabolic ones as the check for B (via k2).
double ode_residual_radial(const SphericalState& s, int grid_points = 2000);
double ode_residual_angular(const SphericalState& s, int grid_points = 2000);

struct ParabolicResiduals {
  double xi = 0.0;
  double eta = 0.0;
};

ParabolicResiduals ode_residual_parabolic(const ParabolicState& s,
                                          int grid_points = 2000);

// Residuals against explicitly supplied (E, k) data, for sensitivity
// controls with perturbed eigendata.
double ode_residual_radial_at(const SphericalState& s, double energy, double k1,
                              int grid_points = 2000);
double ode_residual_angular_at(const SphericalState& s, double k1,
                               int grid_points = 2000);

// Normalization by Gauss-Legendre quadrature with order doubling
// (stable to 1e-10 relative), under the per-factor Sturm-Liouville weights:
//   angular:  int_0^pi   Theta^2 sin t dt = 1
//   radial:   int_0^inf  R^2 * 2 r (a + b r) dr = 1
//   parabolic factors: int_0^inf f^2 dt = 1 (constant sqrt(eps) by the
//   1/eps identity, still computed by quadrature as a cross-check).
SphericalState normalize(SphericalState s, int quadrature_order = 64);
ParabolicState normalize(ParabolicState s, int quadrature_order = 64);

// Interior sign changes on a scan grid (node count).
int count_nodes_radial(const SphericalState& s, int grid_points = 10000);
int count_nodes_f(int n_i, double delta_i, double nu1, double eps,
                  int grid_points = 10000);

}  // namespace monopole::wavefn
