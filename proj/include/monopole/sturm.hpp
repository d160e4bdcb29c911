#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "monopole/model.hpp"

// Finite-difference Sturm-Liouville eigensolvers for the separated radial,
// angular and parabolic equations. These are the independent numerical
// oracle for the analytic spectra: second-order flux-form central
// differences on uniform cell-centered grids (first node at h/2, so singular
// coefficients are never evaluated at the ends), symmetric-definite
// reduction, and Sturm-sequence bisection for the eigenvalues.

namespace monopole::sturm {

enum class GridKind { UniformR, UniformTheta, UniformXi };

struct Grid {
  GridKind kind = GridKind::UniformR;
  int n = 256;         // number of interior nodes, >= 16
  double x_max = 50.0; // domain cutoff; fixed to pi for UniformTheta
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> residuals;    // ||(Op - lambda W) v|| / ||W v|| per pair
  Grid grid;
  double boundary_tail = 0.0;   // mass of the first eigenvector near x_max
  bool cutoff_suspect = false;  // boundary sensitivity heuristic tripped
};

// Symmetric tridiagonal eigenvalues (diag size n, offdiag size n-1) by Sturm
// bisection; the lowest `k` are returned ascending (k <= 0 means all).
// Accuracy ~1e-12 * ||matrix||.
std::vector<double> eigen_sym_tridiag(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      int k = 0);

// As above but the largest `k`, returned ascending.
std::vector<double> eigen_sym_tridiag_largest(std::span<const double> diag,
                                              std::span<const double> offdiag,
                                              int k);

// Radial problem in Sturm-Liouville form,
//   (r^2 R')' - [(d nu2^2 + c4) r^2 + (c1 nu2^2 + c0/2) r + k1] R
//     = -E * 2 r (a + b r) R,
// with natural behaviour at the origin and Dirichlet at r = x_max (the known
// r^s indicial factor is divided out first so the discretized eigenfunction
// is analytic). Returns the lowest k eigenvalues E. Throws on an indefinite
// weight. With extrapolate set, one h^2 Richardson step over grids n/2 and n
// refines each eigenvalue; the default keeps the plain second-order ladder
// so measured convergence orders stay meaningful.
EigenResult radial_eigen(const ModelParams& p, const Sector& sector, double k1,
                         const Grid& grid, int k = 3, bool extrapolate = false);

// Angular problem,
//   (sin t T')' - [ m1^2/(2(1+cos t)) + m2^2/(2(1-cos t)) ] sin t T
//     = -k1 sin t T on (0, pi),
// with m1^2 = c2 + (nu1-2nu2)^2, m2^2 = c3 + nu1^2. Natural behaviour at both
// poles (the flux coefficient vanishes there). Lowest k eigenvalues k1.
EigenResult angular_eigen(const ModelParams& p, const Sector& sector,
                          const Grid& grid, int k = 3, bool extrapolate = false);

// Parabolic problem at fixed energy E on the bound branch (alpha < 0),
//   d/dxi (xi T') + (alpha/4) xi T + (beta/4) T - (m^2/(4 xi)) T = k2 T,
// weight 1. The operator is bounded above with the physical values at the
// top, so the largest k eigenvalues are returned (ascending; .back() is the
// n_i = 0 value). eta_side selects the eta equation (m = m2), whose own
// eigenvalues form the -k2 spectrum. Throws when alpha >= 0.
EigenResult parabolic_eigen_k2(const ModelParams& p, const Sector& sector,
                               double energy, const Grid& grid, int k = 3,
                               bool eta_side = false, bool extrapolate = false);

// Richardson estimate of the convergence order from the solved values on
// >= 3 nested grids (h, h/2, h/4, ...). With a reference value the order is
// fitted from the error sequence; without one it uses successive
// differences. Returns nullopt when the sequence is not monotone.
std::optional<double> convergence_order(std::span<const double> values,
                                        std::span<const double> spacings,
                                        std::optional<double> reference = {});

}  // namespace monopole::sturm
