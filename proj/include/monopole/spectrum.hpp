#pragma once

#include <optional>
#include <vector>

#include "monopole/model.hpp"

// Closed-form and bracketed solutions of the bound-state quantization
// condition
//
//   (2 a E - c1 nu2^2 - c0/2) / (2 sqrt(c4 - 2 b E + d nu2^2)) = N,
//
// where N = n + (delta1+delta2)/2 in spherical mode and
// N = n1 + n2 + (delta1+delta2)/2 + nu1 + 1 in parabolic mode.

namespace monopole::spectrum {

enum class Mode { Spherical, Parabolic };

// Quantum numbers of one level. Spherical mode uses (n, l) with n >= 1 and
// nu1 <= l <= n-1; parabolic mode uses (n1, n2) with n1, n2 >= 0.
struct LevelSpec {
  Mode mode = Mode::Parabolic;
  int n = 1;   // spherical principal number
  int l = 0;   // spherical orbital number
  int n1 = 0;  // parabolic quantum numbers
  int n2 = 0;
};

// A solved bound state. t = sqrt(c4 - 2 b E + d nu2^2) > 0. The epsilon of
// the wavefunction sections is 2t in spherical mode (alpha = -eps^2/4) and
// t in parabolic mode (alpha = -eps^2); both are stored.
struct EnergyLevel {
  Mode mode = Mode::Parabolic;
  double energy = 0.0;
  double t = 0.0;
  double epsilon = 0.0;
  double level_number = 0.0;
};

// Right-hand side N of the quantization condition for the given spec.
// Throws std::invalid_argument on out-of-range quantum numbers.
double level_number(const Sector& sector, const LevelSpec& spec);

// Closed-form solver. Substituting E = (c4 + d nu2^2 - t^2)/(2b) reduces the
// condition to (a/b)t^2 + 2N t - K = 0 with
// K = (a/b)(c4 + d nu2^2) - c1 nu2^2 - c0/2; the admissible root is
// t = K/(N + sqrt(N^2 + (a/b)K)), positive iff K > 0. For b = 0 the
// condition is linear in E instead. Returns nullopt when no bound state
// exists; throws std::domain_error when a = b = 0.
std::optional<EnergyLevel> solve_energy(const ModelParams& p,
                                        const Sector& sector,
                                        const LevelSpec& spec);

// Independent bracketed-bisection solver for the same condition, used as the
// oracle for solve_energy. Bisection runs on
// F(E) = (2 a E - c1 nu2^2 - c0/2) - 2 N sqrt(c4 - 2 b E + d nu2^2)
// to 1e-13 absolute in E.
std::optional<EnergyLevel> solve_energy_bisect(const ModelParams& p,
                                               const Sector& sector,
                                               const LevelSpec& spec);

// Spherical separation constant
// k1 = (l + (delta1+delta2)/2)(l + (delta1+delta2)/2 + 1), l >= nu1.
double separation_constant_k1(const Sector& sector, int l);

// Parabolic separation constants for a solved level:
// k_xi = eps [ beta/(4 eps) - n1 - (delta1 + nu1 + 1)/2 ], k_eta = -k_xi.
struct SeparationK2 {
  double k_xi = 0.0;
  double k_eta = 0.0;
};

SeparationK2 separation_constant_k2(const ModelParams& p, const Sector& sector,
                                    const EnergyLevel& level, int n1);

// n1 + n2 + nu1 == n - 1 linking the parabolic and spherical quantum numbers.
bool check_quantum_relation(int n, int n1, int n2, double nu1);

// One row of the batch enumeration: spec, sector and either a level or
// "absent" when no bound state exists.
struct LevelRow {
  int n1 = 0;
  int n2 = 0;
  int nu1 = 0;
  double nu2 = 0.0;
  Sector sector;
  std::optional<EnergyLevel> level;
};

// All parabolic levels with integer nu1 >= 0 and n1+n2+nu1 <= n_max-1 at the
// given nu2 (restricted to half-integers: 2*nu2 must be integral). Bound rows
// are sorted by E then (n1, n2, nu1); absent rows follow, sorted by key.
std::vector<LevelRow> enumerate_levels(const ModelParams& p, double nu2,
                                       int n_max);

}  // namespace monopole::spectrum
