#include "monopole/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace monopole::spectrum {

namespace {

void check_spec(const Sector& sector, const LevelSpec& spec) {
  if (spec.mode == Mode::Spherical) {
    if (spec.n < 1) throw std::invalid_argument("spherical n must be >= 1");
    if (spec.l < sector.nu1 - 1e-12 || spec.l > spec.n - 1)
      throw std::invalid_argument("spherical l must satisfy nu1 <= l <= n-1");
  } else {
    if (spec.n1 < 0 || spec.n2 < 0)
      throw std::invalid_argument("parabolic n1, n2 must be >= 0");
  }
}

// K of the reduced condition (a/b)t^2 + 2Nt - K = 0; for b = 0 it is the
// constant sqrt term that decides existence instead.
double reduced_constant(const ModelParams& p, const Sector& s) {
  return (p.a / p.b) * (p.c4 + p.d * s.nu2 * s.nu2) - p.c1 * s.nu2 * s.nu2 -
         0.5 * p.c0;
}

EnergyLevel make_level(Mode mode, double energy, double t, double n_value) {
  EnergyLevel lvl;
  lvl.mode = mode;
  lvl.energy = energy;
  lvl.t = t;
  lvl.epsilon = mode == Mode::Spherical ? 2.0 * t : t;
  lvl.level_number = n_value;
  return lvl;
}

}  // namespace

double level_number(const Sector& sector, const LevelSpec& spec) {
  check_spec(sector, spec);
  const double half_delta = 0.5 * (sector.delta1 + sector.delta2);
  if (spec.mode == Mode::Spherical) return spec.n + half_delta;
  return static_cast<double>(spec.n1 + spec.n2) + half_delta + sector.nu1 + 1.0;
}

std::optional<EnergyLevel> solve_energy(const ModelParams& p,
                                        const Sector& sector,
                                        const LevelSpec& spec) {
  const double n_value = level_number(sector, spec);
  if (!(n_value > 0.0)) return std::nullopt;  // beta = 2Nt > 0 unreachable

  if (p.b == 0.0) {
    if (p.a == 0.0)
      throw std::domain_error("solve_energy: a = b = 0 is degenerate");
    const double t_sq = p.c4 + p.d * sector.nu2 * sector.nu2;
    if (!(t_sq > 0.0)) return std::nullopt;
    const double t = std::sqrt(t_sq);
    const double energy =
        (p.c1 * sector.nu2 * sector.nu2 + 0.5 * p.c0 + 2.0 * n_value * t) /
        (2.0 * p.a);
    return make_level(spec.mode, energy, t, n_value);
  }

  // t = K / (N + sqrt(N^2 + (a/b)K)) handles both the quadratic (a != 0) and
  // linear (a = 0) branches without cancellation; positive iff K > 0.
  const double k_const = reduced_constant(p, sector);
  if (!(k_const > 0.0)) return std::nullopt;
  const double disc = n_value * n_value + (p.a / p.b) * k_const;
  if (!(disc >= 0.0)) return std::nullopt;
  const double t = k_const / (n_value + std::sqrt(disc));
  if (!(t > 0.0)) return std::nullopt;
  const double energy =
      (p.c4 + p.d * sector.nu2 * sector.nu2 - t * t) / (2.0 * p.b);
  return make_level(spec.mode, energy, t, n_value);
}

std::optional<EnergyLevel> solve_energy_bisect(const ModelParams& p,
                                               const Sector& sector,
                                               const LevelSpec& spec) {
  const double n_value = level_number(sector, spec);
  if (!(n_value > 0.0)) return std::nullopt;
  if (p.b == 0.0 && p.a == 0.0)
    throw std::domain_error("solve_energy_bisect: a = b = 0 is degenerate");

  const double dnu = p.d * sector.nu2 * sector.nu2;
  const auto sq = [&](double energy) { return p.c4 - 2.0 * p.b * energy + dnu; };
  const auto f = [&](double energy) {
    return 2.0 * p.a * energy - p.c1 * sector.nu2 * sector.nu2 - 0.5 * p.c0 -
           2.0 * n_value * std::sqrt(sq(energy));
  };

  double e_hi, e_lo;
  if (p.b > 0.0) {
    e_hi = (p.c4 + dnu) / (2.0 * p.b) - 1e-12;
    if (!(sq(e_hi) > 0.0) || !(f(e_hi) > 0.0)) return std::nullopt;
  } else {  // b = 0: sqrt term constant, F linear increasing in E
    if (!(p.c4 + dnu > 0.0)) return std::nullopt;
    e_hi = 1.0;
    for (int i = 0; i < 60 && f(e_hi) <= 0.0; ++i) e_hi *= 2.0;
    if (f(e_hi) <= 0.0) return std::nullopt;
  }

  double step = std::max(1.0, std::abs(e_hi));
  e_lo = e_hi - step;
  int doublings = 0;
  while (f(e_lo) >= 0.0) {
    if (++doublings > 60) return std::nullopt;
    step *= 2.0;
    e_lo = e_hi - step;
  }

  while (e_hi - e_lo > 1e-13) {
    const double mid = 0.5 * (e_lo + e_hi);
    if (mid == e_lo || mid == e_hi) break;
    (f(mid) < 0.0 ? e_lo : e_hi) = mid;
  }
  const double energy = 0.5 * (e_lo + e_hi);
  return make_level(spec.mode, energy, std::sqrt(std::max(sq(energy), 0.0)),
                    n_value);
}

double separation_constant_k1(const Sector& sector, int l) {
  if (l < sector.nu1 - 1e-12)
    throw std::invalid_argument("separation_constant_k1: l must be >= nu1");
  const double s = l + 0.5 * (sector.delta1 + sector.delta2);
  return s * (s + 1.0);
}

SeparationK2 separation_constant_k2(const ModelParams& p, const Sector& sector,
                                    const EnergyLevel& level, int n1) {
  if (level.mode != Mode::Parabolic)
    throw std::invalid_argument("separation_constant_k2: parabolic level required");
  const double eps = level.epsilon;
  const double beta = alpha_beta(p, level.energy, sector.nu2).beta;
  SeparationK2 k;
  k.k_xi =
      eps * (beta / (4.0 * eps) - n1 - 0.5 * (sector.delta1 + sector.nu1 + 1.0));
  k.k_eta = -k.k_xi;
  return k;
}

bool check_quantum_relation(int n, int n1, int n2, double nu1) {
  return std::abs(n1 + n2 + nu1 - (n - 1)) <= 1e-12;
}

std::vector<LevelRow> enumerate_levels(const ModelParams& p, double nu2,
                                       int n_max) {
  if (std::abs(2.0 * nu2 - std::round(2.0 * nu2)) > 1e-9)
    throw std::invalid_argument("enumerate_levels: nu2 must be a half-integer");
  std::vector<LevelRow> rows;
  for (int nu1 = 0; nu1 + 1 <= n_max; ++nu1) {
    const Sector sector = derived_sector(p, nu1, nu2);
    for (int n1 = 0; n1 + nu1 + 1 <= n_max; ++n1) {
      for (int n2 = 0; n1 + n2 + nu1 + 1 <= n_max; ++n2) {
        LevelSpec spec;
        spec.mode = Mode::Parabolic;
        spec.n1 = n1;
        spec.n2 = n2;
        LevelRow row;
        row.n1 = n1;
        row.n2 = n2;
        row.nu1 = nu1;
        row.nu2 = nu2;
        row.sector = sector;
        row.level = solve_energy(p, sector, spec);
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const LevelRow& x, const LevelRow& y) {
    const bool xb = x.level.has_value(), yb = y.level.has_value();
    if (xb != yb) return xb;  // bound rows first
    if (xb && x.level->energy != y.level->energy)
      return x.level->energy < y.level->energy;
    return std::tie(x.n1, x.n2, x.nu1) < std::tie(y.n1, y.n2, y.nu1);
  });
  return rows;
}

}  // namespace monopole::spectrum
