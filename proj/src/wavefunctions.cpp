#include "monopole/wavefunctions.hpp"

#include <cmath>
#include <stdexcept>

#include "monopole/quadrature.hpp"
#include "monopole/specfun.hpp"

namespace monopole::wavefn {

namespace {

constexpr double kPi = 3.14159265358979323846;

int jacobi_degree(const Sector& sector, int l) {
  const double deg = l - sector.nu1;
  const double rounded = std::round(deg);
  if (rounded < -0.5 || std::abs(deg - rounded) > 1e-9)
    throw std::invalid_argument("angular_theta: l - nu1 must be a nonnegative integer");
  return static_cast<int>(rounded);
}

// Kummer function with first and second derivatives via the contiguous
// parameter shifts; exact polynomials in the terminating cases used here.
struct KummerEval {
  double m, m1, m2;
};

KummerEval kummer(double a, double b, double z) {
  KummerEval k;
  k.m = specfun::hyp1f1(a, b, z);
  k.m1 = (a / b) * specfun::hyp1f1(a + 1.0, b + 1.0, z);
  k.m2 = (a * (a + 1.0)) / (b * (b + 1.0)) * specfun::hyp1f1(a + 2.0, b + 2.0, z);
  return k;
}

// Value and two derivatives (in r) of (eps r)^s e^(-eps r/2) 1F1(a, b; eps r).
struct RadialEval {
  double value, d1, d2;
};

RadialEval laguerre_type(double s, double a, double b, double eps, double r) {
  const double z = eps * r;
  const KummerEval k = kummer(a, b, z);
  const double zs = std::pow(z, s);
  const double e = std::exp(-0.5 * z);
  const double u0 = zs * e * k.m;
  // d/dz [z^s e^(-z/2) M] = z^(s-1) e^(-z/2) [(s - z/2) M + z M']
  const double u1 = (s - 0.5 * z) * k.m + z * k.m1;
  const double du1 = -0.5 * k.m + (s + 1.0 - 0.5 * z) * k.m1 + z * k.m2;
  const double d1 = std::pow(z, s - 1.0) * e * u1;
  const double d2 = std::pow(z, s - 2.0) * e * ((s - 1.0 - 0.5 * z) * u1 + z * du1);
  return {u0, eps * d1, eps * eps * d2};
}

// Angular factor with x = cos(theta) derivatives from the Jacobi identities.
// 1 +- cos(theta) are formed from half-angle squares, which stay fully
// accurate at the poles where the direct difference cancels.
struct AngularEval {
  double value, dx1, dx2;
};

AngularEval angular_eval(const Sector& sector, int l, double theta) {
  const int deg = jacobi_degree(sector, l);
  const double onepx = 2.0 * std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double onemx = 2.0 * std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double x = onepx - 1.0;
  const double p1 = 0.5 * (sector.delta1 + sector.nu1);  // m1/2
  const double p2 = 0.5 * (sector.delta2 + sector.nu1);  // m2/2
  const double ja = sector.delta2 + sector.nu1;
  const double jb = sector.delta1 + sector.nu1;
  const double pv = specfun::jacobi(deg, ja, jb, x).value;
  const double pd = deg >= 1 ? 0.5 * (deg + ja + jb + 1.0) *
                                   specfun::jacobi(deg - 1, ja + 1.0, jb + 1.0, x).value
                             : 0.0;
  const double pdd =
      deg >= 2 ? 0.25 * (deg + ja + jb + 1.0) * (deg + ja + jb + 2.0) *
                     specfun::jacobi(deg - 2, ja + 2.0, jb + 2.0, x).value
               : 0.0;
  const double w = std::pow(onepx, p1) * std::pow(onemx, p2);
  const double g = p1 / onepx - p2 / onemx;
  const double gp = -p1 / (onepx * onepx) - p2 / (onemx * onemx);
  AngularEval a;
  a.value = w * pv;
  a.dx1 = w * (g * pv + pd);
  a.dx2 = w * ((g * g + gp) * pv + 2.0 * g * pd + pdd);
  return a;
}

double radial_exponent(const Sector& sector, int l) {
  return l + 0.5 * (sector.delta1 + sector.delta2);
}

spectrum::EnergyLevel require_level(std::optional<spectrum::EnergyLevel> lvl,
                                    const char* what) {
  if (!lvl) throw std::domain_error(std::string(what) + ": no bound state");
  return *lvl;
}

}  // namespace

double angular_theta(const Sector& sector, int l, double theta) {
  return angular_eval(sector, l, theta).value;
}

double radial_R(const Sector& sector, int n, int l, double eps, double r) {
  if (n < l + 1) throw std::invalid_argument("radial_R: n must be >= l + 1");
  if (!(r > 0.0)) throw std::invalid_argument("radial_R: r must be positive");
  const double s = radial_exponent(sector, l);
  const double b = 2.0 * l + sector.delta1 + sector.delta2 + 2.0;
  return laguerre_type(s, static_cast<double>(-n + l + 1), b, eps, r).value;
}

double parabolic_f(int n_i, double delta_i, double nu1, double eps, double t) {
  if (n_i < 0) throw std::invalid_argument("parabolic_f: n_i must be >= 0");
  if (!(t > 0.0)) throw std::invalid_argument("parabolic_f: t must be positive");
  const double lambda = nu1 + delta_i;
  const double pref =
      std::exp(0.5 * (specfun::ln_gamma(n_i + lambda + 1.0) -
                      specfun::ln_gamma(n_i + 1.0)) -
               specfun::ln_gamma(lambda + 1.0));
  return pref *
         laguerre_type(0.5 * lambda, static_cast<double>(-n_i), lambda + 1.0,
                       eps, t)
             .value;
}

SphericalState make_spherical_state(const ModelParams& p, const Sector& sector,
                                    int n, int l) {
  spectrum::LevelSpec spec;
  spec.mode = spectrum::Mode::Spherical;
  spec.n = n;
  spec.l = l;
  SphericalState s;
  s.params = p;
  s.sector = sector;
  s.n = n;
  s.l = l;
  s.level = require_level(spectrum::solve_energy(p, sector, spec),
                          "make_spherical_state");
  return s;
}

ParabolicState make_parabolic_state(const ModelParams& p, const Sector& sector,
                                    int n1, int n2) {
  spectrum::LevelSpec spec;
  spec.mode = spectrum::Mode::Parabolic;
  spec.n1 = n1;
  spec.n2 = n2;
  ParabolicState s;
  s.params = p;
  s.sector = sector;
  s.n1 = n1;
  s.n2 = n2;
  s.level = require_level(spectrum::solve_energy(p, sector, spec),
                          "make_parabolic_state");
  return s;
}

double eval_angular(const SphericalState& s, double theta) {
  return s.angular_const * angular_theta(s.sector, s.l, theta);
}

double eval_radial(const SphericalState& s, double r) {
  return s.radial_const * radial_R(s.sector, s.n, s.l, s.level.epsilon, r);
}

double eval_f_xi(const ParabolicState& s, double xi) {
  return s.xi_const *
         parabolic_f(s.n1, s.sector.delta1, s.sector.nu1, s.level.epsilon, xi);
}

double eval_f_eta(const ParabolicState& s, double eta) {
  return s.eta_const *
         parabolic_f(s.n2, s.sector.delta2, s.sector.nu1, s.level.epsilon, eta);
}

double ode_residual_radial_at(const SphericalState& s, double energy, double k1,
                              int grid_points) {
  const AlphaBeta ab = alpha_beta(s.params, energy, s.sector.nu2);
  const double eps = s.level.epsilon;
  const double sexp = radial_exponent(s.sector, s.l);
  const double b = 2.0 * s.l + s.sector.delta1 + s.sector.delta2 + 2.0;
  const double a = static_cast<double>(-s.n + s.l + 1);
  const double r_hi = 30.0 / eps;
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double r = (i + 0.5) * r_hi / grid_points;
    const RadialEval f = laguerre_type(sexp, a, b, eps, r);
    const double terms[4] = {f.d2, 2.0 / r * f.d1,
                             (ab.alpha + ab.beta / r) * f.value,
                             -k1 / (r * r) * f.value};
    const double lhs = terms[0] + terms[1] + terms[2] + terms[3];
    double scale = 0.0;
    for (double v : terms) scale += std::abs(v);
    if (scale < 1e-280) continue;  // underflowed tail
    worst = std::max(worst, std::abs(lhs) / scale);
  }
  return worst;
}

double ode_residual_radial(const SphericalState& s, int grid_points) {
  return ode_residual_radial_at(s, s.level.energy,
                                spectrum::separation_constant_k1(s.sector, s.l),
                                grid_points);
}

double ode_residual_angular_at(const SphericalState& s, double k1,
                               int grid_points) {
  const double m1sq = s.sector.m1 * s.sector.m1;
  const double m2sq = s.sector.m2 * s.sector.m2;
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double theta = (i + 0.5) * kPi / grid_points;
    const double onepx = 2.0 * std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double onemx = 2.0 * std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double x = onepx - 1.0;
    const double st = std::sin(theta);
    const AngularEval a = angular_eval(s.sector, s.l, theta);
    // theta derivatives from x = cos(theta)
    const double d1 = -st * a.dx1;
    const double d2 = st * st * a.dx2 - x * a.dx1;
    const double terms[3] = {
        d2, (x / st) * d1,
        (k1 - m1sq / (2.0 * onepx) - m2sq / (2.0 * onemx)) * a.value};
    const double lhs = terms[0] + terms[1] + terms[2];
    double scale = 0.0;
    for (double v : terms) scale += std::abs(v);
    if (scale < 1e-280) continue;
    worst = std::max(worst, std::abs(lhs) / scale);
  }
  return worst;
}

double ode_residual_angular(const SphericalState& s, int grid_points) {
  return ode_residual_angular_at(
      s, spectrum::separation_constant_k1(s.sector, s.l), grid_points);
}

ParabolicResiduals ode_residual_parabolic(const ParabolicState& s,
                                          int grid_points) {
  const AlphaBeta ab = alpha_beta(s.params, s.level.energy, s.sector.nu2);
  const double eps = s.level.epsilon;
  const double k_xi =
      spectrum::separation_constant_k2(s.params, s.sector, s.level, s.n1).k_xi;
  const double t_hi = 40.0 / eps;

  auto factor_residual = [&](int n_i, double delta_i, double msq,
                             double k_eig) {
    const double lambda = s.sector.nu1 + delta_i;
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double t = (i + 0.5) * t_hi / grid_points;
      const RadialEval f =
          laguerre_type(0.5 * lambda, static_cast<double>(-n_i), lambda + 1.0,
                        eps, t);
      const double terms[5] = {t * f.d2, f.d1,
                               (0.25 * ab.alpha * t + 0.25 * ab.beta) * f.value,
                               -msq / (4.0 * t) * f.value, -k_eig * f.value};
      const double lhs = terms[0] + terms[1] + terms[2] + terms[3] + terms[4];
      double scale = 0.0;
      for (double v : terms) scale += std::abs(v);
      if (scale < 1e-280) continue;
      worst = std::max(worst, std::abs(lhs) / scale);
    }
    return worst;
  };

  ParabolicResiduals res;
  res.xi = factor_residual(s.n1, s.sector.delta1, s.sector.m1 * s.sector.m1, k_xi);
  res.eta =
      factor_residual(s.n2, s.sector.delta2, s.sector.m2 * s.sector.m2, -k_xi);
  return res;
}

SphericalState normalize(SphericalState s, int quadrature_order) {
  const double ang = quad::converge_by_doubling(
      [&](int order) {
        return quad::integrate(
            [&](double theta) {
              const double v = angular_theta(s.sector, s.l, theta);
              return v * v * std::sin(theta);
            },
            0.0, kPi, order);
      },
      quadrature_order, 1e-10);
  const double eps = s.level.epsilon;
  const double scale = (2.0 * radial_exponent(s.sector, s.l) + 4.0) / eps;
  const double rad = quad::converge_by_doubling(
      [&](int order) {
        return quad::integrate_half_line(
            [&](double r) {
              const double v = radial_R(s.sector, s.n, s.l, eps, r);
              return v * v * 2.0 * r * (s.params.a + s.params.b * r);
            },
            scale, order);
      },
      quadrature_order, 1e-10);
  if (!(ang > 0.0) || !(rad > 0.0))
    throw std::runtime_error("normalize: nonpositive norm integral");
  s.angular_const = 1.0 / std::sqrt(ang);
  s.radial_const = 1.0 / std::sqrt(rad);
  return s;
}

ParabolicState normalize(ParabolicState s, int quadrature_order) {
  const double eps = s.level.epsilon;
  auto factor_norm = [&](int n_i, double delta_i) {
    const double scale = (s.sector.nu1 + delta_i + 2.0 * n_i + 4.0) / eps;
    return quad::converge_by_doubling(
        [&](int order) {
          return quad::integrate_half_line(
              [&](double t) {
                const double v =
                    parabolic_f(n_i, delta_i, s.sector.nu1, eps, t);
                return v * v;
              },
              scale, order);
        },
        quadrature_order, 1e-10);
  };
  const double ni = factor_norm(s.n1, s.sector.delta1);
  const double ne = factor_norm(s.n2, s.sector.delta2);
  if (!(ni > 0.0) || !(ne > 0.0))
    throw std::runtime_error("normalize: nonpositive norm integral");
  s.xi_const = 1.0 / std::sqrt(ni);   // equals sqrt(eps) up to quadrature
  s.eta_const = 1.0 / std::sqrt(ne);
  return s;
}

int count_nodes_radial(const SphericalState& s, int grid_points) {
  const double eps = s.level.epsilon;
  const double r_hi = 40.0 / eps;
  int nodes = 0;
  double prev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double r = (i + 0.5) * r_hi / grid_points;
    const double v = radial_R(s.sector, s.n, s.l, eps, r);
    if (std::abs(v) < 1e-250) continue;
    if (prev != 0.0 && v * prev < 0.0) ++nodes;
    prev = v;
  }
  return nodes;
}

int count_nodes_f(int n_i, double delta_i, double nu1, double eps,
                  int grid_points) {
  const double t_hi = 40.0 / eps + 8.0 * (n_i + 1) / eps;
  int nodes = 0;
  double prev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = (i + 0.5) * t_hi / grid_points;
    const double v = parabolic_f(n_i, delta_i, nu1, eps, t);
    if (std::abs(v) < 1e-250) continue;
    if (prev != 0.0 && v * prev < 0.0) ++nodes;
    prev = v;
  }
  return nodes;
}

}  // namespace monopole::wavefn
