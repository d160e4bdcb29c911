#include "monopole/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monopole::sturm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Number of eigenvalues of the symmetric tridiagonal matrix below x
// (Sturm / LDL^T sign count). An exactly zero pivot is treated as negative
// before counting, so hitting an eigenvalue of a leading minor cannot skew
// the count.
int count_below(std::span<const double> diag, std::span<const double> off,
                double x) {
  int count = 0;
  double d = diag[0] - x;
  if (d == 0.0) d = -1e-300;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    d = diag[i] - x - off[i - 1] * off[i - 1] / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (0-based) by bisection on the sign count.
double kth_eigenvalue(std::span<const double> diag, std::span<const double> off,
                      int k, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo) + std::abs(hi));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (count_below(diag, off, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void gershgorin(std::span<const double> diag, std::span<const double> off,
                double& lo, double& hi) {
  lo = diag[0];
  hi = diag[0];
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
}

// One inverse-iteration pass for the eigenvector at shift lambda.
std::vector<double> inverse_iteration(std::span<const double> diag,
                                      std::span<const double> off,
                                      double lambda) {
  const std::size_t n = diag.size();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  // Shift slightly off the eigenvalue so the LU stays finite.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[i]));
  const double shift = lambda + 1e-12 * std::max(1.0, scale);

  for (int pass = 0; pass < 3; ++pass) {
    // Thomas solve of (T - shift I) x = v with tiny-pivot guarding.
    std::vector<double> c(n, 0.0), x(n, 0.0);
    double denom = diag[0] - shift;
    if (std::abs(denom) < 1e-300) denom = 1e-300;
    if (n > 1) c[0] = off[0] / denom;
    x[0] = v[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - shift - off[i - 1] * c[i - 1];
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      if (i + 1 < n) c[i] = off[i] / denom;
      x[i] = (v[i] - off[i - 1] * x[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    double norm = 0.0;
    for (double xv : x) norm += xv * xv;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i] / norm;
  }
  return v;
}

struct Assembled {
  // Generalized symmetric-definite problem T y = lambda W y and its
  // W^(-1/2)-reduced standard tridiagonal (diag, off).
  std::vector<double> t_diag, t_off, w;
  std::vector<double> diag, off;
};

// Flux-form assembly on the cell-centered grid x_j = (j - 1/2) h, j = 1..n,
// for  -(p y')' + V y = lambda w y  on (0, x_max). p is evaluated at the cell
// boundaries j h only, so singular coefficients are never touched at the
// ends; dirichlet_right adds the ghost-cell wall condition y(x_max) = 0.
Assembled assemble(int n, double h, const std::function<double(double)>& p_fn,
                   const std::function<double(double)>& v_fn,
                   const std::function<double(double)>& w_fn,
                   bool dirichlet_right) {
  Assembled m;
  m.t_diag.resize(n);
  m.t_off.resize(n - 1);
  m.w.resize(n);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> p_bound(n + 1);
  for (int j = 0; j <= n; ++j) p_bound[j] = p_fn(j * h);
  for (int j = 1; j <= n; ++j) {
    const double x = (j - 0.5) * h;
    double d = (p_bound[j] + p_bound[j - 1]) * inv_h2 + v_fn(x);
    if (j == n && dirichlet_right) d += 2.0 * p_bound[n] * inv_h2;
    m.t_diag[j - 1] = d;
    if (j < n) m.t_off[j - 1] = -p_bound[j] * inv_h2;
    const double wx = w_fn(x);
    if (!(wx > 0.0))
      throw std::domain_error("sturm: weight is not positive on the grid");
    m.w[j - 1] = wx;
  }
  m.diag.resize(n);
  m.off.resize(n - 1);
  for (int i = 0; i < n; ++i) m.diag[i] = m.t_diag[i] / m.w[i];
  for (int i = 0; i + 1 < n; ++i)
    m.off[i] = m.t_off[i] / std::sqrt(m.w[i] * m.w[i + 1]);
  return m;
}

EigenResult solve_lowest(const Assembled& m, const Grid& grid, int k) {
  const int n = static_cast<int>(m.diag.size());
  k = std::min(std::max(k, 1), n);
  EigenResult res;
  res.grid = grid;
  double lo, hi;
  gershgorin(m.diag, m.off, lo, hi);
  for (int j = 0; j < k; ++j)
    res.eigenvalues.push_back(kth_eigenvalue(m.diag, m.off, j, lo, hi));

  res.residuals.reserve(res.eigenvalues.size());
  for (std::size_t j = 0; j < res.eigenvalues.size(); ++j) {
    const double lambda = res.eigenvalues[j];
    const std::vector<double> z = inverse_iteration(m.diag, m.off, lambda);
    // Back to the generalized form: v = W^(-1/2) z, residual
    // ||(T - lambda W) v|| / ||W v||.
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = z[i] / std::sqrt(m.w[i]);
    double rnorm = 0.0, wnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = (m.t_diag[i] - lambda * m.w[i]) * v[i];
      if (i > 0) r += m.t_off[i - 1] * v[i - 1];
      if (i + 1 < n) r += m.t_off[i] * v[i + 1];
      rnorm += r * r;
      wnorm += m.w[i] * v[i] * m.w[i] * v[i];
    }
    res.residuals.push_back(std::sqrt(rnorm) / std::sqrt(wnorm));
    if (j == 0) {
      // Mass of the ground eigenvector in the outermost 2% of cells; a
      // noticeable fraction means the cutoff clips the state.
      double tail = 0.0, total = 0.0;
      const int tail_start = n - std::max(1, n / 50);
      for (int i = 0; i < n; ++i) {
        const double cell = m.w[i] * v[i] * v[i];
        total += cell;
        if (i >= tail_start) tail += cell;
      }
      res.boundary_tail = tail / total;
      res.cutoff_suspect = res.boundary_tail > 1e-8;
    }
  }
  return res;
}

void check_grid(const Grid& grid) {
  if (grid.n < 16) throw std::invalid_argument("sturm: grid must have n >= 16");
  if (!(grid.x_max > 0.0)) throw std::invalid_argument("sturm: x_max must be positive");
}

// Optional h^2 Richardson step: combine the grid with its half-resolution
// companion, (4 v_n - v_{n/2})/3 per eigenvalue. Residuals and metadata stay
// those of the fine grid.
EigenResult maybe_extrapolate(const std::function<EigenResult(const Grid&)>& solve,
                              const Grid& grid, bool extrapolate) {
  EigenResult fine = solve(grid);
  if (!extrapolate) return fine;
  Grid half = grid;
  half.n = std::max(grid.n / 2, 16);
  const EigenResult coarse = solve(half);
  for (std::size_t i = 0; i < fine.eigenvalues.size(); ++i)
    fine.eigenvalues[i] =
        (4.0 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
  return fine;
}

}  // namespace

std::vector<double> eigen_sym_tridiag(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      int k) {
  if (diag.empty()) return {};
  if (offdiag.size() + 1 != diag.size())
    throw std::invalid_argument("eigen_sym_tridiag: offdiag must have size n-1");
  const int n = static_cast<int>(diag.size());
  const int want = k <= 0 ? n : std::min(k, n);
  double lo, hi;
  gershgorin(diag, offdiag, lo, hi);
  std::vector<double> ev;
  ev.reserve(want);
  for (int j = 0; j < want; ++j)
    ev.push_back(kth_eigenvalue(diag, offdiag, j, lo, hi));
  return ev;
}

std::vector<double> eigen_sym_tridiag_largest(std::span<const double> diag,
                                              std::span<const double> offdiag,
                                              int k) {
  const int n = static_cast<int>(diag.size());
  const int want = std::min(std::max(k, 1), n);
  double lo, hi;
  gershgorin(diag, offdiag, lo, hi);
  std::vector<double> ev;
  for (int j = n - want; j < n; ++j)
    ev.push_back(kth_eigenvalue(diag, offdiag, j, lo, hi));
  return ev;
}

EigenResult radial_eigen(const ModelParams& p, const Sector& sector, double k1,
                         const Grid& grid, int k, bool extrapolate) {
  check_grid(grid);
  const double nu2sq = sector.nu2 * sector.nu2;
  const double c_r2 = p.d * nu2sq + p.c4;
  const double c_r = p.c1 * nu2sq + 0.5 * p.c0;
  // The r = 0 indicial exponent s solves s(s+1) = k1; writing R = r^s chi
  // and re-symmetrizing turns (r^2 R')' - [...] R = -E 2r(a+br) R into
  //   (r^(2s+2) chi')' - (c_r2 r^2 + c_r r) r^(2s) chi
  //      = -E 2 r^(2s+1)(a+br) chi
  // with the same eigenvalues and an analytic eigenfunction, so the central
  // scheme keeps clean second-order convergence. Below the critical coupling
  // k1 < -1/4 no real exponent exists and the plain form is kept.
  const double s_ind = 1.0 + 4.0 * k1 >= 0.0
                           ? 0.5 * (std::sqrt(1.0 + 4.0 * k1) - 1.0)
                           : 0.0;
  const double k1_res = 1.0 + 4.0 * k1 >= 0.0 ? 0.0 : k1;
  const auto solve = [&](const Grid& g) {
    const double h = g.x_max / g.n;
    const Assembled m = assemble(
        g.n, h,
        [&](double r) { return std::pow(r, 2.0 * s_ind + 2.0); },
        [&](double r) {
          return (c_r2 * r * r + c_r * r + k1_res) * std::pow(r, 2.0 * s_ind);
        },
        [&](double r) {
          return 2.0 * std::pow(r, 2.0 * s_ind + 1.0) * (p.a + p.b * r);
        },
        true);
    return solve_lowest(m, g, k);
  };
  return maybe_extrapolate(solve, grid, extrapolate);
}

EigenResult angular_eigen(const ModelParams& p, const Sector& sector,
                          const Grid& grid, int k, bool extrapolate) {
  check_grid(grid);
  const double m1sq = p.c2 + (sector.nu1 - 2.0 * sector.nu2) *
                                 (sector.nu1 - 2.0 * sector.nu2);
  const double m2sq = p.c3 + sector.nu1 * sector.nu1;
  const double m1 = std::sqrt(m1sq);
  const double m2 = std::sqrt(m2sq);
  // Pole indicial behaviour (1+cos t)^(m1/2) (1-cos t)^(m2/2) is factored
  // out; the regular part satisfies
  //   (W^2 sin t Z')' = -mu W^2 sin t Z,  W^2 = (1+cos)^m1 (1-cos)^m2,
  // whose eigenvalues mu shift back to k1 = mu + sigma(sigma+1),
  // sigma = (m1+m2)/2. Both pole fluxes still vanish, so no wall condition
  // is imposed and regular modes survive.
  const double sigma = 0.5 * (m1 + m2);
  const auto wsq = [&](double t) {
    const double onepc = 2.0 * std::cos(0.5 * t) * std::cos(0.5 * t);
    const double onemc = 2.0 * std::sin(0.5 * t) * std::sin(0.5 * t);
    return std::pow(onepc, m1) * std::pow(onemc, m2) * std::sin(t);
  };
  const auto solve = [&](const Grid& g0) {
    Grid g = g0;
    g.x_max = kPi;
    const double h = kPi / g.n;
    const Assembled m =
        assemble(g.n, h, wsq, [](double) { return 0.0; }, wsq, false);
    EigenResult res = solve_lowest(m, g, k);
    for (double& v : res.eigenvalues) v += sigma * (sigma + 1.0);
    return res;
  };
  return maybe_extrapolate(solve, grid, extrapolate);
}

EigenResult parabolic_eigen_k2(const ModelParams& p, const Sector& sector,
                               double energy, const Grid& grid, int k,
                               bool eta_side, bool extrapolate) {
  check_grid(grid);
  const AlphaBeta ab = alpha_beta(p, energy, sector.nu2);
  if (!(ab.alpha < 0.0))
    throw std::domain_error(
        "parabolic_eigen_k2: E off the bound branch (alpha >= 0, continuous spectrum)");
  const double msq = eta_side
                         ? p.c3 + sector.nu1 * sector.nu1
                         : p.c2 + (sector.nu1 - 2.0 * sector.nu2) *
                                      (sector.nu1 - 2.0 * sector.nu2);
  // The separated operator T = d/dx(x d/dx) + (alpha/4)x + beta/4 - m^2/(4x)
  // is bounded above on the bound branch with its physical eigenvalues
  // accumulating at the top, so the negated operator -T is assembled and its
  // lowest eigenvalues are negated back. The x = 0 indicial factor x^(m/2)
  // is removed as in the radial problem: with T1 = x^(m/2) chi,
  //   -(x^(m+1) chi')' - [(alpha/4) x + beta/4] x^m chi = -k2 x^m chi.
  // The xi side reports the k2 values (T_xi eigenvalues); the eta side
  // reports the eta-operator eigenvalues, i.e. the -k2 spectrum, by the same
  // rule with m = m2.
  const double sigma = 0.5 * std::sqrt(msq);
  const auto solve = [&](const Grid& g) {
    const double h = g.x_max / g.n;
    const Assembled m = assemble(
        g.n, h,
        [&](double x) { return std::pow(x, 2.0 * sigma + 1.0); },
        [&](double x) {
          return (-0.25 * ab.alpha * x - 0.25 * ab.beta) *
                 std::pow(x, 2.0 * sigma);
        },
        [&](double x) { return std::pow(x, 2.0 * sigma); }, true);
    EigenResult res = solve_lowest(m, g, k);
    for (double& v : res.eigenvalues) v = -v;
    std::reverse(res.eigenvalues.begin(), res.eigenvalues.end());
    std::reverse(res.residuals.begin(), res.residuals.end());
    return res;
  };
  return maybe_extrapolate(solve, grid, extrapolate);
}

std::optional<double> convergence_order(std::span<const double> values,
                                        std::span<const double> spacings,
                                        std::optional<double> reference) {
  if (values.size() < 3 || values.size() != spacings.size()) return std::nullopt;
  std::vector<double> err, hs;
  if (reference) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      err.push_back(std::abs(values[i] - *reference));
      hs.push_back(spacings[i]);
    }
  } else {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      err.push_back(std::abs(values[i] - values[i + 1]));
      hs.push_back(spacings[i]);
    }
  }
  if (err.size() < 2) return std::nullopt;
  for (std::size_t i = 0; i + 1 < err.size(); ++i)
    if (!(err[i] > err[i + 1]) || err[i + 1] == 0.0) return std::nullopt;
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    sum += std::log(err[i] / err[i + 1]) / std::log(hs[i] / hs[i + 1]);
    ++count;
  }
  return sum / count;
}

}  // namespace monopole::sturm
