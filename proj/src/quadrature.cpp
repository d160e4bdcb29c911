#include "monopole/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace monopole::quad {

namespace {

GaussLegendre compute_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-angle initial guess, then Newton on P_n.
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int order) {
  const GaussLegendre& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), len = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i)
    sum += rule.weights[i] * f(mid + len * rule.nodes[i]);
  return sum * len;
}

double integrate_half_line(const std::function<double(double)>& f, double scale,
                           int order) {
  const GaussLegendre& rule = gauss_legendre(order);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);  // map to (0,1)
    const double one_minus = 1.0 - u;
    const double r = scale * u / one_minus;
    const double jac = scale / (one_minus * one_minus);
    sum += 0.5 * rule.weights[i] * f(r) * jac;
  }
  return sum;
}

double integrate_half_line_pow(const std::function<double(double)>& f,
                               double scale, int power, int order) {
  if (power < 1) throw std::invalid_argument("integrate_half_line_pow: power >= 1");
  const GaussLegendre& rule = gauss_legendre(order);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double one_minus = 1.0 - u;
    const double ratio = u / one_minus;
    double rpow = 1.0;
    for (int k = 1; k < power; ++k) rpow *= ratio;
    const double r = scale * rpow * ratio;
    const double jac = scale * power * rpow / (one_minus * one_minus);
    sum += 0.5 * rule.weights[i] * f(r) * jac;
  }
  return sum;
}

double converge_by_doubling(const std::function<double(int)>& integral,
                            int start_order, double rel_tol, int max_order) {
  double prev = integral(start_order);
  for (int order = 2 * start_order; order <= max_order; order *= 2) {
    const double cur = integral(order);
    if (std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur)))
      return cur;
    prev = cur;
  }
  throw std::runtime_error("quadrature did not stabilize under order doubling");
}

}  // namespace monopole::quad
