#pragma once

#include <functional>
#include <vector>

// Gauss-Legendre quadrature with rational half-line maps and an
// order-doubling convergence driver.

namespace monopole::quad {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

// Nodes and weights of the n-point rule via Newton iteration on P_n.
const GaussLegendre& gauss_legendre(int n);

// Integral of f over the finite interval [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 int order);

// Integral of f over (0, inf) mapped by r = scale * u / (1 - u), u in (0,1).
double integrate_half_line(const std::function<double(double)>& f, double scale,
                           int order);

// Same with r = scale * (u/(1-u))^power; power = 2 absorbs a sqrt(r)
// endpoint factor so half-integer weights stay smooth under the rule.
double integrate_half_line_pow(const std::function<double(double)>& f,
                               double scale, int power, int order);

// Order-doubling driver: evaluates `integral(order)` with doubled orders
// until two consecutive values agree to rel_tol (relative to the latest
// value, floored at 1). Throws std::runtime_error if max_order is exceeded.
double converge_by_doubling(const std::function<double(int)>& integral,
                            int start_order, double rel_tol,
                            int max_order = 1 << 14);

}  // namespace monopole::quad
