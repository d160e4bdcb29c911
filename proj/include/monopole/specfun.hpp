#pragma once

// Special-function kernel: log-gamma, Jacobi polynomials, confluent
// hypergeometric 1F1 and generalized Laguerre polynomials. Real arguments
// only; Jacobi and Laguerre are evaluated by three-term recurrences, 1F1 by
// an exact terminating sum or a convergent power series.

namespace monopole::specfun {

// Simultaneous value/derivative of a polynomial evaluation.
struct PolyEval {
  double value = 0.0;
  double derivative = 0.0;
};

// log Gamma(x) for x > 0. Relative error below 1e-13 on the domain.
double ln_gamma(double x);

// Jacobi polynomial P_n^(alpha,beta)(x) with derivative, n >= 0 and
// alpha, beta > -1. The derivative uses
//   d/dx P_n^(a,b) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1).
PolyEval jacobi(int n, double alpha, double beta, double x);

// Confluent hypergeometric 1F1(a; b; x). When a is a nonpositive integer the
// series terminates and is summed exactly; otherwise the power series is
// summed until the running term drops below 1e-15 relative. Throws when b is
// a nonpositive integer that is reached before the series terminates, or if
// 1e4 terms do not converge.
double hyp1f1(double a, double b, double x);

// Generalized Laguerre polynomial L_n^(lambda)(x), n >= 0, lambda > -1,
// evaluated by the three-term recurrence.
double laguerre(int n, double lambda, double x);

// Derivative d/dx L_n^(lambda)(x) = -L_{n-1}^(lambda+1)(x).
double laguerre_derivative(int n, double lambda, double x);

}  // namespace monopole::specfun
