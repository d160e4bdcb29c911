#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "monopole/matrix.hpp"
#include "monopole/model.hpp"
#include "monopole/polynomial.hpp"
#include "monopole/rational.hpp"

// The quadratic algebra Q(3) closed by the integrals A, B, C = [A,B] with
// central elements H, Q, L3: structure relations, Casimir value, deformed
// oscillator realization, structure function in general and factorized form,
// Set-1/Set-2 constraint solutions and finite-dimensional unirreps.
//
// Every algebraic formula is implemented over a generic scalar so it can run
// both in doubles and in exact rationals; identity tests run the rational
// path, spectra the float path.

namespace monopole::qalgebra {

using exact::Rational;
template <typename T>
using Poly = poly::Polynomial<T>;

// Couplings plus central charges (E, q1, q2) in the chosen scalar type.
template <typename T>
struct AlgebraData {
  T a{0}, b{0}, c0{0}, c1{0}, c2{0}, c3{0}, c4{0}, d{0};
  T E{0}, q1{0}, q2{0};
};

AlgebraData<double> make_algebra_data(const ModelParams& p, double energy,
                                      double q1, double q2);

// ---------------------------------------------------------------------------
// Scalar formulas (templated, exact in rational mode).

// Casimir of Q(3) written purely in central elements.
template <typename T>
T casimir_value(const AlgebraData<T>& v) {
  const T E = v.E, q1 = v.q1, q2 = v.q2;
  const T E2 = E * E, q1s = q1 * q1, q2s = q2 * q2;
  const T q2q = q2s * q2s;
  const T quarter = T(1) / T(4), half = T(1) / T(2), sixt = T(1) / T(16);
  T k(0);
  k = k + T(4) * v.a * v.a * E2 * q1s;
  k = k + T(4) * v.a * v.a * E2 * q2s;
  k = k + v.a * v.a * (v.c2 + v.c3) * E2;
  k = k - T(4) * v.a * v.c1 * E * q2q;
  k = k - T(4) * (T(2) * v.b + v.a * v.c1) * E * q2s * q1s;
  k = k - (T(2) * v.a * v.c0 - T(2) * v.b * v.c2 + v.a * v.c1 * v.c2 -
           T(2) * v.b * v.c3 + v.a * v.c1 * v.c3) *
              E * q2s;
  k = k - T(2) * (v.a * v.c0 - v.b * v.c2 - v.b * v.c3) * E * q1s;
  k = k - half *
              (T(4) * v.b * v.c2 + v.a * v.c0 * v.c2 + T(4) * v.b * v.c3 +
               v.a * v.c0 * v.c3 - T(4) * v.b * v.c2 * v.c3) *
              E;
  k = k + T(4) * v.b * (v.c2 - v.c3) * E * q2 * q1;
  k = k + v.c1 * v.c1 * q2q * q2s;
  k = k + (v.c1 * v.c1 + T(4) * v.d) * q2q * q1s;
  k = k + quarter *
              (T(4) * v.c0 * v.c1 + v.c1 * v.c1 * v.c2 + v.c1 * v.c1 * v.c3 -
               T(4) * v.c2 * v.d - T(4) * v.c3 * v.d) *
              q2q;
  k = k + (v.c0 * v.c1 + T(4) * v.c4 - v.c2 * v.d - v.c3 * v.d) * q2s * q1s;
  k = k - T(2) * v.d * (v.c2 - v.c3) * q1 * q2s * q2;
  k = k + quarter *
              (v.c0 * v.c0 + v.c0 * v.c1 * v.c2 + v.c0 * v.c1 * v.c3 -
               T(4) * v.c2 * v.c4 - T(4) * v.c3 * v.c4 + T(4) * v.c2 * v.d +
               T(4) * v.c3 * v.d - T(4) * v.c2 * v.c3 * v.d) *
              q2s;
  k = k - T(2) * v.c4 * (v.c2 - v.c3) * q2 * q1;
  k = k + quarter * (v.c0 * v.c0 - T(4) * v.c2 * v.c4 - T(4) * v.c3 * v.c4) * q1s;
  k = k + sixt * (v.c0 * v.c0 * v.c2 + v.c0 * v.c0 * v.c3 +
                  T(16) * v.c2 * v.c4 + T(16) * v.c3 * v.c4 -
                  T(16) * v.c2 * v.c3 * v.c4);
  return k;
}

// Central combination appearing in [A,C] and in the diagonal of B:
// nu = 4aEq2q1 - 2c1 q2^3 q1 - c0 q2 q1 - a(c2-c3)E + c1(c2-c3)q2^2/2
//      + c0(c2-c3)/4.
template <typename T>
T central_nu(const AlgebraData<T>& v) {
  const T half = T(1) / T(2), quarter = T(1) / T(4);
  return T(4) * v.a * v.E * v.q2 * v.q1 - T(2) * v.c1 * v.q2 * v.q2 * v.q2 * v.q1 -
         v.c0 * v.q2 * v.q1 - v.a * (v.c2 - v.c3) * v.E +
         half * v.c1 * (v.c2 - v.c3) * v.q2 * v.q2 +
         quarter * v.c0 * (v.c2 - v.c3);
}

// RHS of [A,C] for scalar generators ({A,B} = 2AB).
template <typename T>
T q3_rhs1_scalar(const AlgebraData<T>& v, const T& A, const T& B) {
  return T(4) * A * B + (v.c2 + v.c3) * B - central_nu(v);
}

// RHS of [B,C] for scalar generators.
template <typename T>
T q3_rhs2_scalar(const AlgebraData<T>& v, const T& A, const T& B) {
  const T half = T(1) / T(2), eighth = T(1) / T(8);
  const T q2s = v.q2 * v.q2, q1s = v.q1 * v.q1;
  return T(-2) * B * B + T(8) * v.b * v.E * A + T(2) * v.a * v.a * v.E * v.E -
         T(2) * (v.a * v.c1 + T(2) * v.b) * v.E * q2s -
         T(4) * v.b * v.E * q1s - T(4) * v.d * q2s * A +
         half * (v.c1 * v.c1 + T(4) * v.d) * q2s * q2s +
         T(2) * v.d * q2s * q1s - T(4) * v.c4 * A +
         (T(4) * v.b - v.a * v.c0) * v.E +
         half * (v.c0 * v.c1 + T(4) * v.c4 - T(4) * v.d) * q2s +
         T(2) * v.c4 * q1s + eighth * (v.c0 * v.c0 - T(16) * v.c4);
}

// ---------------------------------------------------------------------------
// Structure function.

enum class PhiForm { General, Factorized, Set1, Set2 };

template <typename T>
struct StructureFunction {
  Poly<T> polynomial;          // degree <= 6 in x
  std::vector<T> roots;        // known linear-factor roots (may be empty)
  PhiForm form = PhiForm::General;
};

// General two-bracket product, expanded into coefficients in x.
template <typename T>
StructureFunction<T> phi_general(const AlgebraData<T>& v, const T& u) {
  using P = Poly<T>;
  const P w = P::linear(T(1) - T(2) * u, T(-2));  // 1 - 2(x+u)
  const P w2 = w * w;
  const T q2s = v.q2 * v.q2;

  P b1 = P::constant(v.c0 * v.c0 + v.c0 * (T(-8) * v.a * v.E + T(4) * v.c1 * q2s));
  {
    P inner = P::constant(T(2) * v.E * T(2) * v.a * v.a * v.E) +
              w2 * (T(2) * v.E * v.b) - w2 * v.c4 -
              (P::constant(T(4) * v.a * v.c1 * v.E) + w2 * v.d) * q2s +
              P::constant(v.c1 * v.c1 * q2s * q2s);
    b1 = b1 + inner * T(4);
  }

  const P two_x = P::linear(T(2) * u, T(2));  // 2(x+u)
  const P p1 = (two_x + P::constant(T(2) * v.q1 - T(1))) *
               (two_x + P::constant(T(-1) - T(2) * v.q2));
  const P p2 = (P::constant(T(1) + T(2) * v.q1) - two_x) *
               (two_x + P::constant(T(2) * v.q2 - T(1)));
  const P b2 = P::constant(v.c2 * v.c2) -
               (w2 + P::constant(v.c3 + T(4) * v.q1 * v.q2)) * (T(2) * v.c2) +
               (P::constant(v.c3) - p1) * (P::constant(v.c3) + p2);

  StructureFunction<T> phi;
  phi.polynomial = b1 * b2 * T(12288);
  phi.form = PhiForm::General;
  return phi;
}

// Factorized form. The last two printed factors involve sqrt(c4-2bE+dq2^2);
// their product is rational, so the expansion multiplies the four m-factors
// by  S (x+u-1/2)^2 - Tq^2/16  and scales by -3145728, which is exact in
// rational mode (nothing divides by S). Preconditions m1^2 = c2+(q1-q2)^2 and
// m2^2 = c3+(q1+q2)^2 are checked, exactly for rationals, to 1e-12 for
// doubles.
template <typename T>
StructureFunction<T> phi_factorized(const AlgebraData<T>& v, const T& u,
                                    const T& m1, const T& m2);

// Roots/scale constructor used by the Set-1 display:
// phi(x) = 3145728 * S * x (x+m1)(x+m2)(x+m1+m2)(1+p-x)(1+p+x+m1+m2).
template <typename T>
StructureFunction<T> phi_set1(const T& m1, const T& m2, int p_level, const T& S);

// ---------------------------------------------------------------------------
// Constraint solutions and unirreps (float path).

struct AlgebraicSolution {
  int set = 1;
  int eps1 = 1;
  int eps2 = 1;
  int p = 0;            // unirrep dimension p+1
  double u = 0.0;
  double energy = 0.0;
  double t = 0.0;       // sqrt(c4 - 2bE + d q2^2)
  double eta1 = 0.0;    // 2p + 2 + eps1 m1 + eps2 m2
  double s1 = 0.0;      // Set-1: sqrt(c4-2bE+dq2^2); Set-2: the printed formula
  bool positive = false;  // phi(x) > 0 for integer x in [1, p]
};

// Solves the Set-1 / Set-2 constraints for (u, E). The energy relation is
// (2aE - c1 q2^2 - c0/2)/sqrt(c4-2bE+dq2^2) = eta1, the same closed-form
// branch logic as the analytic spectrum with N = eta1/2. Returns nullopt when
// no admissible energy exists; throws std::invalid_argument for set 2 with
// a = 0.
std::optional<AlgebraicSolution> solve_quantization(const ModelParams& p,
                                                    const Sector& sector,
                                                    int p_level, int eps1,
                                                    int eps2, int set);

// Exact Set-1 solution on the linear branch (a = 0, b != 0), for rational
// sector data: t = (-c1 q2^2 - c0/2)/eta1, E = (c4 + d q2^2 - t^2)/(2b).
struct RationalSet1 {
  Rational u, energy, t, S;
};
std::optional<RationalSet1> solve_set1_rational(const AlgebraData<Rational>& v,
                                                const Rational& m1,
                                                const Rational& m2, int p_level);

// (p+1)-dimensional matrix realization: aleph = diag(0..p),
// b+|n> = sqrt(phi(n+1))|n+1>, A = diag((n+u)^2 - 1/4 - (c2+c3)/4),
// B tridiagonal with diagonal nu/(4(n+u)^2-1) and off-diagonal s(n) fixed by
// s(n)^2 = phi(n+1) / (3*2^20 (n+u)(1+n+u)(1+2(n+u))^2), C = AB - BA.
// That denominator is the unique normalization closing [B,C] onto the
// algebra for every dimension; anything else breaks the diagonal recurrence
// already at p = 1.
struct Unirrep {
  int p = 0;
  double u = 0.0;
  std::vector<double> phi;  // phi(0..p+1)
  mat::Matrix A, B, C;
};

// Throws std::domain_error when phi is negative at an interior integer
// (unitarity violation) or when a pole of b(n)/rho(n) is hit.
Unirrep build_unirrep(const ModelParams& p, const AlgebraicSolution& sol,
                      double q1, double q2);

// As above with an explicit u (fault injection for negative controls).
Unirrep build_unirrep_at(const ModelParams& p, const AlgebraicSolution& sol,
                         double q1, double q2, double u,
                         bool check_positivity = true);

struct Q3Residuals {
  double rel_ac = 0.0;  // ||[A,C] - RHS1|| / max(1, ||RHS1||)
  double rel_bc = 0.0;  // ||[B,C] - RHS2|| / max(1, ||RHS2||)
  bool pass = false;    // both <= 1e-9
};

Q3Residuals verify_q3_relations(const Unirrep& rep, const ModelParams& p,
                                double energy, double q1, double q2);

// Matrix RHS of Eqs. [A,C] and [B,C] with scalars acting as multiples of the
// identity.
mat::Matrix q3_rhs1_matrix(const AlgebraData<double>& v, const mat::Matrix& A,
                           const mat::Matrix& B);
mat::Matrix q3_rhs2_matrix(const AlgebraData<double>& v, const mat::Matrix& A,
                           const mat::Matrix& B);

// ---------------------------------------------------------------------------
// Cross-method verification.

struct PhiDiff {
  int trial = 0;
  int coeff_index = 0;  // power of x at which the forms first differ
  std::string general_coeff;
  std::string factorized_coeff;
};

struct PhiEquivalenceReport {
  int trials = 0;
  std::vector<PhiDiff> diffs;  // empty when the forms agree on every draw
  bool all_equal() const { return diffs.empty(); }
};

// Polynomial-identity test between the two printed forms: random rational
// draws with c2, c3 back-solved from rational (m1, m2, q1, q2) so that every
// quantity is exact, both forms fully expanded and compared coefficient by
// coefficient.
PhiEquivalenceReport verify_phi_equivalence(int trials, std::uint64_t seed);

struct SpectraComparison {
  std::optional<double> algebraic;  // Set-1, eps1 = eps2 = +1
  std::optional<double> analytic;   // parabolic with n1 + n2 = p
  double diff = 0.0;
  bool pass = false;  // |diff| <= 1e-10 max(1, |E|), or both absent
};

SpectraComparison compare_spectra(const ModelParams& p, const Sector& sector,
                                  int p_level);

// ---------------------------------------------------------------------------
// Template definitions.

template <typename T>
StructureFunction<T> phi_factorized(const AlgebraData<T>& v, const T& u,
                                    const T& m1, const T& m2) {
  using P = Poly<T>;
  const T half = T(1) / T(2);
  const T S = v.c4 - T(2) * v.b * v.E + v.d * v.q2 * v.q2;
  const T Tq = v.c0 - T(4) * v.a * v.E + T(2) * v.c1 * v.q2 * v.q2;

  const T dq1 = v.q1 - v.q2, sq1 = v.q1 + v.q2;
  const T r1 = m1 * m1 - (v.c2 + dq1 * dq1);
  const T r2 = m2 * m2 - (v.c3 + sq1 * sq1);
  if constexpr (std::is_same_v<T, double>) {
    const double scale1 = std::max({1.0, std::abs(m1 * m1), std::abs(v.c2)});
    const double scale2 = std::max({1.0, std::abs(m2 * m2), std::abs(v.c3)});
    if (std::abs(r1) > 1e-12 * scale1 || std::abs(r2) > 1e-12 * scale2)
      throw std::invalid_argument("phi_factorized: inconsistent m1/m2");
  } else {
    if (!(r1 == T(0)) || !(r2 == T(0)))
      throw std::invalid_argument("phi_factorized: inconsistent m1/m2");
  }

  const T vroot[4] = {half * (T(1) - m1 + m2), half * (T(1) + m1 - m2),
                      half * (T(1) - m1 - m2), half * (T(1) + m1 + m2)};
  P prod = P::constant(T(1));
  StructureFunction<T> phi;
  for (const T& r : vroot) {
    prod = prod * P::linear(u - r, T(1));
    phi.roots.push_back(r - u);
  }
  const P q = P::linear(u - half, T(1));  // x + u - 1/2
  const P last2 = q * q * S - P::constant(Tq * Tq / T(16));
  phi.polynomial = prod * last2 * T(-3145728);
  phi.form = PhiForm::Factorized;
  if constexpr (std::is_same_v<T, double>) {
    if (S > 0.0) {
      const double shift = Tq / (4.0 * std::sqrt(S));
      phi.roots.push_back(0.5 + shift - u);
      phi.roots.push_back(0.5 - shift - u);
    }
  }
  return phi;
}

template <typename T>
StructureFunction<T> phi_set1(const T& m1, const T& m2, int p_level, const T& S) {
  using P = Poly<T>;
  const T pp1 = T(p_level + 1);
  StructureFunction<T> phi;
  phi.roots = {T(0), -m1, -m2, -(m1 + m2), pp1, -(pp1 + m1 + m2)};
  P prod = P::linear(T(0), T(1));                    // x
  prod = prod * P::linear(m1, T(1));                 // x + m1
  prod = prod * P::linear(m2, T(1));                 // x + m2
  prod = prod * P::linear(m1 + m2, T(1));            // x + m1 + m2
  prod = prod * P::linear(pp1, T(-1));               // 1 + p - x
  prod = prod * P::linear(pp1 + m1 + m2, T(1));      // 1 + p + x + m1 + m2
  phi.polynomial = prod * (T(3145728) * S);
  phi.form = PhiForm::Set1;
  return phi;
}

}  // namespace monopole::qalgebra
