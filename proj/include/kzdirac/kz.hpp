#ifndef KZDIRAC_KZ_HPP
#define KZDIRAC_KZ_HPP

#include <string>
#include <vector>

#include "kzdirac/clifford.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"
#include "kzdirac/matc.hpp"

namespace kzdirac {

/// Two-singular-point ODE G'(x) = hbar (A/x + B/(x-1)) G(x) with self-adjoint
/// residues and hbar = log(q)/(pi i), purely imaginary for q in (0,1).
struct KZProblem {
  MatC a;
  MatC b;
  cplx hbar;
  double q = 0.0;

  KZProblem(MatC a_, MatC b_, double q_);
};

struct SeriesOptions {
  double tail_tol = 1e-13;
  int max_order = 400;
  double match_point = 0.5;
  std::vector<double> cross_check_points = {0.4, 0.6};
  double match_spread_tol = 1e-8;
};

struct LimitOptions {
  /// Endpoint regularization sequence; defaults to 2^-10 .. 2^-24.
  std::vector<double> a_sequence;
  int richardson_order = 2;
  double step_du = 0.02;  // log-variable step for the unitary integrator
  double cauchy_tol = 1e-7;

  LimitOptions();
};

struct AssociatorResult {
  MatC phi;
  std::string method;  // "series-matching" | "limit-extrapolation"
  double error_estimate = 0.0;
  double unitarity_residual = 0.0;
  double invariance_residual = -1.0;  // filled for representation triples
};

/// Regularized solution G_0(x): G_0(x) x^{-hbar A} extends holomorphically
/// with value 1 at x = 0. Power series plus Sylvester-type solves.
MatC regularized_solution_0(const KZProblem& p, double x, const SeriesOptions& opts = {});

/// Mirror solution around x = 1: G_1(1-x) x^{-hbar B} holomorphic, value 1.
MatC regularized_solution_1(const KZProblem& p, double x, const SeriesOptions& opts = {});

/// Connection matrix Phi with G_0(x) = G_1(x) Phi, by endpoint series and
/// midpoint matching; cross-validated at the configured points.
AssociatorResult connection_matrix(const KZProblem& p, const SeriesOptions& opts = {});

/// Independent route: Phi = lim_{a->0} a^{-hbar B} G_a(1-a) a^{hbar A} with a
/// unitary commutator-free integrator in logarithmic variables and Richardson
/// extrapolation over the a-sequence.
AssociatorResult connection_matrix_limit(const KZProblem& p, const LimitOptions& opts = {});

/// Drinfeld associator in a representation triple: Phi(t12, t23) with
/// invariance residual against the diagonal action.
AssociatorResult drinfeld_associator(const Rep& rep1, const Rep& rep2, const Rep& rep3, double q,
                                     const SeriesOptions& opts = {});

struct GaudinReport {
  double lemma1 = 0.0;                 // ||[(i x gamma)(t), (i x ad~)(t)]||
  double lemma2 = 0.0;                 // ||[(i x i x gamma)(t13), (i x i x ad~)(t12+t23)]||
  std::vector<cplx> lemma3_z;          // sampled z
  std::vector<double> lemma3 = {};     // norms for the z-family
};

/// The three commutation checks underlying the KZ/Clifford compatibility.
GaudinReport gaudin_checks(const Rep& rep1, const Rep& rep2, const LieBasis& basis,
                           const CliffordData& cl,
                           const std::vector<cplx>& zs = {cplx(0, 0), cplx(0.5, 0), cplx(1, 0),
                                                          cplx(2, 0), cplx(0, 1)});

}  // namespace kzdirac

#endif
