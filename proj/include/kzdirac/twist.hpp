#ifndef KZDIRAC_TWIST_HPP
#define KZDIRAC_TWIST_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kzdirac/liealg.hpp"
#include "kzdirac/matc.hpp"
#include "kzdirac/uqg.hpp"

namespace kzdirac {

enum class Side { Classical, Quantum };

/// Finite-dimensional stand-in for a two-leg universal element: per-irrep-pair
/// matrices plus the rule for evaluating on reducible legs by conjugating
/// block values with decomposition isometries (classical CG or quantum CG,
/// per the declared side).
struct UniversalElement {
  Side side = Side::Classical;
  double q = 1.0;
  std::map<std::pair<int, int>, MatC> values;  // (2j1, 2j2) -> matrix

  const MatC& value(int twice_j1, int twice_j2) const;

  /// Evaluation with the first leg the tensor product ja (x) jb:
  /// sum_m (W_m (x) 1) V(m, other) (W_m (x) 1)^*.
  MatC eval_split_first(int twice_ja, int twice_jb, int twice_other) const;
  /// Mirror: second leg is the tensor product.
  MatC eval_split_second(int twice_other, int twice_ja, int twice_jb) const;
};

/// Block-phase parameterized unitary twist family:
/// F_{j1,j2} = sum_m e^{i theta_{j1,j2;m}} W_q(m) W_c(m)^*.
/// Multiplicity-free su(2) tensor products make this the full gauge freedom.
struct TwistFamily {
  double q = 0.0;
  int twice_cutoff = 0;
  std::map<std::tuple<int, int, int>, double> phases;  // (2j1,2j2,2m) -> angle
  std::map<std::pair<int, int>, MatC> pair_matrix;

  const MatC& pair(int twice_j1, int twice_j2) const;
};

using PhaseAssignment = std::map<std::tuple<int, int, int>, double>;

/// Builds the family for all pairs with j1, j2 <= cutoff. Phases of pairs with
/// a trivial leg are forced to zero (counit condition). Throws MissingPhase
/// when a needed angle is absent.
TwistFamily build_twist(double q, int twice_cutoff, const PhaseAssignment& phases);
/// All-zero phases convenience.
TwistFamily build_twist_zero(double q, int twice_cutoff);

/// Residual of the intertwining condition
/// (pi (x) pi) Delta_q(g) = F [classical coproduct of phi(g)] F^* per
/// generator; construction-level guarantee, still asserted.
double check_condition_i(const TwistFamily& tf, int twice_j1, int twice_j2);

/// || R - F_21 q^t F^* || on the pair.
double check_condition_iii(const TwistFamily& tf, int twice_j1, int twice_j2);

/// Associator built from the twist on a triple:
/// Phi_F = (i (x) D)(F^*) (1 (x) F^*) (F (x) 1) (D (x) i)(F).
MatC associator_from_twist(const TwistFamily& tf, int twice_j1, int twice_j2, int twice_j3);

enum class FitTarget { ConditionIII, ConditionIV };

struct FitResult {
  TwistFamily family;
  double residual = 0.0;
  bool stalled = false;
  int evaluations = 0;
};

struct FitOptions {
  double objective_tol = 1e-10;
  int max_evaluations = 20000;
  std::vector<int> triple;  // twice-spins, required for ConditionIV
};

/// Least-squares phase fit (Nelder-Mead) against condition (iii) on a pair or
/// the Drinfeld associator distance on a triple. Reports the best family and
/// residual; never asserts the residual reaches zero.
FitResult fit_phases(double q, int twice_cutoff, FitTarget target, const FitOptions& opts = {});

/// Polar unitarization F = e (e^* e)^{-1/2}. Throws Singular.
MatC unitarize(const MatC& e);

}  // namespace kzdirac

#endif
