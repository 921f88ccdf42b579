#ifndef KZDIRAC_UQG_HPP
#define KZDIRAC_UQG_HPP

#include <vector>

#include "kzdirac/matc.hpp"

namespace kzdirac {

/// q-integer [n]_q = (q^n - q^{-n}) / (q - q^{-1}); continuous at q = 1.
double q_number(double n, double q);

/// Irreducible U_q(su(2)) representation of spin j on the descending weight
/// basis: K = diag(q^m), E* = F, KEK^{-1} = qE, [E,F] = (K^2-K^{-2})/(q-q^{-1}).
struct QIrrep {
  int twice_j = 0;
  double q = 0.0;
  MatC e, f, k, kinv;
  std::size_t dim() const { return std::size_t(twice_j) + 1; }
};

/// q in (0,1]; q = 1 reproduces the classical spin generators (used by the
/// classical-limit oracles). Throws InvalidSpin / InvalidQ.
QIrrep q_irrep(int twice_j, double q);

/// Central scalar of C_q on spin j: 2j(j+1), shared with the classical Casimir.
double q_casimir_scalar(int twice_j);

enum class Generator { E, F, K };

/// Coproduct action on a pair: Delta(E) = E(x)K + K^{-1}(x)E, etc.
MatC coproduct(const QIrrep& a, const QIrrep& b, Generator g);
/// Opposite coproduct (legs swapped in the formula).
MatC coproduct_op(const QIrrep& a, const QIrrep& b, Generator g);

/// Quantum Clebsch-Gordan data for spin j1 (x) j2.
struct QCG {
  int twice_j1 = 0;
  int twice_j2 = 0;
  double q = 0.0;
  std::vector<int> twice_j;    // ascending
  std::vector<MatC> isometry;  // orthonormal columns, intertwiners
};

QCG q_cg(int twice_j1, int twice_j2, double q);

struct RMatrix {
  int twice_j1 = 0;
  int twice_j2 = 0;
  double q = 0.0;
  MatC matrix;
  double residual_coproduct = 0.0;      // defining property 1
  double residual_normalization = 0.0;  // highest (x) lowest eigenline
  double uniqueness_gap = -1.0;         // second-smallest singular value of the
                                        // homogeneous system (rank diagnostic)
};

struct RMatrixOptions {
  bool check_uniqueness = true;
  double null_tol = 1e-8;
  int refinement_steps = 3;
};

/// Builds (pi_{j1,q} (x) pi_{j2,q})(R) from the two defining properties:
/// intertwining Delta_q with Delta_q^op plus the q^{(lambda,mu)} normalization
/// on the highest (x) lowest weight line. Throws SingularSystem / NonUnique.
RMatrix r_matrix(int twice_j1, int twice_j2, double q, const RMatrixOptions& opts = {});

/// The truncated explicit series for a spin-1/2 second leg,
///   q^{2 log_q k (x) log_q k} (1 + (q - q^{-1}) (ke) (x) (fk^{-1})),
/// exact because f^n = 0 on spin 1/2 for n >= 2. Verification oracle only.
MatC r_matrix_series_spin_half(int twice_j1, double q);

struct Rc0Check {
  double absolute = 0.0;
  double relative = 0.0;
  double scale = 0.0;  // operator norm of the right-hand side
};

/// R*R = Delta_q(q^{C_q}) (q^{-C_q} (x) q^{-C_q}): both sides assembled
/// independently (left from r_matrix, right from q_cg block scalars).
Rc0Check rc0_check(int twice_j1, int twice_j2, double q);

/// Intertwiner C with pi(S(g)) = C pi(g)^T C^{-1} for the antipode
/// S(E) = -qE, S(F) = -q^{-1}F, S(K) = K^{-1}. Unique up to scale.
MatC antipode_intertwiner(int twice_j, double q);

}  // namespace kzdirac

#endif
