#ifndef KZDIRAC_DIRAC_HPP
#define KZDIRAC_DIRAC_HPP

#include <string>
#include <vector>

#include "kzdirac/clifford.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/matc.hpp"
#include "kzdirac/pw.hpp"
#include "kzdirac/twist.hpp"

namespace kzdirac {

/// The Dirac operator restricted to one Peter-Weyl block V_j (x) Sp.
struct DiracBlock {
  int twice_j = 0;
  double q = 1.0;  // q = 1 means classical
  MatC matrix;
  std::string route;  // "classical" | "rstar-r-formula" | "twist-conjugation"
  double connection_coeff = 0.5;

  std::vector<double> spectrum() const;  // ascending eigenvalues
};

/// Generic Dirac element block (pi (x) s)(D) over any basis/Clifford pair:
///   sum_k pi(x_k) (x) gamma_k + coeff * 1 (x) sum_k gamma_k ad~(x_k).
MatC dirac_element_block(const Rep& rep, const LieBasis& basis, const CliffordData& cl,
                         double coeff);

/// su(2) classical block on V_j (x) Sp. coeff = 1/2 is the Levi-Civita
/// connection, 0 the reductive one, 1/3 the cubic operator.
DiracBlock dirac_block_classical(int twice_j, double coeff = 0.5);

/// Quantum block through q^{3/2} (pi_{j,q} (x) pi_{1/2,q})(R*R) and the
/// principal logarithm. Levi-Civita normalization only. Throws NonPositive.
DiracBlock dq_block_rr(int twice_j, double q);

/// Quantum block by conjugating the classical block with the twist pair
/// (j, 1/2). Result is phase-independent for su(2).
DiracBlock dq_block_twist(int twice_j, double q, const TwistFamily& tf);

/// Squared-eigenvalue identity residual on block j:
/// D_q^2 = (Delta-Casimir)/2 + C/2 + 3 |rho|^2 / 4 assembled from block
/// scalars on the quantum CG decomposition. q = 1 allowed.
double weitzenbock_check(int twice_j, double q);

/// The scalar (m + 1/2)^2 + (j + 1/2)^2 - 1/8 for mu = spin m inside block j,
/// asserted against the eigenvalue of D_q^2 on the spin-m subspace.
/// Throws InvalidBranch unless m = j +- 1/2.
double spectrum_formula_check(int twice_j, int twice_m, double q, double tol = 1e-8);

/// max over generators g of ||[D_q block, Delta_q(g)]|| (relative).
double equivariance_check(int twice_j, double q);

/// T = t13^gamma + t23^gamma - Phi*_ad t23^gamma Phi_ad on
/// pi_j (x) pi_aux (x) Sp with Phi the Drinfeld associator.
MatC t_operator(const Rep& pi_j, const Rep& pi_aux, double q);

struct CommBoundRow {
  int twice_jprime = 0;
  double commutator_norm = 0.0;
  double bound = 0.0;
};

/// Sweep of ||[(pi x pi_j' x gamma)(t23), (pi x pi_j' x ad~)(Phi_KZ)]||
/// against the uniform bound 6 ||(pi (x) gamma)(t)||.
std::vector<CommBoundRow> comm_bound_experiment(const Rep& pi, double q, int twice_jmax);

/// D_q blocks for all Peter-Weyl labels j <= J (R*R route).
std::vector<MatC> dq_blocks_upto(int twice_J, double q);

/// || [D_q, pi_r(a) (x) 1] || on the truncated GNS space, the norm taken on
/// the subspace of blocks j <= J - 1/2 (truncation hygiene). a is the
/// fundamental coefficient with row/column indices in {0,1}.
double regular_commutator_norm(const PWBasis& pw, const std::vector<MatC>& dq_blocks, int a_row,
                               int a_col);

/// Classical c(da) norm on the same truncated space (q = 1 basis), via
/// c(da) = sum_k a_(1)(x_k) pi_r(a_(0)) (x) s gamma(x_k).
double classical_cda_norm(const PWBasis& pw, int a_row, int a_col);

/// Difference || [D, pi_r(a) x 1] - c(da) || on the inner subspace at q = 1.
double classical_commutator_vs_cda(const PWBasis& pw, const std::vector<MatC>& d_blocks,
                                   int a_row, int a_col);

}  // namespace kzdirac

#endif
