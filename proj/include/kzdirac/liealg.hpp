#ifndef KZDIRAC_LIEALG_HPP
#define KZDIRAC_LIEALG_HPP

#include <string>
#include <vector>

#include "kzdirac/matc.hpp"

namespace kzdirac {

/// Orthonormal basis of a compact real Lie algebra: skew-Hermitian matrices
/// x_k in a faithful defining representation with Trace(x_k x_l) = -delta_kl.
struct LieBasis {
  std::string name;
  std::size_t dim_g = 0;
  std::vector<MatC> matrices;

  /// Structure constants: [x_k, x_l] = sum_m c[k][l][m] x_m, real.
  std::vector<std::vector<std::vector<double>>> structure_constants;

  bool same_basis(const LieBasis& o) const { return name == o.name && dim_g == o.dim_g; }
};

/// Finite-dimensional unitary representation: images of each basis element.
struct Rep {
  std::string basis_name;
  std::size_t dim = 0;
  std::vector<MatC> matrices;  // skew-Hermitian, one per x_k
  int twice_spin = -1;         // su(2) highest-weight label when meaningful
};

/// Classical Clebsch-Gordan data for spin j1 (x) j2: per-block isometries
/// with orthonormal columns, Condon-Shortley phases.
struct CGDecomposition {
  int twice_j1 = 0;
  int twice_j2 = 0;
  std::vector<int> twice_j;    // ascending block labels |j1-j2| .. j1+j2
  std::vector<MatC> isometry;  // shape (2j1+1)(2j2+1) x (2j+1)
};

LieBasis su2_basis();
LieBasis su3_basis();

/// Validates all LieBasis invariants (skew-Hermitian, trace-orthonormal,
/// closure) and fills structure constants. Throws BasisMismatch on failure.
void validate_lie_basis(LieBasis& basis, double tol = 1e-12);

/// Spin-j irrep of su(2) in the su2_basis normalization, basis ordered by
/// descending weight. Throws InvalidSpin.
Rep spin_irrep(int twice_j);

/// Defining representation of a basis as a Rep.
Rep defining_rep(const LieBasis& basis);

/// Casimir -sum rho(x_k)^2 of a representation.
MatC casimir(const Rep& rep);

/// t = -sum x_k (x) x_k evaluated in rep1 (x) rep2. Throws BasisMismatch.
MatC t_element(const Rep& rep1, const Rep& rep2);

/// Tensor product with the coproduct action rho1(x)(x)1 + 1(x)rho2(x).
Rep rep_tensor(const Rep& rep1, const Rep& rep2);
Rep rep_direct_sum(const std::vector<Rep>& reps);

CGDecomposition cg_decompose(int twice_j1, int twice_j2);

/// Diagonal action of basis element k on an n-fold tensor product.
MatC diagonal_action(const std::vector<Rep>& legs, std::size_t k);

// JSON import/export (repo matrix format plus metadata).
LieBasis lie_basis_from_json(const std::string& path);
void lie_basis_to_json(const LieBasis& basis, const std::string& path);
Rep rep_from_json(const std::string& path);
void rep_to_json(const Rep& rep, const std::string& path);

}  // namespace kzdirac

#endif
