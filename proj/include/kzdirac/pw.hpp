#ifndef KZDIRAC_PW_HPP
#define KZDIRAC_PW_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "kzdirac/matc.hpp"

namespace kzdirac {

/// Truncated GNS space of the Haar state: blocks of matrix coefficients
/// t^j_{mn}, j <= J, with the Haar gram computed from the duality antipode
/// (diagonal, positive, depending only on the row index m) and sparse
/// left-multiplication operators for the four fundamental coefficients,
/// expressed in the orthonormalized basis.
struct PWBasis {
  int twice_J = 0;
  double q = 0.0;
  std::size_t scalar_dim = 0;            // sum over blocks of (2j+1)^2
  std::vector<std::size_t> offset;       // per twice_j, into the scalar index
  std::vector<std::vector<double>> row_weight;  // per twice_j, per m index

  struct Triplet {
    std::size_t r = 0, c = 0;
    cplx v;
  };
  /// pi_r(t^{1/2}_{ab}) triplets, index a*2+b, orthonormal basis.
  std::array<std::vector<Triplet>, 4> left_mult;

  double gram_offdiag_residual = 0.0;  // validation diagnostics
  double gram_factor_residual = 0.0;   // row-only dependence of the weights
  double star_rep_residual = 0.0;      // pi_r(a)^* = pi_r(a^*) on inner blocks

  std::size_t block_dim(int twice_j) const { return std::size_t(twice_j) + 1; }
  std::size_t scalar_index(int twice_j, std::size_t m, std::size_t n) const {
    return offset[twice_j] + m * block_dim(twice_j) + n;
  }
};

/// Builds the basis; J <= 6 (cost guard). Throws CutoffTooSmall for J < 1.
PWBasis pw_basis(int twice_J, double q);

/// y += (pi_r(t^{1/2}_{ab}) (x) 1_spin) x
void apply_left_mult(const PWBasis& pw, int a_row, int a_col, std::size_t spin_dim,
                     const std::vector<cplx>& x, std::vector<cplx>& y);
/// adjoint of the above
void apply_left_mult_dagger(const PWBasis& pw, int a_row, int a_col, std::size_t spin_dim,
                            const std::vector<cplx>& x, std::vector<cplx>& y);

/// y = (sum_j 1_{2j+1} (x) block_j) x, block_j of size (2j+1)*spin_dim.
std::vector<cplx> apply_block_diagonal(const PWBasis& pw, const std::vector<MatC>& blocks,
                                       std::size_t spin_dim, const std::vector<cplx>& x);

/// Projection onto blocks with twice_j <= twice_cut (in place).
void project_blocks(const PWBasis& pw, int twice_cut, std::size_t spin_dim, std::vector<cplx>& x);

}  // namespace kzdirac

#endif
