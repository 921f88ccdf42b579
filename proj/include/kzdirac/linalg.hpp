#ifndef KZDIRAC_LINALG_HPP
#define KZDIRAC_LINALG_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "kzdirac/matc.hpp"

namespace kzdirac {

struct EigOptions {
  double hermiticity_tol = 1e-12;  // relative symmetry check
  double offdiag_tol = 1e-15;      // relative off-diagonal target
  int max_sweeps = 60;
};

struct OpNormOptions {
  double rayleigh_tol = 1e-12;
  int max_iterations = 10000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  MatC eigenvectors;                // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// m = V diag(lambda) V*, eigenvalues ascending. Throws NotHermitian.
EigResult eig_hermitian(const MatC& m, const EigOptions& opts = {});

/// f(m) for Hermitian m via the eigendecomposition.
MatC hermitian_function(const MatC& m, const std::function<cplx(double)>& f,
                        const EigOptions& opts = {});

/// exp(z*m) for Hermitian m. Unitary whenever Re(z*lambda) = 0 for all
/// eigenvalues, in particular for purely imaginary z.
MatC unitary_power(const MatC& m, cplx z, const EigOptions& opts = {});

/// Largest singular value via power iteration on m*m.
double op_norm(const MatC& m, const OpNormOptions& opts = {});

/// Largest singular value of an implicitly given operator (matvec form),
/// power iteration on A*A. apply/apply_dagger map vectors of size dim.
double op_norm_implicit(std::size_t dim,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply_dagger,
                        const OpNormOptions& opts = {});

/// Solve a x = b by LU with partial pivoting. Throws Singular.
std::vector<cplx> lu_solve(MatC a, std::vector<cplx> b);
MatC lu_solve(MatC a, const MatC& b);
MatC invert(const MatC& a);

/// exp(m) for a general square matrix by scaling-and-squaring Taylor.
MatC expm(const MatC& m);

/// Deterministic pseudo-random Hermitian matrix with entries O(1).
MatC random_hermitian(std::size_t n, std::uint64_t seed);
/// Deterministic pseudo-random complex vector of unit norm.
std::vector<cplx> random_unit_vector(std::size_t n, std::uint64_t seed);

}  // namespace kzdirac

#endif
