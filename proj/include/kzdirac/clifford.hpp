#ifndef KZDIRAC_CLIFFORD_HPP
#define KZDIRAC_CLIFFORD_HPP

#include <optional>
#include <vector>

#include "kzdirac/liealg.hpp"
#include "kzdirac/matc.hpp"

namespace kzdirac {

/// Complex Clifford algebra over an orthonormal basis with (x_k, x_k) = -1:
/// gammas[k] = s(gamma(x_k)) on the spin module, gamma(x_k)^2 = -1,
/// gamma(x_k)* = -gamma(x_k). For odd n the inequivalent second irreducible
/// representation is gamma(x_k) -> -gamma(x_k).
struct CliffordData {
  std::size_t n = 0;
  std::size_t spin_dim = 0;
  std::vector<MatC> gammas;
  bool has_second_spin = false;          // odd n
  std::optional<MatC> chirality_matrix;  // even n
  int chirality_phase_exponent = 0;      // p in chi = i^p gamma_1 ... gamma_n

  /// The inequivalent second irreducible representation for odd n (all gamma
  /// signs flipped; equal to the first on the even subalgebra).
  std::vector<MatC> second_spin_gammas() const;
};

CliffordData build_clifford(std::size_t n);

/// s(ad~(x)) = 1/4 sum_k gamma(x_k) gamma([x, x_k]) for x given by real
/// coefficients in the orthonormal basis.
MatC tilde_ad(const LieBasis& basis, const CliffordData& cl, const std::vector<double>& coeffs);

/// The map s o ad~ restricted to the basis, packaged as a Rep (a unitary
/// representation on the spin module, usable as a tensor leg).
Rep tilde_ad_rep(const LieBasis& basis, const CliffordData& cl);

/// Chirality for even n: self-adjoint, squares to 1, anticommutes with every
/// gamma. Throws OddDimension.
MatC chirality(const CliffordData& cl);

/// (pi (x) s gamma)(t) = -sum_k pi(x_k) (x) gammas[k]. Hermitian.
MatC gamma_contract(const Rep& rep, const CliffordData& cl);

/// sum_k gamma(x_k) ad~(x_k) on the spin module (the connection term of the
/// Dirac element before scaling).
MatC gamma_ad_contraction(const LieBasis& basis, const CliffordData& cl);

}  // namespace kzdirac

#endif
