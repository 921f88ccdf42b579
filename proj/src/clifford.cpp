#include "kzdirac/clifford.hpp"

#include <cmath>
#include <string>

#include "kzdirac/errors.hpp"

namespace kzdirac {

namespace {

const cplx I_UNIT(0.0, 1.0);

MatC sigma_x() { return MatC(2, 2, {0, 1, 1, 0}); }
MatC sigma_y() { return MatC(2, 2, {0, cplx(0, -1), cplx(0, 1), 0}); }
MatC sigma_z() { return MatC(2, 2, {1, 0, 0, -1}); }

// Euclidean generators e_k on C^{2^m}, e_k^2 = +1, pairwise anticommuting:
//   e_{2k-1} = sz^(k-1) (x) sx (x) 1, e_{2k} = sz^(k-1) (x) sy (x) 1,
// and for odd n the last one is (-i)^m e_1 ... e_{2m}.
std::vector<MatC> euclidean_generators(std::size_t n) {
  const std::size_t m = n / 2;
  const std::size_t dim = std::size_t(1) << m;
  std::vector<MatC> e;
  for (std::size_t k = 1; k <= m; ++k) {
    MatC a = MatC::identity(1), b = MatC::identity(1);
    for (std::size_t i = 1; i < k; ++i) {
      a = kron(a, sigma_z());
      b = kron(b, sigma_z());
    }
    a = kron(a, sigma_x());
    b = kron(b, sigma_y());
    for (std::size_t i = k + 1; i <= m; ++i) {
      a = kron(a, MatC::identity(2));
      b = kron(b, MatC::identity(2));
    }
    e.push_back(a);
    e.push_back(b);
  }
  if (n % 2 == 1) {
    MatC p = MatC::identity(dim);
    for (const auto& ek : e) p = p * ek;
    cplx phase(1.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) phase *= cplx(0.0, -1.0);
    e.push_back(phase * p);
  }
  return e;
}

}  // namespace

std::vector<MatC> CliffordData::second_spin_gammas() const {
  if (!has_second_spin) throw OddDimension("second_spin_gammas: only defined for odd n");
  std::vector<MatC> out;
  for (const auto& g : gammas) out.push_back(cplx(-1.0, 0.0) * g);
  return out;
}

CliffordData build_clifford(std::size_t n) {
  if (n < 1) throw BadInput("build_clifford: n must be >= 1");
  CliffordData cl;
  cl.n = n;
  cl.spin_dim = std::size_t(1) << (n / 2);
  for (const auto& ek : euclidean_generators(n)) cl.gammas.push_back(I_UNIT * ek);
  cl.has_second_spin = (n % 2 == 1);
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    MatC p = MatC::identity(cl.spin_dim);
    for (const auto& g : cl.gammas) p = p * g;
    // chi = i^p gamma_1...gamma_n with the integer exponent chosen so that
    // chi* = chi and chi^2 = 1
    for (int exp = 0; exp < 4; ++exp) {
      cplx ph(1.0, 0.0);
      for (int i = 0; i < exp; ++i) ph *= I_UNIT;
      MatC chi = ph * p;
      if (chi.is_hermitian(1e-12) && distance_from_identity(chi * chi) < 1e-12) {
        cl.chirality_matrix = chi;
        cl.chirality_phase_exponent = exp;
        break;
      }
    }
    if (!cl.chirality_matrix)
      throw OddDimension("build_clifford: no chirality phase found for n = " + std::to_string(n));
    (void)m;
  }
  return cl;
}

MatC tilde_ad(const LieBasis& basis, const CliffordData& cl, const std::vector<double>& coeffs) {
  if (coeffs.size() != basis.dim_g) throw BasisMismatch("tilde_ad: coefficient count");
  if (cl.n != basis.dim_g) throw BasisMismatch("tilde_ad: Clifford dimension != dim_g");
  MatC out(cl.spin_dim, cl.spin_dim);
  for (std::size_t k = 0; k < basis.dim_g; ++k) {
    // gamma([x, x_k]) with x = sum_l coeffs[l] x_l
    MatC g(cl.spin_dim, cl.spin_dim);
    for (std::size_t m = 0; m < basis.dim_g; ++m) {
      double c = 0.0;
      for (std::size_t l = 0; l < basis.dim_g; ++l)
        c += coeffs[l] * basis.structure_constants[l][k][m];
      if (c != 0.0) g += c * cl.gammas[m];
    }
    out += cl.gammas[k] * g;
  }
  return 0.25 * out;
}

Rep tilde_ad_rep(const LieBasis& basis, const CliffordData& cl) {
  Rep rep;
  rep.basis_name = basis.name;
  rep.dim = cl.spin_dim;
  for (std::size_t l = 0; l < basis.dim_g; ++l) {
    std::vector<double> e(basis.dim_g, 0.0);
    e[l] = 1.0;
    rep.matrices.push_back(tilde_ad(basis, cl, e));
  }
  if (basis.name == "su2") rep.twice_spin = 1;
  return rep;
}

MatC chirality(const CliffordData& cl) {
  if (!cl.chirality_matrix) throw OddDimension("chirality: odd-dimensional Clifford algebra");
  return *cl.chirality_matrix;
}

MatC gamma_contract(const Rep& rep, const CliffordData& cl) {
  if (rep.matrices.size() != cl.gammas.size())
    throw BasisMismatch("gamma_contract: leg counts differ");
  MatC t(rep.dim * cl.spin_dim, rep.dim * cl.spin_dim);
  for (std::size_t k = 0; k < cl.gammas.size(); ++k)
    t -= kron(rep.matrices[k], cl.gammas[k]);
  return t;
}

MatC gamma_ad_contraction(const LieBasis& basis, const CliffordData& cl) {
  MatC out(cl.spin_dim, cl.spin_dim);
  for (std::size_t k = 0; k < basis.dim_g; ++k) {
    std::vector<double> e(basis.dim_g, 0.0);
    e[k] = 1.0;
    out += cl.gammas[k] * tilde_ad(basis, cl, e);
  }
  return out;
}

}  // namespace kzdirac
