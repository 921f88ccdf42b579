#include "kzdirac/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kzdirac/errors.hpp"
#include "kzdirac/kz.hpp"
#include "kzdirac/linalg.hpp"
#include "kzdirac/uqg.hpp"

namespace kzdirac {

std::vector<double> DiracBlock::spectrum() const { return eig_hermitian(matrix).eigenvalues; }

MatC dirac_element_block(const Rep& rep, const LieBasis& basis, const CliffordData& cl,
                         double coeff) {
  MatC d = gamma_contract(rep, cl);        // -(pi x s gamma)(t) has opposite sign
  d = cplx(-1.0, 0.0) * d;                 // sum_k pi(x_k) (x) gamma_k
  const MatC conn = gamma_ad_contraction(basis, cl);
  d += coeff * kron(MatC::identity(rep.dim), conn);
  return d;
}

namespace {

const LieBasis& su2_cached() {
  static const LieBasis b = su2_basis();
  return b;
}
const CliffordData& cl3_cached() {
  static const CliffordData cl = build_clifford(3);
  return cl;
}

}  // namespace

DiracBlock dirac_block_classical(int twice_j, double coeff) {
  DiracBlock blk;
  blk.twice_j = twice_j;
  blk.q = 1.0;
  blk.route = "classical";
  blk.connection_coeff = coeff;
  blk.matrix = dirac_element_block(spin_irrep(twice_j), su2_cached(), cl3_cached(), coeff);
  return blk;
}

DiracBlock dq_block_rr(int twice_j, double q) {
  const RMatrix r = r_matrix(twice_j, 1, q);
  const MatC m = std::pow(q, 1.5) * (r.matrix.dagger() * r.matrix);  // q^{-sqrt2 D_q}
  if (!m.is_hermitian(1e-10)) throw NonPositive("dq_block_rr: q^{-sqrt2 D} not Hermitian");
  const EigResult eig = eig_hermitian(m);
  if (eig.eigenvalues.front() <= 0.0)
    throw NonPositive("dq_block_rr: q^{-sqrt2 D} not positive definite");
  DiracBlock blk;
  blk.twice_j = twice_j;
  blk.q = q;
  blk.route = "rstar-r-formula";
  blk.connection_coeff = 0.5;
  // D_q = -log_q(M)/sqrt2, principal logarithm on the positive spectrum
  MatC diag(m.rows(), m.rows());
  const double lq = std::log(q);
  for (std::size_t i = 0; i < m.rows(); ++i)
    diag(i, i) = -(std::log(eig.eigenvalues[i]) / lq) / std::sqrt(2.0);
  blk.matrix = eig.eigenvectors * diag * eig.eigenvectors.dagger();
  return blk;
}

DiracBlock dq_block_twist(int twice_j, double q, const TwistFamily& tf) {
  const MatC& f = tf.pair(twice_j, 1);
  const DiracBlock cls = dirac_block_classical(twice_j, 0.5);
  DiracBlock blk;
  blk.twice_j = twice_j;
  blk.q = q;
  blk.route = "twist-conjugation";
  blk.connection_coeff = 0.5;
  blk.matrix = f * cls.matrix * f.dagger();
  return blk;
}

double weitzenbock_check(int twice_j, double q) {
  const DiracBlock blk = (std::abs(q - 1.0) < 1e-15) ? dirac_block_classical(twice_j, 0.5)
                                                     : dq_block_rr(twice_j, q);
  const MatC lhs = blk.matrix * blk.matrix;
  // RHS: (i x ad~_q) Delta_q(C_q)/2 + C_q/2 + (3/4)|rho|^2 on the quantum CG
  // blocks of (j) x (1/2); all three terms are scalars per block.
  const QCG cg = q_cg(twice_j, 1, q);
  MatC rhs(lhs.rows(), lhs.cols());
  const double cj = q_casimir_scalar(twice_j);
  for (std::size_t i = 0; i < cg.twice_j.size(); ++i) {
    const double cm = q_casimir_scalar(cg.twice_j[i]);
    const double scalar = 0.5 * cm + 0.5 * cj + 0.75 * 0.5;  // |rho|^2 = 1/2
    rhs += scalar * (cg.isometry[i] * cg.isometry[i].dagger());
  }
  return diff_norm(lhs, rhs);
}

double spectrum_formula_check(int twice_j, int twice_m, double q, double tol) {
  if (twice_m != twice_j + 1 && twice_m != twice_j - 1)
    throw InvalidBranch("spectrum_formula_check: mu must be j +- 1/2");
  if (twice_m < 0) throw InvalidBranch("spectrum_formula_check: negative branch");
  const double j = 0.5 * twice_j, m = 0.5 * twice_m;
  const double scalar = (m + 0.5) * (m + 0.5) + (j + 0.5) * (j + 0.5) - 0.125;
  const DiracBlock blk = (std::abs(q - 1.0) < 1e-15) ? dirac_block_classical(twice_j, 0.5)
                                                     : dq_block_rr(twice_j, q);
  const MatC sq = blk.matrix * blk.matrix;
  const QCG cg = q_cg(twice_j, 1, q);
  for (std::size_t i = 0; i < cg.twice_j.size(); ++i) {
    if (cg.twice_j[i] != twice_m) continue;
    const MatC& w = cg.isometry[i];
    const MatC on_block = w.dagger() * sq * w;
    const double resid = diff_norm(on_block, scalar * MatC::identity(on_block.rows()));
    if (resid > tol)
      throw InvalidBranch("spectrum_formula_check: eigenvalue mismatch, residual " +
                          std::to_string(resid));
    return scalar;
  }
  throw InvalidBranch("spectrum_formula_check: branch not present in the block");
}

double equivariance_check(int twice_j, double q) {
  const DiracBlock blk = (std::abs(q - 1.0) < 1e-15) ? dirac_block_classical(twice_j, 0.5)
                                                     : dq_block_rr(twice_j, q);
  const QIrrep r1 = q_irrep(twice_j, q);
  const QIrrep rh = q_irrep(1, q);
  double worst = 0.0;
  for (Generator g : {Generator::E, Generator::F, Generator::K}) {
    const MatC act = coproduct(r1, rh, g);
    worst = std::max(worst, diff_norm(blk.matrix * act, act * blk.matrix) /
                                std::max(1.0, act.frobenius_norm()));
  }
  return worst;
}

MatC t_operator(const Rep& pi_j, const Rep& pi_aux, double q) {
  const LieBasis& basis = su2_cached();
  const CliffordData& cl = cl3_cached();
  if (pi_j.basis_name != basis.name || pi_aux.basis_name != basis.name)
    throw BasisMismatch("t_operator: su(2) legs required");
  const Rep ad = tilde_ad_rep(basis, cl);
  const std::size_t dim = pi_j.dim * pi_aux.dim * cl.spin_dim;
  MatC t13(dim, dim), t23(dim, dim);
  for (std::size_t k = 0; k < basis.dim_g; ++k) {
    t13 -= kron(pi_j.matrices[k], kron(MatC::identity(pi_aux.dim), cl.gammas[k]));
    t23 -= kron(MatC::identity(pi_j.dim), kron(pi_aux.matrices[k], cl.gammas[k]));
  }
  const MatC phi = drinfeld_associator(pi_j, pi_aux, ad, q).phi;
  return t13 + t23 - phi.dagger() * t23 * phi;
}

std::vector<CommBoundRow> comm_bound_experiment(const Rep& pi, double q, int twice_jmax) {
  const LieBasis& basis = su2_cached();
  const CliffordData& cl = cl3_cached();
  const Rep ad = tilde_ad_rep(basis, cl);
  const double bound = 6.0 * op_norm(gamma_contract(pi, cl));
  std::vector<CommBoundRow> rows;
  for (int tjp = 0; tjp <= twice_jmax; tjp += 1) {
    const Rep mid = spin_irrep(tjp);
    const std::size_t dim = pi.dim * mid.dim * cl.spin_dim;
    MatC t23(dim, dim);
    for (std::size_t k = 0; k < basis.dim_g; ++k)
      t23 -= kron(MatC::identity(pi.dim), kron(mid.matrices[k], cl.gammas[k]));
    const MatC phi = drinfeld_associator(pi, mid, ad, q).phi;
    CommBoundRow row;
    row.twice_jprime = tjp;
    row.commutator_norm = op_norm(commutator(t23, phi));
    row.bound = bound;
    rows.push_back(row);
  }
  return rows;
}

std::vector<MatC> dq_blocks_upto(int twice_J, double q) {
  std::vector<MatC> blocks;
  for (int tj = 0; tj <= twice_J; ++tj) {
    if (std::abs(q - 1.0) < 1e-15)
      blocks.push_back(dirac_block_classical(tj, 0.5).matrix);
    else
      blocks.push_back(dq_block_rr(tj, q).matrix);
  }
  return blocks;
}

namespace {

// [D, pi_r(a) x 1] v with the domain projected to blocks <= J - 1/2.
struct CommutatorOperator {
  const PWBasis& pw;
  const std::vector<MatC>& blocks;
  int a_row, a_col;
  std::size_t spin_dim;
  int inner_cut;

  std::vector<cplx> apply(const std::vector<cplx>& x) const {
    std::vector<cplx> v = x;
    project_blocks(pw, inner_cut, spin_dim, v);
    std::vector<cplx> av(v.size(), cplx(0, 0));
    apply_left_mult(pw, a_row, a_col, spin_dim, v, av);
    std::vector<cplx> dav = apply_block_diagonal(pw, blocks, spin_dim, av);
    std::vector<cplx> dv = apply_block_diagonal(pw, blocks, spin_dim, v);
    std::vector<cplx> adv(v.size(), cplx(0, 0));
    apply_left_mult(pw, a_row, a_col, spin_dim, dv, adv);
    for (std::size_t i = 0; i < dav.size(); ++i) dav[i] -= adv[i];
    return dav;
  }
  std::vector<cplx> apply_dagger(const std::vector<cplx>& x) const {
    // (K P)^* = P K^* with K^* = A^* D - D A^* (D self-adjoint)
    std::vector<cplx> dx = apply_block_diagonal(pw, blocks, spin_dim, x);
    std::vector<cplx> adx(x.size(), cplx(0, 0));
    apply_left_mult_dagger(pw, a_row, a_col, spin_dim, dx, adx);
    std::vector<cplx> ax(x.size(), cplx(0, 0));
    apply_left_mult_dagger(pw, a_row, a_col, spin_dim, x, ax);
    std::vector<cplx> dax = apply_block_diagonal(pw, blocks, spin_dim, ax);
    for (std::size_t i = 0; i < adx.size(); ++i) adx[i] -= dax[i];
    project_blocks(pw, inner_cut, spin_dim, adx);
    return adx;
  }
};

}  // namespace

double regular_commutator_norm(const PWBasis& pw, const std::vector<MatC>& dq_blocks, int a_row,
                               int a_col) {
  if (int(dq_blocks.size()) < pw.twice_J + 1)
    throw CutoffTooSmall("regular_commutator_norm: missing Dirac blocks");
  const std::size_t spin = 2;
  const CommutatorOperator op{pw, dq_blocks, a_row, a_col, spin, pw.twice_J - 1};
  const std::size_t dim = pw.scalar_dim * spin;
  return op_norm_implicit(
      dim, [&](const std::vector<cplx>& v) { return op.apply(v); },
      [&](const std::vector<cplx>& v) { return op.apply_dagger(v); });
}

namespace {

// c(da) = sum_k sum_p [rho_half(x_k)]_{p, a_col} pi_r(t^{1/2}_{a_row, p}) (x) gamma_k
struct CdaOperator {
  const PWBasis& pw;
  const CliffordData& cl;
  const Rep half;
  int a_row, a_col;
  int inner_cut;

  std::vector<cplx> apply_gamma(std::size_t k, const std::vector<cplx>& x) const {
    const std::size_t spin = cl.spin_dim;
    std::vector<cplx> y(x.size(), cplx(0, 0));
    for (std::size_t base = 0; base < x.size(); base += spin)
      for (std::size_t r = 0; r < spin; ++r) {
        cplx acc(0, 0);
        for (std::size_t c = 0; c < spin; ++c) acc += cl.gammas[k](r, c) * x[base + c];
        y[base + r] = acc;
      }
    return y;
  }

  std::vector<cplx> apply(const std::vector<cplx>& x, bool dagger) const {
    const std::size_t spin = cl.spin_dim;
    std::vector<cplx> v = x;
    if (!dagger) project_blocks(pw, inner_cut, spin, v);
    std::vector<cplx> out(x.size(), cplx(0, 0));
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<cplx> acc(x.size(), cplx(0, 0));
      for (int p = 0; p < 2; ++p) {
        const cplx coef = half.matrices[k](p, a_col);
        if (std::abs(coef) < 1e-16) continue;
        std::vector<cplx> tmp(x.size(), cplx(0, 0));
        if (!dagger) {
          apply_left_mult(pw, a_row, p, spin, v, tmp);
          for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] *= coef;
        } else {
          apply_left_mult_dagger(pw, a_row, p, spin, v, tmp);
          for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] *= std::conj(coef);
        }
        for (std::size_t i = 0; i < tmp.size(); ++i) acc[i] += tmp[i];
      }
      std::vector<cplx> g = apply_gamma(k, acc);
      if (dagger)
        for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];  // gamma_k^* = -gamma_k
      else
        for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
    }
    if (dagger) project_blocks(pw, inner_cut, spin, out);
    return out;
  }
};

}  // namespace

double classical_cda_norm(const PWBasis& pw, int a_row, int a_col) {
  const CdaOperator op{pw, cl3_cached(), spin_irrep(1), a_row, a_col, pw.twice_J - 1};
  const std::size_t dim = pw.scalar_dim * op.cl.spin_dim;
  return op_norm_implicit(
      dim, [&](const std::vector<cplx>& v) { return op.apply(v, false); },
      [&](const std::vector<cplx>& v) { return op.apply(v, true); });
}

double classical_commutator_vs_cda(const PWBasis& pw, const std::vector<MatC>& d_blocks,
                                   int a_row, int a_col) {
  const std::size_t spin = 2;
  const CommutatorOperator comm{pw, d_blocks, a_row, a_col, spin, pw.twice_J - 1};
  const CdaOperator cda{pw, cl3_cached(), spin_irrep(1), a_row, a_col, pw.twice_J - 1};
  const std::size_t dim = pw.scalar_dim * spin;
  auto apply = [&](const std::vector<cplx>& v) {
    std::vector<cplx> a = comm.apply(v);
    const std::vector<cplx> b = cda.apply(v, false);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto apply_dagger = [&](const std::vector<cplx>& v) {
    std::vector<cplx> a = comm.apply_dagger(v);
    const std::vector<cplx> b = cda.apply(v, true);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  return op_norm_implicit(dim, apply, apply_dagger);
}

}  // namespace kzdirac
