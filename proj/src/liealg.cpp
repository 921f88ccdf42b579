#include "kzdirac/liealg.hpp"

#include <cmath>
#include <string>

#include "kzdirac/errors.hpp"
#include "kzdirac/io.hpp"
#include "kzdirac/linalg.hpp"

namespace kzdirac {

namespace {

const cplx I_UNIT(0.0, 1.0);

std::vector<MatC> pauli() {
  MatC sx(2, 2, {0, 1, 1, 0});
  MatC sy(2, 2, {0, cplx(0, -1), cplx(0, 1), 0});
  MatC sz(2, 2, {1, 0, 0, -1});
  return {sx, sy, sz};
}

std::vector<MatC> gell_mann() {
  const double s3 = 1.0 / std::sqrt(3.0);
  std::vector<MatC> l(8, MatC(3, 3));
  l[0](0, 1) = 1; l[0](1, 0) = 1;
  l[1](0, 1) = cplx(0, -1); l[1](1, 0) = cplx(0, 1);
  l[2](0, 0) = 1; l[2](1, 1) = -1;
  l[3](0, 2) = 1; l[3](2, 0) = 1;
  l[4](0, 2) = cplx(0, -1); l[4](2, 0) = cplx(0, 1);
  l[5](1, 2) = 1; l[5](2, 1) = 1;
  l[6](1, 2) = cplx(0, -1); l[6](2, 1) = cplx(0, 1);
  l[7](0, 0) = s3; l[7](1, 1) = s3; l[7](2, 2) = -2.0 * s3;
  return l;
}

}  // namespace

void validate_lie_basis(LieBasis& basis, double tol) {
  const std::size_t n = basis.dim_g;
  if (basis.matrices.size() != n) throw BasisMismatch("matrix count != dim_g");
  for (const auto& x : basis.matrices)
    if (!x.is_skew_hermitian(tol)) throw BasisMismatch("basis element not skew-Hermitian");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      cplx tr(0.0, 0.0);
      const MatC p = basis.matrices[k] * basis.matrices[l];
      for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
      const double want = (k == l) ? -1.0 : 0.0;
      if (std::abs(tr - want) > 1e-10) throw BasisMismatch("trace form not -delta_kl");
    }

  basis.structure_constants.assign(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const MatC br = commutator(basis.matrices[k], basis.matrices[l]);
      MatC resid = br;
      for (std::size_t m = 0; m < n; ++m) {
        cplx tr(0.0, 0.0);
        const MatC p = basis.matrices[m] * br;
        for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
        const cplx coeff = -tr;  // (x_m, v) = -coeff in the orthonormal form
        if (std::abs(coeff.imag()) > tol * std::max(1.0, std::abs(coeff)))
          throw BasisMismatch("structure constant not real");
        basis.structure_constants[k][l][m] = coeff.real();
        resid -= coeff.real() * basis.matrices[m];
      }
      if (resid.frobenius_norm() > 1e-10) throw BasisMismatch("bracket not in span of basis");
    }
}

LieBasis su2_basis() {
  LieBasis b;
  b.name = "su2";
  b.dim_g = 3;
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& sig : pauli()) b.matrices.push_back((I_UNIT * s) * sig);
  validate_lie_basis(b);
  return b;
}

LieBasis su3_basis() {
  LieBasis b;
  b.name = "su3";
  b.dim_g = 8;
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& lam : gell_mann()) b.matrices.push_back((I_UNIT * s) * lam);
  validate_lie_basis(b);
  return b;
}

namespace {

// Standard Hermitian angular-momentum matrices, basis ordered by descending
// weight m = j, j-1, ..., -j.
struct SpinMatrices {
  MatC jplus, jminus, jz;
};

SpinMatrices angular_momentum(int twice_j) {
  const int d = twice_j + 1;
  SpinMatrices s{MatC(d, d), MatC(d, d), MatC(d, d)};
  const double j = 0.5 * twice_j;
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    s.jz(i, i) = m;
    if (i > 0) s.jplus(i - 1, i) = std::sqrt((j - m) * (j + m + 1.0));
    if (i < d - 1) s.jminus(i + 1, i) = std::sqrt((j + m) * (j - m + 1.0));
  }
  return s;
}

}  // namespace

Rep spin_irrep(int twice_j) {
  if (twice_j < 0) throw InvalidSpin("negative twice-spin " + std::to_string(twice_j));
  const SpinMatrices s = angular_momentum(twice_j);
  const int d = twice_j + 1;
  MatC jx(d, d), jy(d, d);
  jx = 0.5 * (s.jplus + s.jminus);
  jy = cplx(0.0, -0.5) * (s.jplus - s.jminus);
  Rep rep;
  rep.basis_name = "su2";
  rep.dim = d;
  rep.twice_spin = twice_j;
  const cplx f = I_UNIT * std::sqrt(2.0);
  rep.matrices = {f * jx, f * jy, f * s.jz};
  return rep;
}

Rep defining_rep(const LieBasis& basis) {
  Rep rep;
  rep.basis_name = basis.name;
  rep.dim = basis.matrices.at(0).rows();
  rep.matrices = basis.matrices;
  if (basis.name == "su2") rep.twice_spin = 1;
  return rep;
}

MatC casimir(const Rep& rep) {
  MatC c(rep.dim, rep.dim);
  for (const auto& x : rep.matrices) c -= x * x;
  return c;
}

MatC t_element(const Rep& rep1, const Rep& rep2) {
  if (rep1.basis_name != rep2.basis_name || rep1.matrices.size() != rep2.matrices.size())
    throw BasisMismatch("t_element: reps over different bases");
  MatC t(rep1.dim * rep2.dim, rep1.dim * rep2.dim);
  for (std::size_t k = 0; k < rep1.matrices.size(); ++k)
    t -= kron(rep1.matrices[k], rep2.matrices[k]);
  return t;
}

Rep rep_tensor(const Rep& rep1, const Rep& rep2) {
  if (rep1.basis_name != rep2.basis_name || rep1.matrices.size() != rep2.matrices.size())
    throw BasisMismatch("rep_tensor: reps over different bases");
  Rep rep;
  rep.basis_name = rep1.basis_name;
  rep.dim = rep1.dim * rep2.dim;
  const MatC i1 = MatC::identity(rep1.dim), i2 = MatC::identity(rep2.dim);
  for (std::size_t k = 0; k < rep1.matrices.size(); ++k)
    rep.matrices.push_back(kron(rep1.matrices[k], i2) + kron(i1, rep2.matrices[k]));
  return rep;
}

Rep rep_direct_sum(const std::vector<Rep>& reps) {
  if (reps.empty()) throw BasisMismatch("rep_direct_sum: empty list");
  Rep out;
  out.basis_name = reps[0].basis_name;
  out.dim = 0;
  for (const auto& r : reps) {
    if (r.basis_name != out.basis_name) throw BasisMismatch("rep_direct_sum: mixed bases");
    out.dim += r.dim;
  }
  const std::size_t ng = reps[0].matrices.size();
  for (std::size_t k = 0; k < ng; ++k) {
    MatC block(out.dim, out.dim);
    std::size_t off = 0;
    for (const auto& r : reps) {
      for (std::size_t a = 0; a < r.dim; ++a)
        for (std::size_t b = 0; b < r.dim; ++b) block(off + a, off + b) = r.matrices[k](a, b);
      off += r.dim;
    }
    out.matrices.push_back(std::move(block));
  }
  return out;
}

CGDecomposition cg_decompose(int twice_j1, int twice_j2) {
  if (twice_j1 < 0 || twice_j2 < 0) throw InvalidSpin("cg_decompose: negative spin");
  const SpinMatrices s1 = angular_momentum(twice_j1);
  const SpinMatrices s2 = angular_momentum(twice_j2);
  const int d1 = twice_j1 + 1, d2 = twice_j2 + 1;
  const MatC i1 = MatC::identity(d1), i2 = MatC::identity(d2);
  const MatC dplus = kron(s1.jplus, i2) + kron(i1, s2.jplus);
  const MatC dminus = kron(s1.jminus, i2) + kron(i1, s2.jminus);

  auto weight_of = [&](int flat) {
    const int a = flat / d2, b = flat % d2;
    return (twice_j1 - 2 * a) + (twice_j2 - 2 * b);  // 2m
  };

  CGDecomposition cg;
  cg.twice_j1 = twice_j1;
  cg.twice_j2 = twice_j2;
  for (int twice_m = std::abs(twice_j1 - twice_j2); twice_m <= twice_j1 + twice_j2;
       twice_m += 2) {
    // weight-(m) subspace indices, in lexicographic (flat) order
    std::vector<int> idx;
    for (int f = 0; f < d1 * d2; ++f)
      if (weight_of(f) == twice_m) idx.push_back(f);

    // kernel of D(J+) restricted to the weight subspace
    MatC a(std::size_t(d1 * d2), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < d1 * d2; ++r) a(r, c) = dplus(r, idx[c]);
    const MatC gram = a.dagger() * a;
    const EigResult eig = eig_hermitian(gram);
    if (idx.size() > 1 && eig.eigenvalues[1] < 1e-8)
      throw InvalidSpin("cg_decompose: degenerate highest-weight space");
    std::vector<cplx> hw(std::size_t(d1 * d2), cplx(0, 0));
    for (std::size_t c = 0; c < idx.size(); ++c) hw[idx[c]] = eig.eigenvectors(c, 0);
    // Condon-Shortley: positive coefficient on the lexicographically first
    // contributing basis vector
    const cplx lead = hw[idx[0]];
    if (std::abs(lead) < 1e-10) throw InvalidSpin("cg_decompose: vanishing lead coefficient");
    const cplx phase = std::abs(lead) / lead;
    for (auto& v : hw) v *= phase;

    const double m = 0.5 * twice_m;
    const int dm = twice_m + 1;
    MatC w(std::size_t(d1 * d2), std::size_t(dm));
    for (int r = 0; r < d1 * d2; ++r) w(r, 0) = hw[r];
    std::vector<cplx> cur = hw;
    double mm = m;
    for (int col = 1; col < dm; ++col) {
      std::vector<cplx> nxt = matvec(dminus, cur);
      const double nrm = std::sqrt((m + mm) * (m - mm + 1.0));
      for (auto& v : nxt) v /= nrm;
      for (int r = 0; r < d1 * d2; ++r) w(r, col) = nxt[r];
      cur = std::move(nxt);
      mm -= 1.0;
    }
    cg.twice_j.push_back(twice_m);
    cg.isometry.push_back(std::move(w));
  }
  return cg;
}

MatC diagonal_action(const std::vector<Rep>& legs, std::size_t k) {
  std::size_t total = 1;
  for (const auto& r : legs) total *= r.dim;
  MatC out(total, total);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    MatC term = MatC::identity(1);
    for (std::size_t l = 0; l < legs.size(); ++l)
      term = kron(term, l == i ? legs[l].matrices[k] : MatC::identity(legs[l].dim));
    out += term;
  }
  return out;
}

LieBasis lie_basis_from_json(const std::string& path) {
  const nlohmann::json j = read_json_file(path);
  LieBasis b;
  b.name = j.at("name").get<std::string>();
  b.dim_g = j.at("dim_g").get<std::size_t>();
  for (const auto& mj : j.at("matrices")) b.matrices.push_back(matrix_from_json(mj));
  validate_lie_basis(b);
  return b;
}

void lie_basis_to_json(const LieBasis& basis, const std::string& path) {
  nlohmann::ordered_json j;
  j["name"] = basis.name;
  j["dim_g"] = basis.dim_g;
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (const auto& m : basis.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  write_json_file(path, j);
}

Rep rep_from_json(const std::string& path) {
  const nlohmann::json j = read_json_file(path);
  Rep r;
  r.basis_name = j.at("name").get<std::string>();
  if (j.contains("twice_spin")) r.twice_spin = j.at("twice_spin").get<int>();
  for (const auto& mj : j.at("matrices")) r.matrices.push_back(matrix_from_json(mj));
  if (r.matrices.empty()) throw BadInput("rep json: no matrices");
  r.dim = r.matrices[0].rows();
  for (const auto& m : r.matrices) {
    if (m.rows() != r.dim || m.cols() != r.dim) throw BadInput("rep json: ragged matrices");
    if (!m.is_skew_hermitian(1e-10)) throw BadInput("rep json: matrix not skew-Hermitian");
  }
  return r;
}

void rep_to_json(const Rep& rep, const std::string& path) {
  nlohmann::ordered_json j;
  j["name"] = rep.basis_name;
  if (rep.twice_spin >= 0) j["twice_spin"] = rep.twice_spin;
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (const auto& m : rep.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  write_json_file(path, j);
}

}  // namespace kzdirac
