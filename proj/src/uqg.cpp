#include "kzdirac/uqg.hpp"

#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "kzdirac/errors.hpp"
#include "kzdirac/linalg.hpp"

namespace kzdirac {

double q_number(double n, double q) {
  if (q <= 0.0) throw InvalidQ("q_number: q must be positive");
  if (std::abs(q - 1.0) < 1e-13) return n;
  return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

QIrrep q_irrep(int twice_j, double q) {
  if (twice_j < 0) throw InvalidSpin("q_irrep: negative twice-spin");
  if (q <= 0.0 || q > 1.0) throw InvalidQ("q_irrep: q must lie in (0,1]");
  const int d = twice_j + 1;
  const double j = 0.5 * twice_j;
  QIrrep r;
  r.twice_j = twice_j;
  r.q = q;
  r.e = MatC(d, d);
  r.f = MatC(d, d);
  r.k = MatC(d, d);
  r.kinv = MatC(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    r.k(i, i) = std::pow(q, m);
    r.kinv(i, i) = std::pow(q, -m);
    if (i > 0) r.e(i - 1, i) = std::sqrt(q_number(j - m, q) * q_number(j + m + 1.0, q));
    if (i < d - 1) r.f(i + 1, i) = std::sqrt(q_number(j + m, q) * q_number(j - m + 1.0, q));
  }
  return r;
}

double q_casimir_scalar(int twice_j) {
  if (twice_j < 0) throw InvalidSpin("q_casimir_scalar: negative twice-spin");
  const double j = 0.5 * twice_j;
  return 2.0 * j * (j + 1.0);
}

MatC coproduct(const QIrrep& a, const QIrrep& b, Generator g) {
  switch (g) {
    case Generator::K:
      return kron(a.k, b.k);
    case Generator::E:
      return kron(a.e, b.k) + kron(a.kinv, b.e);
    case Generator::F:
      return kron(a.f, b.k) + kron(a.kinv, b.f);
  }
  throw BadInput("coproduct: unknown generator");
}

MatC coproduct_op(const QIrrep& a, const QIrrep& b, Generator g) {
  switch (g) {
    case Generator::K:
      return kron(a.k, b.k);
    case Generator::E:
      return kron(a.k, b.e) + kron(a.e, b.kinv);
    case Generator::F:
      return kron(a.k, b.f) + kron(a.f, b.kinv);
  }
  throw BadInput("coproduct_op: unknown generator");
}

QCG q_cg(int twice_j1, int twice_j2, double q) {
  const QIrrep r1 = q_irrep(twice_j1, q);
  const QIrrep r2 = q_irrep(twice_j2, q);
  const int d1 = twice_j1 + 1, d2 = twice_j2 + 1;
  const MatC de = coproduct(r1, r2, Generator::E);
  const MatC df = coproduct(r1, r2, Generator::F);

  auto twice_weight_of = [&](int flat) {
    const int a = flat / d2, b = flat % d2;
    return (twice_j1 - 2 * a) + (twice_j2 - 2 * b);
  };

  QCG cg;
  cg.twice_j1 = twice_j1;
  cg.twice_j2 = twice_j2;
  cg.q = q;
  for (int twice_m = std::abs(twice_j1 - twice_j2); twice_m <= twice_j1 + twice_j2;
       twice_m += 2) {
    std::vector<int> idx;
    for (int f = 0; f < d1 * d2; ++f)
      if (twice_weight_of(f) == twice_m) idx.push_back(f);

    MatC a(std::size_t(d1 * d2), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < d1 * d2; ++r) a(r, c) = de(r, idx[c]);
    const EigResult eig = eig_hermitian(a.dagger() * a);
    if (idx.size() > 1 && eig.eigenvalues[1] < 1e-8)
      throw DegenerateKernel("q_cg: highest-weight kernel not one-dimensional");
    std::vector<cplx> hw(std::size_t(d1 * d2), cplx(0, 0));
    for (std::size_t c = 0; c < idx.size(); ++c) hw[idx[c]] = eig.eigenvectors(c, 0);
    const cplx lead = hw[idx[0]];
    if (std::abs(lead) < 1e-10) throw DegenerateKernel("q_cg: vanishing lead coefficient");
    const cplx phase = std::abs(lead) / lead;
    for (auto& v : hw) v *= phase;

    const double m = 0.5 * twice_m;
    const int dm = twice_m + 1;
    MatC w(std::size_t(d1 * d2), std::size_t(dm));
    for (int r = 0; r < d1 * d2; ++r) w(r, 0) = hw[r];
    std::vector<cplx> cur = hw;
    double mm = m;
    for (int col = 1; col < dm; ++col) {
      std::vector<cplx> nxt = matvec(df, cur);
      const double nrm = std::sqrt(q_number(m + mm, q) * q_number(m - mm + 1.0, q));
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

namespace {

// Constraint matrix rows for X R - R Y = 0 acting on vec(R) (row-major).
void append_sylvester_rows(std::vector<std::vector<cplx>>& rows, const MatC& y, const MatC& x) {
  const std::size_t d = y.rows();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<cplx> row(d * d, cplx(0, 0));
      // (R y)_{ij} - (x R)_{ij}
      for (std::size_t k = 0; k < d; ++k) {
        row[i * d + k] += y(k, j);
        row[k * d + j] -= x(i, k);
      }
      rows.push_back(std::move(row));
    }
}

}  // namespace

RMatrix r_matrix(int twice_j1, int twice_j2, double q, const RMatrixOptions& opts) {
  const QIrrep r1 = q_irrep(twice_j1, q);
  const QIrrep r2 = q_irrep(twice_j2, q);
  const std::size_t d = r1.dim() * r2.dim();
  const std::size_t nvar = d * d;

  // R Delta(g) = Delta_op(g) R for the three generators, plus the requirement
  // that R fixes the line through (highest (x) lowest).
  std::vector<std::vector<cplx>> rows;
  for (Generator g : {Generator::E, Generator::F, Generator::K})
    append_sylvester_rows(rows, coproduct(r1, r2, g), coproduct_op(r1, r2, g));
  const std::size_t col = 0 * r2.dim() + (r2.dim() - 1);  // index of xi_h (x) xi'_l
  for (std::size_t b = 0; b < d; ++b) {
    if (b == col) continue;
    std::vector<cplx> row(nvar, cplx(0, 0));
    row[b * d + col] = 1.0;
    rows.push_back(std::move(row));
  }
  const double j1 = 0.5 * twice_j1, j2 = 0.5 * twice_j2;
  const double norm_value = std::pow(q, -2.0 * j1 * j2);

  // Column equilibration, then row normalization with pure-roundoff rows
  // dropped (they would amplify cancellation noise into fake constraints).
  std::vector<double> colnorm(nvar, 0.0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < nvar; ++c) colnorm[c] += std::norm(row[c]);
  for (auto& cn : colnorm) cn = std::max(std::sqrt(cn), 1e-300);

  std::vector<std::vector<cplx>> scaled;
  std::vector<double> rhs_scaled;
  double max_rownorm = 0.0;
  std::vector<double> rownorms;
  for (auto& row : rows) {
    double rn = 0.0;
    for (std::size_t c = 0; c < nvar; ++c) {
      row[c] /= colnorm[c];
      rn += std::norm(row[c]);
    }
    rn = std::sqrt(rn);
    rownorms.push_back(rn);
    max_rownorm = std::max(max_rownorm, rn);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rownorms[r] <= 1e-10 * max_rownorm) continue;  // noise row
    auto& row = rows[r];
    for (auto& v : row) v /= rownorms[r];
    scaled.push_back(std::move(row));
    rhs_scaled.push_back(0.0);
  }
  // normalization row: R[col, col] = q^{(lambda,mu)}
  {
    std::vector<cplx> row(nvar, cplx(0, 0));
    row[col * d + col] = 1.0 / colnorm[col * d + col];
    const double rn = std::abs(row[col * d + col]);
    row[col * d + col] /= rn;
    scaled.push_back(std::move(row));
    rhs_scaled.push_back(norm_value / rn);
  }

  // Normal equations with iterative refinement.
  const std::size_t m = scaled.size();
  MatC s(m, nvar);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < nvar; ++c) s(r, c) = scaled[r][c];
  const MatC sh = s.dagger();
  const MatC h = sh * s;
  std::vector<cplx> b(m, cplx(0, 0));
  for (std::size_t r = 0; r < m; ++r) b[r] = rhs_scaled[r];
  std::vector<cplx> g = matvec(sh, b);

  std::vector<cplx> x;
  try {
    x = lu_solve(h, g);
    for (int it = 0; it < opts.refinement_steps; ++it) {
      std::vector<cplx> resid = matvec(s, x);
      for (std::size_t r = 0; r < m; ++r) resid[r] = b[r] - resid[r];
      std::vector<cplx> corr = lu_solve(h, matvec(sh, resid));
      for (std::size_t c = 0; c < nvar; ++c) x[c] += corr[c];
    }
  } catch (const Singular&) {
    throw SingularSystem("r_matrix: defining system singular (convention error?)");
  }

  RMatrix out;
  out.twice_j1 = twice_j1;
  out.twice_j2 = twice_j2;
  out.q = q;
  out.matrix = MatC(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.matrix(r, c) = x[r * d + c] / colnorm[r * d + c];

  // residuals of the two defining properties
  double res1 = 0.0;
  for (Generator gg : {Generator::E, Generator::F, Generator::K}) {
    const MatC lhs = out.matrix * coproduct(r1, r2, gg);
    const MatC rhs = coproduct_op(r1, r2, gg) * out.matrix;
    res1 = std::max(res1, diff_norm(lhs, rhs) / std::max(1.0, lhs.frobenius_norm()));
  }
  out.residual_coproduct = res1;
  double res2 = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    const cplx want = (r == col) ? cplx(norm_value, 0.0) : cplx(0.0, 0.0);
    res2 = std::max(res2, std::abs(out.matrix(r, col) - want) / norm_value);
  }
  out.residual_normalization = res2;

  if (opts.check_uniqueness) {
    // rank diagnostic of the homogeneous system (without the normalization
    // row): its null space must be exactly one-dimensional
    MatC s0(m - 1, nvar);
    for (std::size_t r = 0; r + 1 < m; ++r)
      for (std::size_t c = 0; c < nvar; ++c) s0(r, c) = scaled[r][c];
    const EigResult eig = eig_hermitian(s0.dagger() * s0);
    if (eig.eigenvalues[0] > opts.null_tol)
      throw SingularSystem("r_matrix: no null direction (convention error?)");
    if (nvar > 1 && eig.eigenvalues[1] <= opts.null_tol)
      throw NonUnique("r_matrix: null space not one-dimensional");
    out.uniqueness_gap = std::sqrt(std::max(0.0, eig.eigenvalues[1]));
  }
  return out;
}

MatC r_matrix_series_spin_half(int twice_j1, double q) {
  const QIrrep r1 = q_irrep(twice_j1, q);
  const QIrrep r2 = q_irrep(1, q);
  const int d1 = twice_j1 + 1;
  const std::size_t d = std::size_t(d1) * 2;
  MatC weight(d, d);
  const double j1 = 0.5 * twice_j1;
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < 2; ++b) {
      const double m1 = j1 - a, m2 = 0.5 - b;
      weight(a * 2 + b, a * 2 + b) = std::pow(q, 2.0 * m1 * m2);
    }
  const MatC ke = r1.k * r1.e;
  const MatC fkinv = r2.f * r2.kinv;
  return weight * (MatC::identity(d) + (q - 1.0 / q) * kron(ke, fkinv));
}

Rc0Check rc0_check(int twice_j1, int twice_j2, double q) {
  const RMatrix r = r_matrix(twice_j1, twice_j2, q);
  const QCG cg = q_cg(twice_j1, twice_j2, q);
  const double c1 = q_casimir_scalar(twice_j1), c2 = q_casimir_scalar(twice_j2);
  MatC rhs(r.matrix.rows(), r.matrix.cols());
  for (std::size_t i = 0; i < cg.twice_j.size(); ++i) {
    const double cm = q_casimir_scalar(cg.twice_j[i]);
    rhs += std::pow(q, cm - c1 - c2) * (cg.isometry[i] * cg.isometry[i].dagger());
  }
  Rc0Check out;
  const MatC lhs = r.matrix.dagger() * r.matrix;
  out.absolute = op_norm(lhs - rhs);
  out.scale = op_norm(rhs);
  out.relative = out.absolute / std::max(1.0, out.scale);
  return out;
}

MatC antipode_intertwiner(int twice_j, double q) {
  const QIrrep r = q_irrep(twice_j, q);
  const std::size_t d = r.dim();
  if (d == 1) return MatC::identity(1);
  // C pi(g)^T = pi(S(g)) C for g in {E, F, K}
  std::vector<std::vector<cplx>> rows;
  std::vector<std::pair<MatC, MatC>> pairs;
  pairs.emplace_back(cplx(-q, 0.0) * r.e, r.e.transpose());
  pairs.emplace_back(cplx(-1.0 / q, 0.0) * r.f, r.f.transpose());
  pairs.emplace_back(r.kinv, r.k.transpose());
  for (const auto& [target, transposed] : pairs) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<cplx> row(d * d, cplx(0, 0));
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] += transposed(k, j);
          row[k * d + j] -= target(i, k);
        }
        rows.push_back(std::move(row));
      }
  }
  MatC s(rows.size(), d * d);
  for (std::size_t rr = 0; rr < rows.size(); ++rr)
    for (std::size_t c = 0; c < d * d; ++c) s(rr, c) = rows[rr][c];
  const EigResult eig = eig_hermitian(s.dagger() * s);
  if (d * d > 1 && eig.eigenvalues[1] < 1e-8)
    throw NonUnique("antipode_intertwiner: contragredient not multiplicity-free");
  if (eig.eigenvalues[0] > 1e-8)
    throw SingularSystem("antipode_intertwiner: no intertwiner found");
  MatC c(d, d);
  for (std::size_t r2 = 0; r2 < d; ++r2)
    for (std::size_t c2 = 0; c2 < d; ++c2) c(r2, c2) = eig.eigenvectors(r2 * d + c2, 0);
  // deterministic phase: first nonzero entry real positive
  for (std::size_t i = 0; i < d * d; ++i) {
    const cplx v = c.data()[i];
    if (std::abs(v) > 1e-10) {
      c *= std::abs(v) / v;
      break;
    }
  }
  return c;
}

}  // namespace kzdirac
