#include "kzdirac/kz.hpp"

#include <algorithm>
#include <cmath>

#include "kzdirac/errors.hpp"

namespace kzdirac {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

KZProblem::KZProblem(MatC a_, MatC b_, double q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
  if (q <= 0.0 || q >= 1.0) throw InvalidQ("KZProblem: q must lie in (0,1)");
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw ShapeMismatch("KZProblem: A, B must be square of equal size");
  if (!a.is_hermitian(1e-12) || !b.is_hermitian(1e-12))
    throw NotHermitian("KZProblem: residues must be self-adjoint");
  hbar = std::log(q) / (kPi * cplx(0.0, 1.0));
}

namespace {

// Holomorphic factor H with G_0(x) = H(x) x^{hbar A}. Recurrence
//   n H_n - hbar [A, H_n] = -hbar B S_{n-1},  S_n = sum_{k<=n} H_k,
// solved in the eigenbasis of A where (n - hbar ad A) is diagonal.
MatC holomorphic_factor(const MatC& a, const MatC& b, cplx hbar, double x,
                        const SeriesOptions& opts) {
  const std::size_t d = a.rows();
  const EigResult ea = eig_hermitian(a);
  const MatC& v = ea.eigenvectors;
  const MatC bt = v.dagger() * b * v;

  MatC sum = MatC::identity(d);   // S_{n-1}
  MatC acc = MatC::identity(d);   // partial sum of H_n x^n
  double xn = 1.0;
  int consecutive_ok = 0;
  bool converged = false;
  for (int n = 1; n <= opts.max_order; ++n) {
    MatC hn = cplx(-1.0, 0.0) * hbar * (bt * sum);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        hn(r, c) /= (double(n) - hbar * (ea.eigenvalues[r] - ea.eigenvalues[c]));
    sum += hn;
    xn *= x;
    MatC term = xn * hn;
    acc += term;
    const double tail = term.frobenius_norm() / (1.0 - x);
    if (tail < opts.tail_tol) {
      if (++consecutive_ok >= 3) {
        converged = true;
        break;
      }
    } else {
      consecutive_ok = 0;
    }
  }
  if (!converged)
    throw SeriesDivergence("holomorphic_factor: no convergence at x = " + std::to_string(x));
  // back to the original basis, then multiply the regularizing power
  MatC xa(d, d);
  for (std::size_t i = 0; i < d; ++i) xa(i, i) = std::exp(hbar * std::log(x) * ea.eigenvalues[i]);
  return (v * acc * v.dagger()) * (v * xa * v.dagger());
}

}  // namespace

MatC regularized_solution_0(const KZProblem& p, double x, const SeriesOptions& opts) {
  if (x <= 0.0 || x >= 1.0) throw BadInput("regularized_solution_0: x must be in (0,1)");
  return holomorphic_factor(p.a, p.b, p.hbar, x, opts);
}

MatC regularized_solution_1(const KZProblem& p, double x, const SeriesOptions& opts) {
  if (x <= 0.0 || x >= 1.0) throw BadInput("regularized_solution_1: x must be in (0,1)");
  // mirror: y = 1-x swaps the roles of A and B
  return holomorphic_factor(p.b, p.a, p.hbar, 1.0 - x, opts);
}

AssociatorResult connection_matrix(const KZProblem& p, const SeriesOptions& opts) {
  auto phi_at = [&](double x) {
    const MatC g0 = regularized_solution_0(p, x, opts);
    const MatC g1 = regularized_solution_1(p, x, opts);
    return g1.dagger() * g0;  // G_1 is unitary
  };
  AssociatorResult res;
  res.method = "series-matching";
  res.phi = phi_at(opts.match_point);
  double spread = 0.0;
  for (double x : opts.cross_check_points) spread = std::max(spread, diff_norm(res.phi, phi_at(x)));
  res.error_estimate = spread;
  if (spread > opts.match_spread_tol)
    throw MatchPointInconsistency("connection_matrix: spread " + std::to_string(spread));
  res.unitarity_residual = distance_from_identity(res.phi.dagger() * res.phi);
  return res;
}

LimitOptions::LimitOptions() {
  for (int k = 10; k <= 24; ++k) a_sequence.push_back(std::pow(2.0, -k));
}

namespace {

// CF4 commutator-free step for G' = C(t) G on [t, t+h]: two exponentials with
// Gauss nodes; the later factor weights the later node.
void cf4_step(MatC& g, const std::function<MatC(double)>& coef, double t, double h) {
  const double root3 = std::sqrt(3.0);
  const double c1 = 0.5 - root3 / 6.0, c2 = 0.5 + root3 / 6.0;
  const double a1 = 0.25 + root3 / 6.0, a2 = 0.25 - root3 / 6.0;
  const MatC f1 = coef(t + c1 * h), f2 = coef(t + c2 * h);
  g = expm(h * (a2 * f1 + a1 * f2)) * (expm(h * (a1 * f1 + a2 * f2)) * g);
}

}  // namespace

AssociatorResult connection_matrix_limit(const KZProblem& p, const LimitOptions& opts) {
  if (opts.a_sequence.size() < 4)
    throw BadInput("connection_matrix_limit: need at least 4 points in the a-sequence");
  std::vector<double> as = opts.a_sequence;
  std::sort(as.begin(), as.end());  // ascending; as.front() is the deepest a
  const std::size_t d = p.a.rows();
  const cplx hbar = p.hbar;
  const MatC& A = p.a;
  const MatC& B = p.b;

  // One trajectory from amin to 1-amin serves the whole sequence:
  // G_a(x) = G(x) G(a)^{-1} with G := G_{amin}.
  // Left piece in u = ln x: dG/du = hbar (A + B x/(x-1)) G.
  auto coef_left = [&](double u) {
    const double x = std::exp(u);
    return hbar * (A + (x / (x - 1.0)) * B);
  };
  // Right piece in v = ln(1-x), integrated downward:
  // dG/dv = hbar (B - A (1-x)/x) G.
  auto coef_right = [&](double v) {
    const double y = std::exp(v);
    return hbar * (B - (y / (1.0 - y)) * A);
  };

  std::vector<MatC> g_at_a(as.size());   // G(a_k)
  std::vector<MatC> g_at_1a(as.size());  // G(1 - a_k)
  MatC g = MatC::identity(d);
  g_at_a[0] = g;
  const double uhalf = std::log(0.5);
  {
    std::vector<double> stops;
    for (double a : as) stops.push_back(std::log(a));
    stops.push_back(uhalf);
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      const double u0 = stops[s], u1 = stops[s + 1];
      const int n = std::max(2, int(std::ceil((u1 - u0) / opts.step_du)));
      const double h = (u1 - u0) / n;
      for (int k = 0; k < n; ++k) cf4_step(g, coef_left, u0 + k * h, h);
      if (s + 1 < as.size()) g_at_a[s + 1] = g;
    }
  }
  {
    std::vector<double> stops;
    stops.push_back(uhalf);
    for (std::size_t i = as.size(); i-- > 0;) stops.push_back(std::log(as[i]));
    std::size_t next = as.size();
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      const double v0 = stops[s], v1 = stops[s + 1];
      const int n = std::max(2, int(std::ceil((v0 - v1) / opts.step_du)));
      const double h = (v1 - v0) / n;
      for (int k = 0; k < n; ++k) cf4_step(g, coef_right, v0 + k * h, h);
      g_at_1a[--next] = g;
    }
  }

  const EigResult ea = eig_hermitian(A);
  const EigResult eb = eig_hermitian(B);
  auto power = [&](const EigResult& e, cplx z) {
    MatC dg(d, d);
    for (std::size_t i = 0; i < d; ++i) dg(i, i) = std::exp(z * e.eigenvalues[i]);
    return e.eigenvectors * dg * e.eigenvectors.dagger();
  };

  // Phi_a in decreasing a (increasing k)
  std::vector<MatC> phis;
  for (std::size_t i = as.size(); i-- > 0;) {
    const double a = as[i];
    const double la = std::log(a);
    phis.push_back(power(eb, -hbar * la) * g_at_1a[i] * g_at_a[i].dagger() * power(ea, hbar * la));
  }

  // Richardson extrapolation assuming a halves between successive entries.
  std::vector<MatC> cur = phis;
  for (int level = 1; level <= opts.richardson_order && cur.size() >= 2; ++level) {
    const double w = std::pow(2.0, level);
    std::vector<MatC> nxt;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      nxt.push_back((1.0 / (w - 1.0)) * (w * cur[i + 1] - cur[i]));
    cur = std::move(nxt);
  }
  if (cur.size() < 2) throw BadInput("connection_matrix_limit: sequence too short");

  AssociatorResult res;
  res.method = "limit-extrapolation";
  res.phi = cur.back();
  res.error_estimate = diff_norm(cur[cur.size() - 1], cur[cur.size() - 2]);
  res.unitarity_residual = distance_from_identity(res.phi.dagger() * res.phi);
  if (res.error_estimate > opts.cauchy_tol)
    throw NoConvergence("connection_matrix_limit: extrapolated sequence not Cauchy, spread " +
                        std::to_string(res.error_estimate));
  return res;
}

AssociatorResult drinfeld_associator(const Rep& rep1, const Rep& rep2, const Rep& rep3, double q,
                                     const SeriesOptions& opts) {
  if (rep1.basis_name != rep2.basis_name || rep2.basis_name != rep3.basis_name)
    throw BasisMismatch("drinfeld_associator: mixed bases");
  const MatC t12 = kron(t_element(rep1, rep2), MatC::identity(rep3.dim));
  const MatC t23 = kron(MatC::identity(rep1.dim), t_element(rep2, rep3));
  const KZProblem p(t12, t23, q);
  AssociatorResult res = connection_matrix(p, opts);
  double inv = 0.0;
  const std::vector<Rep> legs = {rep1, rep2, rep3};
  for (std::size_t k = 0; k < rep1.matrices.size(); ++k)
    inv = std::max(inv, commutator(res.phi, diagonal_action(legs, k)).frobenius_norm());
  res.invariance_residual = inv;
  return res;
}

GaudinReport gaudin_checks(const Rep& rep1, const Rep& rep2, const LieBasis& basis,
                           const CliffordData& cl, const std::vector<cplx>& zs) {
  if (rep1.basis_name != basis.name || rep2.basis_name != basis.name)
    throw BasisMismatch("gaudin_checks: reps not over the given basis");
  const Rep ad = tilde_ad_rep(basis, cl);
  const std::size_t ng = basis.dim_g;

  GaudinReport rep;

  // Lemma 1 on rep1 (x) Sp: [(i x gamma)(t), (i x ad~)(t)] = 0
  {
    MatC tg(rep1.dim * cl.spin_dim, rep1.dim * cl.spin_dim);
    MatC ta(rep1.dim * cl.spin_dim, rep1.dim * cl.spin_dim);
    for (std::size_t k = 0; k < ng; ++k) {
      tg -= kron(rep1.matrices[k], cl.gammas[k]);
      ta -= kron(rep1.matrices[k], ad.matrices[k]);
    }
    rep.lemma1 = op_norm(commutator(tg, ta));
  }

  // Legs rep1 (x) rep2 (x) Sp
  const std::size_t dim = rep1.dim * rep2.dim * cl.spin_dim;
  auto leg13 = [&](const std::vector<MatC>& third) {
    MatC out(dim, dim);
    for (std::size_t k = 0; k < ng; ++k)
      out -= kron(rep1.matrices[k], kron(MatC::identity(rep2.dim), third[k]));
    return out;
  };
  auto leg23 = [&](const std::vector<MatC>& third) {
    MatC out(dim, dim);
    for (std::size_t k = 0; k < ng; ++k)
      out -= kron(MatC::identity(rep1.dim), kron(rep2.matrices[k], third[k]));
    return out;
  };
  const MatC t12 = kron(t_element(rep1, rep2), MatC::identity(cl.spin_dim));
  const MatC t13g = leg13(cl.gammas), t23g = leg23(cl.gammas);
  const MatC t13a = leg13(ad.matrices), t23a = leg23(ad.matrices);

  rep.lemma2 = op_norm(commutator(t13g, t12 + t23a));

  for (const cplx& z : zs) {
    const MatC left = (cplx(1.0, 0.0) - z) * t13g + t23g;
    const MatC right = (z - cplx(1.0, 0.0)) * t12 + z * t23a;
    rep.lemma3_z.push_back(z);
    rep.lemma3.push_back(op_norm(commutator(left, right)));
  }
  return rep;
}

}  // namespace kzdirac
