#include "kzdirac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kzdirac/errors.hpp"

namespace kzdirac {

namespace {

// One-sided complex Jacobi rotation annihilating a(p,q).
// Unitary J differing from identity in rows/cols p,q:
//   [c, s; -conj(s), c] with c real >= 0.
struct Rotation {
  double c;
  cplx s;
};

Rotation make_rotation(const cplx& app, const cplx& aqq, const cplx& apq) {
  // 2x2 Hermitian block [[app, apq], [conj(apq), aqq]], app/aqq real.
  const double theta_den = 2.0 * std::abs(apq);
  if (theta_den == 0.0) return {1.0, cplx(0.0, 0.0)};
  const double delta = aqq.real() - app.real();
  const double t2t = theta_den / delta;  // tan(2 theta), may be inf
  double t;                              // tan(theta)
  if (delta == 0.0) {
    t = 1.0;
  } else {
    t = std::copysign(1.0, t2t) / (std::abs(1.0 / t2t) + std::sqrt(1.0 + 1.0 / (t2t * t2t)));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx phase = apq / std::abs(apq);
  return {c, t * c * phase};
}

}  // namespace

EigResult eig_hermitian(const MatC& m, const EigOptions& opts) {
  if (m.rows() != m.cols()) throw NotHermitian("matrix not square");
  if (!m.is_hermitian(opts.hermiticity_tol)) throw NotHermitian("symmetry check failed");
  const std::size_t n = m.rows();

  // Work on the Hermitian part to kill the O(tol) asymmetry.
  MatC a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  MatC v = MatC::identity(n);
  const double scale = std::max(a.max_abs(), 1e-300);

  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= opts.offdiag_tol * scale * double(n)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-300) continue;
        const Rotation rot = make_rotation(a(p, p), a(q, q), a(p, q));
        const double c = rot.c;
        const cplx s = rot.s;
        // a <- J* a J with J acting on columns p,q
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        a(p, q) = cplx(0.0, 0.0);
        a(q, p) = cplx(0.0, 0.0);
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = MatC(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    res.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) res.eigenvectors(r, c) = v(r, order[c]);
  }
  return res;
}

MatC hermitian_function(const MatC& m, const std::function<cplx(double)>& f,
                        const EigOptions& opts) {
  const EigResult e = eig_hermitian(m, opts);
  const std::size_t n = m.rows();
  MatC fd(n, n);
  for (std::size_t i = 0; i < n; ++i) fd(i, i) = f(e.eigenvalues[i]);
  return e.eigenvectors * fd * e.eigenvectors.dagger();
}

MatC unitary_power(const MatC& m, cplx z, const EigOptions& opts) {
  return hermitian_function(m, [z](double lam) { return std::exp(z * lam); }, opts);
}

namespace {

double power_iteration(std::size_t dim,
                       const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply_gram,
                       const OpNormOptions& opts) {
  if (dim == 0) return 0.0;
  std::vector<cplx> v = random_unit_vector(dim, opts.seed);
  double lambda = 0.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    std::vector<cplx> w = apply_gram(v);
    double nw = 0.0;
    cplx ray(0.0, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      nw += std::norm(w[i]);
      ray += std::conj(v[i]) * w[i];
    }
    nw = std::sqrt(nw);
    const double lam = ray.real();
    if (nw == 0.0) return 0.0;
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / nw;
    if (it > 0 && std::abs(lam - lambda) <= opts.rayleigh_tol * std::max(1.0, std::abs(lam))) {
      lambda = lam;
      break;
    }
    lambda = lam;
  }
  return std::sqrt(std::max(0.0, lambda));
}

}  // namespace

double op_norm(const MatC& m, const OpNormOptions& opts) {
  return op_norm_implicit(
      m.cols(), [&](const std::vector<cplx>& v) { return matvec(m, v); },
      [&](const std::vector<cplx>& v) { return matvec_dagger(m, v); }, opts);
}

double op_norm_implicit(std::size_t dim,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply_dagger,
                        const OpNormOptions& opts) {
  return power_iteration(
      dim, [&](const std::vector<cplx>& v) { return apply_dagger(apply(v)); }, opts);
}

std::vector<cplx> lu_solve(MatC a, std::vector<cplx> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ShapeMismatch("lu_solve");
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        p = r;
      }
    if (best < 1e-300) throw Singular("lu_solve: zero pivot");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(b[k], b[p]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = a(r, k) / a(k, k);
      if (f == cplx(0.0, 0.0)) continue;
      a(r, k) = f;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    cplx s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= a(k, c) * b[c];
    b[k] = s / a(k, k);
  }
  return b;
}

MatC lu_solve(MatC a, const MatC& b) {
  MatC x(b.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<cplx> col(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r) col[r] = b(r, c);
    std::vector<cplx> sol = lu_solve(a, std::move(col));
    for (std::size_t r = 0; r < b.rows(); ++r) x(r, c) = sol[r];
  }
  return x;
}

MatC invert(const MatC& a) { return lu_solve(a, MatC::identity(a.rows())); }

MatC expm(const MatC& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("expm");
  const std::size_t n = m.rows();
  double nrm = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::abs(m(r, c));
    nrm = std::max(nrm, s);
  }
  int sq = 0;
  if (nrm > 0.25) sq = int(std::ceil(std::log2(nrm / 0.25)));
  MatC x = (1.0 / std::pow(2.0, sq)) * m;
  MatC e = MatC::identity(n);
  MatC term = MatC::identity(n);
  for (int k = 1; k <= 14; ++k) {
    term = (1.0 / double(k)) * (term * x);
    e += term;
  }
  for (int s = 0; s < sq; ++s) e = e * e;
  return e;
}

namespace {
// splitmix64: deterministic across platforms
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
double uniform01(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;
}
}  // namespace

MatC random_hermitian(std::size_t n, std::uint64_t seed) {
  std::uint64_t st = seed;
  MatC g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      g(r, c) = cplx(2.0 * uniform01(st) - 1.0, 2.0 * uniform01(st) - 1.0);
  MatC h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

std::vector<cplx> random_unit_vector(std::size_t n, std::uint64_t seed) {
  std::uint64_t st = seed;
  std::vector<cplx> v(n);
  double nrm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = cplx(2.0 * uniform01(st) - 1.0, 2.0 * uniform01(st) - 1.0);
    nrm += std::norm(v[i]);
  }
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) {
    v[0] = 1.0;
    return v;
  }
  for (auto& x : v) x /= nrm;
  return v;
}

}  // namespace kzdirac
