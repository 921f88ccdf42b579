#include "kzdirac/pw.hpp"

#include <cmath>
#include <string>

#include "kzdirac/errors.hpp"
#include "kzdirac/linalg.hpp"
#include "kzdirac/uqg.hpp"

namespace kzdirac {

namespace {

// Haar weights of one block from the duality antipode:
// (t^j_{mn})^* = sum_{ab} C[n,a] C^{-1}[b,m] t^j_{ba} with C the
// contragredient intertwiner, and h(t^j_{ba} t^j_{m'n'}) read off the singlet
// coefficient of the product. Returns the full gram diagonal and residual
// diagnostics.
struct BlockGram {
  std::vector<double> row_weight;  // w_j(m)
  double offdiag = 0.0;
  double factor = 0.0;
};

BlockGram block_gram(int twice_j, double q) {
  const std::size_t d = std::size_t(twice_j) + 1;
  BlockGram out;
  if (twice_j == 0) {
    out.row_weight = {1.0};
    return out;
  }
  const MatC c = antipode_intertwiner(twice_j, q);
  const MatC ci = invert(c);
  const QCG cg = q_cg(twice_j, twice_j, q);
  if (cg.twice_j.front() != 0) throw SingularSystem("block_gram: no singlet block");
  const MatC& w0m = cg.isometry.front();  // (d*d) x 1
  std::vector<cplx> w0(d * d);
  for (std::size_t i = 0; i < d * d; ++i) w0[i] = w0m(i, 0);

  // gram[(m,n),(m',n')] = sum_{ab} C[n,a] Ci[b,m] conj(w0[(b,m')]) w0[(a,n')]
  auto gram_entry = [&](std::size_t m, std::size_t n, std::size_t mp, std::size_t np) {
    cplx s(0, 0);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        s += c(n, a) * ci(b, m) * std::conj(w0[b * d + mp]) * w0[a * d + np];
    return s;
  };

  MatC diag(d, d);  // value at (m,n)
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      diag(m, n) = gram_entry(m, n, m, n);
      if (diag(m, n).real() <= 0.0 || std::abs(diag(m, n).imag()) > 1e-12)
        throw SingularSystem("block_gram: non-positive weight");
    }
  // off-diagonal residual (sampled exhaustively; blocks stay small)
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      for (std::size_t mp = 0; mp < d; ++mp)
        for (std::size_t np = 0; np < d; ++np) {
          if (m == mp && n == np) continue;
          out.offdiag = std::max(out.offdiag, std::abs(gram_entry(m, n, mp, np)));
        }
  // row-only dependence
  out.row_weight.resize(d);
  for (std::size_t m = 0; m < d; ++m) {
    out.row_weight[m] = diag(m, 0).real();
    for (std::size_t n = 1; n < d; ++n)
      out.factor = std::max(out.factor, std::abs(diag(m, n).real() - diag(m, 0).real()));
  }
  return out;
}

}  // namespace

PWBasis pw_basis(int twice_J, double q) {
  if (twice_J < 2) throw CutoffTooSmall("pw_basis: need J >= 1");
  if (twice_J > 12) throw BadInput("pw_basis: J capped at 6");
  if (q <= 0.0 || q > 1.0) throw InvalidQ("pw_basis: q must lie in (0,1]");

  PWBasis pw;
  pw.twice_J = twice_J;
  pw.q = q;
  pw.offset.resize(twice_J + 1, 0);
  std::size_t tot = 0;
  for (int tj = 0; tj <= twice_J; ++tj) {
    pw.offset[tj] = tot;
    tot += pw.block_dim(tj) * pw.block_dim(tj);
  }
  pw.scalar_dim = tot;

  for (int tj = 0; tj <= twice_J; ++tj) {
    BlockGram g = block_gram(tj, q);
    pw.gram_offdiag_residual = std::max(pw.gram_offdiag_residual, g.offdiag);
    pw.gram_factor_residual = std::max(pw.gram_factor_residual, g.factor);
    pw.row_weight.push_back(std::move(g.row_weight));
  }

  // left multiplication by t^{1/2}_{ab}:
  // t^{1/2}_{ab} t^j_{mn} = sum_{j'} conj(W[(a,m),m']) W[(b,n),n'] t^{j'}_{m'n'}
  // with W the quantum CG of (1/2, j); then conjugate into the orthonormal
  // basis u = t / sqrt(w).
  for (int tj = 0; tj <= twice_J; ++tj) {
    const QCG cg = q_cg(1, tj, q);
    const std::size_t dj = pw.block_dim(tj);
    for (std::size_t i = 0; i < cg.twice_j.size(); ++i) {
      const int tjp = cg.twice_j[i];
      if (tjp > twice_J) continue;
      const MatC& w = cg.isometry[i];
      const std::size_t djp = pw.block_dim(tjp);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (std::size_t m = 0; m < dj; ++m)
            for (std::size_t n = 0; n < dj; ++n)
              for (std::size_t mp = 0; mp < djp; ++mp)
                for (std::size_t np = 0; np < djp; ++np) {
                  const cplx coeff = std::conj(w(a * dj + m, mp)) * w(b * dj + n, np);
                  if (std::abs(coeff) < 1e-15) continue;
                  PWBasis::Triplet t;
                  t.r = pw.scalar_index(tjp, mp, np);
                  t.c = pw.scalar_index(tj, m, n);
                  t.v = coeff * std::sqrt(pw.row_weight[tjp][mp] / pw.row_weight[tj][m]);
                  pw.left_mult[a * 2 + b].push_back(t);
                }
    }
  }

  // validation: pi_r is a *-representation for the Haar inner product.
  // (t^{1/2}_{ab})^* expands through the contragredient intertwiner of the
  // fundamental block; compare pi_r(a)^dagger with pi_r(a^*) on the subspace
  // of blocks j <= J - 1/2 where truncation is exact.
  {
    const MatC c = antipode_intertwiner(1, q);
    const MatC ci = invert(c);
    auto dense = [&](int a, int b) {
      MatC mat(pw.scalar_dim, pw.scalar_dim);
      for (const auto& t : pw.left_mult[a * 2 + b]) mat(t.r, t.c) += t.v;
      return mat;
    };
    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        MatC star(pw.scalar_dim, pw.scalar_dim);
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp) star += (c(b, ap) * ci(bp, a)) * dense(bp, ap);
        const MatC adj = dense(a, b).dagger();
        // compare on rows/cols of blocks <= J - 1/2 only
        double e = 0.0;
        const std::size_t inner = pw.offset[twice_J];  // start of the top block
        for (std::size_t r = 0; r < inner; ++r)
          for (std::size_t cc = 0; cc < inner; ++cc) e = std::max(e, std::abs(adj(r, cc) - star(r, cc)));
        worst = std::max(worst, e);
      }
    pw.star_rep_residual = worst;
  }
  return pw;
}

void apply_left_mult(const PWBasis& pw, int a_row, int a_col, std::size_t spin_dim,
                     const std::vector<cplx>& x, std::vector<cplx>& y) {
  for (const auto& t : pw.left_mult[a_row * 2 + a_col])
    for (std::size_t s = 0; s < spin_dim; ++s) y[t.r * spin_dim + s] += t.v * x[t.c * spin_dim + s];
}

void apply_left_mult_dagger(const PWBasis& pw, int a_row, int a_col, std::size_t spin_dim,
                            const std::vector<cplx>& x, std::vector<cplx>& y) {
  for (const auto& t : pw.left_mult[a_row * 2 + a_col])
    for (std::size_t s = 0; s < spin_dim; ++s)
      y[t.c * spin_dim + s] += std::conj(t.v) * x[t.r * spin_dim + s];
}

std::vector<cplx> apply_block_diagonal(const PWBasis& pw, const std::vector<MatC>& blocks,
                                       std::size_t spin_dim, const std::vector<cplx>& x) {
  std::vector<cplx> y(x.size(), cplx(0, 0));
  for (int tj = 0; tj <= pw.twice_J; ++tj) {
    const std::size_t d = pw.block_dim(tj);
    const MatC& blk = blocks[tj];  // (d*spin) x (d*spin), acts on (n, s)
    for (std::size_t m = 0; m < d; ++m) {
      const std::size_t base = pw.scalar_index(tj, m, 0) * spin_dim;
      for (std::size_t rn = 0; rn < d; ++rn)
        for (std::size_t rs = 0; rs < spin_dim; ++rs) {
          cplx acc(0, 0);
          for (std::size_t cn = 0; cn < d; ++cn)
            for (std::size_t cs = 0; cs < spin_dim; ++cs)
              acc += blk(rn * spin_dim + rs, cn * spin_dim + cs) * x[base + cn * spin_dim + cs];
          y[base + rn * spin_dim + rs] = acc;
        }
    }
  }
  return y;
}

void project_blocks(const PWBasis& pw, int twice_cut, std::size_t spin_dim,
                    std::vector<cplx>& x) {
  for (int tj = twice_cut + 1; tj <= pw.twice_J; ++tj) {
    const std::size_t d = pw.block_dim(tj);
    const std::size_t start = pw.offset[tj] * spin_dim;
    for (std::size_t i = 0; i < d * d * spin_dim; ++i) x[start + i] = cplx(0, 0);
  }
}

}  // namespace kzdirac
