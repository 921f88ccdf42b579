#include <doctest.h>

#include <cmath>

#include "kzdirac/dirac.hpp"
#include "kzdirac/errors.hpp"
#include "kzdirac/pw.hpp"

using namespace kzdirac;

TEST_CASE("Haar gram structure") {
  for (double q : {0.5, 0.9, 1.0}) {
    const PWBasis pw = pw_basis(4, q);
    CHECK(pw.gram_offdiag_residual < 1e-12);
    CHECK(pw.gram_factor_residual < 1e-12);
    CHECK(pw.star_rep_residual < 1e-11);
    for (const auto& block : pw.row_weight)
      for (double w : block) CHECK(w > 0.0);
  }
  SUBCASE("classical weights are 1/(2j+1)") {
    const PWBasis pw = pw_basis(4, 1.0);
    for (int tj = 0; tj <= 4; ++tj)
      for (double w : pw.row_weight[tj])
        CHECK(w == doctest::Approx(1.0 / (tj + 1.0)).epsilon(1e-10));
  }
  SUBCASE("fundamental block weights match the known Haar values") {
    const double q = 0.5;
    const PWBasis pw = pw_basis(2, q);
    // multiset {q^2, 1}/(1+q^2)
    const double lo = q * q / (1 + q * q), hi = 1.0 / (1 + q * q);
    const double w0 = pw.row_weight[1][0], w1 = pw.row_weight[1][1];
    CHECK(std::min(w0, w1) == doctest::Approx(lo).epsilon(1e-12));
    CHECK(std::max(w0, w1) == doctest::Approx(hi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(pw_basis(1, 0.5), CutoffTooSmall);
}

TEST_CASE("regular commutator norms stabilize over the cutoff") {
  const double q = 0.5;
  double prev_norm = -1.0, prev_increment = 1e9;
  std::vector<MatC> blocks = dq_blocks_upto(8, q);
  for (int twoJ : {2, 4, 6, 8}) {
    const PWBasis pw = pw_basis(twoJ, q);
    std::vector<MatC> b(blocks.begin(), blocks.begin() + twoJ + 1);
    const double nrm = regular_commutator_norm(pw, b, 0, 0);
    if (prev_norm > 0.0) {
      const double inc = std::abs(nrm - prev_norm);
      CHECK(inc < prev_increment + 1e-12);
      prev_increment = inc;
    }
    prev_norm = nrm;
  }
  CHECK(prev_increment < 0.05);
}

TEST_CASE("classical limit: commutator equals c(da) at q = 1") {
  const PWBasis pw = pw_basis(4, 1.0);
  const std::vector<MatC> blocks = dq_blocks_upto(4, 1.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(classical_commutator_vs_cda(pw, blocks, a, b) < 1e-10);
}

TEST_CASE("near-classical q agrees with the classical c(da) norm") {
  const int twoJ = 4;
  const PWBasis pw_q = pw_basis(twoJ, 1.0 - 1e-4);
  const PWBasis pw_1 = pw_basis(twoJ, 1.0);
  const std::vector<MatC> blocks = dq_blocks_upto(twoJ, 1.0 - 1e-4);
  for (int a = 0; a < 2; ++a) {
    const double nq = regular_commutator_norm(pw_q, blocks, a, 1 - a);
    const double nc = classical_cda_norm(pw_1, a, 1 - a);
    CHECK(nq == doctest::Approx(nc).epsilon(1e-2));
  }
}
