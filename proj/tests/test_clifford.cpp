#include <doctest.h>

#include <cmath>

#include "kzdirac/clifford.hpp"
#include "kzdirac/errors.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"

using namespace kzdirac;

TEST_CASE("Clifford generator relations") {
  for (std::size_t n : {1, 2, 3, 4, 5, 8}) {
    const CliffordData cl = build_clifford(n);
    CHECK(cl.spin_dim == (std::size_t(1) << (n / 2)));
    CHECK(cl.gammas.size() == n);
    const MatC id = MatC::identity(cl.spin_dim);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(diff_norm(cl.gammas[k] * cl.gammas[k], cplx(-1, 0) * id) < 1e-13);
      CHECK(cl.gammas[k].is_skew_hermitian(1e-14));
      for (std::size_t l = k + 1; l < n; ++l)
        CHECK(anticommutator(cl.gammas[k], cl.gammas[l]).max_abs() < 1e-13);
    }
    CHECK(cl.has_second_spin == (n % 2 == 1));
  }
}

TEST_CASE("second spin representation for odd n") {
  // s and s~ agree on even words, so norms of even elements match under s+s~;
  // sampled even words stand in for random even elements.
  const CliffordData cl = build_clifford(3);
  const std::vector<MatC> tilde = cl.second_spin_gammas();
  REQUIRE(tilde.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    // same relations, opposite odd part
    CHECK(diff_norm(tilde[k] * tilde[k], cplx(-1, 0) * MatC::identity(2)) < 1e-13);
    CHECK(diff_norm(tilde[k], cplx(-1, 0) * cl.gammas[k]) == 0.0);
  }
  CHECK_THROWS_AS(build_clifford(2).second_spin_gammas(), OddDimension);
  // even elements evaluated in both irreps: s is isometric on the even part
  const MatC even_s = cl.gammas[0] * cl.gammas[1] + 0.3 * (cl.gammas[1] * cl.gammas[2]);
  const MatC even_t = tilde[0] * tilde[1] + 0.3 * (tilde[1] * tilde[2]);
  {
    const double direct = op_norm(even_s);
    MatC both(2 * even_s.rows(), 2 * even_s.cols());
    for (std::size_t r = 0; r < even_s.rows(); ++r)
      for (std::size_t c = 0; c < even_s.cols(); ++c) {
        both(r, c) = even_s(r, c);
        both(even_s.rows() + r, even_s.cols() + c) = even_t(r, c);
      }
    CHECK(op_norm(both) == doctest::Approx(direct).epsilon(1e-10));
  }
  // odd elements: s~(u) = -s(u), equal norms
  const MatC odd = cl.gammas[0] + 0.7 * cl.gammas[2];
  CHECK(op_norm(cplx(-1, 0) * odd) == doctest::Approx(op_norm(odd)).epsilon(1e-12));
}

TEST_CASE("tilde_ad on su(2)") {
  const LieBasis b = su2_basis();
  const CliffordData cl = build_clifford(3);
  const Rep ad = tilde_ad_rep(b, cl);
  const Rep half = spin_irrep(1);
  SUBCASE("s o ad~ equals the spin-1/2 representation on the nose") {
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(diff_norm(ad.matrices[k], half.matrices[k]) < 1e-13);
  }
  SUBCASE("(1/sqrt2) s gamma = s ad~ on g") {
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(diff_norm(s * cl.gammas[k], ad.matrices[k]) < 1e-13);
  }
  SUBCASE("equivariance gamma([x,y]) = [ad~(x), gamma(y)]") {
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l) {
        MatC lhs(cl.spin_dim, cl.spin_dim);
        for (std::size_t m = 0; m < 3; ++m)
          lhs += b.structure_constants[k][l][m] * cl.gammas[m];
        CHECK(diff_norm(lhs, commutator(ad.matrices[k], cl.gammas[l])) < 1e-12);
      }
  }
  SUBCASE("Casimir of ad~ is (3/2) = 3|rho|^2") {
    CHECK(diff_norm(casimir(ad), 1.5 * MatC::identity(2)) < 1e-12);
  }
  SUBCASE("linearity in x") {
    const MatC got = tilde_ad(b, cl, {0.5, -1.0, 2.0});
    const MatC want = 0.5 * ad.matrices[0] - 1.0 * ad.matrices[1] + 2.0 * ad.matrices[2];
    CHECK(diff_norm(got, want) < 1e-13);
  }
}

TEST_CASE("tilde_ad on su(3): homomorphism and equivariance") {
  const LieBasis b = su3_basis();
  const CliffordData cl = build_clifford(8);
  const Rep ad = tilde_ad_rep(b, cl);
  CHECK(ad.dim == 16);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(ad.matrices[k].is_skew_hermitian(1e-12));
    for (std::size_t l = 0; l < 8; ++l) {
      MatC want(16, 16);
      for (std::size_t m = 0; m < 8; ++m)
        want += b.structure_constants[k][l][m] * ad.matrices[m];
      CHECK(diff_norm(commutator(ad.matrices[k], ad.matrices[l]), want) < 1e-10);
      MatC gbr(16, 16);
      for (std::size_t m = 0; m < 8; ++m)
        gbr += b.structure_constants[k][l][m] * cl.gammas[m];
      CHECK(diff_norm(gbr, commutator(ad.matrices[k], cl.gammas[l])) < 1e-12);
    }
  }
}

TEST_CASE("chirality") {
  CHECK_THROWS_AS(chirality(build_clifford(3)), OddDimension);
  for (std::size_t n : {2, 4, 8}) {
    const CliffordData cl = build_clifford(n);
    const MatC chi = chirality(cl);
    CHECK(chi.is_hermitian(1e-13));
    CHECK(distance_from_identity(chi * chi) < 1e-12);
    for (const auto& g : cl.gammas) CHECK(anticommutator(chi, g).max_abs() < 1e-13);
  }
  // n=2: chi is sigma_z up to basis, i.e. eigenvalues {-1, +1}
  const EigResult e = eig_hermitian(chirality(build_clifford(2)));
  CHECK(e.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("gamma_contract") {
  const LieBasis b = su2_basis();
  const CliffordData cl = build_clifford(3);
  SUBCASE("trivial rep gives zero") {
    CHECK(gamma_contract(spin_irrep(0), cl).max_abs() == 0.0);
  }
  SUBCASE("su(2): (pi x s gamma)(t) = sqrt2 * t-element against (1/2)") {
    const Rep half = spin_irrep(1);
    const MatC got = gamma_contract(half, cl);
    CHECK(got.is_hermitian(1e-13));
    CHECK(diff_norm(got, std::sqrt(2.0) * t_element(half, half)) < 1e-12);
    // eigenvalues sqrt2 * {1/2 (x3), -3/2}
    const EigResult e = eig_hermitian(got);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.5 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(e.eigenvalues[3] == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-12));
    // the bound base of the main estimate
    CHECK(op_norm(got) == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("gamma-ad contraction scalar on su(2)") {
  const LieBasis b = su2_basis();
  const CliffordData cl = build_clifford(3);
  // sum_k gamma(x_k) ad~(x_k) = -(3/sqrt2) on the spin module
  const MatC got = gamma_ad_contraction(b, cl);
  CHECK(diff_norm(got, (-3.0 / std::sqrt(2.0)) * MatC::identity(2)) < 1e-12);
}
