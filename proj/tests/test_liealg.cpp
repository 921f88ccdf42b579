#include <doctest.h>

#include <cmath>

#include "kzdirac/errors.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"

using namespace kzdirac;

namespace {

cplx trace_of(const MatC& m) {
  cplx t(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double homomorphism_residual(const LieBasis& b, const Rep& r) {
  double worst = 0.0;
  for (std::size_t k = 0; k < b.dim_g; ++k)
    for (std::size_t l = 0; l < b.dim_g; ++l) {
      MatC want(r.dim, r.dim);
      for (std::size_t m = 0; m < b.dim_g; ++m)
        want += b.structure_constants[k][l][m] * r.matrices[m];
      worst = std::max(worst, diff_norm(commutator(r.matrices[k], r.matrices[l]), want));
    }
  return worst;
}

}  // namespace

TEST_CASE("su2 basis invariants") {
  const LieBasis b = su2_basis();
  CHECK(b.dim_g == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(b.matrices[k].is_skew_hermitian(1e-14));
    for (std::size_t l = 0; l < 3; ++l) {
      const cplx tr = trace_of(b.matrices[k] * b.matrices[l]);
      CHECK(std::abs(tr - (k == l ? cplx(-1, 0) : cplx(0, 0))) < 1e-14);
    }
  }
  // [x_1,x_2] lies in span{x_3}
  CHECK(std::abs(b.structure_constants[0][1][0]) < 1e-14);
  CHECK(std::abs(b.structure_constants[0][1][1]) < 1e-14);
  CHECK(std::abs(b.structure_constants[0][1][2]) > 0.1);
  // Casimir acts as 3/2 on the defining (spin 1/2) representation
  const MatC c = casimir(defining_rep(b));
  CHECK(diff_norm(c, 1.5 * MatC::identity(2)) < 1e-13);
}

TEST_CASE("su3 basis invariants") {
  const LieBasis b = su3_basis();
  CHECK(b.dim_g == 8);
  for (std::size_t k = 0; k < 8; ++k)
    for (std::size_t l = 0; l < 8; ++l) {
      const cplx tr = trace_of(b.matrices[k] * b.matrices[l]);
      CHECK(std::abs(tr - (k == l ? cplx(-1, 0) : cplx(0, 0))) < 1e-13);
    }
  // Casimir scalar on the defining rep: |lambda+rho|^2 - |rho|^2 = 8/3 for the
  // fundamental weight in the (alpha,alpha) = 2 normalization
  const MatC c = casimir(defining_rep(b));
  CHECK(diff_norm(c, (8.0 / 3.0) * MatC::identity(3)) < 1e-12);
}

TEST_CASE("spin irreps") {
  CHECK_THROWS_AS(spin_irrep(-1), InvalidSpin);
  SUBCASE("trivial rep") {
    const Rep r = spin_irrep(0);
    CHECK(r.dim == 1);
    for (const auto& m : r.matrices) CHECK(m.max_abs() == 0.0);
  }
  SUBCASE("spin 1/2 equals defining basis") {
    const LieBasis b = su2_basis();
    const Rep r = spin_irrep(1);
    for (std::size_t k = 0; k < 3; ++k) CHECK(diff_norm(r.matrices[k], b.matrices[k]) < 1e-15);
  }
  SUBCASE("homomorphism, unitarity, Casimir scalars 2j(j+1)") {
    const LieBasis b = su2_basis();
    for (int twoj : {1, 2, 3, 4}) {
      const Rep r = spin_irrep(twoj);
      CHECK(homomorphism_residual(b, r) < 1e-10);
      for (const auto& m : r.matrices) CHECK(m.is_skew_hermitian(1e-13));
      const double j = 0.5 * twoj;
      CHECK(diff_norm(casimir(r), 2.0 * j * (j + 1.0) * MatC::identity(r.dim)) < 1e-12);
    }
    CHECK(diff_norm(casimir(spin_irrep(2)), 4.0 * MatC::identity(3)) < 1e-12);
  }
}

TEST_CASE("t element") {
  const Rep h = spin_irrep(1);
  SUBCASE("eigenvalues on (1/2)x(1/2) from the Casimir identity") {
    const MatC t = t_element(h, h);
    CHECK(t.is_hermitian(1e-14));
    const EigResult e = eig_hermitian(t);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.5).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(e.eigenvalues[i] == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("trivial leg gives zero") {
    CHECK(t_element(spin_irrep(0), h).max_abs() == 0.0);
  }
  SUBCASE("(eCas1): t = (Casimir coproduct - C x 1 - 1 x C)/2 as matrices") {
    for (int a : {1, 2, 3, 4})
      for (int b : {1, 2}) {
        const Rep ra = spin_irrep(a), rb = spin_irrep(b);
        const MatC lhs = t_element(ra, rb);
        const MatC rhs = 0.5 * (casimir(rep_tensor(ra, rb)) -
                                kron(casimir(ra), MatC::identity(rb.dim)) -
                                kron(MatC::identity(ra.dim), casimir(rb)));
        CHECK(diff_norm(lhs, rhs) < 1e-10);
      }
  }
  SUBCASE("t commutes with the diagonal action") {
    const Rep r1 = spin_irrep(2), r2 = spin_irrep(1);
    const MatC t = t_element(r1, r2);
    const Rep tens = rep_tensor(r1, r2);
    for (const auto& x : tens.matrices) CHECK(diff_norm(commutator(t, x), MatC(t.rows(), t.cols())) < 1e-10);
  }
  SUBCASE("basis mismatch rejected") {
    CHECK_THROWS_AS(t_element(spin_irrep(1), defining_rep(su3_basis())), BasisMismatch);
  }
}

TEST_CASE("rep tensor and direct sum") {
  const Rep h = spin_irrep(1);
  SUBCASE("tensor with trivial is the rep") {
    const Rep t = rep_tensor(spin_irrep(0), h);
    for (std::size_t k = 0; k < 3; ++k) CHECK(diff_norm(t.matrices[k], h.matrices[k]) < 1e-15);
  }
  SUBCASE("casimir eigenvalues on (1/2)x(1/2) are {0, 4}") {
    const EigResult e = eig_hermitian(casimir(rep_tensor(h, h)));
    CHECK(e.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(e.eigenvalues[i] == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("dimensions multiply / add") {
    CHECK(rep_tensor(spin_irrep(2), spin_irrep(3)).dim == 12);
    CHECK(rep_direct_sum({spin_irrep(2), spin_irrep(3)}).dim == 7);
  }
}

TEST_CASE("classical Clebsch-Gordan") {
  SUBCASE("(1/2,1/2) blocks {0,1}") {
    const CGDecomposition cg = cg_decompose(1, 1);
    REQUIRE(cg.twice_j.size() == 2);
    CHECK(cg.twice_j[0] == 0);
    CHECK(cg.twice_j[1] == 2);
  }
  SUBCASE("(1,1/2) blocks {1/2,3/2}") {
    const CGDecomposition cg = cg_decompose(2, 1);
    REQUIRE(cg.twice_j.size() == 2);
    CHECK(cg.twice_j[0] == 1);
    CHECK(cg.twice_j[1] == 3);
  }
  SUBCASE("singlet of (1/2,1/2) is the antisymmetric combination") {
    const CGDecomposition cg = cg_decompose(1, 1);
    const MatC& w0 = cg.isometry[0];
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(w0(1, 0) - cplx(s, 0)) < 1e-13);
    CHECK(std::abs(w0(2, 0) - cplx(-s, 0)) < 1e-13);
  }
  SUBCASE("isometries intertwine, are complete and orthonormal") {
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}, {4, 3}}) {
      const CGDecomposition cg = cg_decompose(a, b);
      const Rep ra = spin_irrep(a), rb = spin_irrep(b);
      const Rep tens = rep_tensor(ra, rb);
      MatC completeness(tens.dim, tens.dim);
      for (std::size_t i = 0; i < cg.twice_j.size(); ++i) {
        const MatC& w = cg.isometry[i];
        CHECK(distance_from_identity(w.dagger() * w) < 1e-12);
        const Rep rj = spin_irrep(cg.twice_j[i]);
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(diff_norm(tens.matrices[k] * w, w * rj.matrices[k]) < 1e-10);
        completeness += w * w.dagger();
      }
      CHECK(distance_from_identity(completeness) < 1e-12);
    }
  }
}
