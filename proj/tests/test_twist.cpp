#include <doctest.h>

#include <cmath>

#include "kzdirac/errors.hpp"
#include "kzdirac/kz.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"
#include "kzdirac/twist.hpp"

using namespace kzdirac;

TEST_CASE("twist family construction") {
  SUBCASE("all pair matrices unitary; trivial-leg pairs are the identity") {
    const TwistFamily tf = build_twist_zero(0.5, 2);
    for (const auto& [key, f] : tf.pair_matrix) {
      CHECK(f.is_unitary(1e-12));
      if (key.first == 0 || key.second == 0) CHECK(distance_from_identity(f) < 1e-12);
    }
  }
  SUBCASE("q -> 1 with zero phases gives the identity family") {
    const TwistFamily tf = build_twist_zero(1.0, 2);
    for (const auto& [key, f] : tf.pair_matrix) CHECK(distance_from_identity(f) < 1e-12);
  }
  SUBCASE("missing phase throws") {
    PhaseAssignment phases;  // empty
    CHECK_THROWS_AS(build_twist(0.5, 1, phases), MissingPhase);
  }
  SUBCASE("trivial-leg phases are pinned to zero even if supplied") {
    PhaseAssignment phases;
    for (int tm : {0, 2}) phases[{1, 1, tm}] = 0.3;
    const TwistFamily tf = build_twist(0.5, 1, phases);
    CHECK(tf.phases.at({0, 1, 1}) == 0.0);
    CHECK(tf.phases.at({1, 0, 1}) == 0.0);
  }
}

TEST_CASE("condition (i): intertwining classical and quantum coproducts") {
  PhaseAssignment phases;
  for (int ta = 1; ta <= 2; ++ta)
    for (int tb = 1; tb <= 2; ++tb)
      for (int tm = std::abs(ta - tb); tm <= ta + tb; tm += 2)
        phases[{ta, tb, tm}] = 0.21 * tm + 0.13 * ta - 0.4 * tb;  // arbitrary angles
  const TwistFamily tf = build_twist(0.4, 2, phases);
  for (int ta = 0; ta <= 2; ++ta)
    for (int tb = 0; tb <= 2; ++tb) CHECK(check_condition_i(tf, ta, tb) < 1e-10);
}

TEST_CASE("condition (iii)") {
  SUBCASE("trivial leg: residual zero") {
    const TwistFamily tf = build_twist_zero(0.5, 1);
    CHECK(check_condition_iii(tf, 1, 0) < 1e-12);
  }
  SUBCASE("(1/2,1/2): phase independent and essentially zero") {
    for (double th : {0.0, 0.9}) {
      PhaseAssignment phases;
      phases[{1, 1, 0}] = th;
      phases[{1, 1, 2}] = -0.5 * th;
      const TwistFamily tf = build_twist(0.5, 1, phases);
      CHECK(check_condition_iii(tf, 1, 1) < 1e-10);
    }
  }
  SUBCASE("q -> 1 with zero phases: residual to zero") {
    CHECK(check_condition_iii(build_twist_zero(0.999, 1), 1, 1) < 1e-2);
    CHECK(check_condition_iii(build_twist_zero(0.5, 1), 1, 1) < 1e-10);
  }
}

TEST_CASE("associator from twist") {
  const double q = 0.5;
  SUBCASE("trivial leg gives the identity") {
    const TwistFamily tf = build_twist_zero(q, 2);
    CHECK(distance_from_identity(associator_from_twist(tf, 0, 1, 1)) < 1e-12);
    CHECK(distance_from_identity(associator_from_twist(tf, 1, 0, 1)) < 1e-12);
    CHECK(distance_from_identity(associator_from_twist(tf, 1, 1, 0)) < 1e-12);
  }
  SUBCASE("q -> 1, zero phases: identity") {
    const TwistFamily tf = build_twist_zero(1.0, 2);
    CHECK(distance_from_identity(associator_from_twist(tf, 1, 1, 1)) < 1e-12);
  }
  SUBCASE("unitary and g-invariant on (1/2,1/2,1/2)") {
    const TwistFamily tf = build_twist_zero(q, 2);
    const MatC phi = associator_from_twist(tf, 1, 1, 1);
    CHECK(phi.is_unitary(1e-10));
    const Rep half = spin_irrep(1);
    const std::vector<Rep> legs = {half, half, half};
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(commutator(phi, diagonal_action(legs, k)).frobenius_norm() < 1e-8);
    const MatC phi_kz = drinfeld_associator(half, half, half, q).phi;
    CHECK(op_norm(phi - phi_kz) < 2.0);  // reported distance, bounded
  }
  SUBCASE("gauge covariance: phase changes move Phi_F inside the commutant") {
    const TwistFamily tf1 = build_twist_zero(q, 2);
    PhaseAssignment phases;
    for (const auto& [key, val] : tf1.phases) phases[key] = val;
    phases[{1, 1, 0}] = 0.7;  // rotate one block of one pair
    const TwistFamily tf2 = build_twist(q, 2, phases);
    const MatC a = associator_from_twist(tf1, 1, 1, 1);
    const MatC b = associator_from_twist(tf2, 1, 1, 1);
    const MatC rel = b * a.dagger();
    const Rep half = spin_irrep(1);
    const std::vector<Rep> legs = {half, half, half};
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(commutator(rel, diagonal_action(legs, k)).frobenius_norm() < 1e-8);
  }
}

TEST_CASE("universal element naturality") {
  // t as a two-leg universal element: decomposing a tensor leg first agrees
  // with evaluating on the reducible representation directly.
  UniversalElement t;
  t.side = Side::Classical;
  for (int ta = 0; ta <= 4; ++ta)
    for (int tb = 0; tb <= 4; ++tb)
      t.values[{ta, tb}] = t_element(spin_irrep(ta), spin_irrep(tb));
  const MatC via_blocks = t.eval_split_first(1, 1, 2);
  const MatC direct = t_element(rep_tensor(spin_irrep(1), spin_irrep(1)), spin_irrep(2));
  CHECK(diff_norm(via_blocks, direct) < 1e-10);

  const MatC via_blocks2 = t.eval_split_second(2, 1, 1);
  const MatC direct2 = t_element(spin_irrep(2), rep_tensor(spin_irrep(1), spin_irrep(1)));
  CHECK(diff_norm(via_blocks2, direct2) < 1e-10);
}

TEST_CASE("phase fits") {
  SUBCASE("condition (iii) on (1/2,1/2)") {
    const FitResult fit = fit_phases(0.5, 1, FitTarget::ConditionIII);
    CHECK(fit.residual < 1e-6);
    CHECK(!fit.stalled);
  }
  SUBCASE("condition (iv) on (1/2,1/2,1/2): residual reported") {
    FitOptions opts;
    opts.triple = {1, 1, 1};
    opts.max_evaluations = 4000;
    const FitResult fit = fit_phases(0.5, 2, FitTarget::ConditionIV, opts);
    const TwistFamily tf0 = build_twist_zero(0.5, 2);
    const MatC phi_kz = drinfeld_associator(spin_irrep(1), spin_irrep(1), spin_irrep(1), 0.5).phi;
    const double baseline = op_norm(associator_from_twist(tf0, 1, 1, 1) - phi_kz);
    CHECK(fit.residual <= baseline + 1e-12);  // exploratory, only monotonicity
  }
}

TEST_CASE("polar unitarization") {
  SUBCASE("unitary input is a fixed point") {
    const MatC u = unitary_power(random_hermitian(4, 3), cplx(0, 1.3));
    CHECK(diff_norm(unitarize(u), u) < 1e-12);
  }
  SUBCASE("positive multiple of the identity maps to the identity") {
    CHECK(distance_from_identity(unitarize(2.0 * MatC::identity(3))) < 1e-13);
  }
  SUBCASE("idempotent") {
    const MatC e = random_hermitian(5, 9) + cplx(0, 1) * random_hermitian(5, 10) +
                   6.0 * MatC::identity(5);
    const MatC u = unitarize(e);
    CHECK(u.is_unitary(1e-12));
    CHECK(diff_norm(unitarize(u), u) < 1e-12);
  }
  SUBCASE("blockwise positive-scaled twist unitarizes to a condition-(i) twist") {
    // e = sum_m c_m W_q(m) W_c(m)^* with positive scales: |e| is invariant,
    // so the polar part is the phase-zero twist again
    const double q = 0.5;
    const QCG qcg = q_cg(1, 1, q);
    const CGDecomposition ccg = cg_decompose(1, 1);
    MatC e(4, 4);
    const double scales[2] = {2.0, 0.3};
    for (std::size_t i = 0; i < 2; ++i)
      e += scales[i] * (qcg.isometry[i] * ccg.isometry[i].dagger());
    const MatC u = unitarize(e);
    const TwistFamily tf = build_twist_zero(q, 1);
    CHECK(diff_norm(u, tf.pair(1, 1)) < 1e-10);
    const MatC gram = e.dagger() * e;
    const Rep half = spin_irrep(1);
    const Rep tens = rep_tensor(half, half);
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(commutator(gram, tens.matrices[k]).frobenius_norm() < 1e-10);
  }
  SUBCASE("singular input throws") {
    CHECK_THROWS_AS(unitarize(MatC(3, 3)), Singular);
  }
}
