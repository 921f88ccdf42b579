#include "kzdirac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "kzdirac/clifford.hpp"
#include "kzdirac/dirac.hpp"
#include "kzdirac/errors.hpp"
#include "kzdirac/kz.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"
#include "kzdirac/twist.hpp"
#include "kzdirac/uqg.hpp"

namespace kzdirac {

std::size_t worker_count() {
  if (const char* env = std::getenv("KZDIRAC_THREADS")) {
    const long n = std::atol(env);
    if (n >= 1) return std::size_t(n);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        body(i);
      }
    });
  for (auto& t : pool) t.join();
}

namespace {

const std::vector<double> kQGrid = {0.3, 0.5, 0.7, 0.9};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct Criterion {
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
  double time_budget = 0.0;  // seconds; 0 = no budget
};

// C1: Phi(A,B) = 1 for commuting self-adjoint residues.
std::pair<bool, std::string> c1_commuting(std::uint64_t seed, bool fast) {
  double worst = 0.0;
  const int trials = fast ? 4 : 10;
  for (int t = 0; t < trials; ++t) {
    const std::size_t dim = 2 + (seed + t) % 7;  // <= 8
    std::uint64_t s = seed + 17 * t;
    std::vector<double> da(dim), db(dim);
    const MatC ra = random_hermitian(dim, s);
    const MatC rb = random_hermitian(dim, s + 1);
    for (std::size_t i = 0; i < dim; ++i) {
      da[i] = ra(i, i).real();
      db[i] = rb(i, i).real();
    }
    const KZProblem p(MatC::diag_real(da), MatC::diag_real(db), 0.3 + 0.05 * (t % 8));
    worst = std::max(worst, distance_from_identity(connection_matrix(p).phi));
  }
  return {worst <= 1e-9, "max ||Phi - 1|| = " + fmt(worst)};
}

// C2: series-matching vs limit-formula.
std::pair<bool, std::string> c2_routes(std::uint64_t seed, bool fast) {
  std::vector<std::pair<MatC, MatC>> cases;
  const int trials = fast ? 4 : 20;
  for (int t = 0; t < trials; ++t) {
    const std::size_t dim = 2 + (seed + 3 * t) % 7;
    cases.emplace_back(random_hermitian(dim, seed + 1000 + t), random_hermitian(dim, seed + 2000 + t));
  }
  const Rep half = spin_irrep(1), one = spin_irrep(2);
  cases.emplace_back(kron(t_element(half, half), MatC::identity(2)),
                     kron(MatC::identity(2), t_element(half, half)));
  cases.emplace_back(kron(t_element(half, one), MatC::identity(2)),
                     kron(MatC::identity(2), t_element(one, half)));
  std::vector<double> diffs(cases.size(), 0.0);
  parallel_for(cases.size(), [&](std::size_t i) {
    const KZProblem p(cases[i].first, cases[i].second, 0.5);
    const AssociatorResult s = connection_matrix(p);
    const AssociatorResult l = connection_matrix_limit(p);
    diffs[i] = diff_norm(s.phi, l.phi);
  });
  const double worst = *std::max_element(diffs.begin(), diffs.end());
  return {worst <= 1e-7, "max route difference = " + fmt(worst) + " over " +
                             std::to_string(cases.size()) + " instances"};
}

// C3: unitarity and invariance of Phi_KZ over triples.
std::pair<bool, std::string> c3_invariance(bool fast) {
  struct Item {
    Rep a, b, c;
    double q;
  };
  std::vector<Item> items;
  const std::vector<double> qs = fast ? std::vector<double>{0.5} : kQGrid;
  const int tmax = fast ? 2 : 3;
  for (int ta = 0; ta <= tmax; ++ta)
    for (int tb = 0; tb <= tmax; ++tb)
      for (int tc = 0; tc <= tmax; ++tc)
        for (double q : qs)
          items.push_back({spin_irrep(ta), spin_irrep(tb), spin_irrep(tc), q});
  const Rep f = defining_rep(su3_basis());
  for (double q : qs) items.push_back({f, f, f, q});
  std::vector<double> wu(items.size()), wi(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const AssociatorResult r = drinfeld_associator(items[i].a, items[i].b, items[i].c, items[i].q);
    wu[i] = r.unitarity_residual;
    wi[i] = r.invariance_residual;
  });
  const double worst_u = *std::max_element(wu.begin(), wu.end());
  const double worst_i = *std::max_element(wi.begin(), wi.end());
  return {worst_u <= 1e-8 && worst_i <= 1e-8,
          "unitarity " + fmt(worst_u) + ", invariance " + fmt(worst_i) + " over " +
              std::to_string(items.size()) + " triples"};
}

// C4: the three commutation lemmas.
std::pair<bool, std::string> c4_gaudin(bool fast) {
  const LieBasis su2 = su2_basis();
  const CliffordData cl3 = build_clifford(3);
  double worst = 0.0;
  const int tmax = fast ? 1 : 3;
  for (int ta = 0; ta <= tmax; ++ta)
    for (int tb = 0; tb <= tmax; ++tb) {
      const GaudinReport g = gaudin_checks(spin_irrep(ta), spin_irrep(tb), su2, cl3);
      worst = std::max({worst, g.lemma1, g.lemma2});
      for (double v : g.lemma3) worst = std::max(worst, v);
    }
  const LieBasis su3 = su3_basis();
  const CliffordData cl8 = build_clifford(8);
  const GaudinReport g3 = gaudin_checks(defining_rep(su3), defining_rep(su3), su3, cl8);
  worst = std::max({worst, g3.lemma1, g3.lemma2});
  for (double v : g3.lemma3) worst = std::max(worst, v);
  return {worst <= 1e-10, "max commutator norm = " + fmt(worst)};
}

// C5: main estimate sweep.
std::pair<bool, std::string> c5_main_estimate(bool fast) {
  const Rep half = spin_irrep(1);
  const std::vector<double> qs = fast ? std::vector<double>{0.5} : kQGrid;
  const int tjmax = fast ? 6 : 16;
  std::vector<double> margins(qs.size());
  std::atomic<int> violations{0};
  double bound = 0.0;
  parallel_for(qs.size(), [&](std::size_t i) {
    const auto rows = comm_bound_experiment(half, qs[i], tjmax);
    double worst_ratio = 0.0;
    for (const auto& r : rows) {
      if (r.commutator_norm > r.bound) ++violations;
      worst_ratio = std::max(worst_ratio, r.commutator_norm / r.bound);
    }
    margins[i] = worst_ratio;
  });
  bound = 6.0 * op_norm(gamma_contract(half, build_clifford(3)));
  const double worst = *std::max_element(margins.begin(), margins.end());
  return {violations.load() == 0,
          "bound " + fmt(bound) + ", max ratio M/bound = " + fmt(worst) + ", violations " +
              std::to_string(violations.load())};
}

// C6: Weitzenbock identity.
std::pair<bool, std::string> c6_weitzenbock(bool fast) {
  double worst = 0.0;
  std::vector<double> qs = fast ? std::vector<double>{0.5, 1.0} : kQGrid;
  if (!fast) qs.push_back(1.0);
  for (int tj = 0; tj <= (fast ? 2 : 4); ++tj)
    for (double q : qs) worst = std::max(worst, weitzenbock_check(tj, q));
  return {worst <= 1e-10, "max residual = " + fmt(worst)};
}

// C7: isospectrality and the squared-eigenvalue formula.
std::pair<bool, std::string> c7_isospectral(bool fast) {
  double worst_spec = 0.0;
  bool formula_ok = true;
  const int tjmax = fast ? 2 : 6;
  const std::vector<double> qs = fast ? std::vector<double>{0.5} : kQGrid;
  for (int tj = 0; tj <= tjmax; ++tj)
    for (double q : qs) {
      const auto qs_spec = dq_block_rr(tj, q).spectrum();
      const auto cs_spec = dirac_block_classical(tj, 0.5).spectrum();
      for (std::size_t i = 0; i < qs_spec.size(); ++i)
        worst_spec = std::max(worst_spec, std::abs(qs_spec[i] - cs_spec[i]));
      for (int tm : {tj - 1, tj + 1}) {
        if (tm < 0) continue;
        try {
          spectrum_formula_check(tj, tm, q, 1e-8);
        } catch (const Error&) {
          formula_ok = false;
        }
      }
    }
  return {worst_spec <= 1e-8 && formula_ok,
          "max eigenvalue deviation = " + fmt(worst_spec) +
              (formula_ok ? ", formula ok" : ", formula FAILED")};
}

// C8: the explicit example matrix and the truncated series.
std::pair<bool, std::string> c8_explicit(bool fast) {
  double worst = 0.0;
  const std::vector<double> qs = fast ? std::vector<double>{0.5} : kQGrid;
  for (int tj : {1, 2})
    for (double q : qs) {
      const QIrrep pi = q_irrep(tj, q);
      const std::size_t d = pi.dim();
      const double lam = q - 1.0 / q;
      const MatC b11 = pi.k * pi.k + (lam * lam / q) * (pi.f * pi.e);
      const MatC b12 = (lam / std::sqrt(q)) * (pi.f * pi.kinv);
      const MatC b21 = (lam / std::sqrt(q)) * (pi.kinv * pi.e);
      const MatC b22 = pi.kinv * pi.kinv;
      MatC want(d * 2, d * 2);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          want(r * 2 + 0, c * 2 + 0) = std::pow(q, 1.5) * b11(r, c);
          want(r * 2 + 0, c * 2 + 1) = std::pow(q, 1.5) * b12(r, c);
          want(r * 2 + 1, c * 2 + 0) = std::pow(q, 1.5) * b21(r, c);
          want(r * 2 + 1, c * 2 + 1) = std::pow(q, 1.5) * b22(r, c);
        }
      const DiracBlock blk = dq_block_rr(tj, q);
      const MatC got =
          hermitian_function(blk.matrix, [&](double x) { return std::pow(q, -std::sqrt(2.0) * x); });
      worst = std::max(worst, (got - want).max_abs());
      worst = std::max(worst,
                       (r_matrix(tj, 1, q).matrix - r_matrix_series_spin_half(tj, q)).max_abs());
    }
  return {worst <= 1e-10, "max entrywise deviation = " + fmt(worst)};
}

// C9: R*R = Delta_q(q^C)(q^-C x q^-C), relative residual.
std::pair<bool, std::string> c9_rc0(bool fast) {
  double worst = 0.0;
  const std::vector<double> qs = fast ? std::vector<double>{0.5} : kQGrid;
  for (int ta = 0; ta <= 3; ++ta)
    for (int tb = 0; tb <= 3; ++tb)
      for (double q : qs) worst = std::max(worst, rc0_check(ta, tb, q).relative);
  return {worst <= 1e-10, "max relative residual = " + fmt(worst)};
}

// C10: twist conditions.
std::pair<bool, std::string> c10_twist(std::uint64_t seed, bool fast) {
  (void)seed;
  const double q = 0.5;
  const int cutoff = 3;  // 2J = 3
  PhaseAssignment phases;
  for (int ta = 1; ta <= cutoff; ++ta)
    for (int tb = 1; tb <= cutoff; ++tb)
      for (int tm = std::abs(ta - tb); tm <= ta + tb; tm += 2)
        phases[{ta, tb, tm}] = 0.1 * ta - 0.2 * tb + 0.05 * tm;
  const TwistFamily tf = build_twist(q, cutoff, phases);
  double worst_i = 0.0;
  bool counit_ok = true;
  for (int ta = 0; ta <= cutoff; ++ta)
    for (int tb = 0; tb <= cutoff; ++tb) {
      worst_i = std::max(worst_i, check_condition_i(tf, ta, tb));
      if (ta == 0 || tb == 0)
        counit_ok = counit_ok && distance_from_identity(tf.pair(ta, tb)) < 1e-12;
    }
  const FitResult fit3 = fit_phases(q, 1, FitTarget::ConditionIII);
  double fit4_resid = -1.0;
  if (!fast) {
    FitOptions opts;
    opts.triple = {1, 1, 1};
    opts.max_evaluations = 4000;
    fit4_resid = fit_phases(q, 2, FitTarget::ConditionIV, opts).residual;
  }
  const bool pass = worst_i <= 1e-10 && counit_ok && fit3.residual <= 1e-6;
  std::string detail = "condition (i) " + fmt(worst_i) + ", (ii) " +
                       (counit_ok ? std::string("exact") : std::string("VIOLATED")) +
                       ", (iii) fit " + fmt(fit3.residual);
  if (fit4_resid >= 0.0) detail += ", (iv) fit residual " + fmt(fit4_resid) + " (reported)";
  return {pass, detail};
}

// C11: twist independence of the quantum Dirac block.
std::pair<bool, std::string> c11_twist_independence(std::uint64_t seed) {
  const double q = 0.5;
  std::uint64_t st = seed;
  auto next_angle = [&st]() {
    st = st * 6364136223846793005ULL + 1442695040888963407ULL;
    return double(st >> 11) * 0x1.0p-53 * 6.28318530717958647692;
  };
  PhaseAssignment p1, p2;
  for (int ta = 1; ta <= 2; ++ta)
    for (int tb = 1; tb <= 2; ++tb)
      for (int tm = std::abs(ta - tb); tm <= ta + tb; tm += 2) {
        p1[{ta, tb, tm}] = next_angle();
        p2[{ta, tb, tm}] = next_angle();
      }
  double worst = 0.0;
  for (int tj : {1, 2}) {
    const MatC b1 = dq_block_twist(tj, q, build_twist(q, 2, p1)).matrix;
    const MatC b2 = dq_block_twist(tj, q, build_twist(q, 2, p2)).matrix;
    worst = std::max(worst, diff_norm(b1, b2));
  }
  return {worst <= 1e-10, "max block difference between random families = " + fmt(worst)};
}

// C12: regular-representation commutator stability and classical limit.
std::pair<bool, std::string> c12_regular(bool fast) {
  const double q = 0.5;
  const std::vector<int> cutoffs = fast ? std::vector<int>{2, 4} : std::vector<int>{4, 6, 8, 10};
  const std::vector<MatC> blocks_q = dq_blocks_upto(cutoffs.back(), q);
  bool shrinking = true;
  double final_increment = 0.0;
  std::ostringstream detail;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double prev_norm = -1.0, prev_inc = 1e100, last = 0.0;
      for (int twoJ : cutoffs) {
        const PWBasis pw = pw_basis(twoJ, q);
        const std::vector<MatC> blk(blocks_q.begin(), blocks_q.begin() + twoJ + 1);
        last = regular_commutator_norm(pw, blk, a, b);
        if (prev_norm >= 0.0) {
          const double inc = std::abs(last - prev_norm);
          if (inc > prev_inc + 1e-9) shrinking = false;
          prev_inc = inc;
          final_increment = std::max(final_increment, inc);
        }
        prev_norm = last;
      }
      detail << "a" << a << b << "=" << last << " ";
    }
  // near-classical agreement with c(da)
  const int twoJ = fast ? 4 : 8;
  const double qq = 1.0 - 1e-4;
  const PWBasis pw_q = pw_basis(twoJ, qq);
  const PWBasis pw_1 = pw_basis(twoJ, 1.0);
  const std::vector<MatC> blocks_near = dq_blocks_upto(twoJ, qq);
  double worst_rel = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double nq = regular_commutator_norm(pw_q, blocks_near, a, b);
      const double nc = classical_cda_norm(pw_1, a, b);
      worst_rel = std::max(worst_rel, std::abs(nq - nc) / nc);
    }
  const bool pass = shrinking && worst_rel <= 1e-2;
  return {pass, "norms " + detail.str() + "| increments decreasing: " +
                    (shrinking ? "yes" : "NO") + ", classical-limit rel dev " + fmt(worst_rel)};
}

// C13: first-order classical limit of the blocks.
std::pair<bool, std::string> c13_classical_limit(bool fast) {
  double worst_order = 1e9;
  for (int tj : (fast ? std::vector<int>{2} : std::vector<int>{1, 2, 3})) {
    const MatC cls = dirac_block_classical(tj, 0.5).matrix;
    const double e0 = 0.02;
    const double d0 = diff_norm(dq_block_rr(tj, 1.0 - e0).matrix, cls);
    const double d1 = diff_norm(dq_block_rr(tj, 1.0 - e0 / 2).matrix, cls);
    const double d2 = diff_norm(dq_block_rr(tj, 1.0 - e0 / 4).matrix, cls);
    worst_order = std::min({worst_order, std::log2(d0 / d1), std::log2(d1 / d2)});
  }
  return {worst_order >= 0.9, "observed convergence order >= " + fmt(worst_order)};
}

}  // namespace

std::vector<CheckResult> acceptance_criteria(bool fast, std::uint64_t seed) {
  std::vector<Criterion> list = {
      {"C1  associator identity on commuting pairs", [=] { return c1_commuting(seed, fast); }, 1.0},
      {"C2  series vs limit route equivalence", [=] { return c2_routes(seed, fast); }, 30.0},
      {"C3  Phi_KZ unitarity and invariance", [=] { return c3_invariance(fast); }, 120.0},
      {"C4  Gaudin commutation lemmas", [=] { return c4_gaudin(fast); }, 60.0},
      {"C5  main commutator estimate", [=] { return c5_main_estimate(fast); }, 300.0},
      {"C6  Weitzenbock identity", [=] { return c6_weitzenbock(fast); }, 0.0},
      {"C7  isospectrality and eigenvalue formula", [=] { return c7_isospectral(fast); }, 0.0},
      {"C8  explicit example matrix and series", [=] { return c8_explicit(fast); }, 0.0},
      {"C9  R*R Casimir identity", [=] { return c9_rc0(fast); }, 0.0},
      {"C10 twist conditions", [=] { return c10_twist(seed, fast); }, 0.0},
      {"C11 twist independence of D_q", [=] { return c11_twist_independence(seed); }, 0.0},
      {"C12 regular-representation commutator", [=] { return c12_regular(fast); }, 600.0},
      {"C13 classical limit order", [=] { return c13_classical_limit(fast); }, 0.0},
  };
  std::vector<CheckResult> results;
  for (const auto& c : list) {
    CheckResult r;
    r.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto [pass, detail] = c.run();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_budget > 0.0 && r.seconds > c.time_budget) {
      r.pass = false;
      r.detail += " [over time budget " + std::to_string(int(c.time_budget)) + "s]";
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace kzdirac
