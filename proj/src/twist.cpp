#include "kzdirac/twist.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "kzdirac/errors.hpp"
#include "kzdirac/kz.hpp"
#include "kzdirac/linalg.hpp"

namespace kzdirac {

namespace {

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a / 2.0) + "," + std::to_string(b / 2.0) + ")";
}

MatC flip_operator(std::size_t d1, std::size_t d2) {
  MatC f(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) f(j * d1 + i, i * d2 + j) = 1.0;
  return f;
}

// Decomposition isometries of the declared side for a pair.
std::pair<std::vector<int>, std::vector<MatC>> side_cg(Side side, double q, int ta, int tb) {
  if (side == Side::Quantum) {
    QCG cg = q_cg(ta, tb, q);
    return {cg.twice_j, cg.isometry};
  }
  CGDecomposition cg = cg_decompose(ta, tb);
  return {cg.twice_j, cg.isometry};
}

}  // namespace

const MatC& UniversalElement::value(int twice_j1, int twice_j2) const {
  const auto it = values.find({twice_j1, twice_j2});
  if (it == values.end())
    throw MissingPhase("UniversalElement: no value for pair " + pair_name(twice_j1, twice_j2));
  return it->second;
}

MatC UniversalElement::eval_split_first(int twice_ja, int twice_jb, int twice_other) const {
  const auto [labels, isom] = side_cg(side, q, twice_ja, twice_jb);
  const std::size_t dother = value(labels[0], twice_other).rows() / (labels[0] + 1);
  const std::size_t dpair = std::size_t(twice_ja + 1) * std::size_t(twice_jb + 1);
  MatC out(dpair * dother, dpair * dother);
  const MatC id_other = MatC::identity(dother);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const MatC wi = kron(isom[i], id_other);
    out += wi * value(labels[i], twice_other) * wi.dagger();
  }
  return out;
}

MatC UniversalElement::eval_split_second(int twice_other, int twice_ja, int twice_jb) const {
  const auto [labels, isom] = side_cg(side, q, twice_ja, twice_jb);
  const std::size_t dother = value(twice_other, labels[0]).rows() / (labels[0] + 1);
  const std::size_t dpair = std::size_t(twice_ja + 1) * std::size_t(twice_jb + 1);
  MatC out(dother * dpair, dother * dpair);
  const MatC id_other = MatC::identity(dother);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const MatC wi = kron(id_other, isom[i]);
    out += wi * value(twice_other, labels[i]) * wi.dagger();
  }
  return out;
}

const MatC& TwistFamily::pair(int twice_j1, int twice_j2) const {
  const auto it = pair_matrix.find({twice_j1, twice_j2});
  if (it == pair_matrix.end())
    throw MissingPhase("TwistFamily: pair " + pair_name(twice_j1, twice_j2) +
                       " beyond cutoff " + std::to_string(twice_cutoff / 2.0));
  return it->second;
}

TwistFamily build_twist(double q, int twice_cutoff, const PhaseAssignment& phases) {
  if (q <= 0.0 || q > 1.0) throw InvalidQ("build_twist: q must lie in (0,1]");
  TwistFamily tf;
  tf.q = q;
  tf.twice_cutoff = twice_cutoff;
  for (int ta = 0; ta <= twice_cutoff; ++ta)
    for (int tb = 0; tb <= twice_cutoff; ++tb) {
      const QCG qcg = q_cg(ta, tb, q);
      const CGDecomposition ccg = cg_decompose(ta, tb);
      MatC f(std::size_t(ta + 1) * (tb + 1), std::size_t(ta + 1) * (tb + 1));
      for (std::size_t i = 0; i < qcg.twice_j.size(); ++i) {
        double theta = 0.0;
        if (ta != 0 && tb != 0) {  // counit condition pins trivial-leg pairs
          const auto it = phases.find({ta, tb, qcg.twice_j[i]});
          if (it == phases.end())
            throw MissingPhase("build_twist: no phase for " + pair_name(ta, tb) + " block " +
                               std::to_string(qcg.twice_j[i] / 2.0));
          theta = it->second;
        }
        tf.phases[{ta, tb, qcg.twice_j[i]}] = theta;
        const cplx ph = std::exp(cplx(0.0, theta));
        f += ph * (qcg.isometry[i] * ccg.isometry[i].dagger());
      }
      tf.pair_matrix[{ta, tb}] = std::move(f);
    }
  return tf;
}

TwistFamily build_twist_zero(double q, int twice_cutoff) {
  PhaseAssignment phases;
  for (int ta = 0; ta <= twice_cutoff; ++ta)
    for (int tb = 0; tb <= twice_cutoff; ++tb)
      for (int tm = std::abs(ta - tb); tm <= ta + tb; tm += 2) phases[{ta, tb, tm}] = 0.0;
  return build_twist(q, twice_cutoff, phases);
}

double check_condition_i(const TwistFamily& tf, int twice_j1, int twice_j2) {
  const double q = tf.q;
  const QIrrep r1 = q_irrep(twice_j1, q), r2 = q_irrep(twice_j2, q);
  const CGDecomposition ccg = cg_decompose(twice_j1, twice_j2);
  const MatC& f = tf.pair(twice_j1, twice_j2);
  double worst = 0.0;
  for (Generator g : {Generator::E, Generator::F, Generator::K}) {
    // classical coproduct of phi(g): quantum block images conjugated by the
    // classical isometries
    MatC cop_phi(f.rows(), f.cols());
    for (std::size_t i = 0; i < ccg.twice_j.size(); ++i) {
      const QIrrep rm = q_irrep(ccg.twice_j[i], q);
      const MatC& img = (g == Generator::E) ? rm.e : (g == Generator::F) ? rm.f : rm.k;
      cop_phi += ccg.isometry[i] * img * ccg.isometry[i].dagger();
    }
    const MatC lhs = coproduct(r1, r2, g);
    const MatC rhs = f * cop_phi * f.dagger();
    worst = std::max(worst, diff_norm(lhs, rhs) / std::max(1.0, lhs.frobenius_norm()));
  }
  return worst;
}

namespace {

double condition_iii_residual(const TwistFamily& tf, int twice_j1, int twice_j2,
                              const MatC& rmat, const MatC& qt) {
  const MatC& f12 = tf.pair(twice_j1, twice_j2);
  const MatC& f21 = tf.pair(twice_j2, twice_j1);
  const MatC flip12 = flip_operator(twice_j1 + 1, twice_j2 + 1);
  const MatC flip21 = flip_operator(twice_j2 + 1, twice_j1 + 1);
  const MatC f21_on_12 = flip21 * f21 * flip12;
  return op_norm(rmat - f21_on_12 * qt * f12.dagger());
}

MatC q_power_of_t(int twice_j1, int twice_j2, double q) {
  const MatC t = t_element(spin_irrep(twice_j1), spin_irrep(twice_j2));
  return hermitian_function(t, [q](double lam) { return std::pow(q, lam); });
}

}  // namespace

double check_condition_iii(const TwistFamily& tf, int twice_j1, int twice_j2) {
  const RMatrix r = r_matrix(twice_j1, twice_j2, tf.q);
  return condition_iii_residual(tf, twice_j1, twice_j2, r.matrix,
                                q_power_of_t(twice_j1, twice_j2, tf.q));
}

MatC associator_from_twist(const TwistFamily& tf, int twice_j1, int twice_j2, int twice_j3) {
  UniversalElement f;
  f.side = Side::Classical;  // the coproducts in the associator are classical
  f.q = tf.q;
  f.values = tf.pair_matrix;

  const std::size_t d1 = twice_j1 + 1, d3 = twice_j3 + 1;
  const MatC t4 = f.eval_split_first(twice_j1, twice_j2, twice_j3);          // (D x i)(F)
  const MatC t3 = kron(f.value(twice_j1, twice_j2), MatC::identity(d3));     // F x 1
  const MatC t2 = kron(MatC::identity(d1), f.value(twice_j2, twice_j3)).dagger();
  const MatC t1 = f.eval_split_second(twice_j1, twice_j2, twice_j3).dagger();  // (i x D)(F*)
  return t1 * t2 * t3 * t4;
}

namespace {

// Deterministic Nelder-Mead on the phase vector.
struct NelderMead {
  std::function<double(const std::vector<double>&)> objective;
  double tol;
  int max_evals;
  int evals = 0;

  double eval(const std::vector<double>& x) {
    ++evals;
    return objective(x);
  }

  std::pair<std::vector<double>, double> run(std::vector<double> x0) {
    const std::size_t n = x0.size();
    if (n == 0) return {x0, eval(x0)};
    std::vector<std::vector<double>> simplex;
    std::vector<double> fx;
    simplex.push_back(x0);
    fx.push_back(eval(x0));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> xi = x0;
      xi[i] += 0.4;
      simplex.push_back(xi);
      fx.push_back(eval(xi));
    }
    auto order = [&]() {
      std::vector<std::size_t> idx(simplex.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
      std::vector<std::vector<double>> s2;
      std::vector<double> f2;
      for (std::size_t i : idx) {
        s2.push_back(simplex[i]);
        f2.push_back(fx[i]);
      }
      simplex = std::move(s2);
      fx = std::move(f2);
    };
    order();
    while (evals < max_evals) {
      if (fx.back() - fx.front() < tol) break;
      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / double(n);
      auto along = [&](double coef) {
        std::vector<double> x(n);
        for (std::size_t k = 0; k < n; ++k)
          x[k] = centroid[k] + coef * (simplex.back()[k] - centroid[k]);
        return x;
      };
      const std::vector<double> xr = along(-1.0);
      const double fr = eval(xr);
      if (fr < fx.front()) {
        const std::vector<double> xe = along(-2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex.back() = xe;
          fx.back() = fe;
        } else {
          simplex.back() = xr;
          fx.back() = fr;
        }
      } else if (fr < fx[n - 1]) {
        simplex.back() = xr;
        fx.back() = fr;
      } else {
        const std::vector<double> xc = along(0.5);
        const double fc = eval(xc);
        if (fc < fx.back()) {
          simplex.back() = xc;
          fx.back() = fc;
        } else {
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k)
              simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
            fx[i] = eval(simplex[i]);
          }
        }
      }
      order();
    }
    return {simplex.front(), fx.front()};
  }
};

std::vector<std::tuple<int, int, int>> free_phase_keys(int twice_cutoff) {
  std::vector<std::tuple<int, int, int>> keys;
  for (int ta = 1; ta <= twice_cutoff; ++ta)
    for (int tb = 1; tb <= twice_cutoff; ++tb)
      for (int tm = std::abs(ta - tb); tm <= ta + tb; tm += 2) keys.emplace_back(ta, tb, tm);
  return keys;
}

TwistFamily family_from_vector(double q, int twice_cutoff,
                               const std::vector<std::tuple<int, int, int>>& keys,
                               const std::vector<double>& x) {
  PhaseAssignment phases;
  for (std::size_t i = 0; i < keys.size(); ++i) phases[keys[i]] = x[i];
  return build_twist(q, twice_cutoff, phases);
}

}  // namespace

FitResult fit_phases(double q, int twice_cutoff, FitTarget target, const FitOptions& opts) {
  const std::vector<std::tuple<int, int, int>> keys = free_phase_keys(twice_cutoff);

  MatC phi_kz;
  std::vector<int> triple = opts.triple;
  if (target == FitTarget::ConditionIV) {
    if (triple.size() != 3) throw BadInput("fit_phases: condition-iv fit needs a triple");
    phi_kz = drinfeld_associator(spin_irrep(triple[0]), spin_irrep(triple[1]),
                                 spin_irrep(triple[2]), q)
                 .phi;
  }

  std::map<std::pair<int, int>, MatC> rmats, qts;
  if (target == FitTarget::ConditionIII) {
    for (int ta = 1; ta <= twice_cutoff; ++ta)
      for (int tb = 1; tb <= twice_cutoff; ++tb) {
        rmats[{ta, tb}] = r_matrix(ta, tb, q).matrix;
        qts[{ta, tb}] = q_power_of_t(ta, tb, q);
      }
  }

  auto objective = [&](const std::vector<double>& x) {
    const TwistFamily tf = family_from_vector(q, twice_cutoff, keys, x);
    if (target == FitTarget::ConditionIII) {
      double worst = 0.0;
      for (int ta = 1; ta <= twice_cutoff; ++ta)
        for (int tb = 1; tb <= twice_cutoff; ++tb)
          worst = std::max(worst,
                           condition_iii_residual(tf, ta, tb, rmats[{ta, tb}], qts[{ta, tb}]));
      return worst;
    }
    return op_norm(associator_from_twist(tf, triple[0], triple[1], triple[2]) - phi_kz);
  };

  NelderMead nm{objective, opts.objective_tol, opts.max_evaluations, 0};
  const auto [best, fbest] = nm.run(std::vector<double>(keys.size(), 0.0));

  FitResult res;
  res.family = family_from_vector(q, twice_cutoff, keys, best);
  res.residual = fbest;
  res.evaluations = nm.evals;
  res.stalled = (nm.evals >= opts.max_evaluations);
  return res;
}

MatC unitarize(const MatC& e) {
  if (e.rows() != e.cols()) throw ShapeMismatch("unitarize");
  const MatC gram = e.dagger() * e;
  const EigResult eig = eig_hermitian(gram);
  if (eig.eigenvalues.front() < 1e-14 * std::max(1.0, eig.eigenvalues.back()))
    throw Singular("unitarize: input not invertible");
  MatC inv_sqrt(e.rows(), e.rows());
  for (std::size_t i = 0; i < e.rows(); ++i)
    inv_sqrt(i, i) = 1.0 / std::sqrt(eig.eigenvalues[i]);
  return e * (eig.eigenvectors * inv_sqrt * eig.eigenvectors.dagger());
}

}  // namespace kzdirac
