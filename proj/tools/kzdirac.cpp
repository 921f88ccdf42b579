// Batch front end: associator | rmatrix | spectrum | twist-fit | comm-bound | verify
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzdirac/dirac.hpp"
#include "kzdirac/errors.hpp"
#include "kzdirac/io.hpp"
#include "kzdirac/kz.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/twist.hpp"
#include "kzdirac/uqg.hpp"
#include "kzdirac/verify.hpp"

namespace {

constexpr const char* kVersion = "kzdirac 1.0.0";

using namespace kzdirac;
using nlohmann::ordered_json;

int parse_twice_spin(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (j < 0.0 || std::abs(twice - rounded) > 1e-9)
    throw BadInput("spin must be a nonnegative half-integer, got " + std::to_string(j));
  return int(rounded);
}

std::vector<int> parse_spin_list(const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) out.push_back(parse_twice_spin(std::stod(tok)));
  return out;
}

void require_q(double q) {
  if (q <= 0.0 || q >= 1.0) throw BadInput("q must lie strictly in (0,1)");
}

ordered_json meta_block(const ordered_json& config) {
  ordered_json meta;
  meta["version"] = kVersion;
  meta["config"] = config;
  return meta;
}

void write_csv(const std::string& path, const ordered_json& config,
               const std::string& header, const std::vector<std::string>& rows) {
  std::ofstream f(path);
  if (!f) throw BadInput("cannot open for writing: " + path);
  f << "# " << kVersion << "\n";
  for (const auto& [key, value] : config.items()) f << "# " << key << "=" << value << "\n";
  f << header << "\n";
  for (const auto& r : rows) f << r << "\n";
}

int cmd_associator(const std::string& group, const std::string& reps, double q,
                   const std::string& method, const std::vector<std::string>& rep_files,
                   const std::string& out) {
  require_q(q);
  Rep r1, r2, r3;
  ordered_json config;
  config["subcommand"] = "associator";
  config["group"] = group;
  config["q"] = q;
  config["method"] = method;
  if (!rep_files.empty()) {
    if (rep_files.size() != 3) throw BadInput("--rep-files needs exactly three paths");
    r1 = rep_from_json(rep_files[0]);
    r2 = rep_from_json(rep_files[1]);
    r3 = rep_from_json(rep_files[2]);
    config["rep_files"] = rep_files;
  } else if (group == "su2") {
    const std::vector<int> spins = parse_spin_list(reps);
    if (spins.size() != 3) throw BadInput("--reps needs three spins j1,j2,j3");
    r1 = spin_irrep(spins[0]);
    r2 = spin_irrep(spins[1]);
    r3 = spin_irrep(spins[2]);
    config["reps"] = reps;
  } else if (group == "su3") {
    r1 = r2 = r3 = defining_rep(su3_basis());
    config["reps"] = "defining";
  } else {
    throw BadInput("unknown group: " + group);
  }

  AssociatorResult res;
  if (method == "series") {
    res = drinfeld_associator(r1, r2, r3, q);
  } else if (method == "limit") {
    const MatC t12 = kron(t_element(r1, r2), MatC::identity(r3.dim));
    const MatC t23 = kron(MatC::identity(r1.dim), t_element(r2, r3));
    res = connection_matrix_limit(KZProblem(t12, t23, q));
    double inv = 0.0;
    const std::vector<Rep> legs = {r1, r2, r3};
    for (std::size_t k = 0; k < r1.matrices.size(); ++k)
      inv = std::max(inv, commutator(res.phi, diagonal_action(legs, k)).frobenius_norm());
    res.invariance_residual = inv;
  } else {
    throw BadInput("method must be series or limit");
  }

  ordered_json j;
  j["meta"] = meta_block(config);
  j["method"] = res.method;
  j["error_estimate"] = res.error_estimate;
  j["unitarity_residual"] = res.unitarity_residual;
  j["invariance_residual"] = res.invariance_residual;
  j["phi"] = matrix_to_json(res.phi);
  write_json_file(out, j);
  std::printf("associator written to %s (unitarity %.3e, invariance %.3e)\n", out.c_str(),
              res.unitarity_residual, res.invariance_residual);
  return 0;
}

int cmd_rmatrix(double j1, double j2, double q, const std::string& out) {
  require_q(q);
  const int tj1 = parse_twice_spin(j1), tj2 = parse_twice_spin(j2);
  const RMatrix r = r_matrix(tj1, tj2, q);
  ordered_json config;
  config["subcommand"] = "rmatrix";
  config["j1"] = j1;
  config["j2"] = j2;
  config["q"] = q;
  ordered_json j;
  j["meta"] = meta_block(config);
  j["residual_coproduct"] = r.residual_coproduct;
  j["residual_normalization"] = r.residual_normalization;
  j["uniqueness_gap"] = r.uniqueness_gap;
  j["matrix"] = matrix_to_json(r.matrix);
  write_json_file(out, j);
  std::printf("rmatrix written to %s (defining residuals %.3e / %.3e)\n", out.c_str(),
              r.residual_coproduct, r.residual_normalization);
  return 0;
}

int cmd_spectrum(double j, double q, const std::string& route, const std::string& out) {
  require_q(q);
  const int tj = parse_twice_spin(j);
  DiracBlock blk;
  if (route == "rr") {
    blk = dq_block_rr(tj, q);
  } else if (route == "twist") {
    blk = dq_block_twist(tj, q, build_twist_zero(q, std::max(tj, 1)));
  } else {
    throw BadInput("route must be rr or twist");
  }
  const std::vector<double> spec = blk.spectrum();
  // group into (eigenvalue, multiplicity) with a clustering tolerance
  std::vector<std::string> rows;
  char buf[64];
  std::size_t i = 0;
  while (i < spec.size()) {
    std::size_t k = i;
    while (k + 1 < spec.size() && std::abs(spec[k + 1] - spec[i]) < 1e-9) ++k;
    std::snprintf(buf, sizeof buf, "%.17g,%zu", spec[i], k - i + 1);
    rows.push_back(buf);
    i = k + 1;
  }
  ordered_json config;
  config["subcommand"] = "spectrum";
  config["j"] = j;
  config["q"] = q;
  config["route"] = route;
  write_csv(out, config, "eigenvalue,multiplicity", rows);
  std::printf("spectrum written to %s (%zu eigenvalues, %zu distinct)\n", out.c_str(), spec.size(),
              rows.size());
  return 0;
}

int cmd_twist_fit(double q, int twice_cutoff, const std::string& target,
                  const std::string& triple_csv, const std::string& out) {
  require_q(q);
  FitTarget tgt;
  FitOptions opts;
  if (target == "iii") {
    tgt = FitTarget::ConditionIII;
  } else if (target == "iv") {
    tgt = FitTarget::ConditionIV;
    if (triple_csv.empty()) throw BadInput("--target iv needs --triple j1,j2,j3");
    opts.triple = parse_spin_list(triple_csv);
    if (opts.triple.size() != 3) throw BadInput("--triple needs three spins");
  } else {
    throw BadInput("target must be iii or iv");
  }
  const FitResult fit = fit_phases(q, twice_cutoff, tgt, opts);
  ordered_json config;
  config["subcommand"] = "twist-fit";
  config["q"] = q;
  config["cutoff"] = twice_cutoff;
  config["target"] = target;
  if (!triple_csv.empty()) config["triple"] = triple_csv;
  ordered_json j;
  j["meta"] = meta_block(config);
  j["residual"] = fit.residual;
  j["evaluations"] = fit.evaluations;
  j["stalled"] = fit.stalled;
  ordered_json phases = ordered_json::array();
  for (const auto& [key, theta] : fit.family.phases) {
    ordered_json p;
    p["j1"] = std::get<0>(key) / 2.0;
    p["j2"] = std::get<1>(key) / 2.0;
    p["j"] = std::get<2>(key) / 2.0;
    p["theta"] = theta;
    phases.push_back(p);
  }
  j["phases"] = phases;
  write_json_file(out, j);
  std::printf("twist fit written to %s (residual %.3e%s)\n", out.c_str(), fit.residual,
              fit.stalled ? ", optimizer stalled" : "");
  return 0;
}

int cmd_comm_bound(double q, double jmax, const std::string& out) {
  require_q(q);
  const int tjmax = parse_twice_spin(jmax);
  const auto rows = comm_bound_experiment(spin_irrep(1), q, tjmax);
  std::vector<std::string> lines;
  char buf[96];
  bool ok = true;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", r.twice_jprime / 2.0, r.commutator_norm,
                  r.bound);
    lines.push_back(buf);
    ok = ok && (r.commutator_norm <= r.bound);
  }
  ordered_json config;
  config["subcommand"] = "comm-bound";
  config["q"] = q;
  config["jmax"] = jmax;
  write_csv(out, config, "jprime,M,bound", lines);
  std::printf("comm-bound written to %s (%zu rows, bound %s)\n", out.c_str(), lines.size(),
              ok ? "respected" : "VIOLATED");
  if (!ok) throw Error("comm-bound: estimate violated");
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const bool fast = (suite == "fast");
  if (!fast && suite != "all") throw BadInput("suite must be all or fast");
  const auto results = acceptance_criteria(fast, seed);
  for (const auto& r : results)
    std::printf("[%s] %-45s (%6.1fs)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) + " - quantum Dirac operator laboratory"};
  app.require_subcommand(1);

  std::string group = "su2", reps, method = "series", route = "rr", target = "iii";
  std::string triple, out = "out.json", suite = "all";
  std::vector<std::string> rep_files;
  double q = 0.5, j = 0.5, j1 = 0.5, j2 = 0.5, jmax = 2.0;
  int cutoff = 2;
  std::uint64_t seed = 12345;

  auto* assoc = app.add_subcommand("associator", "Drinfeld associator in a representation triple");
  assoc->add_option("--group", group, "su2 or su3");
  assoc->add_option("--reps", reps, "comma-separated spins j1,j2,j3 (su2)");
  assoc->add_option("--rep-files", rep_files, "three JSON representation files");
  assoc->add_option("--q", q)->required();
  assoc->add_option("--method", method, "series or limit");
  assoc->add_option("--out", out)->required();

  auto* rmat = app.add_subcommand("rmatrix", "R-matrix from its defining properties");
  rmat->add_option("--j1", j1)->required();
  rmat->add_option("--j2", j2)->required();
  rmat->add_option("--q", q)->required();
  rmat->add_option("--out", out)->required();

  auto* spec = app.add_subcommand("spectrum", "Dirac block spectrum");
  spec->add_option("--j", j)->required();
  spec->add_option("--q", q)->required();
  spec->add_option("--route", route, "rr or twist");
  spec->add_option("--out", out)->required();

  auto* tfit = app.add_subcommand("twist-fit", "fit twist phases against condition iii or iv");
  tfit->add_option("--q", q)->required();
  tfit->add_option("--cutoff", cutoff, "twice the spin cutoff 2J")->required();
  tfit->add_option("--target", target, "iii or iv");
  tfit->add_option("--triple", triple, "spins j1,j2,j3 for target iv");
  tfit->add_option("--out", out)->required();

  auto* cbound = app.add_subcommand("comm-bound", "main estimate sweep over the middle leg");
  cbound->add_option("--q", q)->required();
  cbound->add_option("--jmax", jmax)->required();
  cbound->add_option("--out", out)->required();

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", suite, "all or fast");
  ver->add_option("--seed", seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(assoc)) return cmd_associator(group, reps, q, method, rep_files, out);
    if (app.got_subcommand(rmat)) return cmd_rmatrix(j1, j2, q, out);
    if (app.got_subcommand(spec)) return cmd_spectrum(j, q, route, out);
    if (app.got_subcommand(tfit)) return cmd_twist_fit(q, cutoff, target, triple, out);
    if (app.got_subcommand(cbound)) return cmd_comm_bound(q, jmax, out);
    if (app.got_subcommand(ver)) return cmd_verify(suite, seed);
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"]["type"] = "runtime";
    err["error"]["message"] = e.what();
    std::cerr << err.dump(1) << "\n";
    return 1;
  }
  return 2;
}
