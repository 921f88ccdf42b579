// End-to-end checks of the command-line tool: exit codes, file formats,
// determinism. argv[1] = path to the kzdirac binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok] " << what << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run(const std::string& cmd) { return std::system((cmd + " > /dev/null 2>&1").c_str()); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_checks <kzdirac binary>\n";
    return 1;
  }
  const std::string bin = argv[1];
  const std::string tmp = "/tmp/kzdirac_cli";
  (void)run("mkdir -p " + tmp);

  // usage error -> exit 2
  expect(run(bin + " associator") != 0, "missing flags rejected");

  // associator with a trivial leg: Phi = 1 to 1e-8
  {
    const std::string out = tmp + "/assoc.json";
    expect(run(bin + " associator --group su2 --reps 0,0.5,0.5 --q 0.5 --out " + out) == 0,
           "associator runs");
    const auto j = nlohmann::json::parse(slurp(out));
    double offid = 0.0;
    const auto& data = j.at("phi").at("data");
    const std::size_t n = j.at("phi").at("rows").get<std::size_t>();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const double re = data[r * n + c][0].get<double>();
        const double im = data[r * n + c][1].get<double>();
        const double want = (r == c) ? 1.0 : 0.0;
        offid = std::max(offid, std::abs(re - want) + std::abs(im));
      }
    expect(offid < 1e-8, "trivial-leg associator is the identity");
    expect(j.at("meta").at("config").at("q").get<double>() == 0.5, "config echoed in metadata");
  }

  // spectrum CSV: j=1/2 q=1/2 route rr -> 4 eigenvalues in 2 clusters
  {
    const std::string out = tmp + "/spec.csv";
    expect(run(bin + " spectrum --j 0.5 --q 0.5 --route rr --out " + out) == 0, "spectrum runs");
    const std::string text = slurp(out);
    expect(text.find("eigenvalue,multiplicity") != std::string::npos, "spectrum csv header");
    // expected classical values -5 sqrt2/4 (x3) and 3 sqrt2/4 (x1)
    std::istringstream is(text);
    std::string line;
    int rows = 0, total_mult = 0;
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#' || line.find("eigenvalue") == 0) continue;
      ++rows;
      const auto comma = line.find(',');
      total_mult += std::atoi(line.c_str() + comma + 1);
    }
    expect(rows == 2 && total_mult == 4, "spectrum has 4 eigenvalues in 2 clusters");
  }

  // determinism: identical invocations give identical bytes
  {
    const std::string o1 = tmp + "/r1.json", o2 = tmp + "/r2.json";
    expect(run(bin + " rmatrix --j1 0.5 --j2 0.5 --q 0.7 --out " + o1) == 0, "rmatrix runs");
    expect(run(bin + " rmatrix --j1 0.5 --j2 0.5 --q 0.7 --out " + o2) == 0, "rmatrix runs again");
    expect(slurp(o1) == slurp(o2) && !slurp(o1).empty(), "byte-identical outputs");
  }

  // comm-bound sweep writes the expected table
  {
    const std::string out = tmp + "/cb.csv";
    expect(run(bin + " comm-bound --q 0.5 --jmax 1 --out " + out) == 0, "comm-bound runs");
    const std::string text = slurp(out);
    expect(text.find("jprime,M,bound") != std::string::npos, "comm-bound csv header");
  }

  // twist-fit on the smallest cutoff
  {
    const std::string out = tmp + "/fit.json";
    expect(run(bin + " twist-fit --q 0.5 --cutoff 1 --target iii --out " + out) == 0,
           "twist-fit runs");
    const auto j = nlohmann::json::parse(slurp(out));
    expect(j.at("residual").get<double>() < 1e-6, "condition-iii fit residual small");
  }

  // invalid q rejected with structured error
  expect(run(bin + " spectrum --j 0.5 --q 1.5 --route rr --out " + tmp + "/x.csv") != 0,
         "q outside (0,1) rejected");

  if (failures == 0) std::cout << "cli_checks: all passed\n";
  return failures == 0 ? 0 : 1;
}
