#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kzdirac/io.hpp"
#include "kzdirac/liealg.hpp"
#include "kzdirac/linalg.hpp"

using namespace kzdirac;

TEST_CASE("matrix json round trip is bit exact") {
  const MatC m = random_hermitian(5, 321);
  const nlohmann::ordered_json j = matrix_to_json(m);
  const MatC back = matrix_from_json(j);
  REQUIRE(back.rows() == m.rows());
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    CHECK(back.data()[i].real() == m.data()[i].real());
    CHECK(back.data()[i].imag() == m.data()[i].imag());
  }
}

TEST_CASE("json serialization is deterministic") {
  const MatC m = random_hermitian(4, 99);
  CHECK(matrix_to_json(m).dump() == matrix_to_json(m).dump());
}

TEST_CASE("lie basis and rep files round trip with validation") {
  const std::string base = "/tmp/kzdirac_test_basis.json";
  const std::string repf = "/tmp/kzdirac_test_rep.json";
  lie_basis_to_json(su2_basis(), base);
  const LieBasis b = lie_basis_from_json(base);
  CHECK(b.dim_g == 3);
  CHECK(b.name == "su2");
  rep_to_json(spin_irrep(2), repf);
  const Rep r = rep_from_json(repf);
  CHECK(r.dim == 3);
  CHECK(r.twice_spin == 2);
  std::remove(base.c_str());
  std::remove(repf.c_str());
}

TEST_CASE("corrupted basis file is rejected on load") {
  const std::string path = "/tmp/kzdirac_test_bad.json";
  {
    nlohmann::ordered_json j;
    j["name"] = "bad";
    j["dim_g"] = 1;
    MatC notskew(2, 2, {1, 0, 0, 1});
    j["matrices"] = nlohmann::ordered_json::array({matrix_to_json(notskew)});
    write_json_file(path, j);
  }
  CHECK_THROWS(lie_basis_from_json(path));
  std::remove(path.c_str());
}
