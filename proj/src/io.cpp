#include "kzdirac/io.hpp"

#include <fstream>

#include "kzdirac/errors.hpp"

namespace kzdirac {

nlohmann::ordered_json matrix_to_json(const MatC& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (const auto& v : m.data()) data.push_back({v.real(), v.imag()});
  j["data"] = std::move(data);
  return j;
}

MatC matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  if (data.size() != rows * cols) throw BadInput("matrix json: data size != rows*cols");
  MatC m(rows, cols);
  std::size_t i = 0;
  for (const auto& e : data) {
    m.data()[i++] = cplx(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return m;
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream f(path);
  if (!f) throw BadInput("cannot open for writing: " + path);
  f << j.dump(1) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BadInput("cannot open for reading: " + path);
  nlohmann::json j;
  f >> j;
  return j;
}

}  // namespace kzdirac
