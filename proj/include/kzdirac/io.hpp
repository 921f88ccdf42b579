#ifndef KZDIRAC_IO_HPP
#define KZDIRAC_IO_HPP

#include <string>

#include <json.hpp>

#include "kzdirac/matc.hpp"

namespace kzdirac {

/// Repo-wide matrix dump format:
/// {"rows":r,"cols":c,"data":[[re,im],...]} row-major, bit-exact doubles.
nlohmann::ordered_json matrix_to_json(const MatC& m);
MatC matrix_from_json(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::ordered_json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace kzdirac

#endif
