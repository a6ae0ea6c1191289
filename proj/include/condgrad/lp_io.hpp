#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "condgrad/lp.hpp"

namespace condgrad {

// LP file (UTF-8 JSON):
//   {"c": [...], "a_ub": [[...], ...], "b_ub": [...],
//    "lower": [...], "upper": [...]}
// "lower"/"upper" are optional (default unbounded); a null entry means
// -inf / +inf respectively.
inline LinearProgram lp_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("c"))
    throw std::invalid_argument("lp file: expected an object with 'c'");
  LinearProgram lp;
  lp.c = j.at("c").get<Vec>();
  const std::size_t n = lp.c.size();
  if (n == 0) throw std::invalid_argument("lp file: empty objective");

  const auto& a = j.value("a_ub", nlohmann::json::array());
  const auto& b = j.value("b_ub", nlohmann::json::array());
  if (a.size() != b.size()) throw std::invalid_argument("lp file: a_ub/b_ub row count mismatch");
  lp.a_ub = Matrix(a.size(), n);
  lp.b_ub.resize(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec row = a[i].get<Vec>();
    if (row.size() != n) throw std::invalid_argument("lp file: a_ub row length mismatch");
    for (std::size_t k = 0; k < n; ++k) lp.a_ub(i, k) = row[k];
    lp.b_ub[i] = b[i].get<double>();
  }

  const auto parse_bounds = [&](const char* key, double missing) {
    Vec out(n, missing);
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (arr.size() != n) throw std::invalid_argument(std::string("lp file: bad ") + key + " length");
    for (std::size_t k = 0; k < n; ++k)
      if (!arr[k].is_null()) out[k] = arr[k].get<double>();
    return out;
  };
  lp.lower = parse_bounds("lower", -kInfinity);
  lp.upper = parse_bounds("upper", kInfinity);
  return lp;
}

inline LinearProgram load_lp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("lp file: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("lp file: parse error in '" + path + "': " + e.what());
  }
  return lp_from_json(j);
}

}  // namespace condgrad
