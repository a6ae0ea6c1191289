#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "condgrad/geometry.hpp"

namespace condgrad {

// Region file (UTF-8 JSON):
//   {"n": 2, "rows": [{"a": [1, 0], "op": "<=", "b": 1}, ...]}
// op is one of "<=", ">=", "=". ">=" rows are negated and "=" rows emitted
// as a pair of inequalities, so the result is always in canonical
// a x <= b form.
inline Polyhedron region_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument("region: expected an object with 'n' and 'rows'");
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw std::invalid_argument("region: n must be positive");
  const std::size_t dim = static_cast<std::size_t>(n);

  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& r : j.at("rows")) {
    const Vec a = r.at("a").get<Vec>();
    if (a.size() != dim) throw std::invalid_argument("region: row length does not match n");
    const std::string op = r.at("op").get<std::string>();
    const double b = r.at("b").get<double>();
    const auto push = [&](double sgn) {
      Vec row(dim);
      for (std::size_t i = 0; i < dim; ++i) row[i] = sgn * a[i];
      rows.push_back(std::move(row));
      rhs.push_back(sgn * b);
    };
    if (op == "<=") {
      push(1.0);
    } else if (op == ">=") {
      push(-1.0);
    } else if (op == "=") {
      push(1.0);
      push(-1.0);
    } else {
      throw std::invalid_argument("region: unknown op '" + op + "'");
    }
  }

  Matrix a(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) a(i, k) = rows[i][k];
  return Polyhedron(std::move(a), std::move(rhs));
}

inline Polyhedron load_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("region: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("region: parse error in '" + path + "': " + e.what());
  }
  return region_from_json(j);
}

}  // namespace condgrad
