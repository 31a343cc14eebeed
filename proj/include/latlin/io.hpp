#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latlin/qinterval.hpp"

namespace latlin {

// A parsed system file: {"algebra": "...", "A": [[...]], "w": [...]} with all
// element literals as strings.
struct SystemFile {
  Algebra alg;
  Matrix A;
  Vector w;
};

inline SystemFile system_from_json(const nlohmann::json& j,
                                   const std::optional<std::string>& algebra_override = std::nullopt) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "system file must be a JSON object");
  std::string algebra_name;
  if (algebra_override) {
    algebra_name = *algebra_override;
  } else if (j.contains("algebra") && j.at("algebra").is_string()) {
    algebra_name = j.at("algebra").get<std::string>();
  } else {
    throw Error(ErrorCode::ParseError, "missing \"algebra\" field");
  }
  Algebra alg = Algebra::from_name(algebra_name);

  if (!j.contains("A") || !j.at("A").is_array() || j.at("A").empty()) {
    throw Error(ErrorCode::ParseError, "\"A\" must be a non-empty array of rows");
  }
  if (!j.contains("w") || !j.at("w").is_array() || j.at("w").empty()) {
    throw Error(ErrorCode::ParseError, "\"w\" must be a non-empty array");
  }

  std::vector<std::vector<Element>> rows;
  std::size_t width = 0;
  for (const auto& row : j.at("A")) {
    if (!row.is_array() || row.empty()) throw Error(ErrorCode::ParseError, "matrix rows must be non-empty arrays");
    if (width == 0) width = row.size();
    if (row.size() != width) throw Error(ErrorCode::ParseError, "matrix rows have unequal lengths");
    std::vector<Element> entries;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw Error(ErrorCode::ParseError, "element literals must be strings");
      entries.push_back(parse_element(alg, cell.get<std::string>()));
    }
    rows.push_back(std::move(entries));
  }

  std::vector<Element> w_entries;
  for (const auto& cell : j.at("w")) {
    if (!cell.is_string()) throw Error(ErrorCode::ParseError, "element literals must be strings");
    w_entries.push_back(parse_element(alg, cell.get<std::string>()));
  }
  if (w_entries.size() != rows.size()) {
    throw Error(ErrorCode::ParseError, "\"w\" length must equal the number of matrix rows");
  }

  return SystemFile{alg, Matrix::from_rows(alg, rows), Vector(alg, std::move(w_entries))};
}

inline SystemFile load_system(const std::string& path,
                              const std::optional<std::string>& algebra_override = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(j, algebra_override);
}

inline nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 1; i <= v.size(); ++i) out.push_back(format_element(v.at(i)));
  return out;
}

inline nlohmann::json system_to_json(const SystemFile& sys) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 1; i <= sys.A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= sys.A.cols(); ++j) row.push_back(format_element(sys.A.at(i, j)));
    a.push_back(std::move(row));
  }
  return nlohmann::json{{"algebra", sys.alg.name()}, {"A", std::move(a)}, {"w", vector_to_json(sys.w)}};
}

inline nlohmann::json member_to_json(const QuasiInterval& q) {
  nlohmann::json lo_exc = nlohmann::json::array();
  for (int k : q.lower_excluded) lo_exc.push_back(k);
  nlohmann::json hi_exc = nlohmann::json::array();
  for (int k : q.upper_excluded) hi_exc.push_back(k);
  return nlohmann::json{{"lower", vector_to_json(q.lower)},
                        {"upper", vector_to_json(q.upper)},
                        {"lowerExcluded", std::move(lo_exc)},
                        {"upperExcluded", std::move(hi_exc)}};
}

inline Vector vector_from_json(const Algebra& alg, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "vector must be a non-empty array");
  std::vector<Element> entries;
  for (const auto& cell : j) {
    if (!cell.is_string()) throw Error(ErrorCode::ParseError, "element literals must be strings");
    entries.push_back(parse_element(alg, cell.get<std::string>()));
  }
  return Vector(alg, std::move(entries));
}

inline QuasiInterval member_from_json(const Algebra& alg, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "region member must be a JSON object");
  Vector lower = vector_from_json(alg, j.at("lower"));
  Vector upper = vector_from_json(alg, j.at("upper"));
  IndexSet lo_exc;
  IndexSet hi_exc;
  if (j.contains("lowerExcluded")) {
    for (const auto& k : j.at("lowerExcluded")) lo_exc.insert(k.get<int>());
  }
  if (j.contains("upperExcluded")) {
    for (const auto& k : j.at("upperExcluded")) hi_exc.insert(k.get<int>());
  }
  return QuasiInterval(std::move(lower), std::move(upper), std::move(lo_exc), std::move(hi_exc));
}

inline nlohmann::json region_members_to_json(const SolutionRegion& region) {
  nlohmann::json members = nlohmann::json::array();
  for (const QuasiInterval& q : region.members) members.push_back(member_to_json(q));
  return members;
}

}  // namespace latlin
