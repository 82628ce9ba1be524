#pragma once

// JSON model-spec files.  Indices in files are 1-based.
//
// {
//   "name": "kodaira_thurston",
//   "kind": "lie",                      // or "torus"
//   "dim": 4,
//   "J": [["0", "-1", "0", "0"], ...],  // J e_b = sum_a J[a][b] e_a
//   "structure_constants": [{"i": 1, "j": 2, "k": 4, "c": "-1"}],
//   "windows": [1, 2]
// }

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acplx/derivations.hpp"
#include "acplx/parser.hpp"

namespace acplx {

struct ModelSpec {
  AlmostComplex structure;
  std::vector<int> windows;
};

namespace detail {

inline std::string scalar_text(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::InvalidSpec, where + " must be an integer or an expression string");
}

inline Rational rational_text(const std::string& s, const std::string& where) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidSpec, where + ": '" + s + "' is not a rational number");
  }
}

inline ModelSpec parse_model_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidSpec, "model spec must be a JSON object");
  for (const char* key : {"name", "kind", "dim", "J"})
    if (!j.contains(key)) throw Error(ErrorCode::InvalidSpec, std::string("missing field '") + key + "'");

  RawModel raw;
  if (!j.at("name").is_string()) throw Error(ErrorCode::InvalidSpec, "name must be a string");
  raw.name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "lie" || kind == "LieAlgebra") {
    raw.kind = FrameKind::LieAlgebra;
  } else if (kind == "torus" || kind == "CoordinateTorus") {
    raw.kind = FrameKind::CoordinateTorus;
  } else {
    throw Error(ErrorCode::InvalidSpec, "kind must be \"lie\" or \"torus\"");
  }
  if (!j.at("dim").is_number_integer()) throw Error(ErrorCode::InvalidSpec, "dim must be an integer");
  raw.dim = j.at("dim").get<int>();
  if (raw.dim < 1 || raw.dim > kMaxDim) throw Error(ErrorCode::InvalidSpec, "dim must lie in 1.." + std::to_string(kMaxDim));

  if (j.contains("structure_constants")) {
    const auto& sc = j.at("structure_constants");
    if (!sc.is_array()) throw Error(ErrorCode::InvalidSpec, "structure_constants must be a list");
    for (const auto& e : sc) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") || !e.contains("c"))
        throw Error(ErrorCode::InvalidSpec, "each structure constant needs i, j, k, c");
      StructureConstant c;
      c.i = e.at("i").get<int>() - 1;
      c.j = e.at("j").get<int>() - 1;
      c.k = e.at("k").get<int>() - 1;
      c.c = detail::rational_text(scalar_text(e.at("c"), "structure constant"), "structure constant");
      raw.constants.push_back(c);
    }
  }
  ModelPtr model = validate_model(raw);

  const auto& jm = j.at("J");
  if (!jm.is_array() || static_cast<int>(jm.size()) != raw.dim)
    throw Error(ErrorCode::DimensionMismatch, "J must have " + std::to_string(raw.dim) + " rows");
  std::vector<std::vector<TrigPoly>> mat;
  for (int a = 0; a < raw.dim; ++a) {
    const auto& row = jm[a];
    if (!row.is_array() || static_cast<int>(row.size()) != raw.dim)
      throw Error(ErrorCode::DimensionMismatch, "J row " + std::to_string(a + 1) + " must have " + std::to_string(raw.dim) + " entries");
    std::vector<TrigPoly> r;
    for (int b = 0; b < raw.dim; ++b) r.push_back(parse_expr(scalar_text(row[b], "J entry"), raw.dim));
    mat.push_back(std::move(r));
  }
  ModelSpec spec{make_almost_complex(model, VectorForm::from_matrix(model, mat)), {}};

  if (j.contains("windows")) {
    const auto& w = j.at("windows");
    if (!w.is_array()) throw Error(ErrorCode::InvalidSpec, "windows must be a list of naturals");
    for (const auto& v : w) {
      if (!v.is_number_integer() || v.get<int>() < 0) throw Error(ErrorCode::InvalidSpec, "windows must be naturals");
      spec.windows.push_back(v.get<int>());
    }
  }
  return spec;
}

}  // namespace detail

inline ModelSpec model_spec_from_json(const nlohmann::json& j) {
  try {
    return detail::parse_model_spec(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, e.what());
  }
}

inline ModelSpec load_model_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidSpec, path + ": " + e.what());
  }
  return model_spec_from_json(j);
}

}  // namespace acplx
