#pragma once

// Built-in models: coordinate tori with nonconstant J, nilpotent Lie algebras,
// and flat controls.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acplx/derivations.hpp"

namespace acplx {

struct ModelCatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string parameters;
  std::string description;
  bool from_literature = true;
};

inline const std::vector<ModelCatalogEntry>& model_catalog() {
  static const std::vector<ModelCatalogEntry> catalog{
      {"example27_torus", {"example27"}, "p: trig polynomial in x1 only (default sin(x1))",
       "T^4 with J = [[0,1,p,0],[-1,0,0,p],[0,0,0,-1],[0,0,1,0]]; integrable iff p is constant",
       true},
      {"t4_nonstandard", {"t4"}, "f, g: trig polynomials (default f = sin(x1), g = 0)",
       "T^4 with J = [[0,1,f,-g],[-1,0,g,f],[0,0,0,-1],[0,0,1,0]]; integrable iff f, g are constant in x1, x2",
       true},
      {"iwasawa", {}, "none",
       "invariant complex of the complex Heisenberg group quotient (Iwasawa manifold), complex structure "
       "J e1 = e2, J e3 = e4, J e5 = e6",
       true},
      {"kodaira_thurston", {}, "none",
       "invariant complex of Heisenberg x R with de4 = e12, J e1 = e2, J e3 = e4 (extra test bed)", false},
      {"flat_kahler_torus", {}, "n: even dimension (default 4)",
       "T^n with the constant standard complex structure", true},
      {"abelian", {}, "n: even dimension (default 4)", "abelian Lie algebra R^n with constant standard J", true},
  };
  return catalog;
}

/// Canonical name for a builtin or its alias; empty when unknown.
inline std::string canonical_model_name(const std::string& name) {
  for (const auto& e : model_catalog()) {
    if (e.name == name) return e.name;
    for (const auto& a : e.aliases)
      if (a == name) return e.name;
  }
  return {};
}

namespace detail {

inline std::vector<std::vector<TrigPoly>> zero_matrix(const ModelPtr& m) {
  return std::vector<std::vector<TrigPoly>>(m->dim(), std::vector<TrigPoly>(m->dim(), m->zero()));
}

/// J e_{2j} = -e_{2j+1}, J e_{2j+1} = e_{2j} in 0-based indices (the block of the example tori).
inline std::vector<std::vector<TrigPoly>> torus_block_j(const ModelPtr& m) {
  auto j = zero_matrix(m);
  for (int b = 0; b + 1 < m->dim(); b += 2) {
    j[b][b + 1] = m->scalar(1);
    j[b + 1][b] = m->scalar(-1);
  }
  return j;
}

/// J e_{2j} = e_{2j+1} (0-based), the usual convention on Lie algebras.
inline std::vector<std::vector<TrigPoly>> standard_j(const ModelPtr& m) {
  auto j = zero_matrix(m);
  for (int b = 0; b + 1 < m->dim(); b += 2) {
    j[b + 1][b] = m->scalar(1);
    j[b][b + 1] = m->scalar(-1);
  }
  return j;
}

/// [[0,1,.,.],[-1,0,.,.],[0,0,0,-1],[0,0,1,0]] with the upper-right block left zero.
inline std::vector<std::vector<TrigPoly>> example_j(const ModelPtr& m) {
  auto j = zero_matrix(m);
  j[0][1] = m->scalar(1);
  j[1][0] = m->scalar(-1);
  j[2][3] = m->scalar(-1);
  j[3][2] = m->scalar(1);
  return j;
}

inline void require_even(int n) {
  if (n <= 0 || n % 2 != 0 || n > kMaxDim)
    throw Error(ErrorCode::BadParameter, "dimension must be even and in 2.." + std::to_string(kMaxDim));
}

inline void require_real(const TrigPoly& f, const char* what) {
  if (f.dim() != 4) throw Error(ErrorCode::BadParameter, std::string(what) + " must be a function on the 4-torus");
  if (!f.conjugate_symmetric()) throw Error(ErrorCode::BadParameter, std::string(what) + " must be real");
}

}  // namespace detail

inline AlmostComplex example27_torus(const TrigPoly& p) {
  detail::require_real(p, "p");
  for (int a = 1; a < 4; ++a)
    if (p.depends_on(a)) throw Error(ErrorCode::BadParameter, "p must depend on x1 only");
  auto m = validate_model({"example27_torus", 4, FrameKind::CoordinateTorus, {}});
  auto j = detail::example_j(m);
  j[0][2] = p;
  j[1][3] = p;
  return make_almost_complex(m, VectorForm::from_matrix(m, j));
}

inline AlmostComplex t4_nonstandard(const TrigPoly& f, const TrigPoly& g) {
  detail::require_real(f, "f");
  detail::require_real(g, "g");
  auto m = validate_model({"t4_nonstandard", 4, FrameKind::CoordinateTorus, {}});
  auto j = detail::example_j(m);
  j[0][2] = f;
  j[0][3] = -g;
  j[1][2] = g;
  j[1][3] = f;
  return make_almost_complex(m, VectorForm::from_matrix(m, j));
}

inline AlmostComplex iwasawa() {
  // [e1,e3] = e5, [e2,e4] = -e5, [e1,e4] = e6, [e2,e3] = e6 (1-based)
  RawModel raw{"iwasawa", 6, FrameKind::LieAlgebra, {}};
  auto add = [&](int i, int j, int k, long c) {
    raw.constants.push_back({i, j, k, Rational(c)});
    raw.constants.push_back({j, i, k, Rational(-c)});
  };
  add(0, 2, 4, 1);
  add(1, 3, 4, -1);
  add(0, 3, 5, 1);
  add(1, 2, 5, 1);
  auto m = validate_model(raw);
  auto ac = make_almost_complex(m, VectorForm::from_matrix(m, detail::standard_j(m)));
  if (!ac.integrable()) throw Error(ErrorCode::AssemblyBug, "Iwasawa complex structure must be integrable");
  return ac;
}

inline AlmostComplex kodaira_thurston() {
  // [e1,e2] = -e4, so de4 = e12 (1-based)
  RawModel raw{"kodaira_thurston", 4, FrameKind::LieAlgebra, {}};
  raw.constants.push_back({0, 1, 3, Rational(-1)});
  raw.constants.push_back({1, 0, 3, Rational(1)});
  auto m = validate_model(raw);
  return make_almost_complex(m, VectorForm::from_matrix(m, detail::standard_j(m)));
}

inline AlmostComplex flat_kahler_torus(int n = 4) {
  detail::require_even(n);
  auto m = validate_model({"flat_kahler_torus", n, FrameKind::CoordinateTorus, {}});
  return make_almost_complex(m, VectorForm::from_matrix(m, detail::torus_block_j(m)));
}

/// Abelian Lie algebra with a constant J (standard when omitted).
inline AlmostComplex abelian(int n = 4, std::optional<std::vector<std::vector<Rational>>> j = std::nullopt) {
  detail::require_even(n);
  auto m = validate_model({"abelian", n, FrameKind::LieAlgebra, {}});
  auto mat = detail::standard_j(m);
  if (j) {
    if (static_cast<int>(j->size()) != n) throw Error(ErrorCode::DimensionMismatch, "J must be n x n");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>((*j)[a].size()) != n) throw Error(ErrorCode::DimensionMismatch, "J must be n x n");
      for (int b = 0; b < n; ++b) mat[a][b] = m->scalar((*j)[a][b]);
    }
  }
  return make_almost_complex(m, VectorForm::from_matrix(m, mat));
}

/// Parameters for builtin(): trig polynomials by name and an optional dimension.
struct BuiltinParams {
  std::map<std::string, TrigPoly> functions;
  std::optional<int> n;
};

inline AlmostComplex builtin(const std::string& name, const BuiltinParams& params = {}) {
  const std::string canon = canonical_model_name(name);
  auto fn = [&](const std::string& key, TrigPoly fallback) {
    auto it = params.functions.find(key);
    return it == params.functions.end() ? fallback : it->second;
  };
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params.functions) {
      bool ok = false;
      for (auto key : keys) ok = ok || k == key;
      if (!ok) throw Error(ErrorCode::BadParameter, "model " + canon + " has no parameter '" + k + "'");
    }
  };
  if (canon == "example27_torus") {
    allow({"p"});
    return example27_torus(fn("p", TrigPoly::sin_of(4, unit_mode(0))));
  }
  if (canon == "t4_nonstandard") {
    allow({"f", "g"});
    return t4_nonstandard(fn("f", TrigPoly::sin_of(4, unit_mode(0))), fn("g", TrigPoly(4)));
  }
  if (canon == "iwasawa") {
    allow({});
    return iwasawa();
  }
  if (canon == "kodaira_thurston") {
    allow({});
    return kodaira_thurston();
  }
  if (canon == "flat_kahler_torus") {
    allow({});
    return flat_kahler_torus(params.n.value_or(4));
  }
  if (canon == "abelian") {
    allow({});
    return abelian(params.n.value_or(4));
  }
  throw Error(ErrorCode::InvalidSpec, "unknown builtin model '" + name + "'");
}

}  // namespace acplx
