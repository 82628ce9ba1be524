#pragma once

// Machine-readable reports.  nlohmann::json objects keep keys sorted, so
// the output is diffable.

#include <sstream>
#include <string>

#include <json.hpp>

#include "acplx/complexes.hpp"
#include "acplx/dolbeault.hpp"

namespace acplx {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

inline Json window_json(const Window& w) { return w.invariant ? Json("invariant") : Json(w.N); }

inline Window window_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "invariant") return Window::Invariant();
  return Window::truncated(j.get<int>());
}

inline Json to_json(const CohomologyReport& r) {
  Json windows = Json::array();
  for (const auto& w : r.windows) {
    windows.push_back({{"N", window_json(w.window)},
                       {"numerator_dim", w.numerator_dim},
                       {"denominator_dim", w.denominator_dim},
                       {"dim", w.dim},
                       {"codomain_N", w.codomain_N},
                       {"incoming_N", w.incoming_N}});
  }
  Json reps = Json::array();
  for (const auto& f : r.representatives) reps.push_back(f.to_string());
  return {{"command", "cohomology"},
          {"model", r.model},
          {"theory", to_string(r.theory)},
          {"degree", r.degree},
          {"windows", windows},
          {"stabilized", r.stabilized},
          {"exact", r.exact},
          {"representatives", reps},
          {"verdicts", Json::object()},
          {"seed", nullptr},
          {"version", kVersion}};
}

/// Inverse of to_json for the numeric part (representatives are not re-parsed).
inline CohomologyReport cohomology_report_from_json(const Json& j) {
  CohomologyReport r;
  r.model = j.at("model").get<std::string>();
  auto t = theory_from_string(j.at("theory").get<std::string>());
  if (!t) throw Error(ErrorCode::InvalidSpec, "unknown theory in report");
  r.theory = *t;
  r.degree = j.at("degree").get<int>();
  for (const auto& w : j.at("windows")) {
    WindowResult res;
    res.window = window_from_json(w.at("N"));
    res.numerator_dim = w.at("numerator_dim").get<std::size_t>();
    res.denominator_dim = w.at("denominator_dim").get<std::size_t>();
    res.dim = w.at("dim").get<std::size_t>();
    res.codomain_N = w.at("codomain_N").get<int>();
    res.incoming_N = w.at("incoming_N").get<int>();
    r.windows.push_back(res);
  }
  r.stabilized = j.at("stabilized").get<bool>();
  r.exact = j.value("exact", false);
  return r;
}

inline Json to_json(const MapReport& m) {
  return {{"degree", m.degree}, {"N", window_json(m.window)}, {"source_dim", m.source}, {"target_dim", m.target},
          {"rank", m.rank},     {"injective", m.injective},   {"surjective", m.surjective}};
}

inline Json to_json(const LemmaReport& l) {
  return {{"degree", l.degree},
          {"N", window_json(l.window)},
          {"numerator_dim", l.numerator_dim},
          {"denominator_dim", l.denominator_dim},
          {"dim", l.dim},
          {"image_domain_N", l.image_domain_N}};
}

inline Json to_json(const CrosscheckReport& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"degree", r.degree},
                    {"lemma_quotient", r.lemma_quotient},
                    {"lemma_holds", r.lemma_holds},
                    {"phi_injective", r.phi_injective},
                    {"phi_prev_surjective", r.phi_prev_surjective},
                    {"phi_criterion", r.phi_injective && r.phi_prev_surjective},
                    {"agrees", r.agrees}});
  }
  Json phi = Json::array();
  for (const auto& m : c.phi) phi.push_back(to_json(m));
  return {{"command", "crosscheck"}, {"model", c.model},       {"rows", rows},
          {"phi", phi},              {"verdicts", {{"equivalence_holds", c.passed()}}},
          {"seed", nullptr},         {"version", kVersion}};
}

inline Json to_json(const IdentityReport& r, const std::string& model) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json e{{"name", x.name}, {"passed", x.passed}, {"checks", x.checks}};
    e["counterexample"] = x.counterexample ? Json(*x.counterexample) : Json(nullptr);
    results.push_back(e);
  }
  return {{"command", "identities"},
          {"model", model},
          {"samples", r.samples},
          {"results", results},
          {"verdicts", {{"all_passed", r.all_passed()}}},
          {"seed", r.seed},
          {"version", kVersion}};
}

inline Json to_json(const DolbeaultReport& d) {
  Json hodge = Json::object();
  for (const auto& [pq, h] : d.hodge) hodge[std::to_string(pq.first) + "," + std::to_string(pq.second)] = h;
  return {{"degree", d.degree}, {"dim", d.dim}, {"hodge", hodge}};
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.insert(0, w - s.size(), ' ');
  return s;
}

inline std::string render_text(const CohomologyReport& r) {
  std::ostringstream os;
  os << "model " << r.model << "  theory " << to_string(r.theory) << "  degree " << r.degree << "\n";
  os << pad("window", 10) << pad("numerator", 11) << pad("denominator", 13) << pad("dim", 6) << pad("codomain", 10)
     << "\n";
  for (const auto& w : r.windows) {
    os << pad(w.window.invariant ? "invariant" : std::to_string(w.window.N), 10) << pad(std::to_string(w.numerator_dim), 11)
       << pad(std::to_string(w.denominator_dim), 13) << pad(std::to_string(w.dim), 6)
       << pad(w.window.invariant ? "-" : std::to_string(w.codomain_N), 10) << "\n";
  }
  os << (r.exact ? "exact (invariant complex)" : (r.stabilized ? "stabilized over the last two windows" : "not stabilized"))
     << "\n";
  for (const auto& f : r.representatives) os << "  rep: " << f.to_string() << "\n";
  return os.str();
}

inline std::string render_text(const CrosscheckReport& c) {
  std::ostringstream os;
  os << "model " << c.model << "\n";
  os << pad("k", 3) << pad("lemma_quot", 12) << pad("phi_k inj", 11) << pad("phi_k-1 surj", 14) << pad("agrees", 8) << "\n";
  for (const auto& r : c.rows) {
    os << pad(std::to_string(r.degree), 3) << pad(std::to_string(r.lemma_quotient), 12)
       << pad(r.phi_injective ? "yes" : "no", 11) << pad(r.phi_prev_surjective ? "yes" : "no", 14)
       << pad(r.agrees ? "yes" : "NO", 8) << "\n";
  }
  os << (c.passed() ? "equivalence holds in every degree" : "EQUIVALENCE VIOLATED") << "\n";
  return os.str();
}

}  // namespace acplx
