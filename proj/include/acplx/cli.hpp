#pragma once

// Command-line front end.  run() never exits the process; it returns
// 0 (ok), 1 (a check failed) or 2 (bad input).

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acplx/complexes.hpp"
#include "acplx/dolbeault.hpp"
#include "acplx/modelspec.hpp"
#include "acplx/models.hpp"
#include "acplx/parser.hpp"
#include "acplx/report.hpp"

namespace acplx {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// "N0..N1", "N" or "a,b,c".
inline std::vector<int> parse_windows(const std::string& text) {
  std::vector<int> out;
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::InvalidWindow, "bad window '" + s + "'");
    return std::stoi(s);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::InvalidWindow, "empty window range " + text);
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(number(part));
  if (out.empty()) throw Error(ErrorCode::InvalidWindow, "no windows given");
  return out;
}

namespace detail {

struct ModelOptions {
  std::string model;
  std::string p, f, g;
  int n = 0;
  std::string windows;
  std::string format = "text";
};

struct Resolved {
  AlmostComplex ac;
  std::vector<int> spec_windows;
};

inline Resolved resolve_model(const ModelOptions& o) {
  if (std::filesystem::exists(o.model)) {
    auto spec = load_model_spec(o.model);
    return {spec.structure, spec.windows};
  }
  if (canonical_model_name(o.model).empty())
    throw Error(ErrorCode::InvalidSpec, "'" + o.model + "' is neither a spec file nor a builtin model (see list-models)");
  BuiltinParams params;
  if (!o.p.empty()) params.functions["p"] = parse_expr(o.p, 4);
  if (!o.f.empty()) params.functions["f"] = parse_expr(o.f, 4);
  if (!o.g.empty()) params.functions["g"] = parse_expr(o.g, 4);
  if (o.n) params.n = o.n;
  return {builtin(o.model, params), {}};
}

inline std::vector<Window> resolve_windows(const Resolved& r, const std::string& text) {
  if (!r.ac.model->is_torus()) return {Window::Invariant()};
  std::vector<int> ns = text.empty() ? r.spec_windows : parse_windows(text);
  if (ns.empty()) ns = {1};
  std::vector<Window> out;
  for (int n : ns) out.push_back(Window::truncated(n));
  return out;
}

inline void add_model_options(CLI::App* cmd, ModelOptions& o, bool windows) {
  cmd->add_option("model", o.model, "builtin model name or JSON spec file")->required();
  cmd->add_option("--p", o.p, "p(x1) for example27_torus");
  cmd->add_option("--f", o.f, "f for t4_nonstandard");
  cmd->add_option("--g", o.g, "g for t4_nonstandard");
  cmd->add_option("--n", o.n, "dimension for flat_kahler_torus / abelian");
  if (windows) cmd->add_option("--windows", o.windows, "truncation windows: N0..N1, N or a,b,c");
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with almost complex structures", "acplx"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  detail::ModelOptions mo;
  std::string spec_path;
  std::string theory;
  int degree = 0;
  int samples = 20;
  std::uint64_t seed = 20240611;

  auto* validate = app.add_subcommand("validate", "validate a JSON model spec");
  validate->add_option("spec", spec_path, "spec file")->required();
  validate->add_option("--format", mo.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* list = app.add_subcommand("list-models", "list builtin models");
  auto* nij = app.add_subcommand("nijenhuis", "print the Nijenhuis tensor");
  detail::add_model_options(nij, mo, false);
  auto* ids = app.add_subcommand("identities", "run the identity suite");
  detail::add_model_options(ids, mo, false);
  ids->add_option("--samples", samples, "random samples per degree");
  ids->add_option("--seed", seed, "random seed");
  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions over truncation windows");
  detail::add_model_options(coh, mo, true);
  coh->add_option("--theory", theory, "deRham, J, N, Ntwist or dolbeault")
      ->required()
      ->check(CLI::IsMember({"deRham", "J", "N", "Ntwist", "dolbeault"}));
  coh->add_option("--degree", degree, "form degree")->required();
  auto* phi = app.add_subcommand("phi", "rank of H^k_J -> H^k_dR");
  detail::add_model_options(phi, mo, true);
  phi->add_option("--degree", degree, "form degree")->required();
  auto* lemma = app.add_subcommand("lemma", "dL_J-lemma quotient dimension");
  detail::add_model_options(lemma, mo, true);
  lemma->add_option("--degree", degree, "form degree")->required();
  auto* conn = app.add_subcommand("connecting", "dimension of the connecting image");
  detail::add_model_options(conn, mo, true);
  conn->add_option("--degree", degree, "form degree")->required();
  auto* cross = app.add_subcommand("crosscheck", "compare the dL_J-lemma with the phi criteria degree by degree");
  detail::add_model_options(cross, mo, false);
  auto* big = app.add_subcommand("bigraded", "checks of the bigraded layer (integrable invariant models)");
  detail::add_model_options(big, mo, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const bool json = mo.format == "json";
  try {
    if (validate->parsed()) {
      auto spec = load_model_spec(spec_path);
      const auto& ac = spec.structure;
      Json j{{"command", "validate"},
             {"model", ac.model->name()},
             {"dim", ac.model->dim()},
             {"kind", to_string(ac.model->kind())},
             {"verdicts", {{"valid", true}, {"integrable", ac.integrable()}}},
             {"version", kVersion}};
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << "valid: " << ac.model->name() << " (" << to_string(ac.model->kind()) << ", dim " << ac.model->dim()
            << "), J " << (ac.integrable() ? "integrable" : "not integrable") << "\n";
      }
      return kExitOk;
    }
    if (list->parsed()) {
      for (const auto& e : model_catalog()) {
        out << e.name;
        if (!e.aliases.empty()) out << " (alias " << e.aliases.front() << ")";
        out << "\n  parameters: " << e.parameters << "\n  " << e.description
            << (e.from_literature ? "" : "\n  note: not from the literature examples, extra test bed") << "\n";
      }
      return kExitOk;
    }

    auto resolved = detail::resolve_model(mo);
    const auto& ac = resolved.ac;
    if (nij->parsed()) {
      if (json) {
        Json comps = Json::object();
        int n = ac.model->dim();
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            auto v = eval2(ac.N, VectorField::frame(ac.model, i), VectorField::frame(ac.model, j));
            if (!v.is_zero()) comps["N" + std::to_string(i + 1) + std::to_string(j + 1)] = v.to_string();
          }
        out << Json{{"command", "nijenhuis"}, {"model", ac.model->name()}, {"components", comps},
                    {"verdicts", {{"integrable", ac.integrable()}}}, {"version", kVersion}}
                   .dump(2)
            << "\n";
      } else {
        out << "N = " << ac.N.to_string() << "\n" << (ac.integrable() ? "integrable" : "not integrable") << "\n";
      }
      return kExitOk;
    }
    if (ids->parsed()) {
      if (samples < 1) throw Error(ErrorCode::BadParameter, "--samples must be positive");
      auto rep = identity_suite(ac, samples, seed);
      if (json) {
        out << to_json(rep, ac.model->name()).dump(2) << "\n";
      } else {
        for (const auto& r : rep.results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
          if (r.counterexample) out << "  counterexample: " << *r.counterexample;
          out << "\n";
        }
      }
      return rep.all_passed() ? kExitOk : kExitCheckFailed;
    }
    if (big->parsed() || (coh->parsed() && theory == "dolbeault")) {
      Bigraded b(ac);
      if (coh->parsed()) {
        auto rep = dolbeault_cohomology(b, degree);
        if (json) {
          Json j = to_json(rep);
          j["command"] = "cohomology";
          j["theory"] = "dolbeault";
          j["model"] = ac.model->name();
          j["version"] = kVersion;
          out << j.dump(2) << "\n";
        } else {
          out << "model " << ac.model->name() << "  theory dolbeault  degree " << degree << "\n  dim " << rep.dim << "  (";
          bool first = true;
          for (const auto& [pq, h] : rep.hodge) {
            out << (first ? "" : ", ") << "h^" << pq.first << "," << pq.second << " = " << h;
            first = false;
          }
          out << ")\n";
        }
        return kExitOk;
      }
      Json rows = Json::array();
      bool ok = true;
      auto psi_rows = psi_crosscheck(b);
      for (int k = 0; k <= b.n(); ++k) {
        auto [left, right] = parity_quotients(b, k);
        bool inter = parity_interchanges(b, k), intw = parity_intertwines(b, k);
        bool row_ok = inter && intw && left == right && psi_rows[k].agrees;
        ok = ok && row_ok;
        rows.push_back({{"degree", k},
                        {"P_intertwines", intw},
                        {"P_interchanges", inter},
                        {"im_d_ker_LJ_quotient", left},
                        {"im_LJ_ker_d_quotient", right},
                        {"ddbar_quotient", psi_rows[k].ddbar_quotient},
                        {"psi_injective", psi_rows[k].psi_injective},
                        {"psi_prev_surjective", psi_rows[k].psi_prev_surjective},
                        {"agrees", psi_rows[k].agrees}});
      }
      Json j{{"command", "bigraded"}, {"model", ac.model->name()}, {"rows", rows},
             {"verdicts", {{"all_passed", ok}}}, {"version", kVersion}};
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << "model " << ac.model->name() << "\n";
        for (const auto& r : rows) {
          out << "k=" << r["degree"] << "  LJ P = -iPd: " << (r["P_intertwines"].get<bool>() ? "yes" : "NO")
              << "  P swaps im d/im LJ, ker LJ/ker d: " << (r["P_interchanges"].get<bool>() ? "yes" : "NO")
              << "  quotients " << r["im_d_ker_LJ_quotient"] << "/" << r["im_LJ_ker_d_quotient"]
              << "  ddbar quotient " << r["ddbar_quotient"] << "  psi criteria agree: "
              << (r["agrees"].get<bool>() ? "yes" : "NO") << "\n";
        }
        out << (ok ? "all checks passed" : "CHECK FAILED") << "\n";
      }
      return ok ? kExitOk : kExitCheckFailed;
    }

    Realization r(ac);
    if (cross->parsed()) {
      auto rep = dlj_crosscheck(r);
      out << (json ? to_json(rep).dump(2) + "\n" : render_text(rep));
      return rep.passed() ? kExitOk : kExitCheckFailed;
    }

    auto windows = detail::resolve_windows(resolved, mo.windows);
    if (coh->parsed()) {
      auto rep = cohomology(r, *theory_from_string(theory), degree, windows);
      out << (json ? to_json(rep).dump(2) + "\n" : render_text(rep));
      return kExitOk;
    }
    Json list_json = Json::array();
    std::ostringstream text;
    if (phi->parsed()) {
      for (const auto& w : windows) {
        auto m = phi_map(r, degree, w);
        list_json.push_back(to_json(m));
        text << w.to_string() << ": H_J dim " << m.source << " -> H_dR dim " << m.target << ", rank " << m.rank
             << (m.injective ? ", injective" : "") << (m.surjective ? ", surjective" : "") << "\n";
      }
    } else if (lemma->parsed()) {
      for (const auto& w : windows) {
        auto l = lemma_check(r, degree, w);
        list_json.push_back(to_json(l));
        text << w.to_string() << ": (im L_J ∩ ker d)/im dL_J = " << l.numerator_dim << " - " << l.denominator_dim
             << " = " << l.dim << (l.dim == 0 ? "  (lemma holds)" : "  (lemma fails)") << "\n";
      }
    } else if (conn->parsed()) {
      for (const auto& w : windows) {
        auto c = connecting_image(r, degree, w);
        list_json.push_back({{"N", window_json(w)}, {"dim", c}});
        text << w.to_string() << ": connecting image dim " << c << "\n";
      }
    }
    const std::string cmd = phi->parsed() ? "phi" : lemma->parsed() ? "lemma" : "connecting";
    if (json) {
      out << Json{{"command", cmd}, {"model", ac.model->name()}, {"degree", degree}, {"windows", list_json},
                  {"version", kVersion}}
                 .dump(2)
          << "\n";
    } else {
      out << "model " << ac.model->name() << "  " << cmd << "  degree " << degree << "\n" << text.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    for (std::size_t i = 1; i < e.details().size(); ++i) err << "  also: " << e.details()[i] << "\n";
    return is_input_error(e.code()) ? kExitInputError : kExitCheckFailed;
  }
}

}  // namespace acplx
