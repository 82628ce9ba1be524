#pragma once

// Algebraic and Nijenhuis-Lie derivations of vector-valued forms, the
// Nijenhuis tensor, the J-action on forms, d^c, and the identity suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acplx/frames.hpp"

namespace acplx {

/// iota_K alpha = K^j ^ (iota_{e_j} alpha); degree deg(alpha) + deg(K) - 1.
inline Form iota_vform(const VectorForm& k, const Form& a) {
  require_same(k.model(), a.model());
  Form out(a.model(), a.degree() + k.degree() - 1);
  if (a.degree() == 0 || out.degree() > a.dim()) return out;
  for (int j = 0; j < a.dim(); ++j) {
    if (k.part(j).is_zero()) continue;
    Form contracted = interior_frame(j, a);
    if (contracted.is_zero()) continue;
    out += wedge(k.part(j), contracted);
  }
  return out;
}

/// L_K alpha = iota_K(d alpha) - (-1)^{k-1} d(iota_K alpha).
inline Form lie_vform(const VectorForm& k, const Form& a) {
  Form out = iota_vform(k, ext_d(a));
  Form second = ext_d(iota_vform(k, a));
  if ((k.degree() - 1) % 2 == 0) {
    out -= second;
  } else {
    out += second;
  }
  return out;
}

/// K o L for degree-1 vector forms (matrix product of endomorphisms).
inline VectorForm compose(const VectorForm& k, const VectorForm& l) {
  require_same(k.model(), l.model());
  const ModelPtr& model = k.model();
  int n = model->dim();
  auto km = k.matrix();
  auto lm = l.matrix();
  std::vector<std::vector<TrigPoly>> m(n, std::vector<TrigPoly>(n, model->zero()));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (km[a][c].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (!lm[c][b].is_zero()) m[a][b] += km[a][c] * lm[c][b];
      }
    }
  return VectorForm::from_matrix(model, m);
}

inline bool is_almost_complex(const VectorForm& j) {
  if (j.degree() != 1) return false;
  VectorForm sq = compose(j, j);
  VectorForm minus_id = VectorForm::identity(j.model());
  for (int a = 0; a < j.model()->dim(); ++a) minus_id.part(a) = -minus_id.part(a);
  return sq == minus_id;
}

/// Evaluates a vector-valued 2-form on two vector fields (tensorial in both slots).
inline VectorField eval2(const VectorForm& k, const VectorField& x, const VectorField& y) {
  const ModelPtr& model = k.model();
  int n = model->dim();
  VectorField out(model);
  for (int c = 0; c < n; ++c) {
    for (const auto& [idx, coeff] : k.part(c).components()) {
      auto ids = idx.indices();
      int a = ids[0], b = ids[1];
      // e^{ab}(X, Y) = X^a Y^b - X^b Y^a
      TrigPoly v = x[a] * y[b] - x[b] * y[a];
      if (!v.is_zero()) out[c] += coeff * v;
    }
  }
  return out;
}

/// N(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY] on frame pairs.
inline VectorForm nijenhuis(const VectorForm& j) {
  if (!is_almost_complex(j)) throw Error(ErrorCode::NotAlmostComplex, "J o J != -I");
  const ModelPtr& model = j.model();
  int n = model->dim();
  VectorForm out(model, 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VectorField x = VectorField::frame(model, a);
      VectorField y = VectorField::frame(model, b);
      VectorField jx = j.apply(x);
      VectorField jy = j.apply(y);
      VectorField v = vf_bracket(x, y) + j.apply(vf_bracket(jx, y)) + j.apply(vf_bracket(x, jy)) - vf_bracket(jx, jy);
      for (int c = 0; c < n; ++c) out.part(c).add(MultiIndex::of({a, b}), v[c]);
    }
  }
  return out;
}

/// (J.N)(X,Y) = J(N(JX, JY)).
inline VectorForm jn_twist_tensor(const VectorForm& j, const VectorForm& nij) {
  require_same(j.model(), nij.model());
  const ModelPtr& model = j.model();
  int n = model->dim();
  VectorForm out(model, 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VectorField jx = j.apply(VectorField::frame(model, a));
      VectorField jy = j.apply(VectorField::frame(model, b));
      VectorField v = j.apply(eval2(nij, jx, jy));
      for (int c = 0; c < n; ++c) out.part(c).add(MultiIndex::of({a, b}), v[c]);
    }
  }
  return out;
}

/// (J.alpha)(X_1..X_k) = alpha(JX_1, ..., JX_k); on e^i this is the 1-form J^i.
inline Form form_J_action(const VectorForm& j, const Form& a) {
  require_same(j.model(), a.model());
  const ModelPtr& model = a.model();
  Form out(model, a.degree());
  for (const auto& [idx, c] : a.components()) {
    Form acc = Form::function(model, c);
    for (int i : idx.indices()) acc = wedge(acc, j.part(i));
    out += acc;
  }
  return out;
}

/// d^c alpha = J^{-1} d (J alpha) with J^{-1} = -J, i.e. (-1)^{k+1} J.d(J.alpha).
inline Form dc(const VectorForm& j, const Form& a) {
  Form out = form_J_action(j, ext_d(form_J_action(j, a)));
  if ((a.degree() + 1) % 2 == 1) out = -out;
  return out;
}

/// A model together with an almost complex structure and its derived tensors.
struct AlmostComplex {
  ModelPtr model;
  VectorForm J;
  VectorForm N;
  VectorForm JN;
  VectorForm I;

  bool integrable() const { return N.is_zero(); }
};

/// Checks J^2 = -I exactly and that invariant models carry constant J.
inline AlmostComplex make_almost_complex(const ModelPtr& model, const VectorForm& j) {
  require_same(model, j.model());
  if (!model->is_torus()) {
    for (const auto& p : j.parts())
      for (const auto& [idx, c] : p.components())
        if (!c.is_constant()) throw Error(ErrorCode::MixedRing, "invariant model needs a constant J");
  }
  for (const auto& p : j.parts())
    for (const auto& [idx, c] : p.components())
      if (!c.conjugate_symmetric()) throw Error(ErrorCode::BadParameter, "J must be real");
  AlmostComplex ac;
  ac.model = model;
  ac.J = j;
  ac.N = nijenhuis(j);
  ac.JN = jn_twist_tensor(j, ac.N);
  ac.I = VectorForm::identity(model);
  return ac;
}

// ---------------------------------------------------------------------------
// Identity suite

struct IdentityResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<IdentityResult> results;

  bool all_passed() const {
    for (const auto& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }
};

/// Deterministic generator of small test forms.  Uses raw engine output so
/// that the stream is identical across standard libraries.
class FormSampler {
 public:
  FormSampler(ModelPtr model, std::uint64_t seed) : model_(std::move(model)), rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational small_rational() {
    int num = uniform(-3, 3);
    if (num == 0) num = 1;
    return make_rational(num, uniform(1, 3));
  }

  /// Real trig polynomial with modes in {-1,0,1}^n (constant on invariant models).
  TrigPoly coefficient() {
    int n = model_->dim();
    if (!model_->is_torus()) return model_->scalar(small_rational());
    std::vector<TrigPoly::Term> terms;
    int count = uniform(1, 3);
    for (int t = 0; t < count; ++t) {
      Mode m;
      for (int a = 0; a < n; ++a) m[a] = static_cast<std::int16_t>(uniform(-1, 1));
      GaussianRational c(small_rational(), uniform(0, 1) ? small_rational() : Rational(0));
      if (m.is_zero()) c = GaussianRational(c.re());
      terms.emplace_back(m, c);
      if (!m.is_zero()) terms.emplace_back(-m, c.conj());
    }
    return TrigPoly::from_terms(n, std::move(terms), true);
  }

  Form form(int degree) {
    Form out(model_, degree);
    auto idx = multi_indices(model_->dim(), degree);
    if (idx.empty()) return out;
    int count = uniform(1, std::min<int>(3, static_cast<int>(idx.size())));
    for (int t = 0; t < count; ++t) out.add(idx[uniform(0, static_cast<int>(idx.size()) - 1)], coefficient());
    return out;
  }

 private:
  ModelPtr model_;
  std::mt19937_64 rng_;
};

/// Spanning set of a truncated window: e^{i m.x} e^I for |m|_inf <= bound
/// (exponential basis; identities are C-linear so this suffices).
inline std::vector<Form> window_spanning_set(const ModelPtr& model, int bound) {
  int n = model->dim();
  std::vector<Mode> modes{Mode{}};
  if (model->is_torus()) {
    for (int a = 0; a < n; ++a) {
      std::vector<Mode> next;
      for (const auto& m : modes)
        for (int v = -bound; v <= bound; ++v) {
          Mode mm = m;
          mm[a] = static_cast<std::int16_t>(v);
          next.push_back(mm);
        }
      modes = std::move(next);
    }
  }
  std::vector<Form> out;
  for (int k = 0; k <= n; ++k)
    for (auto idx : multi_indices(n, k))
      for (const auto& m : modes) out.push_back(Form::basis(model, idx, TrigPoly::exponential(n, m, 1)));
  return out;
}

namespace detail {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  IdentityResult take() { return std::move(result_); }

 private:
  IdentityResult result_;
};

inline bool graded_sign_negative(int exponent) { return (exponent % 2 + 2) % 2 == 1; }

}  // namespace detail

/// Runs the seven identity families on seeded random forms of every degree:
///  (i)   derivation rules for iota_K and L_K
///  (ii)  (iota_K a)(X_1..X_k) = a(K(X_1..X_k)) on 1-forms
///  (iii) [d, L_J] = 0, [d, L_N] = 0
///  (iv)  L_J^2 = -L_N
///  (v)   [L_J, L_N] = 0
///  (vi)  L_J = iota_J d on functions, L_J = -d iota_J in top degree
///  (vii) d^c = -L_J - iota_{J.N}
/// Families (iii), (iv), (v) and (vii) are additionally checked on the
/// spanning set of the mode-bound-1 window (or the invariant basis).
inline IdentityReport identity_suite(const AlmostComplex& ac, int samples, std::uint64_t seed = 20240611,
                                     bool operator_level = true) {
  const ModelPtr& model = ac.model;
  const int n = model->dim();
  FormSampler sampler(model, seed);
  IdentityReport report;
  report.seed = seed;
  report.samples = samples;

  detail::Tally deriv("derivation property of iota_K and L_K");
  detail::Tally alg1("iota_K on 1-forms evaluates K");
  detail::Tally commd("[d, L_J] = 0 and [d, L_N] = 0");
  detail::Tally square("L_J^2 = -L_N");
  detail::Tally commjn("[L_J, L_N] = 0");
  detail::Tally special("L_J = iota_J d on functions, -d iota_J in top degree");
  detail::Tally twist("d^c = -L_J - iota_{J.N}");

  const std::vector<std::pair<const char*, const VectorForm*>> tensors{
      {"J", &ac.J}, {"N", &ac.N}, {"I", &ac.I}, {"J.N", &ac.JN}};

  auto commutator_checks = [&](const Form& a) {
    auto show = [&a] { return "alpha = " + a.to_string(); };
    Form lj = lie_vform(ac.J, a);
    Form ln = lie_vform(ac.N, a);
    Form da = ext_d(a);
    commd.check((ext_d(lj) + lie_vform(ac.J, da)).is_zero(), show);
    commd.check((ext_d(ln) - lie_vform(ac.N, da)).is_zero(), show);
    square.check((lie_vform(ac.J, lj) + ln).is_zero(), show);
    commjn.check((lie_vform(ac.J, ln) - lie_vform(ac.N, lj)).is_zero(), show);
    twist.check((dc(ac.J, a) + lj + iota_vform(ac.JN, a)).is_zero(), show);
  };

  for (int p = 0; p <= n; ++p) {
    for (int s = 0; s < samples; ++s) {
      Form a = sampler.form(p);
      int q = sampler.uniform(0, n - p);
      Form b = sampler.form(q);
      auto show = [&] { return "alpha = " + a.to_string() + ", beta = " + b.to_string(); };

      for (const auto& [name, k] : tensors) {
        int kd = k->degree();
        Form ab = wedge(a, b);
        Form lhs = iota_vform(*k, ab);
        Form rhs = wedge(iota_vform(*k, a), b);
        Form tail = wedge(a, iota_vform(*k, b));
        rhs = detail::graded_sign_negative((kd - 1) * p) ? rhs - tail : rhs + tail;
        deriv.check(lhs == rhs, [&, name = name] { return std::string("iota_") + name + ": " + show(); });

        Form llhs = lie_vform(*k, ab);
        Form lrhs = wedge(lie_vform(*k, a), b);
        Form ltail = wedge(a, lie_vform(*k, b));
        lrhs = detail::graded_sign_negative(kd * p) ? lrhs - ltail : lrhs + ltail;
        deriv.check(llhs == lrhs, [&, name = name] { return std::string("L_") + name + ": " + show(); });
      }

      if (p == 1) {
        for (const auto& [name, k] : tensors) {
          Form ia = iota_vform(*k, a);
          if (k->degree() == 1) {
            for (int x = 0; x < n; ++x) {
              VectorField kx = k->on_frame({x});
              TrigPoly expect = model->zero();
              for (int c = 0; c < n; ++c) expect += a.component(MultiIndex::of({c})) * kx[c];
              alg1.check(ia.on_frame({x}) == expect, show);
            }
          } else {
            for (int x = 0; x < n; ++x)
              for (int y = x + 1; y < n; ++y) {
                VectorField kxy = k->on_frame({x, y});
                TrigPoly expect = model->zero();
                for (int c = 0; c < n; ++c) expect += a.component(MultiIndex::of({c})) * kxy[c];
                alg1.check(ia.on_frame({x, y}) == expect, show);
              }
          }
        }
      }

      commutator_checks(a);

      if (p == 0) special.check(lie_vform(ac.J, a) == iota_vform(ac.J, ext_d(a)), show);
      if (p == n) special.check(lie_vform(ac.J, a) == -ext_d(iota_vform(ac.J, a)), show);
    }
  }

  if (operator_level) {
    for (const Form& basis_form : window_spanning_set(model, 1)) commutator_checks(basis_form);
  }

  for (auto* t : {&deriv, &alg1, &commd, &square, &commjn, &special, &twist}) report.results.push_back(t->take());
  return report;
}

}  // namespace acplx
