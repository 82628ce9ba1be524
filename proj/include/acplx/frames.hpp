#pragma once

// Geometric models (coordinate torus or Lie algebra frame), differential
// forms, vector fields, vector-valued forms, and the exterior calculus on them.
//
// Frame indices are 0-based in this API.  The structure-equation convention is
//   [e_i, e_j] = c^k_{ij} e_k,      d e^k = - sum_{i<j} c^k_{ij} e^i ^ e^j.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acplx/coeffring.hpp"

namespace acplx {

/// Strictly increasing multi-index (i_1 < ... < i_k) stored as a bit set.
struct MultiIndex {
  std::uint32_t bits = 0;

  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t b) : bits(b) {}
  static MultiIndex of(std::initializer_list<int> idx) {
    MultiIndex m;
    for (int i : idx) m.bits |= (1u << i);
    return m;
  }

  int degree() const { return std::popcount(bits); }
  bool contains(int i) const { return (bits >> i) & 1u; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Number of entries strictly below i.
  int count_below(int i) const { return std::popcount(bits & ((1u << i) - 1u)); }

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.bits == b.bits; }
  friend bool operator!=(MultiIndex a, MultiIndex b) { return a.bits != b.bits; }

  std::string to_string() const {
    std::string s;
    for (int i : indices()) s += std::to_string(i + 1);
    return s.empty() ? "()" : s;
  }
};

/// Degree first, then lexicographic order on the sorted index lists.
struct MultiIndexLess {
  bool operator()(MultiIndex a, MultiIndex b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint32_t diff = a.bits ^ b.bits;
    if (!diff) return false;
    std::uint32_t low = diff & (~diff + 1u);
    return (a.bits & low) != 0;
  }
};

/// Sign and result of e^I ^ e^J for basis monomials; nullopt when they overlap.
inline std::optional<std::pair<int, MultiIndex>> wedge_monomials(MultiIndex a, MultiIndex b) {
  if (a.bits & b.bits) return std::nullopt;
  int swaps = 0;
  for (std::uint32_t rest = b.bits; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a.bits >> (j + 1));
  }
  return std::make_pair((swaps & 1) ? -1 : 1, MultiIndex(a.bits | b.bits));
}

/// All multi-indices of a given degree in an n-dimensional frame, in MultiIndexLess order.
inline std::vector<MultiIndex> multi_indices(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    if (std::popcount(b) == k) out.emplace_back(b);
  }
  std::sort(out.begin(), out.end(), MultiIndexLess{});
  return out;
}

enum class FrameKind { CoordinateTorus, LieAlgebra };

inline const char* to_string(FrameKind k) {
  return k == FrameKind::CoordinateTorus ? "torus" : "lie";
}

/// One structure constant [e_i, e_j] = c e_k as supplied by a user, 0-based.
struct StructureConstant {
  int i = 0, j = 0, k = 0;
  Rational c;
};

/// Unvalidated model description.
struct RawModel {
  std::string name;
  int dim = 0;
  FrameKind kind = FrameKind::LieAlgebra;
  std::vector<StructureConstant> constants;
};

class Model {
 public:
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  FrameKind kind() const { return kind_; }
  bool is_torus() const { return kind_ == FrameKind::CoordinateTorus; }

  /// c^k_{ij}, antisymmetric in (i, j).
  const Rational& c(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  bool abelian() const {
    for (const auto& v : c_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  /// Nonzero structure constants with i < j, in (i, j, k) order.
  std::vector<StructureConstant> constants() const {
    std::vector<StructureConstant> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          if (sgn(c(i, j, k)) != 0) out.push_back({i, j, k, c(i, j, k)});
    return out;
  }

  TrigPoly zero() const { return TrigPoly(dim_); }
  TrigPoly scalar(const GaussianRational& v) const { return TrigPoly::constant(dim_, v); }

 private:
  friend std::shared_ptr<const Model> validate_model(const RawModel& raw);
  std::string name_;
  int dim_ = 0;
  FrameKind kind_ = FrameKind::LieAlgebra;
  std::vector<Rational> c_;
};

using ModelPtr = std::shared_ptr<const Model>;

/// Validates antisymmetry, parity of the dimension, the Jacobi identity and
/// the no-mixed-ring rule.  All violations are collected before throwing.
inline ModelPtr validate_model(const RawModel& raw) {
  std::vector<std::string> violations;
  ErrorCode first = ErrorCode::InvalidSpec;
  auto flag = [&](ErrorCode code, std::string msg) {
    if (violations.empty()) first = code;
    violations.push_back(std::move(msg));
  };

  const int n = raw.dim;
  if (n <= 0 || n > kMaxDim) {
    throw Error(ErrorCode::InvalidSpec, "dimension must lie in 1.." + std::to_string(kMaxDim));
  }
  if (n % 2 != 0) flag(ErrorCode::OddDimension, "dimension " + std::to_string(n) + " is odd");

  auto model = std::make_shared<Model>();
  model->name_ = raw.name;
  model->dim_ = n;
  model->kind_ = raw.kind;
  model->c_.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
  std::vector<bool> seen(static_cast<std::size_t>(n) * n * n, false);
  auto at = [&](int i, int j, int k) -> std::size_t { return (static_cast<std::size_t>(i) * n + j) * n + k; };

  for (const auto& sc : raw.constants) {
    if (sc.i < 0 || sc.j < 0 || sc.k < 0 || sc.i >= n || sc.j >= n || sc.k >= n) {
      throw Error(ErrorCode::InvalidSpec, "structure constant index out of range");
    }
    std::string where = "c^" + std::to_string(sc.k + 1) + "_{" + std::to_string(sc.i + 1) + std::to_string(sc.j + 1) + "}";
    if (sc.i == sc.j) {
      if (sgn(sc.c) != 0) flag(ErrorCode::Antisymmetry, where + " must vanish (repeated lower index)");
      continue;
    }
    auto put = [&](std::size_t idx, const Rational& v) {
      if (seen[idx] && model->c_[idx] != v) {
        flag(ErrorCode::Antisymmetry, where + " given inconsistently with its antisymmetric partner");
      }
      seen[idx] = true;
      model->c_[idx] = v;
    };
    put(at(sc.i, sc.j, sc.k), sc.c);
    put(at(sc.j, sc.i, sc.k), Rational(-sc.c));
  }

  if (raw.kind == FrameKind::CoordinateTorus && !model->abelian()) {
    flag(ErrorCode::MixedRing, "coordinate torus with nonzero structure constants is unsupported");
  }

  // sum_m c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj} = 0
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m) {
            s += model->c_[at(i, j, m)] * model->c_[at(m, k, l)];
            s += model->c_[at(j, k, m)] * model->c_[at(m, i, l)];
            s += model->c_[at(k, i, m)] * model->c_[at(m, j, l)];
          }
          if (sgn(s) != 0) {
            flag(ErrorCode::JacobiViolation,
                 "Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                     std::to_string(k + 1) + "): component e" + std::to_string(l + 1) + " equals " + s.get_str());
          }
        }

  if (!violations.empty()) {
    throw Error(first, violations.front(), violations);
  }
  return model;
}

inline void require_same(const ModelPtr& a, const ModelPtr& b) {
  if (a != b && !(a && b && a.get() == b.get())) {
    throw Error(ErrorCode::ModelMismatch, "operands live on different models");
  }
}

/// Degree-k differential form sum_I a_I e^I with ring-valued coefficients.
class Form {
 public:
  using Components = std::map<MultiIndex, TrigPoly, MultiIndexLess>;

  Form() = default;
  /// Degrees outside [0, n] are representable but such forms are always
  /// zero (no multi-index has that degree); they keep derivation formulas
  /// degree-consistent at the ends of the complex.
  Form(ModelPtr model, int degree) : model_(std::move(model)), degree_(degree) {
    if (degree_ < -kMaxDim || degree_ > 3 * kMaxDim) {
      throw Error(ErrorCode::DimensionMismatch, "form degree " + std::to_string(degree_) + " out of range");
    }
  }

  static Form function(ModelPtr model, TrigPoly f) {
    Form out(std::move(model), 0);
    out.add(MultiIndex{}, std::move(f));
    return out;
  }

  static Form basis(ModelPtr model, MultiIndex idx, const TrigPoly& coeff) {
    Form out(std::move(model), idx.degree());
    out.add(idx, coeff);
    return out;
  }

  /// e^i as a 1-form.
  static Form coframe(ModelPtr model, int i) {
    TrigPoly one = model->scalar(1);
    return basis(std::move(model), MultiIndex::of({i}), one);
  }

  const ModelPtr& model() const { return model_; }
  int degree() const { return degree_; }
  int dim() const { return model_->dim(); }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  TrigPoly component(MultiIndex idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? model_->zero() : it->second;
  }

  Form& add(MultiIndex idx, const TrigPoly& coeff) {
    if (idx.degree() != degree_) throw Error(ErrorCode::DimensionMismatch, "multi-index degree mismatch");
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = comps_.try_emplace(idx, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) comps_.erase(it);
    }
    return *this;
  }

  Form& operator+=(const Form& o) {
    check(o);
    for (const auto& [idx, c] : o.comps_) add(idx, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check(o);
    for (const auto& [idx, c] : o.comps_) add(idx, -c);
    return *this;
  }
  Form operator-() const {
    Form out = *this;
    for (auto& [idx, c] : out.comps_) c = -c;
    return out;
  }
  Form& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      comps_.clear();
      return *this;
    }
    for (auto& [idx, c] : comps_) c *= s;
    return *this;
  }
  Form& operator*=(const TrigPoly& f) {
    Components next;
    for (auto& [idx, c] : comps_) {
      TrigPoly v = c * f;
      if (!v.is_zero()) next.emplace(idx, std::move(v));
    }
    comps_ = std::move(next);
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const GaussianRational& s) { return a *= s; }
  friend Form operator*(const GaussianRational& s, Form a) { return a *= s; }
  friend Form operator*(const TrigPoly& f, Form a) { return a *= f; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.model_.get() == b.model_.get() && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  /// Value on an ordered tuple of frame vectors (e_{i_1}, ..., e_{i_k}).
  TrigPoly on_frame(const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != degree_) throw Error(ErrorCode::DimensionMismatch, "wrong slot count");
    MultiIndex idx;
    for (int s : slots) {
      if (idx.contains(s)) return model_->zero();
      idx.bits |= (1u << s);
    }
    // sign of the permutation sorting `slots`
    int inversions = 0;
    for (std::size_t a = 0; a < slots.size(); ++a)
      for (std::size_t b = a + 1; b < slots.size(); ++b)
        if (slots[a] > slots[b]) ++inversions;
    TrigPoly v = component(idx);
    return (inversions & 1) ? -v : v;
  }

  bool is_real() const {
    for (const auto& [idx, c] : comps_) {
      if (!c.conjugate_symmetric()) return false;
    }
    return true;
  }

  Form conj() const {
    Form out = *this;
    for (auto& [idx, c] : out.comps_) c = c.conj();
    return out;
  }

  std::string to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [idx, c] : comps_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.to_string() + ")";
      if (degree_ > 0) s += "*e^" + idx.to_string();
    }
    return s;
  }

 private:
  void check(const Form& o) const {
    require_same(model_, o.model_);
    if (degree_ != o.degree_) throw Error(ErrorCode::DimensionMismatch, "adding forms of different degree");
  }

  ModelPtr model_;
  int degree_ = 0;
  Components comps_;
};

/// X = X^j e_j.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(ModelPtr model) : model_(std::move(model)), comps_(model_->dim(), model_->zero()) {}
  VectorField(ModelPtr model, std::vector<TrigPoly> comps) : model_(std::move(model)), comps_(std::move(comps)) {
    if (static_cast<int>(comps_.size()) != model_->dim()) {
      throw Error(ErrorCode::DimensionMismatch, "vector field needs one component per frame vector");
    }
  }

  static VectorField frame(ModelPtr model, int j) {
    VectorField v(model);
    v.comps_[j] = model->scalar(1);
    return v;
  }

  const ModelPtr& model() const { return model_; }
  const TrigPoly& operator[](int j) const { return comps_[j]; }
  TrigPoly& operator[](int j) { return comps_[j]; }
  const std::vector<TrigPoly>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    require_same(model_, o.model_);
    for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += o.comps_[j];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    require_same(model_, o.model_);
    for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] -= o.comps_[j];
    return *this;
  }
  VectorField& operator*=(const TrigPoly& f) {
    for (auto& c : comps_) c = c * f;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const TrigPoly& f, VectorField a) { return a *= f; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.model_.get() == b.model_.get() && a.comps_ == b.comps_;
  }

  /// X(f) = X^i d_i f on the torus; invariant functions are constant.
  TrigPoly derivative_of(const TrigPoly& f) const {
    TrigPoly out = model_->zero();
    if (!model_->is_torus()) return out;
    for (int i = 0; i < model_->dim(); ++i) {
      if (comps_[i].is_zero()) continue;
      TrigPoly df = f.partial(i);
      if (!df.is_zero()) out += comps_[i] * df;
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int j = 0; j < model_->dim(); ++j) {
      if (comps_[j].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + comps_[j].to_string() + ")*e" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  ModelPtr model_;
  std::vector<TrigPoly> comps_;
};

/// K = K^j (x) e_j with K^j forms of a common degree.
class VectorForm {
 public:
  VectorForm() = default;
  VectorForm(ModelPtr model, int degree) : model_(std::move(model)), degree_(degree) {
    parts_.assign(model_->dim(), Form(model_, degree_));
  }
  VectorForm(ModelPtr model, std::vector<Form> parts) : model_(std::move(model)), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != model_->dim()) {
      throw Error(ErrorCode::DimensionMismatch, "vector-valued form needs one part per frame vector");
    }
    degree_ = parts_.empty() ? 0 : parts_[0].degree();
    for (const auto& p : parts_) {
      require_same(model_, p.model());
      if (p.degree() != degree_) throw Error(ErrorCode::DimensionMismatch, "parts of unequal degree");
    }
  }

  /// Endomorphism with K e_b = sum_a M[a][b] e_a, i.e. K^a = sum_b M[a][b] e^b.
  static VectorForm from_matrix(const ModelPtr& model, const std::vector<std::vector<TrigPoly>>& m) {
    int n = model->dim();
    if (static_cast<int>(m.size()) != n) throw Error(ErrorCode::DimensionMismatch, "matrix must be n x n");
    VectorForm out(model, 1);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(m[a].size()) != n) throw Error(ErrorCode::DimensionMismatch, "matrix must be n x n");
      for (int b = 0; b < n; ++b) out.parts_[a].add(MultiIndex::of({b}), m[a][b]);
    }
    return out;
  }

  static VectorForm identity(const ModelPtr& model) {
    VectorForm out(model, 1);
    for (int a = 0; a < model->dim(); ++a) out.parts_[a] = Form::coframe(model, a);
    return out;
  }

  const ModelPtr& model() const { return model_; }
  int degree() const { return degree_; }
  const std::vector<Form>& parts() const { return parts_; }
  const Form& part(int j) const { return parts_[j]; }
  Form& part(int j) { return parts_[j]; }

  bool is_zero() const {
    for (const auto& p : parts_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  /// Entry M[a][b] of a degree-1 vector form.
  TrigPoly entry(int a, int b) const { return parts_[a].component(MultiIndex::of({b})); }

  std::vector<std::vector<TrigPoly>> matrix() const {
    int n = model_->dim();
    std::vector<std::vector<TrigPoly>> m(n, std::vector<TrigPoly>(n, model_->zero()));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[a][b] = entry(a, b);
    return m;
  }

  /// K(e_{i_1}, ..., e_{i_k}).
  VectorField on_frame(const std::vector<int>& slots) const {
    VectorField v(model_);
    for (int j = 0; j < model_->dim(); ++j) v[j] = parts_[j].on_frame(slots);
    return v;
  }

  /// K X for a degree-1 vector form.
  VectorField apply(const VectorField& x) const {
    if (degree_ != 1) throw Error(ErrorCode::DimensionMismatch, "apply needs a vector-valued 1-form");
    VectorField out(model_);
    int n = model_->dim();
    for (int a = 0; a < n; ++a) {
      TrigPoly s = model_->zero();
      for (const auto& [idx, c] : parts_[a].components()) {
        int b = idx.indices().front();
        if (!x[b].is_zero()) s += c * x[b];
      }
      out[a] = std::move(s);
    }
    return out;
  }

  /// Maximal Fourier mode sup-norm among the coefficients.
  int max_mode_norm() const {
    int g = 0;
    for (const auto& p : parts_)
      for (const auto& [idx, c] : p.components()) g = std::max(g, c.max_mode_norm());
    return g;
  }

  /// Every Fourier mode occurring in a coefficient.
  std::vector<Mode> modes() const {
    std::vector<Mode> out;
    for (const auto& p : parts_)
      for (const auto& [idx, c] : p.components())
        for (const auto& t : c.terms()) out.push_back(t.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const VectorForm& a, const VectorForm& b) {
    return a.model_.get() == b.model_.get() && a.parts_ == b.parts_;
  }

  std::string to_string() const {
    std::string s;
    for (int j = 0; j < model_->dim(); ++j) {
      if (parts_[j].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "[" + parts_[j].to_string() + "] (x) e" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  ModelPtr model_;
  int degree_ = 0;
  std::vector<Form> parts_;
};

inline Form wedge(const Form& a, const Form& b) {
  require_same(a.model(), b.model());
  int deg = a.degree() + b.degree();
  const ModelPtr& model = a.model();
  Form out(model, deg);
  if (deg > model->dim()) return out;
  for (const auto& [ia, ca] : a.components()) {
    for (const auto& [ib, cb] : b.components()) {
      auto w = wedge_monomials(ia, ib);
      if (!w) continue;
      TrigPoly c = ca * cb;
      if (w->first < 0) c = -c;
      out.add(w->second, c);
    }
  }
  return out;
}

/// d e^m as a list of (sign * coefficient, e^{ij}) terms on a Lie model.
inline Form coframe_differential(const ModelPtr& model, int m) {
  Form out(model, 2);
  int n = model->dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational& c = model->c(i, j, m);
      if (sgn(c) != 0) out.add(MultiIndex::of({i, j}), model->scalar(Rational(-c)));
    }
  return out;
}

inline Form ext_d(const Form& a) {
  const ModelPtr& model = a.model();
  int n = model->dim();
  Form out(model, a.degree() + 1);
  if (a.degree() >= n || a.degree() < 0) return out;
  if (model->is_torus()) {
    for (const auto& [idx, c] : a.components()) {
      for (int i = 0; i < n; ++i) {
        if (idx.contains(i)) continue;
        TrigPoly dc = c.partial(i);
        if (dc.is_zero()) continue;
        int sign = (idx.count_below(i) & 1) ? -1 : 1;
        out.add(MultiIndex(idx.bits | (1u << i)), sign < 0 ? -dc : dc);
      }
    }
    return out;
  }
  // Invariant forms have constant coefficients: d(c e^I) = c d(e^I), with
  // d(e^{i1} ^ ... ^ e^{ik}) = sum_r (-1)^r e^{i1..} ^ de^{ir} ^ e^{..ik}.
  for (const auto& [idx, c] : a.components()) {
    std::vector<int> ids = idx.indices();
    for (std::size_t r = 0; r < ids.size(); ++r) {
      MultiIndex left, right;
      for (std::size_t s = 0; s < ids.size(); ++s) {
        if (s < r) left.bits |= (1u << ids[s]);
        if (s > r) right.bits |= (1u << ids[s]);
      }
      int sign = (r & 1) ? -1 : 1;
      Form de = coframe_differential(model, ids[r]);
      for (const auto& [pair_idx, pc] : de.components()) {
        auto w1 = wedge_monomials(left, pair_idx);
        if (!w1) continue;
        auto w2 = wedge_monomials(w1->second, right);
        if (!w2) continue;
        int s = sign * w1->first * w2->first;
        TrigPoly term = c * pc;
        out.add(w2->second, s < 0 ? -term : term);
      }
    }
  }
  return out;
}

/// iota_X alpha, contraction in the first slot.
inline Form interior_vector(const VectorField& x, const Form& a) {
  require_same(x.model(), a.model());
  const ModelPtr& model = a.model();
  Form out(model, a.degree() - 1);
  for (const auto& [idx, c] : a.components()) {
    for (int j : idx.indices()) {
      if (x[j].is_zero()) continue;
      TrigPoly term = x[j] * c;
      if (idx.count_below(j) & 1) term = -term;
      out.add(MultiIndex(idx.bits & ~(1u << j)), term);
    }
  }
  return out;
}

/// iota_{e_j} alpha.
inline Form interior_frame(int j, const Form& a) {
  Form out(a.model(), a.degree() - 1);
  for (const auto& [idx, c] : a.components()) {
    if (!idx.contains(j)) continue;
    out.add(MultiIndex(idx.bits & ~(1u << j)), (idx.count_below(j) & 1) ? -c : c);
  }
  return out;
}

/// [X,Y]^k = X(Y^k) - Y(X^k) + X^i Y^j c^k_{ij}.
inline VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  require_same(x.model(), y.model());
  const ModelPtr& model = x.model();
  int n = model->dim();
  VectorField out(model);
  for (int k = 0; k < n; ++k) out[k] = x.derivative_of(y[k]) - y.derivative_of(x[k]);
  if (!model->abelian()) {
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j || y[j].is_zero()) continue;
        TrigPoly xy = x[i] * y[j];
        for (int k = 0; k < n; ++k) {
          const Rational& c = model->c(i, j, k);
          if (sgn(c) != 0) out[k] += xy * GaussianRational(c);
        }
      }
    }
  }
  return out;
}

}  // namespace acplx
