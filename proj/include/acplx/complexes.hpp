#pragma once

// Finite realizations of the complexes built from d, L_J and L_N: invariant
// forms on Lie models, Fourier-truncated forms on coordinate tori.
//
// Forms are expanded in the real basis cos(m.x) e^I, sin(m.x) e^I with m
// folded to the half-space m >= 0.  Every operator is block diagonal with
// respect to the orbits of modes under the shifts occurring in J and N, so
// all quotients are computed block by block and summed.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "acplx/derivations.hpp"
#include "acplx/linalg.hpp"

namespace acplx {

struct Window {
  bool invariant = false;
  int N = 0;

  static Window Invariant() { return {true, 0}; }
  static Window truncated(int n) { return {false, n}; }

  std::string to_string() const { return invariant ? std::string("invariant") : "N=" + std::to_string(N); }
  friend bool operator==(const Window&, const Window&) = default;
};

enum class Operator { D, LJ, LN, IotaJ, DLJ };
enum class Theory { deRham, J, N, Ntwist };

inline const char* to_string(Operator op) {
  switch (op) {
    case Operator::D: return "d";
    case Operator::LJ: return "L_J";
    case Operator::LN: return "L_N";
    case Operator::IotaJ: return "iota_J";
    case Operator::DLJ: return "dL_J";
  }
  return "?";
}

inline const char* to_string(Theory t) {
  switch (t) {
    case Theory::deRham: return "deRham";
    case Theory::J: return "J";
    case Theory::N: return "N";
    case Theory::Ntwist: return "Ntwist";
  }
  return "?";
}

inline std::optional<Theory> theory_from_string(const std::string& s) {
  if (s == "deRham") return Theory::deRham;
  if (s == "J") return Theory::J;
  if (s == "N") return Theory::N;
  if (s == "Ntwist") return Theory::Ntwist;
  return std::nullopt;
}

inline int operator_degree(Operator op) {
  switch (op) {
    case Operator::D: return 1;
    case Operator::LJ: return 1;
    case Operator::LN: return 2;
    case Operator::IotaJ: return 0;
    case Operator::DLJ: return 2;
  }
  return 0;
}

/// One real basis element: cos or sin of m.x times e^I (m = 0 has only the cos part).
struct BasisKey {
  MultiIndex idx;
  Mode mode;
  bool imag = false;

  friend bool operator==(const BasisKey& a, const BasisKey& b) {
    return a.idx == b.idx && a.mode == b.mode && a.imag == b.imag;
  }
};

struct BasisKeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    if (a.idx != b.idx) return MultiIndexLess{}(a.idx, b.idx);
    if (a.mode != b.mode) return a.mode < b.mode;
    return a.imag < b.imag;
  }
};

inline TrigPoly basis_function(int dim, const Mode& m, bool imag) {
  if (m.is_zero()) return TrigPoly::constant(dim, 1);
  return imag ? TrigPoly::sin_of(dim, m) : TrigPoly::cos_of(dim, m);
}

inline Form basis_form(const ModelPtr& model, const BasisKey& key) {
  return Form::basis(model, key.idx, basis_function(model->dim(), key.mode, key.imag));
}

/// Real coordinates of a real form in the cos/sin basis.
inline std::vector<std::pair<BasisKey, Rational>> real_coordinates(const Form& a) {
  std::vector<std::pair<BasisKey, Rational>> out;
  for (const auto& [idx, c] : a.components()) {
    if (!c.conjugate_symmetric()) throw Error(ErrorCode::AssemblyBug, "operator produced a non-real form");
    for (const auto& [m, v] : c.terms()) {
      if (m.is_zero()) {
        out.push_back({{idx, m, false}, v.re()});
      } else if (m.is_positive()) {
        if (sgn(v.re()) != 0) out.push_back({{idx, m, false}, Rational(2 * v.re())});
        if (sgn(v.im()) != 0) out.push_back({{idx, m, true}, Rational(-2 * v.im())});
      }
    }
  }
  return out;
}

/// Modes m >= 0 with sup norm <= bound, lexicographic.
inline std::vector<Mode> half_modes(int dim, int bound) {
  std::vector<Mode> out;
  if (bound < 0) return out;
  Mode m;
  for (int a = 0; a < dim; ++a) m[a] = static_cast<std::int16_t>(-bound);
  while (true) {
    if (m.is_zero() || m.is_positive()) out.push_back(m);
    int a = dim - 1;
    while (a >= 0 && m[a] == bound) {
      m[a] = static_cast<std::int16_t>(-bound);
      --a;
    }
    if (a < 0) break;
    ++m[a];
  }
  return out;
}

struct BasisDescriptor {
  ModelPtr model;
  int degree = 0;
  Window window;
  std::vector<BasisKey> elements;

  std::size_t size() const { return elements.size(); }

  std::optional<std::size_t> index_of(const BasisKey& key) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), key, BasisKeyLess{});
    if (it == elements.end() || !(*it == key)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }

  Form element(std::size_t i) const { return basis_form(model, elements[i]); }

  /// Form with the given real coordinates.
  Form form(const std::vector<Scalar>& coords) const {
    Form out(model, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      out += element(i) * coords[i];
    }
    return out;
  }
};

inline void check_window(const ModelPtr& model, const Window& w) {
  if (model->is_torus() && w.invariant)
    throw Error(ErrorCode::InvalidWindow, "coordinate torus models need a truncation window N");
  if (!model->is_torus() && !w.invariant)
    throw Error(ErrorCode::InvalidWindow, "Lie algebra models only admit the invariant window");
  if (!w.invariant && (w.N < 0 || w.N > 64))
    throw Error(ErrorCode::InvalidWindow, "window N must lie in 0..64, got " + std::to_string(w.N));
}

inline std::vector<BasisKey> keys_for(int dim, int degree, const std::vector<Mode>& modes, int bound) {
  std::vector<BasisKey> out;
  if (bound < 0) return out;
  for (auto idx : multi_indices(dim, degree))
    for (const auto& m : modes) {
      if (m.sup_norm() > bound) continue;
      out.push_back({idx, m, false});
      if (!m.is_zero()) out.push_back({idx, m, true});
    }
  return out;
}

inline BasisDescriptor basis_window(const ModelPtr& model, int k, const Window& window) {
  check_window(model, window);
  BasisDescriptor b{model, k, window, {}};
  b.elements = keys_for(model->dim(), k, half_modes(model->dim(), window.invariant ? 0 : window.N), window.invariant ? 0 : window.N);
  return b;
}

struct AssembledOperator {
  Operator op;
  ExactMatrix matrix;
  BasisDescriptor domain;
  BasisDescriptor codomain;
};

namespace detail {

inline int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("ACPLX_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, hw);
  }
  return hw;
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::size_t next = 0;
  std::mutex next_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard lock(next_mutex);
          if (next >= count) return;
          i = next++;
        }
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

struct WindowResult {
  Window window;
  std::size_t numerator_dim = 0;
  std::size_t denominator_dim = 0;
  std::size_t dim = 0;
  int codomain_N = 0;     // window of the outgoing operators' values
  int incoming_N = 0;     // window of the incoming operator's domain
};

struct CohomologyReport {
  std::string model;
  Theory theory = Theory::deRham;
  int degree = 0;
  std::vector<WindowResult> windows;
  bool stabilized = false;
  bool exact = false;  // invariant complex: no truncation
  std::vector<Form> representatives;
};

struct MapReport {
  int degree = 0;
  Window window;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
};

struct LemmaReport {
  int degree = 0;
  Window window;
  std::size_t numerator_dim = 0;
  std::size_t denominator_dim = 0;
  std::size_t dim = 0;
  int image_domain_N = 0;
};

struct CrosscheckRow {
  int degree = 0;
  std::size_t lemma_quotient = 0;
  bool lemma_holds = false;
  bool phi_injective = false;
  bool phi_prev_surjective = false;
  bool agrees = false;
};

struct CrosscheckReport {
  std::string model;
  std::vector<CrosscheckRow> rows;
  std::vector<MapReport> phi;
  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agrees; });
  }
};

/// Operator images on basis elements with caching and mode-orbit blocks.
class Realization {
 public:
  explicit Realization(AlmostComplex ac) : ac_(std::move(ac)) {
    g_j_ = ac_.J.max_mode_norm();
    g_n_ = ac_.N.max_mode_norm();
    for (const auto& m : ac_.J.modes()) shifts_.push_back(m);
    for (const auto& m : ac_.N.modes()) shifts_.push_back(m);
    std::sort(shifts_.begin(), shifts_.end());
    shifts_.erase(std::unique(shifts_.begin(), shifts_.end()), shifts_.end());
    shifts_.erase(std::remove_if(shifts_.begin(), shifts_.end(), [](const Mode& m) { return m.is_zero(); }),
                  shifts_.end());
  }

  const AlmostComplex& structure() const { return ac_; }
  const ModelPtr& model() const { return ac_.model; }
  int dim() const { return ac_.model->dim(); }

  int growth(Operator op) const {
    switch (op) {
      case Operator::D: return 0;
      case Operator::LJ:
      case Operator::IotaJ:
      case Operator::DLJ: return g_j_;
      case Operator::LN: return g_n_;
    }
    return 0;
  }

  Form apply(Operator op, const Form& a) const {
    switch (op) {
      case Operator::D: return ext_d(a);
      case Operator::LJ: return lie_vform(ac_.J, a);
      case Operator::LN: return lie_vform(ac_.N, a);
      case Operator::IotaJ: return iota_vform(ac_.J, a);
      case Operator::DLJ: return ext_d(lie_vform(ac_.J, a));
    }
    return a;
  }

  using Column = std::vector<std::pair<BasisKey, Rational>>;

  const Column& image(Operator op, int k, const BasisKey& key) {
    auto cache_key = std::make_tuple(static_cast<int>(op), k, key.idx.bits, key.mode, key.imag);
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(cache_key);
      if (it != cache_.end()) return it->second;
    }
    Column col = real_coordinates(apply(op, basis_form(model(), key)));
    std::lock_guard lock(mutex_);
    return cache_.emplace(cache_key, std::move(col)).first->second;
  }

  /// Matrix of op from the domain keys to the codomain keys.  An image
  /// coefficient outside the codomain is an error, never dropped.
  ExactMatrix matrix(Operator op, int k, const std::vector<BasisKey>& domain, const std::vector<BasisKey>& codomain,
                     int codomain_bound) {
    std::map<BasisKey, std::size_t, BasisKeyLess> rows;
    for (std::size_t i = 0; i < codomain.size(); ++i) rows.emplace(codomain[i], i);
    ExactMatrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
      for (const auto& [key, v] : image(op, k, domain[c])) {
        auto it = rows.find(key);
        if (it == rows.end()) {
          if (key.mode.sup_norm() > codomain_bound)
            throw Error(ErrorCode::WindowOverflow, std::string(to_string(op)) + " image has mode " +
                                                       key.mode.to_string(dim()) + " beyond window N=" +
                                                       std::to_string(codomain_bound));
          throw Error(ErrorCode::AssemblyBug, std::string(to_string(op)) + " image left its mode block");
        }
        m.set(it->second, c, Scalar(v));
      }
    }
    return m;
  }

  /// Full-window matrix with both basis descriptors.
  AssembledOperator assemble(Operator op, int k, const Window& window) {
    check_window(model(), window);
    AssembledOperator out{op, {}, basis_window(model(), k, window), {}};
    Window cw = window.invariant ? window : Window::truncated(window.N + growth(op));
    out.codomain = basis_window(model(), k + operator_degree(op), cw);
    out.matrix = matrix(op, k, out.domain.elements, out.codomain.elements, cw.N);
    return out;
  }

  /// Orbits of half-space modes within the sup-norm box `bound` under the
  /// shifts of J and N together with m -> -m.
  std::vector<std::vector<Mode>> blocks(int bound) const {
    const int n = dim();
    const int side = 2 * bound + 1;
    double cells = 1;
    for (int a = 0; a < n; ++a) cells *= side;
    if (cells > 2e7) throw Error(ErrorCode::InvalidWindow, "truncation box too large");
    const std::size_t total = static_cast<std::size_t>(cells);
    auto encode = [&](const Mode& m) -> std::optional<std::size_t> {
      std::size_t code = 0;
      for (int a = 0; a < n; ++a) {
        int v = m[a];
        if (v < -bound || v > bound) return std::nullopt;
        code = code * side + static_cast<std::size_t>(v + bound);
      }
      return code;
    };
    auto decode = [&](std::size_t code) {
      Mode m;
      for (int a = n - 1; a >= 0; --a) {
        m[a] = static_cast<std::int16_t>(static_cast<int>(code % side) - bound);
        code /= side;
      }
      return m;
    };
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (std::size_t code = 0; code < total; ++code) {
      Mode m = decode(code);
      if (auto c = encode(-m)) unite(code, *c);
      for (const auto& s : shifts_)
        if (auto c = encode(m + s)) unite(code, *c);
    }
    std::map<std::size_t, std::vector<Mode>> groups;
    for (std::size_t code = 0; code < total; ++code) {
      Mode m = decode(code);
      if (m.is_zero() || m.is_positive()) groups[find(code)].push_back(m);
    }
    std::vector<std::vector<Mode>> out;
    for (auto& [root, modes] : groups) {
      std::sort(modes.begin(), modes.end());
      out.push_back(std::move(modes));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  AlmostComplex ac_;
  int g_j_ = 0;
  int g_n_ = 0;
  std::vector<Mode> shifts_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, std::uint32_t, Mode, bool>, Column> cache_;
};

namespace detail {

/// Kernel of the stacked system of several operators on the same domain.
inline Subspace joint_kernel(const std::vector<ExactMatrix>& ops, std::size_t domain) {
  if (ops.empty()) return Subspace(domain, ExactMatrix::identity(domain));
  ExactMatrix stacked = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) stacked = ExactMatrix::vstack(stacked, ops[i]);
  return kernel_basis(stacked);
}

inline Subspace image_of(const ExactMatrix& op, const Subspace& domain) {
  if (domain.dim() == 0) return Subspace(op.rows());
  return image_basis(apply(op, domain));
}

struct BlockContext {
  Realization& r;
  const std::vector<Mode>& modes;
  int n;

  std::vector<BasisKey> keys(int degree, int bound) const { return keys_for(n, degree, modes, bound); }

  ExactMatrix op(Operator o, int k, int from, int to) const {
    return r.matrix(o, k, keys(k, from), keys(k + operator_degree(o), to), to);
  }
};

}  // namespace detail

/// Everything the theories need, keyed by theory.
struct TheorySpec {
  std::optional<Operator> out_restrict;
  Operator delta = Operator::D;
  std::optional<Operator> in_restrict;
};

inline TheorySpec theory_spec(Theory t) {
  switch (t) {
    case Theory::deRham: return {std::nullopt, Operator::D, std::nullopt};
    case Theory::J: return {Operator::LJ, Operator::D, Operator::LJ};
    case Theory::N: return {Operator::LN, Operator::D, Operator::LN};
    case Theory::Ntwist: return {Operator::LN, Operator::LJ, Operator::LN};
  }
  return {};
}

inline int box_bound(const Realization& r, const Window& w) {
  return w.invariant ? 0 : w.N + r.growth(Operator::LJ) + r.growth(Operator::LN);
}

inline WindowResult cohomology_window(Realization& r, Theory theory, int k, const Window& window,
                                      std::vector<Form>* representatives = nullptr) {
  check_window(r.model(), window);
  const TheorySpec spec = theory_spec(theory);
  const int N = window.invariant ? 0 : window.N;
  const int g_delta = r.growth(spec.delta);
  const int g_out = std::max(g_delta, spec.out_restrict ? r.growth(*spec.out_restrict) : 0);
  const int in_N = N - g_delta;
  auto blocks = r.blocks(box_bound(r, window));

  struct Partial {
    std::size_t num = 0, den = 0;
    std::vector<Form> reps;
  };
  std::vector<Partial> parts(blocks.size());
  detail::parallel_for(blocks.size(), [&](std::size_t b) {
    detail::BlockContext ctx{r, blocks[b], r.dim()};
    auto vk = ctx.keys(k, N);
    if (vk.empty()) return;
    std::vector<ExactMatrix> out_ops{ctx.op(spec.delta, k, N, N + g_delta)};
    if (spec.out_restrict) out_ops.push_back(ctx.op(*spec.out_restrict, k, N, N + r.growth(*spec.out_restrict)));
    Subspace num = detail::joint_kernel(out_ops, vk.size());

    Subspace den(vk.size());
    auto w = ctx.keys(k - 1, in_N);
    if (!w.empty()) {
      std::vector<ExactMatrix> in_ops;
      if (spec.in_restrict) in_ops.push_back(ctx.op(*spec.in_restrict, k - 1, in_N, in_N + r.growth(*spec.in_restrict)));
      Subspace restricted = detail::joint_kernel(in_ops, w.size());
      den = detail::image_of(r.matrix(spec.delta, k - 1, w, vk, N), restricted);
    }
    parts[b].num = num.dim();
    parts[b].den = den.dim();
    quotient_dim(num, den);
    if (representatives) {
      ExactMatrix comp = complement_basis(num, den);
      BasisDescriptor desc{r.model(), k, window, vk};
      for (std::size_t c = 0; c < comp.cols(); ++c) {
        std::vector<Scalar> coords(vk.size());
        for (std::size_t i = 0; i < vk.size(); ++i) coords[i] = comp.at(i, c);
        parts[b].reps.push_back(desc.form(coords));
      }
    }
  });

  WindowResult res{window, 0, 0, 0, N + g_out, in_N};
  for (auto& p : parts) {
    res.numerator_dim += p.num;
    res.denominator_dim += p.den;
    if (representatives)
      for (auto& f : p.reps) representatives->push_back(std::move(f));
  }
  res.dim = res.numerator_dim - res.denominator_dim;
  return res;
}

inline CohomologyReport cohomology(Realization& r, Theory theory, int k, const std::vector<Window>& windows) {
  CohomologyReport rep;
  rep.model = r.model()->name();
  rep.theory = theory;
  rep.degree = k;
  rep.exact = !r.model()->is_torus();
  for (const auto& w : windows) {
    bool want_reps = w.invariant;
    rep.windows.push_back(cohomology_window(r, theory, k, w, want_reps ? &rep.representatives : nullptr));
  }
  if (rep.exact) {
    rep.stabilized = true;
  } else if (rep.windows.size() >= 2) {
    rep.stabilized = rep.windows[rep.windows.size() - 1].dim == rep.windows[rep.windows.size() - 2].dim;
  }
  return rep;
}

inline CohomologyReport cohomology(Realization& r, Theory theory, int k, const Window& w) {
  return cohomology(r, theory, k, std::vector<Window>{w});
}

/// Rank of H^k_J -> H^k_dR induced by inclusion.
inline MapReport phi_map(Realization& r, int k, const Window& window) {
  check_window(r.model(), window);
  const int N = window.invariant ? 0 : window.N;
  const int gj = r.growth(Operator::LJ);
  auto blocks = r.blocks(box_bound(r, window));
  struct Partial {
    std::size_t src = 0, tgt = 0, rank = 0;
  };
  std::vector<Partial> parts(blocks.size());
  detail::parallel_for(blocks.size(), [&](std::size_t b) {
    detail::BlockContext ctx{r, blocks[b], r.dim()};
    auto vk = ctx.keys(k, N);
    if (vk.empty()) return;
    ExactMatrix d = ctx.op(Operator::D, k, N, N);
    ExactMatrix lj = ctx.op(Operator::LJ, k, N, N + gj);
    Subspace z_dr = kernel_basis(d);
    Subspace z_j = detail::joint_kernel({d, lj}, vk.size());
    Subspace b_dr(vk.size()), b_j(vk.size());
    auto w = ctx.keys(k - 1, N);
    if (!w.empty()) {
      ExactMatrix dw = r.matrix(Operator::D, k - 1, w, vk, N);
      b_dr = detail::image_of(dw, Subspace(w.size(), ExactMatrix::identity(w.size())));
      b_j = detail::image_of(dw, kernel_basis(ctx.op(Operator::LJ, k - 1, N, N + gj)));
    }
    parts[b].src = quotient_dim(z_j, b_j);
    parts[b].tgt = quotient_dim(z_dr, b_dr);
    parts[b].rank = quotient_dim(subspace_sum(z_j, b_dr), b_dr);
  });
  MapReport rep{k, window};
  for (const auto& p : parts) {
    rep.source += p.src;
    rep.target += p.tgt;
    rep.rank += p.rank;
  }
  rep.injective = rep.rank == rep.source;
  rep.surjective = rep.rank == rep.target;
  return rep;
}

/// dim (im L_J ∩ ker d) / im dL_J in degree k.
inline LemmaReport lemma_check(Realization& r, int k, const Window& window) {
  check_window(r.model(), window);
  const int N = window.invariant ? 0 : window.N;
  const int in_N = N - r.growth(Operator::LJ);
  auto blocks = r.blocks(box_bound(r, window));
  std::vector<std::pair<std::size_t, std::size_t>> parts(blocks.size());
  detail::parallel_for(blocks.size(), [&](std::size_t b) {
    detail::BlockContext ctx{r, blocks[b], r.dim()};
    auto vk = ctx.keys(k, N);
    if (vk.empty()) return;
    Subspace ker_d = kernel_basis(ctx.op(Operator::D, k, N, N));
    Subspace im_lj(vk.size()), im_dlj(vk.size());
    auto w1 = ctx.keys(k - 1, in_N);
    if (!w1.empty()) im_lj = image_basis(r.matrix(Operator::LJ, k - 1, w1, vk, N));
    auto w2 = ctx.keys(k - 2, in_N);
    if (!w2.empty()) im_dlj = image_basis(r.matrix(Operator::DLJ, k - 2, w2, vk, N));
    Subspace num = subspace_intersect(im_lj, ker_d);
    quotient_dim(num, im_dlj);
    parts[b] = {num.dim(), im_dlj.dim()};
  });
  LemmaReport rep{k, window};
  rep.image_domain_N = in_N;
  for (auto [n, d] : parts) {
    rep.numerator_dim += n;
    rep.denominator_dim += d;
  }
  rep.dim = rep.numerator_dim - rep.denominator_dim;
  return rep;
}

/// dim ({dv : L_J v ∈ im d} + d ker L_J) / d ker L_J with v of degree k-1.
inline std::size_t connecting_image(Realization& r, int k, const Window& window) {
  check_window(r.model(), window);
  const int N = window.invariant ? 0 : window.N;
  const int gj = r.growth(Operator::LJ);
  auto blocks = r.blocks(box_bound(r, window));
  std::vector<std::size_t> parts(blocks.size(), 0);
  detail::parallel_for(blocks.size(), [&](std::size_t b) {
    detail::BlockContext ctx{r, blocks[b], r.dim()};
    auto v = ctx.keys(k - 1, N);
    if (v.empty()) return;
    auto u = ctx.keys(k - 1, N + gj);
    auto t = ctx.keys(k, N + gj);
    auto vk = ctx.keys(k, N);
    ExactMatrix lj = r.matrix(Operator::LJ, k - 1, v, t, N + gj);
    ExactMatrix du = r.matrix(Operator::D, k - 1, u, t, N + gj);
    Subspace sol = kernel_basis(ExactMatrix::hstack(lj, du * Scalar(-1)));
    ExactMatrix s = sol.basis().rows_range(0, v.size());
    ExactMatrix dv = r.matrix(Operator::D, k - 1, v, vk, N);
    Subspace ds = s.cols() ? image_basis(dv * s) : Subspace(vk.size());
    Subspace dker = detail::image_of(dv, kernel_basis(ctx.op(Operator::LJ, k - 1, N, N + gj)));
    parts[b] = quotient_dim(subspace_sum(ds, dker), dker);
  });
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

/// Degree-by-degree comparison of the dL_J-lemma quotient with the
/// injectivity/surjectivity criterion for phi (Lie models only).
inline CrosscheckReport dlj_crosscheck(Realization& r) {
  if (r.model()->is_torus())
    throw Error(ErrorCode::InvalidWindow, "the cross-check runs on invariant (Lie algebra) models only");
  const Window w = Window::Invariant();
  const int n = r.dim();
  CrosscheckReport rep;
  rep.model = r.model()->name();
  for (int k = 0; k <= n; ++k) rep.phi.push_back(phi_map(r, k, w));
  for (int k = 0; k <= n; ++k) {
    CrosscheckRow row;
    row.degree = k;
    row.lemma_quotient = lemma_check(r, k, w).dim;
    row.lemma_holds = row.lemma_quotient == 0;
    row.phi_injective = rep.phi[k].injective;
    row.phi_prev_surjective = k == 0 ? true : rep.phi[k - 1].surjective;
    row.agrees = row.lemma_holds == (row.phi_injective && row.phi_prev_surjective);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace acplx
