#pragma once

// Bigraded calculus on invariant complexes of integrable structures.  The
// projections pi^{p,q} are polynomials in iota_J, whose eigenvalue on (p,q)
// forms is i(p - q).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acplx/complexes.hpp"

namespace acplx {

/// Complexified form stored as a pair of real forms.
class ComplexForm {
 public:
  ComplexForm() = default;
  explicit ComplexForm(Form re) : re_(std::move(re)), im_(re_.model(), re_.degree()) {}
  ComplexForm(Form re, Form im) : re_(std::move(re)), im_(std::move(im)) {
    require_same(re_.model(), im_.model());
    if (re_.degree() != im_.degree()) throw Error(ErrorCode::DimensionMismatch, "real and imaginary degrees differ");
  }

  const Form& re() const { return re_; }
  const Form& im() const { return im_; }
  int degree() const { return re_.degree(); }
  const ModelPtr& model() const { return re_.model(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexForm conj() const { return {re_, -im_}; }

  friend ComplexForm operator+(const ComplexForm& a, const ComplexForm& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend ComplexForm operator-(const ComplexForm& a, const ComplexForm& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend ComplexForm operator*(const GaussianRational& s, const ComplexForm& a) {
    Rational x = s.re(), y = s.im();
    return {a.re_ * Scalar(x) - a.im_ * Scalar(y), a.re_ * Scalar(y) + a.im_ * Scalar(x)};
  }
  friend bool operator==(const ComplexForm& a, const ComplexForm& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    return "(" + re_.to_string() + ") + i(" + im_.to_string() + ")";
  }

 private:
  Form re_;
  Form im_;
};

struct DolbeaultReport {
  int degree = 0;
  std::size_t dim = 0;
  std::map<std::pair<int, int>, std::size_t> hodge;  // h^{p,q} with p + q = degree
};

struct DdbarReport {
  int degree = 0;
  std::size_t numerator_dim = 0;
  std::size_t denominator_dim = 0;
  std::size_t dim = 0;
};

/// Operator matrices of the complexified invariant complex, degree by degree.
class Bigraded {
 public:
  explicit Bigraded(AlmostComplex ac) : r_(std::move(ac)) {
    const auto& s = r_.structure();
    if (s.model->is_torus())
      throw Error(ErrorCode::InvalidWindow, "the bigraded layer is implemented for invariant (Lie algebra) models only");
    if (!s.integrable()) throw Error(ErrorCode::NotIntegrable, "bigrading needs N = 0");
    n_ = s.model->dim();
    const Window w = Window::Invariant();
    for (int k = 0; k <= n_; ++k) {
      basis_.push_back(basis_window(s.model, k, w));
      d_.push_back(r_.assemble(Operator::D, k, w).matrix);
      iota_.push_back(r_.assemble(Operator::IotaJ, k, w).matrix);
      lj_.push_back(r_.assemble(Operator::LJ, k, w).matrix);
    }
    for (int k = 0; k <= n_; ++k) pi_.push_back(projections(k));
    for (int k = 0; k <= n_; ++k) {
      ExactMatrix del(dim(k + 1), dim(k)), delbar(dim(k + 1), dim(k)), p(dim(k), dim(k));
      for (int a = 0; a <= k; ++a) {
        ExactMatrix dp = d_[k] * pi_[k][a];
        if (k + 1 <= n_) {
          del = del + pi_[k + 1][a + 1] * dp;
          delbar = delbar + pi_[k + 1][a] * dp;
        }
        p = p + pi_[k][a] * Scalar(a % 2 ? -1 : 1);
      }
      del_.push_back(del);
      delbar_.push_back(delbar);
      parity_.push_back(p);
    }
    verify_structure();
  }

  const Realization& realization() const { return r_; }
  const ModelPtr& model() const { return r_.model(); }
  int n() const { return n_; }
  std::size_t dim(int k) const { return k < 0 || k > n_ ? 0 : basis_[k].size(); }

  // Matrices from degree k; out-of-range degrees give empty matrices.
  ExactMatrix d(int k) const { return pick(d_, k, 1); }
  ExactMatrix lj(int k) const { return pick(lj_, k, 1); }
  ExactMatrix iota(int k) const { return pick(iota_, k, 0); }
  ExactMatrix del(int k) const { return pick(del_, k, 1); }
  ExactMatrix delbar(int k) const { return pick(delbar_, k, 1); }
  ExactMatrix parity(int k) const { return pick(parity_, k, 0); }
  ExactMatrix pi(int p, int q) const {
    int k = p + q;
    if (k < 0 || k > n_ || p < 0 || q < 0) return ExactMatrix(dim(k), dim(k));
    return pi_[k][p];
  }

  std::vector<Scalar> coordinates(const ComplexForm& w) const {
    require_same(w.model(), model());
    int k = w.degree();
    std::vector<Scalar> c(dim(k));
    auto fill = [&](const Form& f, bool imag) {
      for (const auto& [key, v] : real_coordinates(f)) {
        auto i = basis_[k].index_of(key);
        if (!i) throw Error(ErrorCode::AssemblyBug, "form outside the invariant basis");
        c[*i] += imag ? Scalar(Rational(0), v) : Scalar(v);
      }
    };
    fill(w.re(), false);
    fill(w.im(), true);
    return c;
  }

  ComplexForm from_coordinates(int k, const std::vector<Scalar>& c) const {
    Form re(model(), k), im(model(), k);
    if (k < 0 || k > n_) return {re, im};
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i].re()) != 0) re += basis_[k].element(i) * Scalar(c[i].re());
      if (sgn(c[i].im()) != 0) im += basis_[k].element(i) * Scalar(c[i].im());
    }
    return {re, im};
  }

  ComplexForm apply(const ExactMatrix& m, const ComplexForm& w, int out_degree) const {
    auto c = coordinates(w);
    std::vector<Scalar> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [col, v] : m.row(r)) out[r] += v * c[col];
    return from_coordinates(out_degree, out);
  }

 private:
  ExactMatrix pick(const std::vector<ExactMatrix>& v, int k, int shift) const {
    if (k < 0 || k > n_) return ExactMatrix(dim(k + shift), dim(k));
    return v[k];
  }

  /// pi^{p,k-p} = prod_{a != p} (iota - i(2a-k)) / (i(2p-k) - i(2a-k)).
  std::vector<ExactMatrix> projections(int k) {
    const std::size_t sz = dim(k);
    std::vector<ExactMatrix> out;
    for (int p = 0; p <= k; ++p) {
      ExactMatrix m = ExactMatrix::identity(sz);
      for (int a = 0; a <= k; ++a) {
        if (a == p) continue;
        Scalar ev_a(Rational(0), Rational(2 * a - k));
        Scalar denom(Rational(0), Rational(2 * (p - a)));
        ExactMatrix factor = iota_[k] - ExactMatrix::identity(sz) * ev_a;
        m = factor * m * denom.inverse();
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  void verify_structure() const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::AssemblyBug, what); };
    for (int k = 0; k <= n_; ++k) {
      ExactMatrix sum(dim(k), dim(k));
      for (int p = 0; p <= k; ++p) {
        sum = sum + pi_[k][p];
        for (int q = 0; q <= k; ++q) {
          ExactMatrix prod = pi_[k][p] * pi_[k][q];
          if (!(prod == (p == q ? pi_[k][p] : ExactMatrix(dim(k), dim(k)))))
            fail("projections are not orthogonal idempotents in degree " + std::to_string(k));
        }
      }
      if (!(sum == ExactMatrix::identity(dim(k)))) fail("projections do not sum to the identity");
      if (!(del_[k] + delbar_[k] == d_[k])) fail("d != del + delbar in degree " + std::to_string(k));
      if (!(parity_[k] * parity_[k] == ExactMatrix::identity(dim(k)))) fail("P^2 != I");
      if (k + 1 <= n_) {
        if (!(del_[k + 1] * del_[k]).is_zero()) fail("del^2 != 0");
        if (!(delbar_[k + 1] * delbar_[k]).is_zero()) fail("delbar^2 != 0");
        if (!(del_[k + 1] * delbar_[k] + delbar_[k + 1] * del_[k]).is_zero()) fail("del delbar + delbar del != 0");
      }
    }
  }

  Realization r_;
  int n_ = 0;
  std::vector<BasisDescriptor> basis_;
  std::vector<ExactMatrix> d_, iota_, lj_, del_, delbar_, parity_;
  std::vector<std::vector<ExactMatrix>> pi_;
};

/// (p,q) components of w, keyed by (p,q); zero components omitted.
inline std::map<std::pair<int, int>, ComplexForm> bigrade(const Bigraded& b, const ComplexForm& w) {
  std::map<std::pair<int, int>, ComplexForm> out;
  int k = w.degree();
  for (int p = 0; p <= k; ++p) {
    ComplexForm c = b.apply(b.pi(p, k - p), w, k);
    if (!c.is_zero()) out.emplace(std::make_pair(p, k - p), c);
  }
  return out;
}

inline std::pair<ComplexForm, ComplexForm> del_delbar(const Bigraded& b, const ComplexForm& w) {
  int k = w.degree();
  return {b.apply(b.del(k), w, k + 1), b.apply(b.delbar(k), w, k + 1)};
}

inline ComplexForm parity_twist(const Bigraded& b, const ComplexForm& w) {
  return b.apply(b.parity(w.degree()), w, w.degree());
}

namespace detail {

inline Subspace kernel_or_all(const ExactMatrix& m) {
  if (m.rows() == 0) return Subspace(m.cols(), ExactMatrix::identity(m.cols()));
  return kernel_basis(m);
}

inline Subspace image_or_none(const ExactMatrix& m) {
  if (m.cols() == 0) return Subspace(m.rows());
  return image_basis(m);
}

inline Subspace image_of_subspace(const ExactMatrix& m, const Subspace& s) {
  if (s.dim() == 0) return Subspace(m.rows());
  return image_basis(m * s.basis());
}

}  // namespace detail

inline DolbeaultReport dolbeault_cohomology(const Bigraded& b, int k) {
  DolbeaultReport rep;
  rep.degree = k;
  if (k < 0 || k > b.n()) return rep;
  Subspace z = detail::kernel_or_all(b.delbar(k));
  Subspace bd = detail::image_or_none(b.delbar(k - 1));
  rep.dim = quotient_dim(z, bd);
  for (int p = 0; p <= k; ++p) {
    int q = k - p;
    Subspace zpq = subspace_intersect(z, detail::image_or_none(b.pi(p, q)));
    Subspace bpq = k >= 1 ? detail::image_or_none(b.delbar(k - 1) * b.pi(p, q - 1)) : Subspace(b.dim(k));
    rep.hodge[{p, q}] = quotient_dim(zpq, bpq);
  }
  return rep;
}

/// Rank of H^k_J -> H^k_delbar.  Also checks del = delbar on ker L_J.
inline MapReport psi_map(const Bigraded& b, int k) {
  MapReport rep;
  rep.degree = k;
  rep.window = Window::Invariant();
  if (k < 0 || k > b.n()) {
    rep.injective = rep.surjective = true;
    return rep;
  }
  for (int deg : {k - 1, k}) {
    if (deg < 0) continue;
    Subspace ker_lj = detail::kernel_or_all(b.lj(deg));
    if (ker_lj.dim() && !((b.del(deg) - b.delbar(deg)) * ker_lj.basis()).is_zero())
      throw Error(ErrorCode::AssemblyBug, "del != delbar on ker L_J in degree " + std::to_string(deg));
  }
  ExactMatrix stacked = ExactMatrix::vstack(b.d(k), b.lj(k));
  Subspace z_j = stacked.rows() ? kernel_basis(stacked) : Subspace(b.dim(k), ExactMatrix::identity(b.dim(k)));
  Subspace b_j = k >= 1 ? detail::image_of_subspace(b.d(k - 1), detail::kernel_or_all(b.lj(k - 1))) : Subspace(b.dim(k));
  Subspace z_db = detail::kernel_or_all(b.delbar(k));
  Subspace b_db = detail::image_or_none(b.delbar(k - 1));
  if (!contains(z_db, z_j)) throw Error(ErrorCode::NotASubspace, "J-closed forms are not delbar-closed");
  rep.source = quotient_dim(z_j, b_j);
  rep.target = quotient_dim(z_db, b_db);
  rep.rank = quotient_dim(subspace_sum(z_j, b_db), b_db);
  rep.injective = rep.rank == rep.source;
  rep.surjective = rep.rank == rep.target;
  return rep;
}

/// dim (ker del ∩ ker delbar ∩ im d) / im del delbar in degree k.
inline DdbarReport ddbar_quotient(const Bigraded& b, int k) {
  DdbarReport rep;
  rep.degree = k;
  if (k < 0 || k > b.n()) return rep;
  Subspace num = subspace_intersect(detail::kernel_or_all(b.del(k)), detail::kernel_or_all(b.delbar(k)));
  num = subspace_intersect(num, detail::image_or_none(b.d(k - 1)));
  Subspace den = detail::image_or_none(b.del(k - 1) * b.delbar(k - 2));
  rep.numerator_dim = num.dim();
  rep.denominator_dim = den.dim();
  rep.dim = quotient_dim(num, den);
  return rep;
}

/// Both sides of the P-isomorphism: (im d ∩ ker L_J)/im dL_J and (im L_J ∩ ker d)/im dL_J.
inline std::pair<std::size_t, std::size_t> parity_quotients(const Bigraded& b, int k) {
  if (k < 0 || k > b.n()) return {0, 0};
  Subspace im_dlj = detail::image_or_none(b.d(k - 1) * b.lj(k - 2));
  Subspace left = subspace_intersect(detail::image_or_none(b.d(k - 1)), detail::kernel_or_all(b.lj(k)));
  Subspace right = subspace_intersect(detail::image_or_none(b.lj(k - 1)), detail::kernel_or_all(b.d(k)));
  return {quotient_dim(left, im_dlj), quotient_dim(right, im_dlj)};
}

/// P maps im d onto im L_J and ker L_J onto ker d in degree k.
inline bool parity_interchanges(const Bigraded& b, int k) {
  if (k < 0 || k > b.n()) return true;
  ExactMatrix p = b.parity(k);
  auto im_d = detail::image_or_none(b.d(k - 1));
  auto im_lj = detail::image_or_none(b.lj(k - 1));
  auto ker_lj = detail::kernel_or_all(b.lj(k));
  auto ker_d = detail::kernel_or_all(b.d(k));
  return same_subspace(detail::image_of_subspace(p, im_d), im_lj) &&
         same_subspace(detail::image_of_subspace(p, ker_lj), ker_d);
}

/// L_J P = -i P d as matrices in degree k.
inline bool parity_intertwines(const Bigraded& b, int k) {
  if (k < 0 || k > b.n()) return true;
  return b.lj(k) * b.parity(k) == b.parity(k + 1) * b.d(k) * Scalar(Rational(0), Rational(-1));
}

struct PsiCrosscheckRow {
  int degree = 0;
  std::size_t ddbar_quotient = 0;
  bool psi_injective = false;
  bool psi_prev_surjective = false;
  bool agrees = false;
};

inline std::vector<PsiCrosscheckRow> psi_crosscheck(const Bigraded& b) {
  std::vector<PsiCrosscheckRow> rows;
  std::vector<MapReport> psi;
  for (int k = 0; k <= b.n(); ++k) psi.push_back(psi_map(b, k));
  for (int k = 0; k <= b.n(); ++k) {
    PsiCrosscheckRow row;
    row.degree = k;
    row.ddbar_quotient = ddbar_quotient(b, k).dim;
    row.psi_injective = psi[k].injective;
    row.psi_prev_surjective = k == 0 ? true : psi[k - 1].surjective;
    row.agrees = (row.ddbar_quotient == 0) == (row.psi_injective && row.psi_prev_surjective);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace acplx
