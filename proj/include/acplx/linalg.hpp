#pragma once

// Exact linear algebra over Q(i): reduced row echelon form, kernels, images,
// intersections and quotient dimensions.  No tolerances exist here.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acplx/coeffring.hpp"

namespace acplx {

using Scalar = GaussianRational;

/// Sparse matrix; rows are ordered maps column -> nonzero entry.
class ExactMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static ExactMatrix from_dense(const std::vector<std::vector<Scalar>>& d, std::size_t cols) {
    ExactMatrix m(d.size(), cols);
    for (std::size_t r = 0; r < d.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!d[r][c].is_zero()) m.data_[r].emplace(c, d[r][c]);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }

  Scalar at(std::size_t r, std::size_t c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar{} : it->second;
  }

  void set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) {
      data_[r].erase(c);
    } else {
      data_[r][c] = v;
    }
  }

  void add(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) data_[r].erase(it);
    }
  }

  bool is_zero() const {
    for (const auto& r : data_) {
      if (!r.empty()) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  std::vector<std::vector<Scalar>> dense() const {
    std::vector<std::vector<Scalar>> d(rows(), std::vector<Scalar>(cols_));
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : data_[r]) d[r][c] = v;
    return d;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
    return t;
  }

  /// Columns selected in the given order.
  ExactMatrix columns(const std::vector<std::size_t>& which) const {
    std::vector<std::size_t> remap(cols_, static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < which.size(); ++j) remap[which[j]] = j;
    ExactMatrix m(rows(), which.size());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : data_[r])
        if (remap[c] != static_cast<std::size_t>(-1)) m.data_[r].emplace(remap[c], v);
    return m;
  }

  ExactMatrix rows_range(std::size_t begin, std::size_t end) const {
    ExactMatrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r) m.data_[r - begin] = data_[r];
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    ExactMatrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [k, v] : a.data_[r])
        for (const auto& [c, w] : b.data_[k]) out.add(r, c, v * w);
    return out;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    a.check_shape(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.data_[r]) a.add(r, c, v);
    return a;
  }

  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    a.check_shape(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.data_[r]) a.add(r, c, -v);
    return a;
  }

  ExactMatrix operator*(const Scalar& s) const {
    ExactMatrix out(rows(), cols_);
    if (s.is_zero()) return out;
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : data_[r]) out.data_[r].emplace(c, v * s);
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a; b] (same column count).
  static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    ExactMatrix m(a.rows() + b.rows(), a.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) m.data_[r] = a.data_[r];
    for (std::size_t r = 0; r < b.rows(); ++r) m.data_[a.rows() + r] = b.data_[r];
    return m;
  }

  /// [a | b] (same row count).
  static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
    ExactMatrix m(a.rows(), a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      m.data_[r] = a.data_[r];
      for (const auto& [c, v] : b.data_[r]) m.data_[r].emplace(a.cols_ + c, v);
    }
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      s += "[";
      for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + at(r, c).to_string();
      s += "]\n";
    }
    return s;
  }

 private:
  void check_shape(const ExactMatrix& b) const {
    if (rows() != b.rows() || cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan over Q(i); pivot = first nonzero entry in column order.
inline RrefResult rref(const ExactMatrix& m) {
  auto a = m.dense();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (a[r][j].is_zero()) continue;
      if (!inv.is_one()) a[r][j] *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j : support) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {ExactMatrix::from_dense(a, cols), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  return rref(m).pivots.size();
}

/// Column space with an independent basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

  /// Verifies independence of the columns.
  Subspace(std::size_t ambient, ExactMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.rows() != ambient_) throw Error(ErrorCode::AmbientMismatch, "basis rows != ambient dimension");
    if (rank(basis_) != basis_.cols()) throw Error(ErrorCode::AssemblyBug, "subspace basis columns are dependent");
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const ExactMatrix& basis() const { return basis_; }

 private:
  std::size_t ambient_ = 0;
  ExactMatrix basis_;
};

/// Independent basis of the column space of m (pivot columns of m).
inline Subspace image_basis(const ExactMatrix& m) {
  if (m.cols() == 0 || m.is_zero()) return Subspace(m.rows());
  auto rr = rref(m);
  return Subspace(m.rows(), m.columns(rr.pivots));
}

/// Kernel basis read off the reduced form; one vector per free column.
inline Subspace kernel_basis(const ExactMatrix& m) {
  const std::size_t cols = m.cols();
  auto rr = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  ExactMatrix k(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, 1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      Scalar v = rr.reduced.at(r, free[f]);
      if (!v.is_zero()) k.set(rr.pivots[r], f, -v);
    }
  }
  if (rr.pivots.size() + free.size() != cols) throw Error(ErrorCode::AssemblyBug, "rank-nullity violated");
  Subspace out;
  out = Subspace(cols, std::move(k));
  return out;
}

inline ExactMatrix apply(const ExactMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw Error(ErrorCode::AmbientMismatch, "operator domain != subspace ambient");
  return m * s.basis();
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::AmbientMismatch, "sum of subspaces of different spaces");
  return image_basis(ExactMatrix::hstack(a.basis(), b.basis()));
}

/// A ∩ B via the kernel of [A | -B].
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::AmbientMismatch, "intersection of subspaces of different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  ExactMatrix stacked = ExactMatrix::hstack(a.basis(), b.basis() * Scalar(-1));
  Subspace k = kernel_basis(stacked);
  ExactMatrix coeffs = k.basis().rows_range(0, a.dim());
  return image_basis(a.basis() * coeffs);
}

inline bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient() != inner.ambient()) throw Error(ErrorCode::AmbientMismatch, "containment across spaces");
  if (inner.dim() == 0) return true;
  return rank(ExactMatrix::hstack(outer.basis(), inner.basis())) == outer.dim();
}

inline bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && contains(a, b);
}

/// dim num - dim den after verifying den ⊆ num.
inline std::size_t quotient_dim(const Subspace& num, const Subspace& den) {
  if (!contains(num, den)) {
    throw Error(ErrorCode::NotASubspace, "denominator (dim " + std::to_string(den.dim()) +
                                             ") is not contained in numerator (dim " + std::to_string(num.dim()) + ")");
  }
  return num.dim() - den.dim();
}

/// Columns of num that extend a basis of den to one of num (rref-pivot choice).
inline ExactMatrix complement_basis(const Subspace& num, const Subspace& den) {
  ExactMatrix stacked = ExactMatrix::hstack(den.basis(), num.basis());
  auto rr = rref(stacked);
  std::vector<std::size_t> picks;
  for (auto p : rr.pivots)
    if (p >= den.dim()) picks.push_back(p - den.dim());
  return num.basis().columns(picks);
}

}  // namespace acplx
