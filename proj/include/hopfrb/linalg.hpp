#pragma once

/// Dense vectors and linear maps over an exact Field, plus sparse tensors
/// for iterated comultiplication legs.

#include "hopfrb/report.hpp"
#include "hopfrb/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfrb {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

/// Sparse vector: (basis index, coefficient) pairs with nonzero coefficients,
/// sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector basis_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

inline void require_dim(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(n) + ", got " +
                         std::to_string(v.size()));
}

inline Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  require_dim(x, y.size(), "axpy");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

inline Vector operator+(Vector a, const Vector& b) {
  require_dim(b, a.size(), "vector add");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  require_dim(b, a.size(), "vector sub");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector scaled(Vector v, const Scalar& a) {
  for (auto& x : v) x *= a;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

inline Vector to_dense(Field f, std::size_t n, const SparseVec& s) {
  Vector v = zero_vector(f, n);
  for (const auto& [i, c] : s) v.at(i) += c;
  return v;
}

inline std::string vector_str(const Vector& v, std::span<const std::string> labels = {}) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v[i].str() + ")*" + (i < labels.size() ? labels[i] : "e" + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

/// First differing component of two equal-length vectors.
inline ProbeResult compare_vectors(const Vector& lhs, const Vector& rhs, std::span<const std::string> labels = {}) {
  require_dim(rhs, lhs.size(), "compare");
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i])
      return mismatch("component " + (i < labels.size() ? labels[i] : std::to_string(i)), lhs[i].str(), rhs[i].str());
  return std::nullopt;
}

/// Dense column-major matrix (rows = codomain dimension).
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

  static LinearMap identity(Field f, std::size_t n) {
    LinearMap m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  /// Matrix whose j-th column is cols[j].
  static LinearMap from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
    LinearMap m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require_dim(cols[j], rows, "from_columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t domain_dim() const { return cols_; }
  std::size_t codomain_dim() const { return rows_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_.at(c * rows_ + r); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_.at(c * rows_ + r); }

  Vector column(std::size_t c) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(c * rows_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((c + 1) * rows_));
  }

  Vector apply(const Vector& v) const {
    require_dim(v, cols_, "linear map argument");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& e = entries_[c * rows_ + r];
        if (!e.is_zero()) out[r] += e * v[c];
      }
    }
    return out;
  }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    LinearMap out(a.field_, a.rows_, b.cols_);
    for (std::size_t c = 0; c < b.cols_; ++c) {
      Vector col = a.apply(b.column(c));
      for (std::size_t r = 0; r < a.rows_; ++r) out(r, c) = col[r];
    }
    return out;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

  /// Inverse by Gauss-Jordan elimination; nullopt when singular.
  std::optional<LinearMap> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    std::vector<Vector> a(n, zero_vector(field_, 2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = (*this)(r, c);
      a[r][n + r] = Scalar::one(field_);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col].is_zero()) ++piv;
      if (piv == n) return std::nullopt;
      std::swap(a[piv], a[col]);
      Scalar inv = a[col][col].inverse();
      for (auto& x : a[col]) x *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        Scalar f = a[r][col];
        for (std::size_t k = col; k < 2 * n; ++k)
          if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
      }
    }
    LinearMap out(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = a[r][n + c];
    return out;
  }

  bool invertible() const { return inverse().has_value(); }

private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Sparse element of V_1 (x) ... (x) V_r. Index tuples are packed eight bits
/// per leg with leg 0 most significant, so map order is lexicographic order.
class Tensor {
public:
  static constexpr std::size_t max_rank = 8;
  static constexpr std::size_t max_leg_dim = 256;
  using Key = std::uint64_t;
  using Index = std::vector<std::size_t>;

  Tensor(Field f, std::vector<std::size_t> dims) : field_(f), dims_(std::move(dims)) {
    if (dims_.empty() || dims_.size() > max_rank) throw DimensionError("tensor rank must be in 1..8");
    for (auto d : dims_)
      if (d == 0 || d > max_leg_dim) throw DimensionError("tensor leg dimension must be in 1..256");
  }

  static Tensor from_vector(const Vector& v) {
    Tensor t(v.empty() ? Field() : v.front().field(), {v.size()});
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) t.add({i}, v[i]);
    return t;
  }

  Field field() const { return field_; }
  std::size_t rank() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Key pack(std::span<const std::size_t> idx) const {
    if (idx.size() != dims_.size()) throw DimensionError("tensor index rank mismatch");
    Key k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= dims_[i]) throw DimensionError("tensor index out of range");
      k = (k << 8) | static_cast<Key>(idx[i]);
    }
    return k;
  }

  Index unpack(Key k) const {
    Index idx(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      idx[i] = static_cast<std::size_t>(k & 0xff);
      k >>= 8;
    }
    return idx;
  }

  void add(std::span<const std::size_t> idx, const Scalar& c) { add_key(pack(idx), c); }
  void add(std::initializer_list<std::size_t> idx, const Scalar& c) {
    std::vector<std::size_t> v(idx);
    add(std::span<const std::size_t>(v), c);
  }

  void add_key(Key k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  void add_tensor(const Tensor& other, const Scalar& scale) {
    if (other.dims_ != dims_) throw DimensionError("tensor shape mismatch");
    for (const auto& [k, c] : other.entries_) add_key(k, c * scale);
  }

  Scalar at(std::span<const std::size_t> idx) const {
    auto it = entries_.find(pack(idx));
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [k, c] : entries_) f(unpack(k), c);
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

  std::string index_str(const Index& idx, std::span<const std::string> labels = {}) const {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += " (x) ";
      s += idx[i] < labels.size() ? labels[idx[i]] : "e" + std::to_string(idx[i]);
    }
    return s;
  }

  std::string str(std::span<const std::string> labels = {}) const {
    std::string out;
    for (const auto& [k, c] : entries_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + index_str(unpack(k), labels);
    }
    return out.empty() ? "0" : out;
  }

private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::map<Key, Scalar> entries_;
};

/// First differing entry of two tensors, in lexicographic index order.
inline ProbeResult compare_tensors(const Tensor& lhs, const Tensor& rhs, std::span<const std::string> labels = {}) {
  if (lhs.dims() != rhs.dims()) return mismatch("tensor shape", "rank " + std::to_string(lhs.rank()),
                                                "rank " + std::to_string(rhs.rank()));
  auto a = lhs.entries().begin(), b = rhs.entries().begin();
  while (a != lhs.entries().end() || b != rhs.entries().end()) {
    Tensor::Key k;
    if (b == rhs.entries().end() || (a != lhs.entries().end() && a->first < b->first)) {
      k = a->first;
    } else {
      k = b->first;
    }
    Scalar l = (a != lhs.entries().end() && a->first == k) ? a->second : Scalar::zero(lhs.field());
    Scalar r = (b != rhs.entries().end() && b->first == k) ? b->second : Scalar::zero(lhs.field());
    if (l != r) return mismatch("entry " + lhs.index_str(lhs.unpack(k), labels), l.str(), r.str());
    if (a != lhs.entries().end() && a->first == k) ++a;
    if (b != rhs.entries().end() && b->first == k) ++b;
  }
  return std::nullopt;
}

}  // namespace hopfrb
