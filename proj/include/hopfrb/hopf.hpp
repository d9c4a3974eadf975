#pragma once

/// Finite-dimensional Hopf algebras given by structure constants, and the
/// exhaustive axiom and morphism checkers over them.
///
/// Multiplication is stored as one sparse vector per ordered pair of basis
/// elements, comultiplication as a sparse triple list per basis element.
/// Every checker evaluates identities on basis elements (multilinearity
/// does the rest) and reports the first counterexample in lexicographic
/// basis order.

#include "hopfrb/linalg.hpp"
#include "hopfrb/report.hpp"
#include "hopfrb/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hopfrb {

struct HopfLimits {
  std::size_t max_dim = 256;
};

struct DeltaTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

struct AlgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Vector unit;
  std::vector<SparseVec> mult;  // mult[i * dim + j] = e_i e_j

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult.at(i * dim + j); }
};

struct CoalgebraData {
  std::vector<std::vector<DeltaTerm>> delta;  // delta[i] = Delta(e_i)
  Vector counit;
};

struct HopfData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  LinearMap antipode;

  Field field() const { return algebra.field; }
  std::size_t dim() const { return algebra.dim; }
  const std::vector<std::string>& labels() const { return algebra.labels; }
};

inline std::string default_label(std::size_t i) { return "e" + std::to_string(i); }

/// Structural validation: sizes, index ranges and a single field throughout.
inline void validate_shape(const HopfData& h, const HopfLimits& lim = {}) {
  const auto& a = h.algebra;
  const std::size_t n = a.dim;
  if (n == 0) throw DimensionError("Hopf algebra dimension must be positive");
  if (n > lim.max_dim)
    throw DimensionError("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(lim.max_dim));
  if (a.labels.size() != n) throw DimensionError("label count differs from dimension");
  require_dim(a.unit, n, "unit");
  require_dim(h.coalgebra.counit, n, "counit");
  if (a.mult.size() != n * n) throw DimensionError("multiplication table must have dim^2 entries");
  if (h.coalgebra.delta.size() != n) throw DimensionError("comultiplication table must have dim entries");
  if (h.antipode.rows() != n || h.antipode.cols() != n) throw DimensionError("antipode must be dim x dim");
  auto check_field = [&](const Scalar& s) {
    if (s.field() != a.field) throw FieldError("scalar from " + s.field().name() + " in " + a.field.name() + " data");
  };
  for (const auto& s : a.unit) check_field(s);
  for (const auto& s : h.coalgebra.counit) check_field(s);
  for (const auto& sv : a.mult)
    for (const auto& [k, c] : sv) {
      if (k >= n) throw DimensionError("product index out of range");
      check_field(c);
    }
  for (const auto& terms : h.coalgebra.delta)
    for (const auto& t : terms) {
      if (t.left >= n || t.right >= n) throw DimensionError("coproduct index out of range");
      check_field(t.coeff);
    }
  if (h.antipode.field() != a.field) throw FieldError("antipode over a different field");
}

// ---------------------------------------------------------------------------
// Elementary operations

inline Vector basis(const HopfData& h, std::size_t i) { return basis_vector(h.field(), h.dim(), i); }
inline Vector unit(const HopfData& h) { return h.algebra.unit; }

inline void add_product(const AlgebraData& a, Vector& out, std::size_t i, std::size_t j, const Scalar& c) {
  for (const auto& [k, s] : a.product(i, j)) out[k] += c * s;
}

inline Vector mul(const AlgebraData& a, const Vector& x, const Vector& y) {
  require_dim(x, a.dim, "left factor");
  require_dim(y, a.dim, "right factor");
  Vector out = zero_vector(a.field, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      add_product(a, out, i, j, x[i] * y[j]);
    }
  }
  return out;
}

inline Vector mul(const HopfData& h, const Vector& x, const Vector& y) { return mul(h.algebra, x, y); }

/// Left-to-right product of several factors.
inline Vector mul_all(const AlgebraData& a, std::initializer_list<Vector> factors) {
  Vector acc = a.unit;
  for (const auto& f : factors) acc = mul(a, acc, f);
  return acc;
}

inline Scalar counit(const HopfData& h, const Vector& v) {
  require_dim(v, h.dim(), "counit argument");
  Scalar s = Scalar::zero(h.field());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s += v[i] * h.coalgebra.counit[i];
  return s;
}

inline Vector antipode(const HopfData& h, const Vector& v) { return h.antipode.apply(v); }

inline Tensor comul(const HopfData& h, const Vector& v) {
  require_dim(v, h.dim(), "comultiplication argument");
  Tensor t(h.field(), {h.dim(), h.dim()});
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& d : h.coalgebra.delta[i]) t.add({d.left, d.right}, v[i] * d.coeff);
  }
  return t;
}

/// Applies the comultiplication of `h` to one leg, splitting it in two.
inline Tensor apply_delta(const HopfData& h, const Tensor& t, std::size_t leg) {
  if (leg >= t.rank() || t.dims()[leg] != h.dim()) throw DimensionError("apply_delta: leg is not an H leg");
  std::vector<std::size_t> dims = t.dims();
  dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(leg), h.dim());
  Tensor out(t.field(), dims);
  std::vector<std::size_t> idx(dims.size());
  t.for_each([&](const Tensor::Index& src, const Scalar& c) {
    for (std::size_t k = 0, s = 0; k < idx.size(); ++k) {
      if (k == leg || k == leg + 1) continue;
      if (s == leg) ++s;
      idx[k] = src[s++];
    }
    for (const auto& d : h.coalgebra.delta[src[leg]]) {
      idx[leg] = d.left;
      idx[leg + 1] = d.right;
      out.add(idx, c * d.coeff);
    }
  });
  return out;
}

/// Iterated comultiplication with k+1 legs: Delta^(1) = Delta and
/// Delta^(k) = (id (x) ... (x) Delta) Delta^(k-1).
inline Tensor delta_power(const HopfData& h, const Vector& v, std::size_t k) {
  if (k < 1 || k + 1 > Tensor::max_rank) throw DimensionError("delta_power: k must be in 1..7");
  Tensor t = comul(h, v);
  for (std::size_t s = 1; s < k; ++s) t = apply_delta(h, t, t.rank() - 1);
  return t;
}

/// Applies a linear map to one leg.
inline Tensor map_leg(const Tensor& t, std::size_t leg, const LinearMap& f) {
  if (leg >= t.rank() || t.dims()[leg] != f.cols()) throw DimensionError("map_leg: dimension mismatch");
  std::vector<std::size_t> dims = t.dims();
  dims[leg] = f.rows();
  Tensor out(t.field(), dims);
  t.for_each([&](Tensor::Index idx, const Scalar& c) {
    const std::size_t src = idx[leg];
    for (std::size_t r = 0; r < f.rows(); ++r) {
      const Scalar& e = f(r, src);
      if (e.is_zero()) continue;
      idx[leg] = r;
      out.add(idx, c * e);
    }
  });
  return out;
}

/// Permutes legs: leg k of the result is leg order[k] of the input.
inline Tensor permute_legs(const Tensor& t, const std::vector<std::size_t>& order) {
  if (order.size() != t.rank()) throw DimensionError("permute_legs: rank mismatch");
  std::vector<std::size_t> dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) dims[k] = t.dims()[order[k]];
  Tensor out(t.field(), dims);
  std::vector<std::size_t> idx(order.size());
  t.for_each([&](const Tensor::Index& src, const Scalar& c) {
    for (std::size_t k = 0; k < order.size(); ++k) idx[k] = src[order[k]];
    out.add(idx, c);
  });
  return out;
}

inline Tensor flip(const Tensor& t) { return permute_legs(t, {1, 0}); }

/// Multiplies all legs together in one algebra: e_i1 e_i2 ... e_ir.
inline Vector multiply_legs(const AlgebraData& a, const Tensor& t) {
  Vector out = zero_vector(a.field, a.dim);
  t.for_each([&](const Tensor::Index& idx, const Scalar& c) {
    Vector acc = basis_vector(a.field, a.dim, idx[0]);
    for (std::size_t k = 1; k < idx.size(); ++k) acc = mul(a, acc, basis_vector(a.field, a.dim, idx[k]));
    axpy(out, c, acc);
  });
  return out;
}

/// Leg-wise product in A_1 (x) ... (x) A_r.
inline Tensor tensor_mul(const std::vector<const AlgebraData*>& legs, const Tensor& x, const Tensor& y) {
  if (x.dims() != y.dims() || legs.size() != x.rank()) throw DimensionError("tensor_mul: shape mismatch");
  Tensor out(x.field(), x.dims());
  const std::size_t r = x.rank();
  std::vector<std::size_t> idx(r);
  x.for_each([&](const Tensor::Index& a, const Scalar& ca) {
    y.for_each([&](const Tensor::Index& b, const Scalar& cb) {
      std::vector<const SparseVec*> parts(r);
      for (std::size_t k = 0; k < r; ++k) {
        parts[k] = &legs[k]->product(a[k], b[k]);
        if (parts[k]->empty()) return;
      }
      std::vector<std::size_t> pos(r, 0);
      while (true) {
        Scalar c = ca * cb;
        for (std::size_t k = 0; k < r; ++k) {
          idx[k] = (*parts[k])[pos[k]].first;
          c *= (*parts[k])[pos[k]].second;
        }
        out.add(idx, c);
        std::size_t k = r;
        while (k > 0) {
          --k;
          if (++pos[k] < parts[k]->size()) break;
          pos[k] = 0;
          if (k == 0) return;
        }
      }
    });
  });
  return out;
}

inline Tensor tensor_square_mul(const HopfData& h, const Tensor& x, const Tensor& y) {
  return tensor_mul({&h.algebra, &h.algebra}, x, y);
}

inline Tensor pure_tensor(Field f, const std::vector<Vector>& factors) {
  std::vector<std::size_t> dims;
  for (const auto& v : factors) dims.push_back(v.size());
  Tensor t(f, dims);
  std::vector<std::size_t> idx(factors.size(), 0);
  std::function<void(std::size_t, Scalar)> rec = [&](std::size_t k, Scalar c) {
    if (k == factors.size()) {
      t.add(idx, c);
      return;
    }
    for (std::size_t i = 0; i < factors[k].size(); ++i) {
      if (factors[k][i].is_zero()) continue;
      idx[k] = i;
      rec(k + 1, c * factors[k][i]);
    }
  };
  rec(0, Scalar::one(f));
  return t;
}

// ---------------------------------------------------------------------------
// Element predicates

inline bool is_group_like(const HopfData& h, const Vector& v) {
  return comul(h, v) == pure_tensor(h.field(), {v, v}) && counit(h, v).is_one();
}

/// (g,1)-primitive: Delta(v) = v (x) 1 + g (x) v.
inline bool is_primitive(const HopfData& h, const Vector& v, const Vector& g) {
  Tensor rhs = pure_tensor(h.field(), {v, h.algebra.unit});
  rhs.add_tensor(pure_tensor(h.field(), {g, v}), Scalar::one(h.field()));
  return comul(h, v) == rhs;
}

inline bool is_cocommutative(const HopfData& h) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Tensor d = comul(h, basis(h, i));
    if (!(flip(d) == d)) return false;
  }
  return true;
}

inline LinearMap antipode_power(const HopfData& h, unsigned k) {
  LinearMap p = LinearMap::identity(h.field(), h.dim());
  for (unsigned i = 0; i < k; ++i) p = h.antipode * p;
  return p;
}

/// Order of the antipode as a linear map, or 0 if it exceeds `bound`.
inline unsigned antipode_order(const HopfData& h, unsigned bound = 64) {
  LinearMap p = h.antipode;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = h.antipode * p;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Axiom checker

/// The full list of Hopf identities for `h`. The suite captures `h` by
/// reference; keep `h` alive while using it.
inline IdentitySuite hopf_identities(const HopfData& h) {
  validate_shape(h);
  const std::size_t n = h.dim();
  const Field f = h.field();
  const auto& L = h.labels();
  const auto& A = h.algebra;
  auto e = [&h](std::size_t i) { return basis(h, i); };

  IdentitySuite s("Hopf algebra");
  s.add("associativity", {n, n, n}, [&A, &L, n, f](auto ix) {
    // basis products read straight off the table; dense mul is too slow at dim 25
    Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
    for (const auto& [k, c] : A.product(ix[0], ix[1])) add_product(A, lhs, k, ix[2], c);
    for (const auto& [k, c] : A.product(ix[1], ix[2])) add_product(A, rhs, ix[0], k, c);
    return compare_vectors(lhs, rhs, L);
  });
  s.add("left unit", {n}, [&A, &L, e](auto ix) { return compare_vectors(mul(A, A.unit, e(ix[0])), e(ix[0]), L); });
  s.add("right unit", {n}, [&A, &L, e](auto ix) { return compare_vectors(mul(A, e(ix[0]), A.unit), e(ix[0]), L); });
  s.add("coassociativity", {n}, [&h, &L, e](auto ix) {
    Tensor d = comul(h, e(ix[0]));
    return compare_tensors(apply_delta(h, d, 1), apply_delta(h, d, 0), L);
  });
  LinearMap eps(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) eps(0, i) = h.coalgebra.counit[i];
  s.add("left counit", {n}, [&h, &L, e, eps](auto ix) {
    Tensor t = map_leg(comul(h, e(ix[0])), 0, eps);
    Vector v = zero_vector(h.field(), h.dim());
    t.for_each([&](const Tensor::Index& k, const Scalar& c) { v[k[1]] += c; });
    return compare_vectors(v, e(ix[0]), L);
  });
  s.add("right counit", {n}, [&h, &L, e, eps](auto ix) {
    Tensor t = map_leg(comul(h, e(ix[0])), 1, eps);
    Vector v = zero_vector(h.field(), h.dim());
    t.for_each([&](const Tensor::Index& k, const Scalar& c) { v[k[0]] += c; });
    return compare_vectors(v, e(ix[0]), L);
  });
  s.add_fact("comultiplication of unit", [&h, &L] {
    return compare_tensors(comul(h, h.algebra.unit), pure_tensor(h.field(), {h.algebra.unit, h.algebra.unit}), L);
  });
  s.add_fact("counit of unit", [&h] {
    Scalar c = counit(h, h.algebra.unit);
    return expect(c.is_one(), "epsilon(1)", c.str(), "1/1");
  });
  s.add("comultiplication multiplicative", {n, n}, [&h, &A, &L, e](auto ix) {
    Tensor lhs = comul(h, mul(A, e(ix[0]), e(ix[1])));
    Tensor rhs = tensor_square_mul(h, comul(h, e(ix[0])), comul(h, e(ix[1])));
    return compare_tensors(lhs, rhs, L);
  });
  s.add("counit multiplicative", {n, n}, [&h, &A, e](auto ix) {
    Scalar lhs = counit(h, mul(A, e(ix[0]), e(ix[1])));
    Scalar rhs = h.coalgebra.counit[ix[0]] * h.coalgebra.counit[ix[1]];
    return expect(lhs == rhs, "epsilon(ab)", lhs.str(), rhs.str());
  });
  s.add("antipode left", {n}, [&h, &A, &L, e](auto ix) {
    Vector lhs = multiply_legs(A, map_leg(comul(h, e(ix[0])), 0, h.antipode));
    return compare_vectors(lhs, scaled(A.unit, h.coalgebra.counit[ix[0]]), L);
  });
  s.add("antipode right", {n}, [&h, &A, &L, e](auto ix) {
    Vector lhs = multiply_legs(A, map_leg(comul(h, e(ix[0])), 1, h.antipode));
    return compare_vectors(lhs, scaled(A.unit, h.coalgebra.counit[ix[0]]), L);
  });
  s.add("antipode anti-multiplicative", {n, n}, [&h, &A, &L, e](auto ix) {
    Vector lhs = mul(A, antipode(h, e(ix[1])), antipode(h, e(ix[0])));
    Vector rhs = antipode(h, mul(A, e(ix[0]), e(ix[1])));
    return compare_vectors(lhs, rhs, L);
  });
  s.add("antipode anti-comultiplicative", {n}, [&h, &L, e](auto ix) {
    Tensor lhs = flip(map_leg(map_leg(comul(h, e(ix[0])), 0, h.antipode), 1, h.antipode));
    Tensor rhs = comul(h, antipode(h, e(ix[0])));
    return compare_tensors(lhs, rhs, L);
  });
  s.add_fact("antipode fixes unit", [&h, &L] { return compare_vectors(antipode(h, h.algebra.unit), h.algebra.unit, L); });
  s.add("counit after antipode", {n}, [&h, e](auto ix) {
    Scalar lhs = counit(h, antipode(h, e(ix[0])));
    return expect(lhs == h.coalgebra.counit[ix[0]], "epsilon(S(a))", lhs.str(), h.coalgebra.counit[ix[0]].str());
  });
  return s;
}

inline VerificationReport check_hopf(const HopfData& h, SuiteMode mode = SuiteMode::first_failure) {
  return hopf_identities(h).run(mode);
}

// ---------------------------------------------------------------------------
// Derived structures

/// Reversed multiplication, same coalgebra, inverse antipode.
inline HopfData opposite_hopf(const HopfData& h) {
  auto inv = h.antipode.inverse();
  if (!inv) throw DimensionError("opposite_hopf: antipode is singular");
  HopfData op = h;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.algebra.mult[i * n + j] = h.algebra.product(j, i);
  op.antipode = *inv;
  return op;
}

/// Relabels the basis: old basis element i becomes new element perm[i].
inline HopfData permute_basis(const HopfData& h, const std::vector<std::size_t>& perm) {
  const std::size_t n = h.dim();
  if (perm.size() != n) throw DimensionError("permutation size differs from dimension");
  HopfData out = h;
  auto remap = [&](const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v) r.emplace_back(perm[k], c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.algebra.labels[perm[i]] = h.algebra.labels[i];
    out.algebra.unit[perm[i]] = h.algebra.unit[i];
    out.coalgebra.counit[perm[i]] = h.coalgebra.counit[i];
    out.coalgebra.delta[perm[i]].clear();
    for (const auto& d : h.coalgebra.delta[i]) out.coalgebra.delta[perm[i]].push_back({perm[d.left], perm[d.right], d.coeff});
    for (std::size_t j = 0; j < n; ++j) out.algebra.mult[perm[i] * n + perm[j]] = remap(h.algebra.product(i, j));
    for (std::size_t r = 0; r < n; ++r) out.antipode(perm[r], perm[i]) = h.antipode(r, i);
  }
  return out;
}

/// Canonical comparison of two Hopf structures on the same basis.
inline bool same_structure(const HopfData& a, const HopfData& b) {
  if (a.dim() != b.dim() || a.field() != b.field()) return false;
  const std::size_t n = a.dim();
  if (a.algebra.unit != b.algebra.unit || a.coalgebra.counit != b.coalgebra.counit) return false;
  if (!(a.antipode == b.antipode)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(comul(a, basis(a, i)) == comul(b, basis(b, i)))) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (to_dense(a.field(), n, a.algebra.product(i, j)) != to_dense(b.field(), n, b.algebra.product(i, j)))
        return false;
  }
  return true;
}

/// The ground field as a one-dimensional Hopf algebra.
inline HopfData ground_field_hopf(Field f) {
  HopfData k;
  k.algebra.field = f;
  k.algebra.dim = 1;
  k.algebra.labels = {"1"};
  k.algebra.unit = {Scalar::one(f)};
  k.algebra.mult = {SparseVec{{0, Scalar::one(f)}}};
  k.coalgebra.delta = {{DeltaTerm{0, 0, Scalar::one(f)}}};
  k.coalgebra.counit = {Scalar::one(f)};
  k.antipode = LinearMap::identity(f, 1);
  return k;
}

/// The counit as a 1 x dim linear map.
inline LinearMap counit_map(const HopfData& h) {
  LinearMap eps(h.field(), 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) eps(0, i) = h.coalgebra.counit[i];
  return eps;
}

// ---------------------------------------------------------------------------
// Morphisms

inline VerificationReport is_algebra_morphism(const LinearMap& f, const HopfData& a, const HopfData& b) {
  if (f.cols() != a.dim() || f.rows() != b.dim()) throw DimensionError("algebra morphism: dimension mismatch");
  IdentitySuite s("algebra morphism");
  s.add("multiplicative", {a.dim(), a.dim()}, [&](auto ix) {
    Vector lhs = f.apply(mul(a, basis(a, ix[0]), basis(a, ix[1])));
    Vector rhs = mul(b, f.column(ix[0]), f.column(ix[1]));
    return compare_vectors(lhs, rhs, b.labels());
  });
  s.add_fact("unital", [&] { return compare_vectors(f.apply(a.algebra.unit), b.algebra.unit, b.labels()); });
  return s.run();
}

inline VerificationReport is_coalgebra_morphism(const LinearMap& f, const HopfData& a, const HopfData& b) {
  if (f.cols() != a.dim() || f.rows() != b.dim()) throw DimensionError("coalgebra morphism: dimension mismatch");
  IdentitySuite s("coalgebra morphism");
  s.add("comultiplicative", {a.dim()}, [&](auto ix) {
    Tensor lhs = comul(b, f.column(ix[0]));
    Tensor rhs = map_leg(map_leg(comul(a, basis(a, ix[0])), 0, f), 1, f);
    return compare_tensors(lhs, rhs, b.labels());
  });
  s.add("counital", {a.dim()}, [&](auto ix) {
    Scalar lhs = counit(b, f.column(ix[0]));
    const Scalar& rhs = a.coalgebra.counit[ix[0]];
    return expect(lhs == rhs, "epsilon(f(a))", lhs.str(), rhs.str());
  });
  return s.run();
}

// ---------------------------------------------------------------------------
// Hopf cobrace compatibility

/// Two coalgebra structures on one algebra: `first` (with antipode S) and
/// `second`. Checks
///   (id (x) first) second(a) =
///     sum second(a1)_1 S(a2) second(a3)_1 (x) second(a1)_2 (x) second(a3)_2
/// where a1 (x) a2 (x) a3 is the iterated `first` comultiplication.
inline VerificationReport check_cobrace_compat(const AlgebraData& m, const CoalgebraData& first,
                                               const CoalgebraData& second, const LinearMap& s) {
  const std::size_t n = m.dim;
  if (first.delta.size() != n || second.delta.size() != n || s.rows() != n || s.cols() != n)
    throw DimensionError("cobrace compatibility: dimension mismatch");
  HopfData h1{m, first, s}, h2{m, second, s};
  IdentitySuite suite("Hopf cobrace compatibility");
  suite.add("cobrace compatibility", {n}, [h1, h2, &m](auto ix) {
    const Field f = m.field;
    const std::size_t n = m.dim;
    Vector a = basis_vector(f, n, ix[0]);
    Tensor lhs = apply_delta(h1, comul(h2, a), 1);
    Tensor rhs(f, {n, n, n});
    delta_power(h1, a, 2).for_each([&](const Tensor::Index& leg, const Scalar& c) {
      Vector middle = h1.antipode.column(leg[1]);
      for (const auto& p : h2.coalgebra.delta[leg[0]])
        for (const auto& q : h2.coalgebra.delta[leg[2]]) {
          Vector prod = mul(m, mul(m, basis_vector(f, n, p.left), middle), basis_vector(f, n, q.left));
          Scalar coeff = c * p.coeff * q.coeff;
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) rhs.add({k, p.right, q.right}, coeff * prod[k]);
        }
    });
    return compare_tensors(lhs, rhs, m.labels);
  });
  return suite.run();
}

}  // namespace hopfrb
