#pragma once

/// Relative Rota-Baxter operators of weight lambda on Lie algebras given by
/// structure constants:
///   [B(u), B(v)]_g = B(phi(B(u)) v - phi(B(v)) u + lambda [u, v]_h)
/// for B: h -> g and phi: g -> Der(h).

#include "hopfrb/linalg.hpp"
#include "hopfrb/report.hpp"

#include <string>
#include <vector>

namespace hopfrb {

struct LieData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> brackets;  // brackets[i * dim + j] = [e_i, e_j]

  const SparseVec& at(std::size_t i, std::size_t j) const { return brackets.at(i * dim + j); }
};

inline LieData make_lie(Field f, std::size_t dim, std::vector<std::string> labels = {}) {
  LieData l{f, dim, std::move(labels), std::vector<SparseVec>(dim * dim)};
  if (l.labels.empty())
    for (std::size_t i = 0; i < dim; ++i) l.labels.push_back("e" + std::to_string(i));
  if (l.labels.size() != dim) throw DimensionError("label count differs from dimension");
  return l;
}

/// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
inline void set_bracket(LieData& l, std::size_t i, std::size_t j, const Vector& v) {
  l.brackets.at(i * l.dim + j) = to_sparse(v);
  l.brackets.at(j * l.dim + i) = to_sparse(scaled(v, -Scalar::one(l.field)));
}

inline Vector bracket(const LieData& l, const Vector& u, const Vector& v) {
  require_dim(u, l.dim, "bracket");
  require_dim(v, l.dim, "bracket");
  Vector out = zero_vector(l.field, l.dim);
  for (std::size_t i = 0; i < l.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < l.dim; ++j) {
      if (v[j].is_zero()) continue;
      Scalar c = u[i] * v[j];
      for (const auto& [k, s] : l.at(i, j)) out[k] += c * s;
    }
  }
  return out;
}

inline VerificationReport check_lie(const LieData& l) {
  if (l.brackets.size() != l.dim * l.dim) throw DimensionError("bracket table must have dim^2 entries");
  const std::size_t n = l.dim;
  auto e = [&](std::size_t i) { return basis_vector(l.field, n, i); };
  IdentitySuite s("Lie algebra");
  s.add("antisymmetry", {n, n}, [&](auto ix) {
    Vector lhs = bracket(l, e(ix[0]), e(ix[1]));
    Vector rhs = scaled(bracket(l, e(ix[1]), e(ix[0])), -Scalar::one(l.field));
    if (ix[0] == ix[1]) rhs = zero_vector(l.field, n);  // alternating, also in characteristic 2
    return compare_vectors(lhs, rhs, l.labels);
  });
  s.add("Jacobi", {n, n, n}, [&](auto ix) {
    Vector x = e(ix[0]), y = e(ix[1]), z = e(ix[2]);
    Vector sum = bracket(l, x, bracket(l, y, z)) + bracket(l, y, bracket(l, z, x)) + bracket(l, z, bracket(l, x, y));
    return compare_vectors(sum, zero_vector(l.field, n), l.labels);
  });
  return s.run();
}

/// The same space with bracket lambda [., .].
inline LieData rescale_bracket(const LieData& l, const Scalar& lambda) {
  LieData out = l;
  for (auto& sv : out.brackets) sv = to_sparse(scaled(to_dense(l.field, l.dim, sv), lambda));
  return out;
}

/// sl2 on the basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieData sl2(Field f) {
  LieData l = make_lie(f, 3, {"e", "h", "f"});
  auto v = [&](long long a, long long b, long long c) {
    return Vector{Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c)};
  };
  set_bracket(l, 1, 0, v(2, 0, 0));
  set_bracket(l, 1, 2, v(0, 0, -2));
  set_bracket(l, 0, 2, v(0, 1, 0));
  return l;
}

/// The nonabelian two-dimensional algebra [x, y] = x.
inline LieData affine_line_lie(Field f) {
  LieData l = make_lie(f, 2, {"x", "y"});
  set_bracket(l, 0, 1, basis_vector(f, 2, 0));
  return l;
}

/// phi[i] = phi(e_i), an endomorphism of h.
struct DerivationAction {
  std::vector<LinearMap> phi;

  LinearMap of(const Vector& u, Field f, std::size_t dim_h) const {
    LinearMap out(f, dim_h, dim_h);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t c = 0; c < dim_h; ++c)
        for (std::size_t r = 0; r < dim_h; ++r) out(r, c) += u[i] * phi[i](r, c);
    }
    return out;
  }
};

inline DerivationAction adjoint_rep(const LieData& g) {
  DerivationAction a;
  for (std::size_t i = 0; i < g.dim; ++i) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < g.dim; ++j)
      cols.push_back(bracket(g, basis_vector(g.field, g.dim, i), basis_vector(g.field, g.dim, j)));
    a.phi.push_back(LinearMap::from_columns(g.field, g.dim, cols));
  }
  return a;
}

/// Each phi(e_i) is a derivation of h, and phi([u,v]) = [phi(u), phi(v)].
inline VerificationReport check_derivation_action(const LieData& g, const LieData& h, const DerivationAction& a) {
  if (a.phi.size() != g.dim) throw DimensionError("action needs one matrix per basis element of g");
  for (const auto& m : a.phi)
    if (m.rows() != h.dim || m.cols() != h.dim) throw DimensionError("action matrices must be dim h x dim h");
  auto eg = [&](std::size_t i) { return basis_vector(g.field, g.dim, i); };
  auto eh = [&](std::size_t i) { return basis_vector(h.field, h.dim, i); };
  IdentitySuite s("derivation action");
  s.add("derivation", {g.dim, h.dim, h.dim}, [&](auto ix) {
    const LinearMap& d = a.phi[ix[0]];
    Vector u = eh(ix[1]), v = eh(ix[2]);
    Vector lhs = d.apply(bracket(h, u, v));
    Vector rhs = bracket(h, d.apply(u), v) + bracket(h, u, d.apply(v));
    return compare_vectors(lhs, rhs, h.labels);
  });
  s.add("homomorphism", {g.dim, g.dim, h.dim}, [&](auto ix) {
    LinearMap lhs = a.of(bracket(g, eg(ix[0]), eg(ix[1])), h.field, h.dim);
    const LinearMap &x = a.phi[ix[0]], &y = a.phi[ix[1]];
    Vector w = eh(ix[2]);
    return compare_vectors(lhs.apply(w), x.apply(y.apply(w)) - y.apply(x.apply(w)), h.labels);
  });
  return s.run();
}

/// B: h -> g as a dim g x dim h matrix.
inline VerificationReport check_relative_rb_lie(const LieData& g, const LieData& h, const DerivationAction& phi,
                                                const LinearMap& b, const Scalar& lambda) {
  auto act = check_derivation_action(g, h, phi);
  if (!act.passed()) throw PreconditionError("invalid action", act);
  if (b.rows() != g.dim || b.cols() != h.dim) throw DimensionError("B must be dim g x dim h");
  IdentitySuite s("relative Rota-Baxter operator of weight " + lambda.str());
  s.add("[Bu,Bv] = B(phi(Bu)v - phi(Bv)u + lambda[u,v])", {h.dim, h.dim}, [&](auto ix) {
    Vector u = basis_vector(h.field, h.dim, ix[0]), v = basis_vector(h.field, h.dim, ix[1]);
    Vector bu = b.apply(u), bv = b.apply(v);
    Vector lhs = bracket(g, bu, bv);
    Vector arg = phi.of(bu, h.field, h.dim).apply(v) - phi.of(bv, h.field, h.dim).apply(u) +
                 scaled(bracket(h, u, v), lambda);
    return compare_vectors(lhs, b.apply(arg), g.labels);
  });
  return s.run();
}

/// [Bu,Bv] = B([Bu,v] - [Bv,u] + lambda[u,v]) on g, together with the
/// agreement of this verdict with the relative form for h = (g, lambda[.,.]),
/// phi = ad and weight 1.
inline VerificationReport check_rb_lie_weight(const LieData& g, const LinearMap& b, const Scalar& lambda) {
  if (b.rows() != g.dim || b.cols() != g.dim) throw DimensionError("B must be dim g x dim g");
  IdentitySuite s("Rota-Baxter operator of weight " + lambda.str());
  s.add("[Bu,Bv] = B([Bu,v] - [Bv,u] + lambda[u,v])", {g.dim, g.dim}, [&](auto ix) {
    Vector u = basis_vector(g.field, g.dim, ix[0]), v = basis_vector(g.field, g.dim, ix[1]);
    Vector bu = b.apply(u), bv = b.apply(v);
    Vector arg = bracket(g, bu, v) - bracket(g, bv, u) + scaled(bracket(g, u, v), lambda);
    return compare_vectors(bracket(g, bu, bv), b.apply(arg), g.labels);
  });
  VerificationReport rep = s.run();
  auto rel = check_relative_rb_lie(g, rescale_bracket(g, lambda), adjoint_rep(g), b, Scalar::one(g.field));
  bool agree = rel.passed() == rep.passed();
  rep.add({"agrees with the relative form", agree, 1,
           agree ? std::nullopt
                 : ProbeResult(mismatch("verdicts", rep.passed() ? "pass" : "fail", rel.passed() ? "pass" : "fail"))});
  return rep;
}

}  // namespace hopfrb
