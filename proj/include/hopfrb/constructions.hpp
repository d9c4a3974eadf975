#pragma once

/// Named Hopf algebras: group algebras, Sweedler's H4, and the family
/// H(m, zeta, l, f) generated by a group-like g and a (g,1)-primitive x with
///   g^m = 1,  x g = zeta g x,  x^l = f(x).
/// Also quantum binomial coefficients and the family's automorphisms.

#include "hopfrb/group.hpp"
#include "hopfrb/hopf.hpp"
#include "hopfrb/parallel.hpp"
#include "hopfrb/report.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfrb {

// ---------------------------------------------------------------------------
// Quantum binomials

/// Coefficient of u^(p-q) v^q in (u+v)^p where v u = zeta u v.
/// Pascal rule: C(p, q) = zeta^q C(p-1, q) + C(p-1, q-1).
inline Scalar qbinom(unsigned p, unsigned q, const Scalar& zeta) {
  if (q > p) throw std::invalid_argument("qbinom: q > p");
  const Field f = zeta.field();
  std::vector<Scalar> row{Scalar::one(f)};
  for (unsigned n = 1; n <= p; ++n) {
    std::vector<Scalar> next(n + 1, Scalar::zero(f));
    for (unsigned k = 0; k <= n; ++k) {
      if (k < n) next[k] += zeta.pow(k) * row[k];
      if (k > 0) next[k] += row[k - 1];
    }
    row = std::move(next);
  }
  return row[q];
}

/// Same coefficient by brute force: expand (u+v)^p into its 2^p words and
/// bubble-sort each word to u^a v^b, one factor zeta per swap of "vu".
inline Scalar qbinom_oracle(unsigned p, unsigned q, const Scalar& zeta) {
  if (p > 20) throw std::invalid_argument("qbinom_oracle: p too large");
  const Field f = zeta.field();
  Scalar total = Scalar::zero(f);
  for (unsigned long word = 0; word < (1ul << p); ++word) {
    std::vector<int> letters(p);  // 0 = u, 1 = v
    unsigned vs = 0;
    for (unsigned i = 0; i < p; ++i) {
      letters[i] = (word >> i) & 1;
      vs += letters[i];
    }
    if (vs != q) continue;
    unsigned swaps = 0;
    for (bool moved = true; moved;) {
      moved = false;
      for (unsigned i = 0; i + 1 < p; ++i)
        if (letters[i] == 1 && letters[i + 1] == 0) {
          std::swap(letters[i], letters[i + 1]);
          ++swaps;
          moved = true;
        }
    }
    total += zeta.pow(swaps);
  }
  return total;
}

namespace detail {

using Poly = std::vector<Scalar>;  // coefficient of u^k at index k

inline void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, Field f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly poly_add(Poly a, const Poly& b, Field f) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly poly_pow(const Poly& a, unsigned e, Field f) {
  Poly r{Scalar::one(f)};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a, f);
  return r;
}

/// Remainder of a modulo a monic polynomial.
inline Poly poly_mod_monic(Poly a, const Poly& m) {
  trim(a);
  const std::size_t d = m.size() - 1;
  while (a.size() > d) {
    Scalar lead = a.back();
    std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] -= lead * m[i];
    trim(a);
  }
  return a;
}

inline std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p[k].str() + ")u^" + std::to_string(k);
  }
  return s;
}

}  // namespace detail

/// prod_{t<q} (1 + zeta^t u) = sum_t qbinom(q, t) zeta^(t(t-1)/2) u^t.
inline VerificationReport cauchy_check(unsigned q, const Scalar& zeta) {
  const Field f = zeta.field();
  IdentitySuite s("Cauchy binomial identity");
  s.add_fact("product = sum", [q, zeta, f]() -> ProbeResult {
    detail::Poly lhs{Scalar::one(f)};
    for (unsigned t = 0; t < q; ++t) lhs = detail::poly_mul(lhs, {Scalar::one(f), zeta.pow(t)}, f);
    detail::Poly rhs(q + 1, Scalar::zero(f));
    for (unsigned t = 0; t <= q; ++t) rhs[t] = qbinom(q, t, zeta) * zeta.pow(static_cast<long long>(t) * (t - 1) / 2);
    detail::trim(rhs);
    return expect(lhs == rhs, "polynomial", detail::poly_str(lhs), detail::poly_str(rhs));
  });
  return s.run();
}

// ---------------------------------------------------------------------------
// Group algebras and H4

inline HopfData group_algebra(const GroupTable& g, Field f) {
  const std::size_t n = g.order();
  if (n > HopfLimits{}.max_dim) throw DimensionError("group too large for a group algebra");
  const Scalar one = Scalar::one(f);
  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = n;
  h.algebra.labels = g.labels();
  h.algebra.unit = basis_vector(f, n, g.identity());
  h.algebra.mult.resize(n * n);
  h.coalgebra.delta.resize(n);
  h.coalgebra.counit.assign(n, one);
  h.antipode = LinearMap(f, n, n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) h.algebra.mult[a * n + b] = {{g.mul(a, b), one}};
    h.coalgebra.delta[a] = {{a, a, one}};
    h.antipode(g.inv(a), a) = one;
  }
  return h;
}

/// Sweedler's four-dimensional algebra on the basis {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
inline HopfData sweedler_h4(Field f) {
  if (f.characteristic() == 2) throw FieldError("Sweedler algebra needs 2 invertible");
  const Scalar one = Scalar::one(f), neg = -one;
  enum { e1, g, x, gx };
  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = 4;
  h.algebra.labels = {"1", "g", "x", "gx"};
  h.algebra.unit = basis_vector(f, 4, e1);
  auto& m = h.algebra.mult;
  m.assign(16, {});
  auto set = [&](int a, int b, std::size_t k, const Scalar& c) { m[a * 4 + b] = {{k, c}}; };
  for (int a = 0; a < 4; ++a) {
    set(e1, a, a, one);
    set(a, e1, a, one);
  }
  set(g, g, e1, one);
  set(g, x, gx, one);
  set(g, gx, x, one);
  set(x, g, gx, neg);
  set(gx, g, x, neg);
  h.coalgebra.delta = {{{e1, e1, one}},
                       {{g, g, one}},
                       {{x, e1, one}, {g, x, one}},
                       {{gx, g, one}, {e1, gx, one}}};
  h.coalgebra.counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
  h.antipode = LinearMap(f, 4, 4);
  h.antipode(e1, e1) = one;
  h.antipode(g, g) = one;
  h.antipode(gx, x) = neg;
  h.antipode(x, gx) = one;
  return h;
}

// ---------------------------------------------------------------------------
// The family H(m, zeta, l, f)

struct FamilyParams {
  unsigned m = 1;
  Scalar zeta;
  unsigned l = 1;
  std::vector<Scalar> f;  // a_0 .. a_{l-1}; may be shorter (missing = 0)

  Field field() const { return zeta.field(); }

  Scalar coeff(unsigned p) const { return p < f.size() ? f[p] : Scalar::zero(field()); }

  /// Multiplicative order of zeta (0 if zeta is not a root of unity of order <= m).
  unsigned d() const {
    auto o = multiplicative_order(zeta, std::max(m, 1u));
    return o ? *o : 0;
  }

  std::size_t index(unsigned alpha, unsigned beta) const { return std::size_t(alpha) * l + beta; }
};

inline void validate_params(const FamilyParams& p) {
  if (p.m == 0) throw std::invalid_argument("family: m must be positive");
  if (p.l == 0) throw std::invalid_argument("family: l must be a positive integer (l = infinity is not supported)");
  if (std::size_t(p.m) * p.l > HopfLimits{}.max_dim)
    throw DimensionError("family: dimension m*l = " + std::to_string(std::size_t(p.m) * p.l) + " exceeds cap");
  if (p.f.size() > p.l) throw std::invalid_argument("family: f must have degree < l");
  for (const auto& c : p.f)
    if (c.field() != p.field()) throw FieldError("family: f and zeta lie in different fields");
}

namespace detail {

/// The algebra of the family, without checking the hypotheses.
inline AlgebraData family_algebra(const FamilyParams& p) {
  validate_params(p);
  const Field fld = p.field();
  const unsigned m = p.m, l = p.l;
  const std::size_t n = std::size_t(m) * l;
  // xpow[k] = x^k in the basis x^0..x^{l-1}, for k < 2l - 1
  std::vector<std::vector<Scalar>> xpow(2 * l, std::vector<Scalar>(l, Scalar::zero(fld)));
  for (unsigned k = 0; k < 2 * l; ++k) {
    if (k < l) {
      xpow[k][k] = Scalar::one(fld);
      continue;
    }
    for (unsigned q = 0; q < l; ++q) {  // x^k = x^{k-l} f(x)
      Scalar a = p.coeff(q);
      if (a.is_zero()) continue;
      for (unsigned b = 0; b < l; ++b) xpow[k][b] += a * xpow[k - l + q][b];
    }
  }
  AlgebraData A;
  A.field = fld;
  A.dim = n;
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < l; ++b) A.labels.push_back("g^" + std::to_string(a) + "*x^" + std::to_string(b));
  A.unit = basis_vector(fld, n, 0);
  A.mult.resize(n * n);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < l; ++b)
      for (unsigned c = 0; c < m; ++c)
        for (unsigned d = 0; d < l; ++d) {
          // (g^a x^b)(g^c x^d) = zeta^{bc} g^{a+c} x^{b+d}
          Scalar coeff = p.zeta.pow(static_cast<long long>(b) * c);
          unsigned ga = (a + c) % m;
          SparseVec sv;
          for (unsigned e = 0; e < l; ++e) {
            const Scalar& t = xpow[b + d][e];
            if (!t.is_zero()) sv.emplace_back(p.index(ga, e), coeff * t);
          }
          A.mult[p.index(a, b) * n + p.index(c, d)] = std::move(sv);
        }
  return A;
}

inline Vector family_power(const AlgebraData& A, const Vector& v, unsigned k) {
  Vector r = A.unit;
  for (unsigned i = 0; i < k; ++i) r = mul(A, r, v);
  return r;
}

inline Tensor tensor_power(const std::vector<const AlgebraData*>& legs, const Tensor& t, const Tensor& one, unsigned k) {
  Tensor r = one;
  for (unsigned i = 0; i < k; ++i) r = tensor_mul(legs, r, t);
  return r;
}

}  // namespace detail

/// Generators g and x of the family as vectors.
inline Vector family_g(const FamilyParams& p) { return basis_vector(p.field(), std::size_t(p.m) * p.l, p.index(1 % p.m, 0)); }

inline Vector family_x(const FamilyParams& p, const AlgebraData& A) {
  if (p.l > 1) return basis_vector(p.field(), A.dim, p.index(0, 1));
  return scaled(A.unit, p.coeff(0));  // l = 1: x = f(x) = a_0
}

/// Hypotheses on (m, zeta, l, f). The last two checks compute
/// Delta(x)^l - f(Delta(x)) in H (x) H and epsilon(x^l - f(x)) directly.
inline VerificationReport family_hypotheses(const FamilyParams& p) {
  validate_params(p);
  const Field fld = p.field();
  const unsigned m = p.m, l = p.l;
  IdentitySuite s("family hypotheses");
  s.add_fact("zeta^m = 1", [&] { return expect(p.zeta.pow(m).is_one(), "zeta^m", p.zeta.pow(m).str(), "1"); });
  s.add("f(zeta x) = zeta^l f(x)", {l}, [&](auto ix) {
    Scalar a = p.coeff(unsigned(ix[0]));
    Scalar lhs = a * p.zeta.pow(long(ix[0])), rhs = p.zeta.pow(l) * a;
    return expect(lhs == rhs, "coefficient of x^" + std::to_string(ix[0]), lhs.str(), rhs.str());
  });
  s.add_fact("condition 1: a_0 = 0", [&] { return expect(p.coeff(0).is_zero(), "a_0", p.coeff(0).str(), "0"); });
  s.add("condition 2: m | (l - p) when a_p != 0", {l}, [&](auto ix) {
    unsigned q = unsigned(ix[0]);
    bool ok = p.coeff(q).is_zero() || (l - q) % m == 0;
    return expect(ok, "p = " + std::to_string(q), std::to_string((l - q) % m), "0 mod m");
  });
  s.add("condition 3: {l choose q} = 0 for 1 < q < l", {l}, [&](auto ix) {
    unsigned q = unsigned(ix[0]);
    if (q <= 1) return ProbeResult{};
    Scalar c = qbinom(l, q, p.zeta);
    return expect(c.is_zero(), "q = " + std::to_string(q), c.str(), "0");
  });
  s.add("condition 4: {p choose q} = 0 for 1 < q < p when a_p != 0", {l, l}, [&](auto ix) {
    unsigned pp = unsigned(ix[0]), q = unsigned(ix[1]);
    if (p.coeff(pp).is_zero() || q <= 1 || q >= pp) return ProbeResult{};
    Scalar c = qbinom(pp, q, p.zeta);
    return expect(c.is_zero(), "p = " + std::to_string(pp) + ", q = " + std::to_string(q), c.str(), "0");
  });
  s.add_fact("Delta(x^l - f(x)) = 0", [&]() -> ProbeResult {
    // meaningful only when the algebra relations are consistent
    if (!p.zeta.pow(m).is_one()) return mismatch("precondition", "zeta^m != 1", "zeta^m = 1");
    for (unsigned q = 0; q < l; ++q)
      if (!(p.coeff(q) * p.zeta.pow(q) == p.zeta.pow(l) * p.coeff(q)))
        return mismatch("precondition", "f(zeta x) != zeta^l f(x)", "equal");
    AlgebraData A = detail::family_algebra(p);
    const std::size_t n = A.dim;
    const std::vector<const AlgebraData*> legs{&A, &A};
    Vector x = family_x(p, A), g = family_g(p);
    Tensor dx = pure_tensor(fld, {x, A.unit});
    dx.add_tensor(pure_tensor(fld, {g, x}), Scalar::one(fld));
    Tensor one = pure_tensor(fld, {A.unit, A.unit});
    Tensor lhs = detail::tensor_power(legs, dx, one, l);
    Tensor rhs(fld, {n, n});
    for (unsigned q = 0; q < l; ++q)
      if (!p.coeff(q).is_zero()) rhs.add_tensor(detail::tensor_power(legs, dx, one, q), p.coeff(q));
    return compare_tensors(lhs, rhs, A.labels);
  });
  s.add_fact("epsilon(x^l - f(x)) = 0", [&] {
    // epsilon(x) = 0, so this is 0^l - a_0
    Scalar v = (l == 0 ? Scalar::one(fld) : Scalar::zero(fld)) - p.coeff(0);
    return expect(v.is_zero(), "epsilon", v.str(), "0");
  });
  return s.run(SuiteMode::full);
}

/// The Hopf algebra H(m, zeta, l, f) on the basis g^a x^b (index a*l + b).
/// Delta and S are computed from the generators by multiplication, not by
/// closed formulas. Throws PreconditionError when a hypothesis fails.
inline HopfData family(const FamilyParams& p) {
  auto hyp = family_hypotheses(p);
  if (!hyp.passed()) throw PreconditionError("family hypotheses fail", hyp);
  const Field fld = p.field();
  HopfData h;
  h.algebra = detail::family_algebra(p);
  const auto& A = h.algebra;
  const std::size_t n = A.dim;
  const std::vector<const AlgebraData*> legs{&A, &A};
  Vector g = family_g(p), x = family_x(p, A);

  Tensor dg = pure_tensor(fld, {g, g});
  Tensor dx = pure_tensor(fld, {x, A.unit});
  dx.add_tensor(pure_tensor(fld, {g, x}), Scalar::one(fld));
  Tensor one = pure_tensor(fld, {A.unit, A.unit});

  Vector ginv = detail::family_power(A, g, p.m - 1);
  Vector sx = scaled(mul(A, ginv, x), -Scalar::one(fld));

  h.coalgebra.delta.resize(n);
  h.coalgebra.counit.assign(n, Scalar::zero(fld));
  h.antipode = LinearMap(fld, n, n);
  for (unsigned a = 0; a < p.m; ++a)
    for (unsigned b = 0; b < p.l; ++b) {
      const std::size_t i = p.index(a, b);
      Tensor d = tensor_mul(legs, detail::tensor_power(legs, dg, one, a), detail::tensor_power(legs, dx, one, b));
      d.for_each([&](const Tensor::Index& k, const Scalar& c) { h.coalgebra.delta[i].push_back({k[0], k[1], c}); });
      if (b == 0) h.coalgebra.counit[i] = Scalar::one(fld);
      // S(g^a x^b) = S(x)^b S(g)^a
      Vector s = mul(A, detail::family_power(A, sx, b), detail::family_power(A, ginv, a));
      for (std::size_t r = 0; r < n; ++r) h.antipode(r, i) = s[r];
    }
  return h;
}

/// (-1)^q zeta^(-pq - q(q-1)/2) and the basis index of g^(-p-q) x^q.
inline std::pair<Scalar, std::size_t> antipode_closed_form(const FamilyParams& params, unsigned p, unsigned q) {
  if (p >= params.m || q >= params.l) throw std::out_of_range("antipode_closed_form: (p, q) out of range");
  const Field fld = params.field();
  long long e = -static_cast<long long>(p) * q - static_cast<long long>(q) * (q - 1) / 2;
  Scalar c = Scalar::from_int(fld, q % 2 ? -1 : 1) * params.zeta.pow(e);
  long long m = params.m;
  unsigned alpha = static_cast<unsigned>(((-static_cast<long long>(p) - q) % m + m) % m);
  return {c, params.index(alpha, q)};
}

// ---------------------------------------------------------------------------
// Automorphisms

/// Candidate psi(g) = g^k, psi(x) = sum_q c[q] x^q.
struct AutCandidate {
  long long k = 0;
  std::vector<Scalar> c;  // indexed by q in [0, l)

  friend bool operator==(const AutCandidate&, const AutCandidate&) = default;
};

struct AutVerdict {
  bool automorphism = false;   // algebra map, coalgebra map, bijective
  VerificationReport conditions;  // the sufficient conditions, informational
  VerificationReport morphism;    // the authoritative checks

  explicit operator bool() const { return automorphism; }
};

/// The linear map psi(g^a x^b) = psi(g)^a psi(x)^b.
inline LinearMap aut_matrix(const FamilyParams& p, const HopfData& h, const AutCandidate& cand) {
  const auto& A = h.algebra;
  const long long m = p.m;
  Vector pg = basis_vector(p.field(), A.dim, p.index(unsigned(((cand.k % m) + m) % m), 0));
  Vector px = zero_vector(p.field(), A.dim);
  for (unsigned q = 0; q < cand.c.size(); ++q)
    if (!cand.c[q].is_zero()) axpy(px, cand.c[q], detail::family_power(A, family_x(p, A), q));
  std::vector<Vector> cols(A.dim);
  for (unsigned a = 0; a < p.m; ++a)
    for (unsigned b = 0; b < p.l; ++b)
      cols[p.index(a, b)] = mul(A, detail::family_power(A, pg, a), detail::family_power(A, px, b));
  return LinearMap::from_columns(p.field(), A.dim, cols);
}

inline void validate_candidate(const FamilyParams& p, const AutCandidate& cand) {
  if (cand.c.size() != p.l) throw std::invalid_argument("candidate needs one coefficient per power of x");
  const long long m = p.m;
  for (unsigned q = 0; q < p.l; ++q) {
    if (cand.c[q].field() != p.field()) throw FieldError("candidate coefficient in a different field");
    if (!cand.c[q].is_zero() && ((static_cast<long long>(q) - cand.k) % m + m) % m != 0)
      throw std::invalid_argument("candidate has c_" + std::to_string(q) + " != 0 with q not congruent to k mod m");
  }
}

/// `h` must be family(p).
inline AutVerdict family_aut_check(const FamilyParams& p, const HopfData& h, const AutCandidate& cand) {
  validate_candidate(p, cand);
  const unsigned d = p.d();
  const long long m = p.m;
  AutVerdict v;
  IdentitySuite cond("automorphism conditions");
  cond.add_fact("gcd(k, m) = 1", [&] {
    long long g = std::gcd(((cand.k % m) + m) % m, m);
    return expect(g == 1, "gcd", std::to_string(g), "1");
  });
  cond.add("{q choose t} = 0 for 0 < t < q with c_q != 0", {p.l, p.l}, [&](auto ix) {
    unsigned q = unsigned(ix[0]), t = unsigned(ix[1]);
    if (cand.c[q].is_zero() || t == 0 || t >= q) return ProbeResult{};
    Scalar b = qbinom(q, t, p.zeta);
    return expect(b.is_zero(), "q = " + std::to_string(q) + ", t = " + std::to_string(t), b.str(), "0");
  });
  cond.add_fact("k^2 = 1 mod d", [&] {
    if (d == 0) return mismatch("d", "zeta has no finite order <= m", "finite");
    long long r = ((cand.k * cand.k - 1) % d + d) % d;
    return expect(r == 0, "k^2 - 1 mod d", std::to_string(r), "0");
  });
  cond.add_fact("(u^l - f(u)) divides (psi(u)^l - f(psi(u)))", [&] {
    const Field fld = p.field();
    detail::Poly modulus(p.l + 1, Scalar::zero(fld));
    for (unsigned q = 0; q < p.l; ++q) modulus[q] = -p.coeff(q);
    modulus[p.l] = Scalar::one(fld);
    detail::Poly psi(cand.c.begin(), cand.c.end());
    detail::trim(psi);
    detail::Poly val = detail::poly_pow(psi, p.l, fld);
    for (unsigned q = 0; q < p.l; ++q)
      if (!p.coeff(q).is_zero())
        val = detail::poly_add(val, detail::poly_mul({-p.coeff(q)}, detail::poly_pow(psi, q, fld), fld), fld);
    detail::Poly r = detail::poly_mod_monic(val, modulus);
    return expect(r.empty(), "remainder", detail::poly_str(r), "0");
  });
  v.conditions = cond.run(SuiteMode::full);

  LinearMap psi = aut_matrix(p, h, cand);
  v.morphism.subject = "Hopf automorphism";
  v.morphism.merge(is_algebra_morphism(psi, h, h), "algebra morphism");
  v.morphism.merge(is_coalgebra_morphism(psi, h, h), "coalgebra morphism");
  bool inv = psi.invertible();
  v.morphism.add({"bijective", inv, 1, inv ? std::nullopt : ProbeResult(mismatch("matrix", "singular", "invertible"))});
  v.automorphism = v.morphism.passed();
  return v;
}

inline AutVerdict family_aut_check(const FamilyParams& p, const AutCandidate& cand) {
  return family_aut_check(p, family(p), cand);
}

/// Every candidate with k in [0, m) and c_q drawn from `grid` at the powers
/// q = k mod m (zero elsewhere), that passes family_aut_check. Ordered by k,
/// then by the grid positions of (c_q) for increasing q.
inline std::vector<AutCandidate> family_aut_search(const FamilyParams& p, const std::vector<Scalar>& grid,
                                                   unsigned jobs = 1) {
  HopfData h = family(p);
  std::vector<AutCandidate> cands;
  if (grid.empty()) return {};
  for (unsigned k = 0; k < p.m; ++k) {
    std::vector<unsigned> qs;
    for (unsigned q = k; q < p.l; q += p.m) qs.push_back(q);
    std::vector<std::size_t> pos(qs.size(), 0);
    while (true) {
      AutCandidate c{k, std::vector<Scalar>(p.l, Scalar::zero(p.field()))};
      for (std::size_t i = 0; i < qs.size(); ++i) c.c[qs[i]] = grid[pos[i]];
      cands.push_back(std::move(c));
      std::size_t i = qs.size();
      while (i > 0 && ++pos[i - 1] == grid.size()) pos[--i] = 0;
      if (i == 0) break;
    }
  }
  std::vector<char> hit(cands.size(), 0);
  parallel_for(cands.size(), jobs, [&](std::size_t i) { hit[i] = family_aut_check(p, h, cands[i]).automorphism; });
  std::vector<AutCandidate> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (hit[i]) out.push_back(std::move(cands[i]));
  return out;
}

/// Reads (k, c) back from an automorphism matrix: psi(g) = g^k and psi(x)
/// expanded in the powers of x. nullopt if the matrix is not of that shape.
inline std::optional<AutCandidate> candidate_from_matrix(const FamilyParams& p, const LinearMap& psi) {
  const std::size_t gi = p.index(1 % p.m, 0);
  Vector pg = psi.column(gi);
  std::optional<long long> k;
  for (unsigned a = 0; a < p.m; ++a)
    if (pg == basis_vector(p.field(), pg.size(), p.index(a, 0))) k = a;
  if (!k) return std::nullopt;
  AutCandidate c{*k, std::vector<Scalar>(p.l, Scalar::zero(p.field()))};
  if (p.l == 1) return c;
  Vector px = psi.column(p.index(0, 1));
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (px[i].is_zero()) continue;
    if (i >= p.l) return std::nullopt;  // involves g
    c.c[i] = px[i];
  }
  return c;
}

}  // namespace hopfrb
