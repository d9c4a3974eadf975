#pragma once

/// Exact scalars over Q, the cyclotomic fields Q(zeta_n) and the prime
/// fields F_p.
///
/// A Field is a handle to an interned, immutable FieldCtx; two scalars may
/// only be combined when their handles are identical. Cyclotomic elements
/// are coefficient vectors in the power basis 1, z, ..., z^{phi(n)-1},
/// always reduced modulo the n-th cyclotomic polynomial, so equality is
/// component-wise.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hopfrb {

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rationals, cyclotomic, prime };

/// Upper bounds on supported field parameters.
struct FieldLimits {
  unsigned max_cyclotomic = 64;
  unsigned max_prime = 97;
};

namespace detail {

using QPoly = std::vector<mpq_class>;  // low degree first

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of a by monic-or-not b over Q; the remainder must vanish.
inline QPoly divide_exact(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw FieldError("cyclotomic division left a remainder");
  return q;
}

inline QPoly cyclotomic_poly(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(num, cyclotomic_poly(d));
  std::lock_guard lock(mu);
  cache.emplace(n, num);
  return num;
}

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Immutable description of a coefficient field.
struct FieldCtx {
  FieldKind kind = FieldKind::rationals;
  unsigned param = 0;          // n for cyclotomic, p for prime, 0 for Q
  unsigned degree = 1;         // phi(n) for cyclotomic, 1 otherwise
  detail::QPoly cyclotomic;    // Phi_n, monic, degree phi(n)
};

class Field {
public:
  Field() : ctx_(&intern(FieldKind::rationals, 0)) {}

  static Field rationals() { return Field(&intern(FieldKind::rationals, 0)); }

  static Field cyclotomic(unsigned n, const FieldLimits& lim = {}) {
    if (n == 0) throw FieldError("cyclotomic order must be positive");
    if (n > lim.max_cyclotomic)
      throw FieldError("cyclotomic order " + std::to_string(n) + " exceeds limit " +
                       std::to_string(lim.max_cyclotomic));
    return Field(&intern(FieldKind::cyclotomic, n));
  }

  static Field prime(unsigned p, const FieldLimits& lim = {}) {
    if (!detail::is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
    if (p > lim.max_prime)
      throw FieldError("prime " + std::to_string(p) + " exceeds limit " +
                       std::to_string(lim.max_prime));
    return Field(&intern(FieldKind::prime, p));
  }

  const FieldCtx& ctx() const { return *ctx_; }
  FieldKind kind() const { return ctx_->kind; }
  unsigned param() const { return ctx_->param; }
  unsigned degree() const { return ctx_->degree; }
  /// 0 for the characteristic-zero fields.
  unsigned characteristic() const { return kind() == FieldKind::prime ? param() : 0; }

  std::string name() const {
    switch (kind()) {
      case FieldKind::rationals: return "Q";
      case FieldKind::cyclotomic: return "Q(zeta" + std::to_string(param()) + ")";
      case FieldKind::prime: return "F" + std::to_string(param());
    }
    return "?";
  }

  friend bool operator==(Field a, Field b) { return a.ctx_ == b.ctx_; }
  friend bool operator!=(Field a, Field b) { return a.ctx_ != b.ctx_; }

private:
  explicit Field(const FieldCtx* c) : ctx_(c) {}

  static const FieldCtx& intern(FieldKind kind, unsigned param) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, std::unique_ptr<FieldCtx>> table;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), param);
    auto& slot = table[key];
    if (!slot) {
      auto c = std::make_unique<FieldCtx>();
      c->kind = kind;
      c->param = param;
      if (kind == FieldKind::cyclotomic) {
        c->cyclotomic = detail::cyclotomic_poly(param);
        c->degree = static_cast<unsigned>(c->cyclotomic.size() - 1);
      }
      slot = std::move(c);
    }
    return *slot;
  }

  const FieldCtx* ctx_;
};

/// An exact field element. Rationals and cyclotomic values share the
/// coefficient vector (length 1 for Q); prime-field values use the residue.
class Scalar {
public:
  explicit Scalar(Field f = Field::rationals()) : field_(f) {
    if (f.kind() != FieldKind::prime) coeffs_.assign(f.degree(), mpq_class(0));
  }

  static Scalar from_int(Field f, long long v) { return from_rational(f, mpq_class(static_cast<long>(v))); }

  static Scalar from_rational(Field f, const mpq_class& q) {
    Scalar s(f);
    if (f.kind() == FieldKind::prime) {
      long long p = f.param();
      const mpz_class pz(static_cast<long>(p));
      mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
      long long n = num.get_si(), d = den.get_si();
      if (d < 0) d += p;
      if (d == 0) throw FieldError("denominator not invertible in " + f.name());
      if (n < 0) n += p;
      s.residue_ = static_cast<std::uint32_t>(n * detail::mod_pow(d, p - 2, p) % p);
    } else {
      s.coeffs_[0] = q;
      s.coeffs_[0].canonicalize();
    }
    return s;
  }

  /// Parses "a", "-a" or "a/b".
  static Scalar parse_rational(Field f, const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw FieldError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw FieldError("zero denominator in '" + text + "'");
    q.canonicalize();
    return from_rational(f, q);
  }

  /// Cyclotomic element from power-basis coefficients (reduced on entry).
  static Scalar from_coeffs(Field f, std::vector<mpq_class> coeffs) {
    if (f.kind() != FieldKind::cyclotomic) throw FieldError("coefficient vector requires a cyclotomic field");
    Scalar s(f);
    s.coeffs_ = std::move(coeffs);
    s.reduce();
    return s;
  }

  static Scalar from_residue(Field f, long long v) {
    if (f.kind() != FieldKind::prime) throw FieldError("residue requires a prime field");
    return from_int(f, v);
  }

  Field field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  std::uint32_t residue() const { return residue_; }

  bool is_zero() const {
    if (field_.kind() == FieldKind::prime) return residue_ == 0;
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_one() const { return *this == one(field_); }

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }

  Scalar operator-() const {
    Scalar r(field_);
    if (field_.kind() == FieldKind::prime) {
      r.residue_ = residue_ == 0 ? 0 : field_.param() - residue_;
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    }
    return r;
  }

  Scalar& operator+=(const Scalar& b) {
    same_field(b);
    if (field_.kind() == FieldKind::prime) {
      residue_ = static_cast<std::uint32_t>((residue_ + b.residue_) % field_.param());
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& b) {
    same_field(b);
    if (field_.kind() == FieldKind::prime) {
      residue_ = static_cast<std::uint32_t>((residue_ + field_.param() - b.residue_) % field_.param());
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& b) {
    same_field(b);
    switch (field_.kind()) {
      case FieldKind::prime:
        residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * b.residue_ % field_.param());
        break;
      case FieldKind::rationals: coeffs_[0] *= b.coeffs_[0]; break;
      case FieldKind::cyclotomic: {
        const std::size_t d = coeffs_.size();
        std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
        for (std::size_t i = 0; i < d; ++i) {
          if (coeffs_[i] == 0) continue;
          for (std::size_t j = 0; j < d; ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * b.coeffs_[j];
        }
        coeffs_ = std::move(prod);
        reduce();
        break;
      }
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& b) { return *this *= b.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw FieldError("comparison across fields " + a.field_.name() + " and " + b.field_.name());
    if (a.field_.kind() == FieldKind::prime) return a.residue_ == b.residue_;
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    switch (field_.kind()) {
      case FieldKind::prime: {
        long long p = field_.param();
        return from_int(field_, detail::mod_pow(residue_, p - 2, p));
      }
      case FieldKind::rationals: {
        Scalar r(field_);
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
      }
      case FieldKind::cyclotomic: return cyclotomic_inverse();
    }
    throw FieldError("unreachable");
  }

  /// Integer power; negative exponents invert.
  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(field_), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Exact human-readable form: "p/q" for rationals, a polynomial in z for
  /// cyclotomic values, the residue for prime fields.
  std::string str() const {
    switch (field_.kind()) {
      case FieldKind::prime: return std::to_string(residue_);
      case FieldKind::rationals: return rational_str(coeffs_[0]);
      case FieldKind::cyclotomic: {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
          if (coeffs_[i] == 0) continue;
          if (!out.empty()) out += " + ";
          out += rational_str(coeffs_[i]);
          if (i == 1) out += "*z";
          if (i > 1) out += "*z^" + std::to_string(i);
        }
        return out.empty() ? "0/1" : out;
      }
    }
    return "?";
  }

  static std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  /// Total order used only for deterministic sorting.
  friend bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.field_.kind() == FieldKind::prime) return a.residue_ < b.residue_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
  }

private:
  void same_field(const Scalar& b) const {
    if (field_ != b.field_) throw FieldError("mixed-context operands " + field_.name() + " and " + b.field_.name());
  }

  void reduce() {
    const auto& phi = field_.ctx().cyclotomic;
    const std::size_t d = field_.degree();
    for (auto& c : coeffs_) c.canonicalize();  // inputs may be unreduced fractions
    for (std::size_t k = coeffs_.size(); k-- > d;) {
      if (coeffs_[k] == 0) continue;
      mpq_class c = coeffs_[k];
      for (std::size_t j = 0; j <= d; ++j) coeffs_[k - d + j] -= c * phi[j];
    }
    coeffs_.resize(d, mpq_class(0));
  }

  // Solves (multiplication-by-this) * y = 1 by Gauss-Jordan elimination.
  Scalar cyclotomic_inverse() const {
    const std::size_t d = field_.degree();
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
    Scalar basis = one(field_);
    Scalar z = from_coeffs(field_, unit_vector(d, 1));
    for (std::size_t col = 0; col < d; ++col) {
      Scalar img = *this * basis;
      for (std::size_t row = 0; row < d; ++row) m[row][col] = img.coeffs_[row];
      basis *= z;
    }
    m[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (m[piv][col] == 0) ++piv;
      std::swap(m[piv], m[col]);
      for (std::size_t row = 0; row < d; ++row) {
        if (row == col || m[row][col] == 0) continue;
        mpq_class f = m[row][col] / m[col][col];
        for (std::size_t k = col; k <= d; ++k) m[row][k] -= f * m[col][k];
      }
    }
    Scalar r(field_);
    for (std::size_t i = 0; i < d; ++i) r.coeffs_[i] = m[i][d] / m[i][i];
    return r;
  }

  static std::vector<mpq_class> unit_vector(std::size_t d, std::size_t i) {
    std::vector<mpq_class> v(std::max<std::size_t>(d, i + 1), mpq_class(0));
    v[i] = 1;
    return v;
  }

  Field field_;
  std::vector<mpq_class> coeffs_;
  std::uint32_t residue_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Smallest positive residue of multiplicative order exactly n in F_p.
inline std::optional<unsigned> prime_root_of_order(unsigned p, unsigned n) {
  if (n == 0 || (p - 1) % n != 0) return std::nullopt;
  for (unsigned r = 1; r < p; ++r) {
    unsigned ord = 0;
    long long x = 1;
    do {
      x = x * r % p;
      ++ord;
    } while (x != 1);
    if (ord == n) return r;
  }
  return std::nullopt;
}

/// The designated primitive n-th root of unity of `f`, raised to k.
///
/// Q supplies n in {1, 2}; Q(zeta_N) supplies every n dividing N (as
/// zeta_N^{N/n}); F_p supplies every n dividing p-1.
inline Scalar zeta_power(Field f, unsigned n, long long k) {
  if (n == 0) throw FieldError("root-of-unity order must be positive");
  switch (f.kind()) {
    case FieldKind::rationals:
      if (n > 2) throw FieldError("Q has no primitive " + std::to_string(n) + "-th root of unity");
      return Scalar::from_int(f, n == 1 ? 1 : -1).pow(k);
    case FieldKind::cyclotomic: {
      const unsigned big = f.param();
      if (big % n != 0)
        throw FieldError(f.name() + " has no primitive " + std::to_string(n) + "-th root of unity");
      std::vector<mpq_class> x(2, mpq_class(0));
      x[1] = 1;
      Scalar z = Scalar::from_coeffs(f, x);
      long long e = ((k % n) + n) % n * (big / n);
      return z.pow(e);
    }
    case FieldKind::prime: {
      auto r = prime_root_of_order(f.param(), n);
      if (!r) throw FieldError(f.name() + " has no element of order " + std::to_string(n));
      return Scalar::from_int(f, *r).pow(((k % n) + n) % n);
    }
  }
  throw FieldError("unreachable");
}

/// Multiplicative order of z, or nullopt when z is not a root of unity of
/// order at most `bound`.
inline std::optional<unsigned> multiplicative_order(const Scalar& z, unsigned bound = 1024) {
  if (z.is_zero()) return std::nullopt;
  Scalar x = z;
  for (unsigned j = 1; j <= bound; ++j) {
    if (x.is_one()) return j;
    x *= z;
  }
  return std::nullopt;
}

inline bool is_primitive_root(const Scalar& z, unsigned m) {
  if (m == 0 || z.is_zero()) return false;
  auto ord = multiplicative_order(z, m);
  return ord && *ord == m;
}

}  // namespace hopfrb
