#pragma once

/// Finite groups as Cayley tables.
///
/// Elements are indices 0..n-1. A BinaryOp is any n x n table; a GroupTable
/// is a BinaryOp that passed the group axioms, with its identity and
/// inverse table cached.

#include "hopfrb/report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfrb {

class GroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Elem = std::uint32_t;

struct BinaryOp {
  std::size_t n = 0;
  std::vector<Elem> table;  // table[a * n + b] = a op b

  BinaryOp() = default;
  explicit BinaryOp(std::size_t order) : n(order), table(order * order, 0) {}

  Elem operator()(Elem a, Elem b) const { return table[a * n + b]; }
  Elem& at(Elem a, Elem b) { return table[a * n + b]; }

  friend bool operator==(const BinaryOp&, const BinaryOp&) = default;
};

/// Group axioms for a table: closure, associativity, identity, inverses.
inline VerificationReport group_axioms(const BinaryOp& op) {
  const std::size_t n = op.n;
  IdentitySuite s("group axioms");
  s.add("closure", {n, n}, [&op](auto ix) {
    Elem v = op(Elem(ix[0]), Elem(ix[1]));
    return expect(v < op.n, "product", std::to_string(v), "< " + std::to_string(op.n));
  });
  s.add("associativity", {n, n, n}, [&op](auto ix) {
    Elem a = Elem(ix[0]), b = Elem(ix[1]), c = Elem(ix[2]);
    Elem l = op(op(a, b), c), r = op(a, op(b, c));
    return expect(l == r, "(ab)c vs a(bc)", std::to_string(l), std::to_string(r));
  });
  s.add_fact("identity", [&op]() -> ProbeResult {
    for (Elem e = 0; e < op.n; ++e) {
      bool ok = true;
      for (Elem a = 0; a < op.n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
      if (ok) return std::nullopt;
    }
    return mismatch("two-sided identity", "none", "exists");
  });
  s.add("inverses", {n}, [&op](auto ix) -> ProbeResult {
    Elem e = 0;
    for (; e < op.n; ++e) {
      bool ok = true;
      for (Elem a = 0; a < op.n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
      if (ok) break;
    }
    Elem a = Elem(ix[0]);
    for (Elem b = 0; b < op.n; ++b)
      if (op(a, b) == e && op(b, a) == e) return std::nullopt;
    return mismatch("inverse of " + std::to_string(a), "none", "exists");
  });
  return s.run();
}

class GroupTable {
public:
  GroupTable() = default;

  /// Validates the table; throws GroupError when it is not a group.
  explicit GroupTable(BinaryOp op, std::string name = {}, std::vector<std::string> labels = {})
      : op_(std::move(op)), name_(std::move(name)), labels_(std::move(labels)) {
    if (op_.n == 0) throw GroupError("group must be nonempty");
    auto rep = group_axioms(op_);
    if (!rep.passed()) throw GroupError("not a group: " + rep.identity_name);
    for (Elem e = 0; e < op_.n; ++e) {
      bool ok = true;
      for (Elem a = 0; a < op_.n && ok; ++a) ok = op_(e, a) == a;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    inv_.assign(op_.n, 0);
    for (Elem a = 0; a < op_.n; ++a)
      for (Elem b = 0; b < op_.n; ++b)
        if (op_(a, b) == identity_) inv_[a] = b;
    if (labels_.empty())
      for (std::size_t i = 0; i < op_.n; ++i) labels_.push_back("g" + std::to_string(i));
    if (labels_.size() != op_.n) throw GroupError("label count differs from order");
  }

  std::size_t order() const { return op_.n; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return op_(a, b); }
  Elem operator()(Elem a, Elem b) const { return op_(a, b); }
  Elem inv(Elem a) const { return inv_[a]; }
  const BinaryOp& op() const { return op_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Elem pow(Elem a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    Elem r = identity_, b = a;
    while (k > 0) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (Elem a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Subgroup generated by a set of elements, sorted.
  std::vector<Elem> generated(const std::vector<Elem>& gens) const {
    std::set<Elem> seen{identity_};
    std::vector<Elem> frontier{identity_};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem x : frontier)
        for (Elem g : gens) {
          Elem y = mul(x, g);
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  /// Greedy generating set: smallest element outside the span so far.
  std::vector<Elem> generators() const {
    std::vector<Elem> gens;
    std::vector<Elem> span{identity_};
    for (Elem a = 0; a < order(); ++a) {
      if (std::binary_search(span.begin(), span.end(), a)) continue;
      gens.push_back(a);
      span = generated(gens);
    }
    return gens;
  }

  bool is_subgroup(const std::vector<Elem>& s) const {
    std::set<Elem> set(s.begin(), s.end());
    if (!set.count(identity_)) return false;
    for (Elem a : set) {
      if (a >= order() || !set.count(inv(a))) return false;
      for (Elem b : set)
        if (!set.count(mul(a, b))) return false;
    }
    return true;
  }

  /// The subgroup on `s` as a group of its own; element k is s[k].
  GroupTable subgroup_table(const std::vector<Elem>& s, std::string name = {}) const {
    if (!is_subgroup(s)) throw GroupError("not a subgroup");
    std::map<Elem, Elem> pos;
    for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]] = Elem(k);
    BinaryOp t(s.size());
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < s.size(); ++a) {
      labels.push_back(labels_[s[a]]);
      for (std::size_t b = 0; b < s.size(); ++b) t.at(Elem(a), Elem(b)) = pos.at(mul(s[a], s[b]));
    }
    return GroupTable(std::move(t), std::move(name), std::move(labels));
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.op_ == b.op_; }

private:
  BinaryOp op_;
  std::string name_;
  std::vector<std::string> labels_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
};

/// Total map between element sets.
struct GroupMap {
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
  std::size_t size() const { return image.size(); }
  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap& a, const GroupMap& b) { return a.image <=> b.image; }
};

inline void require_map(const GroupMap& b, std::size_t domain, std::size_t codomain) {
  if (b.size() != domain) throw GroupError("map has wrong domain size");
  for (Elem v : b.image)
    if (v >= codomain) throw GroupError("map value out of range");
}

inline GroupMap constant_identity_map(const GroupTable& dom, const GroupTable& cod) {
  return {std::vector<Elem>(dom.order(), cod.identity())};
}

inline GroupMap inversion_map(const GroupTable& g) {
  GroupMap m{std::vector<Elem>(g.order())};
  for (Elem a = 0; a < g.order(); ++a) m.image[a] = g.inv(a);
  return m;
}

inline GroupMap identity_map(std::size_t n) {
  GroupMap m{std::vector<Elem>(n)};
  std::iota(m.image.begin(), m.image.end(), Elem(0));
  return m;
}

inline bool is_homomorphism(const GroupTable& a, const GroupTable& b, const GroupMap& f) {
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (f(a.mul(x, y)) != b.mul(f(x), f(y))) return false;
  return true;
}

inline bool is_bijection(const GroupMap& f) {
  std::vector<bool> hit(f.size(), false);
  for (Elem v : f.image) {
    if (v >= f.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline GroupMap inverse_permutation(const GroupMap& f) {
  GroupMap r{std::vector<Elem>(f.size())};
  for (Elem a = 0; a < f.size(); ++a) r.image[f(a)] = a;
  return r;
}

// ---------------------------------------------------------------------------
// Builders

using Permutation = std::vector<Elem>;

/// Closure of permutation generators under composition, in breadth-first
/// order from the identity. Product convention: (p*q)(i) = p(q(i)).
inline GroupTable from_permutations(const std::vector<Permutation>& gens, std::string name = {},
                                    std::vector<std::string> labels = {}) {
  if (gens.empty()) throw GroupError("need at least one generator");
  const std::size_t deg = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != deg) throw GroupError("generators act on different sets");
  auto compose = [&](const Permutation& p, const Permutation& q) {
    Permutation r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
    return r;
  };
  Permutation id(deg);
  std::iota(id.begin(), id.end(), Elem(0));
  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Permutation p = compose(elems[k], g);
      if (!index.count(p)) {
        index.emplace(p, Elem(elems.size()));
        elems.push_back(p);
      }
    }
  BinaryOp t(elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t.at(Elem(a), Elem(b)) = index.at(compose(elems[a], elems[b]));
  if (labels.empty()) {
    for (const auto& p : elems) {
      // cycle notation on 1-based points
      std::string s;
      std::vector<bool> done(deg, false);
      for (std::size_t i = 0; i < deg; ++i) {
        if (done[i] || p[i] == i) continue;
        s += "(";
        for (std::size_t j = i; !done[j]; j = p[j]) {
          done[j] = true;
          if (s.back() != '(') s += " ";
          s += std::to_string(j + 1);
        }
        s += ")";
      }
      labels.push_back(s.empty() ? "e" : s);
    }
  }
  return GroupTable(std::move(t), std::move(name), std::move(labels));
}

inline GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  BinaryOp t(n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t.at(Elem(a), Elem(b)) = Elem((a + b) % n);
  }
  return GroupTable(std::move(t), "Z" + std::to_string(n), std::move(labels));
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name = {}) {
  const std::size_t n = a.order() * b.order();
  BinaryOp t(n);
  std::vector<std::string> labels;
  for (Elem x = 0; x < n; ++x) {
    labels.push_back("(" + a.labels()[x / b.order()] + "," + b.labels()[x % b.order()] + ")");
    for (Elem y = 0; y < n; ++y) {
      Elem l = a.mul(Elem(x / b.order()), Elem(y / b.order()));
      Elem r = b.mul(Elem(x % b.order()), Elem(y % b.order()));
      t.at(x, y) = Elem(l * b.order() + r);
    }
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  return GroupTable(std::move(t), std::move(name), std::move(labels));
}

/// S_3 with generators (1 2 3) and (1 2).
inline GroupTable symmetric_group_3() { return from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3"); }

inline GroupTable symmetric_group(std::size_t k) {
  if (k < 2) return cyclic_group(1);
  Permutation cycle(k), swap(k);
  for (std::size_t i = 0; i < k; ++i) {
    cycle[i] = Elem((i + 1) % k);
    swap[i] = Elem(i);
  }
  std::swap(swap[0], swap[1]);
  return from_permutations({cycle, swap}, "S" + std::to_string(k));
}

/// Dihedral group of order 2k acting on a k-gon.
inline GroupTable dihedral_group(std::size_t k) {
  Permutation rot(k), refl(k);
  for (std::size_t i = 0; i < k; ++i) {
    rot[i] = Elem((i + 1) % k);
    refl[i] = Elem((k - i) % k);
  }
  return from_permutations({rot, refl}, "D" + std::to_string(2 * k));
}

/// Quaternion group Q8 as permutations of {+-1, +-i, +-j, +-k}.
inline GroupTable quaternion_group() {
  // points: 0=1 1=i 2=j 3=k 4=-1 5=-i 6=-j 7=-k; left multiplication by i and j
  Permutation li{1, 4, 3, 6, 5, 0, 7, 2};
  Permutation lj{2, 7, 4, 1, 6, 3, 0, 5};
  return from_permutations({li, lj}, "Q8");
}

/// Nonabelian group of order 21: x -> x+1 and x -> 2x on Z/7.
inline GroupTable frobenius_group_21() {
  Permutation shift(7), scale(7);
  for (Elem i = 0; i < 7; ++i) {
    shift[i] = (i + 1) % 7;
    scale[i] = (2 * i) % 7;
  }
  return from_permutations({shift, scale}, "F21");
}

/// One representative of each isomorphism class of groups of order <= 8.
inline std::vector<GroupTable> small_groups_up_to_8() {
  std::vector<GroupTable> gs;
  for (std::size_t n = 1; n <= 8; ++n) gs.push_back(cyclic_group(n));
  gs.push_back(direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2"));
  gs.push_back(symmetric_group_3());
  gs.push_back(direct_product(cyclic_group(4), cyclic_group(2), "Z4xZ2"));
  gs.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2), "Z2xZ2xZ2"));
  gs.push_back(dihedral_group(4));
  gs.push_back(quaternion_group());
  std::stable_sort(gs.begin(), gs.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return gs;
}

/// All homomorphisms src -> dst, by extending every assignment on a
/// generating set along a breadth-first spanning tree.
inline std::vector<GroupMap> homomorphisms(const GroupTable& src, const GroupTable& dst) {
  const auto gens = src.generators();
  std::vector<GroupMap> out;
  std::vector<Elem> choice(gens.size(), 0);
  std::vector<std::pair<Elem, std::size_t>> parent(src.order(), {0, 0});
  std::vector<bool> seen(src.order(), false);
  std::vector<Elem> bfs{src.identity()};
  seen[src.identity()] = true;
  for (std::size_t k = 0; k < bfs.size(); ++k)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Elem y = src.mul(bfs[k], gens[gi]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {bfs[k], gi};
        bfs.push_back(y);
      }
    }
  while (true) {
    GroupMap f{std::vector<Elem>(src.order(), 0)};
    f.image[src.identity()] = dst.identity();
    for (std::size_t k = 1; k < bfs.size(); ++k) {
      auto [p, gi] = parent[bfs[k]];
      f.image[bfs[k]] = dst.mul(f.image[p], choice[gi]);
    }
    if (is_homomorphism(src, dst, f)) out.push_back(f);
    std::size_t k = choice.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++choice[k] < dst.order()) {
        done = false;
        break;
      }
      choice[k] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GroupMap> automorphisms(const GroupTable& g) {
  std::vector<GroupMap> out;
  for (auto& f : homomorphisms(g, g))
    if (is_bijection(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace hopfrb
