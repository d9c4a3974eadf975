// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include "hopfrb/hopfrb.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Scalar n(Field f, long long v) { return Scalar::from_int(f, v); }

FamilyParams taft(unsigned m) {
  Field f = Field::cyclotomic(m);
  return {m, zeta_power(f, m, 1), m, {}};
}

FamilyParams a4p() { return {2, n(Field::prime(3), -1), 6, {}}; }

FamilyParams aq() {
  Field f3 = Field::prime(3);
  // q^(p-1) x^2 with q = 2, p = 3
  return {2, n(f3, -1), 6, {n(f3, 0), n(f3, 0), n(f3, 2).pow(2)}};
}

// ---------------------------------------------------------------------------

Outcome c1_sweedler() {
  Outcome o;
  HopfData h = sweedler_h4(Q);
  auto rep = check_hopf(h, SuiteMode::full);
  o.require(rep.passed(), "check_hopf: " + rep.identity_name);
  o.require(antipode_power(h, 4).is_identity(), "S^4 != id");
  o.require(antipode_order(h) == 4, "S does not have order 4");
  Vector g = basis(h, 1), ginv = basis(h, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    Vector a = basis(h, i);
    o.require(antipode(h, antipode(h, a)) == mul_all(h.algebra, {g, a, ginv}), "S^2(a) != g a g^-1 at " + h.labels()[i]);
  }
  o.detail = o.ok ? "check_hopf, S^4 = id, S^2(a) = g a g^-1 on 4 basis elements" : o.detail;
  return o;
}

Outcome c2_taft() {
  Outcome o;
  for (unsigned m = 2; m <= 5; ++m) {
    HopfData h = family(taft(m));
    o.require(h.dim() == m * m, "dimension of Taft " + std::to_string(m));
    auto rep = check_hopf(h);
    o.require(rep.passed(), "Taft " + std::to_string(m) + ": " + rep.identity_name);
  }
  if (o.ok) o.detail = "m = 2..5 over Q(zeta_m), dimensions 4, 9, 16, 25";
  return o;
}

Outcome c3_generality() {
  Outcome o;
  for (auto [name, p] : {std::pair{"A_4p", a4p()}, std::pair{"A_(q)", aq()}}) {
    auto rep = family_hypotheses(p);
    o.require(rep.passed(), std::string(name) + ": " + rep.identity_name);
    o.require(rep.check_passed("Delta(x^l - f(x)) = 0"), std::string(name) + ": tensor check");
    o.require(check_hopf(family(p)).passed(), std::string(name) + ": check_hopf");
  }
  if (o.ok) o.detail = "family(2,-1,6,0) and family(2,-1,6,x^2) over F3";
  return o;
}

Outcome c4_qbinom() {
  Outcome o;
  std::size_t compared = 0;
  for (unsigned m = 2; m <= 8; ++m) {
    Scalar z = zeta_power(Field::cyclotomic(m), m, 1);
    for (unsigned p = 0; p <= 10; ++p)
      for (unsigned q = 0; q <= p; ++q) {
        Scalar c = qbinom(p, q, z);
        o.require(c == qbinom_oracle(p, q, z), "qbinom differs from oracle");
        o.require(c == qbinom(p, p - q, z), "symmetry fails");
        ++compared;
      }
    for (unsigned q = 0; q <= 8; ++q) o.require(cauchy_check(q, z).passed(), "Cauchy identity fails");
  }
  if (o.ok) o.detail = std::to_string(compared) + " coefficients, Cauchy q <= 8, symmetry";
  return o;
}

Outcome c5_antipode() {
  Outcome o;
  std::vector<FamilyParams> all{{2, n(Q, -1), 2, {}}, taft(2), taft(3), taft(4), taft(5), a4p(), aq()};
  std::size_t entries = 0;
  for (const auto& p : all) {
    HopfData h = family(p);
    for (unsigned a = 0; a < p.m; ++a)
      for (unsigned b = 0; b < p.l; ++b) {
        auto [c, idx] = antipode_closed_form(p, a, b);
        o.require(h.antipode.column(p.index(a, b)) == scaled(basis(h, idx), c), "closed form differs");
        ++entries;
        // m(S (x) id)Delta and m(id (x) S)Delta both equal epsilon(.)1, zero when b > 0
        Vector left = zero_vector(p.field(), h.dim()), right = left;
        for (const auto& d : h.coalgebra.delta[p.index(a, b)]) {
          axpy(left, d.coeff, mul(h, h.antipode.column(d.left), basis(h, d.right)));
          axpy(right, d.coeff, mul(h, basis(h, d.left), h.antipode.column(d.right)));
        }
        Vector want = scaled(h.algebra.unit, h.coalgebra.counit[p.index(a, b)]);
        o.require(left == want && right == want, "antipode axiom");
        if (b > 0) o.require(is_zero(left) && is_zero(right), "antipode sides do not vanish");
      }
  }
  if (o.ok) o.detail = std::to_string(entries) + " basis elements over " + std::to_string(all.size()) + " instances";
  return o;
}

// Direct filter over all n^n maps.
std::vector<GroupMap> brute_force_rb(const GroupTable& g, int weight) {
  const std::size_t n = g.order();
  std::vector<Elem> b(n, 0);
  std::vector<GroupMap> out;
  while (true) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) {
        Elem arg = weight == 1 ? g.mul(g.mul(g.mul(x, b[x]), y), g.inv(b[x]))
                               : g.mul(g.mul(g.mul(b[x], y), g.inv(b[x])), x);
        ok = g.mul(b[x], b[y]) == b[arg];
      }
    if (ok) out.push_back(GroupMap{b});
    std::size_t k = n;
    while (k > 0 && ++b[k - 1] == n) b[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Outcome c6_enumeration() {
  Outcome o;
  for (unsigned k : {2u, 3u}) {
    GroupTable z = cyclic_group(k);
    auto ops = enumerate_rb(z, 1);
    o.require(ops.size() == k, "Z/" + std::to_string(k) + " count");
    o.require(ops == homomorphisms(z, z), "Z/" + std::to_string(k) + " differs from endomorphisms");
    o.require(ops == brute_force_rb(z, 1), "Z/" + std::to_string(k) + " differs from brute force");
  }
  std::ostringstream counts;
  for (const auto& g : small_groups_up_to_8()) {
    auto t0 = std::chrono::steady_clock::now();
    auto plus = enumerate_rb(g, 1), minus = enumerate_rb(g, -1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(g.order() > 6 || secs < 60, g.name() + " too slow");
    auto has = [&](const GroupMap& m) { return std::binary_search(plus.begin(), plus.end(), m); };
    o.require(has(constant_identity_map(g, g)), g.name() + ": B = e missing");
    o.require(has(inversion_map(g)), g.name() + ": inversion missing");
    std::vector<GroupMap> flipped;
    for (const auto& b : plus) flipped.push_back(weight_flip(b, g));
    std::sort(flipped.begin(), flipped.end());
    o.require(flipped == minus, g.name() + ": weight flip is not a bijection");
    if (g.is_abelian()) o.require(plus == homomorphisms(g, g), g.name() + ": abelian reduction");
    if (g.order() <= 6 && g.order() > 1) o.require(plus == brute_force_rb(g, 1), g.name() + ": brute force");
    counts << (counts.tellp() ? ", " : "") << g.name() << "=" << plus.size();
  }
  if (o.ok) o.detail = counts.str();
  return o;
}

Outcome c7_derived() {
  Outcome o;
  GroupTable s3 = symmetric_group_3();
  auto ops = enumerate_rb(s3, 1);
  for (const auto& b : ops) {
    auto d = derived_group(s3, b);
    o.require(d.report.passed(), "derived group: " + d.report.identity_name);
    o.require(d.group && is_homomorphism(*d.group, s3, b), "B not a homomorphism");
    auto lem = lemma_checks(s3, b);
    o.require(lem.passed(), "lemma: " + lem.identity_name);
    auto circ = circ_from_rrb(s3, s3.op(), b);
    for (auto name : {"(G,o) group", "(G,*,o) skew brace", "(G,.,o) skew brace if (G,.,*) is"})
      o.require(circ.report.check_passed(name), std::string("circle verdict ") + name);
  }
  if (o.ok) o.detail = std::to_string(ops.size()) + " operators on S3";
  return o;
}

// Aut(H) as a group table under composition, with the automorphisms.
std::pair<GroupTable, std::vector<GroupMap>> automorphism_group(const GroupTable& h) {
  auto auts = automorphisms(h);
  BinaryOp t(auts.size());
  for (Elem a = 0; a < auts.size(); ++a)
    for (Elem b = 0; b < auts.size(); ++b) {
      GroupMap c{std::vector<Elem>(h.order())};
      for (Elem x = 0; x < h.order(); ++x) c.image[x] = auts[a](auts[b](x));
      t.at(a, b) = Elem(std::find(auts.begin(), auts.end(), c) - auts.begin());
    }
  return {GroupTable(t), auts};
}

// Every action of g on h, as homomorphisms g -> Aut(h).
std::vector<GroupAction> all_actions(const GroupTable& h, const GroupTable& g) {
  auto [autg, auts] = automorphism_group(h);
  std::vector<GroupAction> out;
  for (const auto& f : homomorphisms(g, autg)) {
    GroupAction a;
    for (Elem x = 0; x < g.order(); ++x) a.psi.push_back(auts[f(x)]);
    out.push_back(std::move(a));
  }
  return out;
}

Outcome c8_graph() {
  Outcome o;
  std::vector<GroupTable> groups;
  for (const auto& g : small_groups_up_to_8())
    if (g.order() <= 6) groups.push_back(g);
  std::size_t exhaustive = 0, positives = 0;
  for (const auto& h : groups) {
    if (h.order() > 3) continue;
    for (const auto& g : groups)
      for (const auto& act : all_actions(h, g)) {
        std::vector<Elem> b(h.order(), 0);
        while (true) {
          GroupMap m{b};
          bool rel = relative_rb_check(h, g, act, m).passed();
          o.require(graph_is_subgroup(h, g, act, m).passed() == rel, "exhaustive instance disagrees");
          ++exhaustive;
          positives += rel;
          std::size_t k = b.size();
          while (k > 0 && ++b[k - 1] == g.order()) b[--k] = 0;
          if (k == 0) break;
        }
      }
  }
  std::mt19937 rng(42);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::size_t random_pos = 0;
  for (int t = 0; t < 100; ++t) {
    const GroupTable& h = groups[pick(groups.size())];
    const GroupTable& g = groups[pick(groups.size())];
    auto acts = all_actions(h, g);
    GroupAction act = acts[pick(acts.size())];
    GroupMap m{std::vector<Elem>(h.order())};
    switch (t % 4) {
      case 0:  // uniform map
        for (auto& v : m.image) v = Elem(pick(g.order()));
        break;
      case 1:  // constant identity
        m = constant_identity_map(h, g);
        break;
      case 2: {  // homomorphism under the trivial action
        act = trivial_action(h, g);
        auto homs = homomorphisms(h, g);
        m = homs[pick(homs.size())];
        break;
      }
      default: {  // operator of weight 1 under conjugation
        auto ops = enumerate_rb(h, 1);
        act = conjugation_action(h);
        m = ops[pick(ops.size())];
        bool rel = relative_rb_check(h, h, act, m).passed();
        o.require(graph_is_subgroup(h, h, act, m).passed() == rel, "random instance disagrees");
        random_pos += rel;
        continue;
      }
    }
    bool rel = relative_rb_check(h, g, act, m).passed();
    o.require(graph_is_subgroup(h, g, act, m).passed() == rel, "random instance disagrees");
    random_pos += rel;
  }
  if (o.ok)
    o.detail = std::to_string(exhaustive) + " exhaustive (" + std::to_string(positives) + " operators), 100 random (" +
               std::to_string(random_pos) + " operators)";
  return o;
}

Outcome c9_rrb_hopf() {
  Outcome o;
  GroupTable s3 = symmetric_group_3();
  RelRBHopf d = exact_factorization_rrb(s3, s3.generated({1}), s3.generated({2}), Q);
  auto rep = check_rrbo(d, {SuiteMode::full});
  o.require(rep.passed(), "check_rrbo: " + rep.identity_name);
  o.require(rep.check_passed("condition 3 forms agree"), "condition 3 forms disagree");
  std::size_t triples = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t c = 0; c < 6; ++c) {
        Vector x = basis(d.H, a), y = basis(d.H, b), z = basis(d.H, c);
        o.require(circle(d, circle(d, x, y), z) == circle(d, x, circle(d, y, z)), "circle not associative");
        ++triples;
      }
  o.require(check_hopf(derived_hopf(d)).passed(), "derived Hopf algebra");
  o.require(check_hopf_brace(d).passed(), "Hopf brace");
  if (o.ok) o.detail = "conditions 1-4 and B(1) = 1, " + std::to_string(triples) + " triples, derived Hopf, brace";
  return o;
}

Outcome c10_bridge() {
  Outcome o;
  std::size_t count = 0;
  for (const GroupTable& g : {symmetric_group_3(), cyclic_group(4)}) {
    for (const auto& b : enumerate_rb(g, 1)) {
      auto lin = linearize_rb(g, b, Q);
      auto rep = grbo_check(lin.H, lin.B);
      o.require(rep.passed(), g.name() + ": " + rep.identity_name);
      RelRBHopf d = grbo_data(lin.H, lin.B);
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
          Elem want = g.mul(g.mul(g.mul(x, b(x)), y), g.inv(b(x)));
          o.require(circle(d, basis(d.H, x), basis(d.H, y)) == basis(d.H, want), "circle on group-likes");
        }
      ++count;
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " operators on S3 and Z4";
  return o;
}

Outcome c11_lambda() {
  Outcome o;
  GroupTable f21 = frobenius_group_21();
  auto ps = power_star(f21, 2);
  o.require(ps.report.passed(), "power_star: " + ps.report.identity_name);
  o.require(check_rb_lambda(f21, constant_identity_map(f21, f21), 2).passed(), "B = e");
  EnumStats stats;
  auto hits = enumerate_rb(f21, 2, {}, &stats);
  for (const auto& b : hits) {
    auto circ = circ_from_rrb(f21, ps.star, b);
    o.require(circ.report.passed(), "circle verdict: " + circ.report.identity_name);
  }
  if (o.ok) o.detail = std::to_string(hits.size()) + " operators, " + std::to_string(stats.nodes) + " search nodes";
  return o;
}

Outcome c12_lie() {
  Outcome o;
  LieData l = sl2(Q);
  for (long long lam : {1, -1, 2}) {
    LinearMap minus(Q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) minus(i, i) = n(Q, -lam);
    o.require(check_rb_lie_weight(l, LinearMap(Q, 3, 3), n(Q, lam)).passed(), "B = 0");
    o.require(check_rb_lie_weight(l, minus, n(Q, lam)).passed(), "B = -lambda id");
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2), lam(-3, 3), style(0, 2);
  int passing = 0;
  for (int t = 0; t < 50; ++t) {
    long long lv = lam(rng);
    if (lv == 0) lv = 2;
    LinearMap b(Q, 3, 3);
    if (style(rng) == 0) {
      for (std::size_t i = 0; i < 3; ++i) b(i, i) = n(Q, -lv);
    } else {
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) b(r, c) = n(Q, entry(rng) * (style(rng) != 0));
    }
    auto rep = check_rb_lie_weight(l, b, n(Q, lv));
    auto rel = check_relative_rb_lie(l, rescale_bracket(l, n(Q, lv)), adjoint_rep(l), b, n(Q, 1));
    o.require(rep.check_passed("[Bu,Bv] = B([Bu,v] - [Bv,u] + lambda[u,v])") == rel.passed(), "verdicts disagree");
    passing += rel.passed();
  }
  if (o.ok) o.detail = "50 samples agree (" + std::to_string(passing) + " operators)";
  return o;
}

Outcome c13_automorphisms() {
  Outcome o;
  FamilyParams p{2, n(Q, -1), 2, {}};
  HopfData h = family(p);
  std::vector<Scalar> grid{n(Q, 1), n(Q, -1), n(Q, 2), Scalar::from_rational(Q, mpq_class(1, 3)), n(Q, 5)};
  auto hits = family_aut_search(p, grid);
  o.require(hits.size() == grid.size(), "hit count " + std::to_string(hits.size()));
  for (std::size_t i = 0; i < hits.size() && i < grid.size(); ++i)
    o.require(hits[i].k == 1 && hits[i].c[0].is_zero() && hits[i].c[1] == grid[i], "unexpected hit");
  std::size_t pairs = 0;
  for (const auto& a : hits)
    for (const auto& b : hits) {
      auto comp = candidate_from_matrix(p, aut_matrix(p, h, a) * aut_matrix(p, h, b));
      o.require(comp && family_aut_check(p, h, *comp).automorphism, "composition is not an automorphism");
      o.require(comp && comp->k == 1 && comp->c[1] == a.c[1] * b.c[1], "composition is not c1 c1'");
      ++pairs;
    }
  if (o.ok) o.detail = std::to_string(hits.size()) + " hits with k = 1, " + std::to_string(pairs) + " compositions";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "H4 suite", 1, c1_sweedler},
      {2, "Taft suite", 5, c2_taft},
      {3, "family generality", 5, c3_generality},
      {4, "quantum binomials", 10, c4_qbinom},
      {5, "antipode formula", 0, c5_antipode},
      {6, "group RB enumeration", 0, c6_enumeration},
      {7, "derived structures on S3", 30, c7_derived},
      {8, "graph criterion", 0, c8_graph},
      {9, "relative RB on k[S3]", 10, c9_rrb_hopf},
      {10, "bridge to group algebras", 0, c10_bridge},
      {11, "weight 2 on F21", 0, c11_lambda},
      {12, "Lie layer", 5, c12_lie},
      {13, "automorphisms of H4", 0, c13_automorphisms},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget > 0 && secs > c.budget) {
      o.ok = false;
      o.detail = "over time budget of " + std::to_string(c.budget) + " s";
    }
    failed += !o.ok;
    std::printf("criterion %2d %-28s %s  %7.3f s  %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
