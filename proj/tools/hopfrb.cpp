// Command-line front end: construct and verify Hopf algebras, enumerate and
// check Rota-Baxter operators, search automorphisms.
//
// Exit codes: 0 pass, 1 verified failure, 2 input error, 3 resource cap.

#include "hopfrb/hopfrb.hpp"
#include "hopfrb/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace hopfrb;
using io::json;

namespace {

enum Exit { ok = 0, failed = 1, input_error = 2, cap_exceeded = 3 };

struct Global {
  std::string field;
  unsigned jobs = 1;
  std::uint64_t cap = 100'000'000;
  std::string out;
  std::string format = "json";
};

struct ConstructionArgs {
  std::string construction;
  std::string group;
  unsigned m = 2;
  std::string zeta;
  unsigned l = 0;
  std::string f;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void emit(const Global& g, const json& j, const std::string& tsv) {
  std::string text = g.format == "tsv" ? tsv : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(g.out);
    if (!o) throw io::FormatError("cannot write " + g.out);
    o << text;
  }
}

void emit_report(const Global& g, const VerificationReport& r) { emit(g, io::to_json(r), io::to_tsv(r)); }

Field field_or(const Global& g, Field fallback) { return g.field.empty() ? fallback : io::parse_field(g.field); }

FamilyParams family_params(const Global& g, const ConstructionArgs& a, bool taft) {
  const unsigned m = a.m;
  Field f = field_or(g, m <= 2 ? Field::rationals() : Field::cyclotomic(m));
  FamilyParams p;
  p.m = m;
  p.zeta = io::parse_scalar(f, a.zeta.empty() ? "z" + std::to_string(m) : a.zeta);
  p.l = taft ? m : a.l;
  if (!taft && p.l == 0) throw io::FormatError("family needs --l");
  if (!taft)
    for (const auto& c : split_list(a.f)) p.f.push_back(io::parse_scalar(f, c));
  while (!p.f.empty() && p.f.back().is_zero()) p.f.pop_back();
  return p;
}

/// Hopf algebra named by the construction arguments, with any extra checks.
struct Built {
  HopfData h;
  VerificationReport extras;
  std::optional<FamilyParams> params;
};

Built build(const Global& g, const ConstructionArgs& a) {
  Built b;
  const std::string& c = a.construction;
  if (c == "group-algebra") {
    if (a.group.empty()) throw io::FormatError("group-algebra needs --group FILE");
    b.h = group_algebra(io::group_from_json(io::read_json_file(a.group)), field_or(g, Field::rationals()));
  } else if (c == "h4") {
    b.h = sweedler_h4(field_or(g, Field::rationals()));
    const HopfData& h = b.h;
    IdentitySuite s("Sweedler algebra");
    s.add_fact("S has order 4", [&] {
      unsigned o = antipode_order(h, 8);
      return expect(o == 4, "order of S", std::to_string(o), "4");
    });
    s.add("S^2(a) = g a g^-1", {4}, [&](auto ix) {
      Vector a = basis(h, ix[0]), gv = basis(h, 1);
      return compare_vectors(antipode_power(h, 2).apply(a), mul(h, mul(h, gv, a), gv), h.labels());
    });
    b.extras = s.run(SuiteMode::full);
  } else if (c == "taft" || c == "family") {
    b.params = family_params(g, a, c == "taft");
    auto hyp = family_hypotheses(*b.params);
    b.extras = hyp;
    if (hyp.passed()) b.h = family(*b.params);
  } else {
    throw io::FormatError("unknown construction '" + c + "'");
  }
  return b;
}

void add_construction_options(CLI::App* cmd, ConstructionArgs& a) {
  cmd->add_option("--construction", a.construction, "group-algebra | h4 | taft | family")->required();
  cmd->add_option("--group", a.group, "group file (group-algebra)");
  cmd->add_option("--m", a.m, "order of g");
  cmd->add_option("--zeta", a.zeta, "zeta: rational literal or zN[^k] (default: zM)");
  cmd->add_option("--l", a.l, "nilpotency degree of x (family)");
  cmd->add_option("--f", a.f, "coefficients a_0,...,a_{l-1} of f");
}

int cmd_verify(const Global& g, const ConstructionArgs& a, const std::string& emit_path) {
  Built b = build(g, a);
  VerificationReport rep;
  rep.subject = a.construction;
  if (!b.extras.checks.empty()) rep.merge(b.extras, b.params ? "hypotheses" : "extras");
  if (rep.passed()) {
    auto suite = hopf_identities(b.h);
    auto hopf = suite.run(SuiteMode::full);
    if (!hopf.passed() && !suite.reconfirm(hopf)) rep.notes.push_back("witness did not re-evaluate to a violation");
    rep.merge(hopf, "Hopf axioms");
    rep.notes.push_back("dimension " + std::to_string(b.h.dim()));
    if (!emit_path.empty()) io::write_json_file(emit_path, io::to_json(b.h));
  }
  emit_report(g, rep);
  return rep.passed() ? ok : failed;
}

int cmd_enum_rb(const Global& g, const std::string& group_file, long long weight) {
  GroupTable G = io::group_from_json(io::read_json_file(group_file));
  EnumStats stats;
  auto ops = enumerate_rb(G, weight, {g.cap, g.jobs}, &stats);
  json list = json::array();
  bool all_ok = true;
  for (const auto& b : ops) {
    json entry = {{"map", io::to_json(b)}};
    auto verdict = [&](const VerificationReport& r) {
      all_ok = all_ok && r.passed();
      return r.passed() ? "pass" : "fail: " + r.identity_name;
    };
    if (weight == 1 || weight == -1) {
      GroupMap b1 = weight == 1 ? b : weight_flip(b, G);  // the weight-1 partner
      entry["lemma_checks"] = verdict(lemma_checks(G, b1));
      auto dg = derived_group(G, b1);
      entry["derived_group"] = verdict(dg.report);
      auto circ = circ_from_rrb(G, G.op(), b1);
      entry["skew_brace"] = verdict(circ.report);
    } else {
      auto ps = power_star(G, weight);
      entry["skew_brace"] = verdict(circ_from_rrb(G, ps.star, b).report);
    }
    list.push_back(entry);
  }
  json j = {{"group", G.name()}, {"order", G.order()}, {"weight", weight}, {"count", ops.size()},
            {"search_nodes", stats.nodes}, {"operators", list}};
  std::ostringstream tsv;
  tsv << "group\t" << G.name() << "\nweight\t" << weight << "\ncount\t" << ops.size() << "\n";
  for (const auto& e : list) {
    tsv << e["map"].dump();
    for (const char* k : {"lemma_checks", "derived_group", "skew_brace"})
      if (e.contains(k)) tsv << "\t" << k << "=" << e[k].get<std::string>();
    tsv << "\n";
  }
  emit(g, j, tsv.str());
  return all_ok ? ok : failed;
}

int cmd_check_rrb(const Global& g, const std::string& input, bool full) {
  json j = io::read_json_file(input);
  RelRBHopf d = io::rrb_from_json(j, fs::path(input).parent_path());
  VerificationReport rep = check_rrbo(d, {full ? SuiteMode::full : SuiteMode::first_failure});
  if (rep.passed()) {
    rep.merge(check_hopf_brace(d), "Hopf brace");
    rep.merge(check_hopf(derived_hopf(d)), "derived Hopf algebra");
  }
  emit_report(g, rep);
  return rep.passed() ? ok : failed;
}

int cmd_aut(const Global& g, const ConstructionArgs& a, const std::string& grid_text) {
  FamilyParams p;
  if (a.construction == "h4") {
    p = FamilyParams{2, Scalar::from_int(field_or(g, Field::rationals()), -1), 2, {}};
  } else if (a.construction == "taft" || a.construction == "family") {
    p = family_params(g, a, a.construction == "taft");
  } else {
    throw io::FormatError("aut supports h4, taft and family");
  }
  std::vector<Scalar> grid;
  for (const auto& s : split_list(grid_text)) grid.push_back(io::parse_scalar(p.field(), s));
  auto hits = family_aut_search(p, grid, g.jobs);
  json list = json::array();
  std::ostringstream tsv;
  tsv << "k\tc\n";
  for (const auto& h : hits) {
    json c = json::array();
    for (const auto& x : h.c) c.push_back(io::to_json(x));
    list.push_back({{"k", h.k}, {"c", c}});
    tsv << h.k << "\t" << c.dump() << "\n";
  }
  emit(g, {{"construction", a.construction}, {"basis", family(p).labels()}, {"count", hits.size()}, {"hits", list}},
       tsv.str());
  return ok;
}

int cmd_check_lie(const Global& g, const std::string& input) {
  json j = io::read_json_file(input);
  LieData l = io::lie_from_json(j);
  VerificationReport rep = check_lie(l);
  if (rep.passed() && j.contains("operator")) {
    const json& op = j.at("operator");
    LinearMap b = io::matrix_from_json(l.field, io::detail::req(op, "B"), l.dim, l.dim);
    Scalar lambda = io::scalar_from_json(l.field, io::detail::req(op, "lambda"));
    rep.merge(check_rb_lie_weight(l, b, lambda), "operator");
  }
  emit_report(g, rep);
  return rep.passed() ? ok : failed;
}

int cmd_check_group_rb(const Global& g, const std::string& input, const std::string& group_file,
                       const std::string& map_text, long long weight) {
  GroupTable G;
  GroupMap b;
  if (!input.empty()) {
    json j = io::read_json_file(input);
    G = io::group_from_json(io::resolve_ref(io::detail::req(j, "group"), fs::path(input).parent_path()));
    weight = io::detail::get<long long>(j, "weight");
    b = io::map_from_json(io::detail::req(j, "map"), G.order(), G.order());
  } else {
    if (group_file.empty() || map_text.empty()) throw io::FormatError("need --input, or --group with --map");
    G = io::group_from_json(io::read_json_file(group_file));
    json m = json::array();
    for (const auto& s : split_list(map_text)) m.push_back(std::stoll(s));
    b = io::map_from_json(m, G.order(), G.order());
  }
  VerificationReport rep = check_rb_weight(G, b, weight);
  if (rep.passed() && weight == 1) {
    rep.merge(lemma_checks(G, b), "lemma");
    rep.merge(derived_group(G, b).report, "derived group");
  }
  emit_report(g, rep);
  return rep.passed() ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf algebras and Rota-Baxter operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--field", g.field, "Q, Q(zetaN), cyclotomic:N, FP or prime:P");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", g.cap, "search-node budget for enumeration");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  ConstructionArgs ca;
  std::string emit_path, group_file, input, grid, map_text;
  long long weight = 1;
  bool full = false;

  auto* verify = app.add_subcommand("verify", "build a construction and check the Hopf axioms");
  add_construction_options(verify, ca);
  verify->add_option("--emit", emit_path, "write the Hopf data to FILE");

  auto* enum_rb = app.add_subcommand("enum-rb", "enumerate Rota-Baxter operators on a group");
  enum_rb->add_option("--group", group_file, "group file")->required();
  enum_rb->add_option("--weight", weight, "weight (1, -1 or lambda)");

  auto* check_rrb = app.add_subcommand("check-rrb", "check a relative Rota-Baxter operator file");
  check_rrb->add_option("--input", input, "RRB file")->required();
  check_rrb->add_flag("--full", full, "run every condition instead of stopping at the first failure");

  auto* aut = app.add_subcommand("aut", "search Hopf automorphisms of a family member");
  add_construction_options(aut, ca);
  aut->add_option("--grid", grid, "comma-separated coefficient grid")->required();

  auto* check_lie_cmd = app.add_subcommand("check-lie", "check a Lie algebra file (and its operator, if any)");
  check_lie_cmd->add_option("--input", input, "Lie file")->required();

  auto* check_grb = app.add_subcommand("check-group-rb", "check a Rota-Baxter operator on a group");
  check_grb->add_option("--input", input, "operator file {group, weight, map}");
  check_grb->add_option("--group", group_file, "group file");
  check_grb->add_option("--map", map_text, "comma-separated images");
  check_grb->add_option("--weight", weight, "weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*verify) return cmd_verify(g, ca, emit_path);
    if (*enum_rb) return cmd_enum_rb(g, group_file, weight);
    if (*check_rrb) return cmd_check_rrb(g, input, full);
    if (*aut) return cmd_aut(g, ca, grid);
    if (*check_lie_cmd) return cmd_check_lie(g, input);
    if (*check_grb) return cmd_check_group_rb(g, input, group_file, map_text, weight);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}
