#pragma once

/// JSON file formats for fields, scalars, Hopf data, groups, relative
/// operators, Lie algebras and verification reports.
///
/// Scalars are written exactly: "p/q" strings over Q, {"coeffs": [...]} in
/// the power basis of zeta over Q(zeta_n), integer residues over F_p.

#include "hopfrb/constructions.hpp"
#include "hopfrb/group.hpp"
#include "hopfrb/hopf.hpp"
#include "hopfrb/rb_hopf.hpp"
#include "hopfrb/rb_lie.hpp"
#include "hopfrb/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hopfrb::io {

using json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& req(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return req(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

inline std::size_t index(const json& j, const char* key, std::size_t bound) {
  const json& v = req(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= bound)
    throw FormatError(std::string("field '") + key + "' must be an index below " + std::to_string(bound));
  return v.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fields and scalars

/// "Q", "Q(zetaN)", "cyclotomic:N", "FP", "F_P" or "prime:P".
inline Field parse_field(const std::string& s, const FieldLimits& lim = {}) {
  auto number = [&](const std::string& t) -> unsigned {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
      throw FormatError("bad field '" + s + "'");
    return static_cast<unsigned>(std::stoul(t));
  };
  if (s == "Q" || s == "rationals") return Field::rationals();
  if (s.rfind("Q(zeta", 0) == 0 && s.back() == ')') return Field::cyclotomic(number(s.substr(6, s.size() - 7)), lim);
  if (s.rfind("cyclotomic:", 0) == 0) return Field::cyclotomic(number(s.substr(11)), lim);
  if (s.rfind("prime:", 0) == 0) return Field::prime(number(s.substr(6)), lim);
  if (s.rfind("F_", 0) == 0) return Field::prime(number(s.substr(2)), lim);
  if (s.size() > 1 && s[0] == 'F') return Field::prime(number(s.substr(1)), lim);
  throw FormatError("bad field '" + s + "'");
}

inline json to_json(Field f) {
  switch (f.kind()) {
    case FieldKind::rationals: return {{"kind", "rationals"}};
    case FieldKind::cyclotomic: return {{"kind", "cyclotomic"}, {"n", f.param()}};
    case FieldKind::prime: return {{"kind", "prime"}, {"p", f.param()}};
  }
  return {};
}

inline Field field_from_json(const json& j, const FieldLimits& lim = {}) {
  if (j.is_string()) return parse_field(j.get<std::string>(), lim);
  auto kind = detail::get<std::string>(j, "kind");
  if (kind == "rationals") return Field::rationals();
  if (kind == "cyclotomic") return Field::cyclotomic(detail::get<unsigned>(j, "n"), lim);
  if (kind == "prime") return Field::prime(detail::get<unsigned>(j, "p"), lim);
  throw FormatError("unknown field kind '" + kind + "'");
}

inline json to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case FieldKind::rationals: return Scalar::rational_str(s.coeffs()[0]);
    case FieldKind::cyclotomic: {
      json c = json::array();
      for (const auto& q : s.coeffs()) c.push_back(Scalar::rational_str(q));
      return {{"coeffs", c}};
    }
    case FieldKind::prime: return s.residue();
  }
  return {};
}

/// Parses a scalar literal: a rational "a" or "a/b", or "zN^k" / "zN" for
/// a power of a primitive N-th root of unity.
inline Scalar parse_scalar(Field f, const std::string& text) {
  if (!text.empty() && (text[0] == 'z' || text.rfind("-z", 0) == 0)) {
    bool neg = text[0] == '-';
    std::string body = text.substr(neg ? 2 : 1);
    auto caret = body.find('^');
    std::string ns = body.substr(0, caret), ks = caret == std::string::npos ? "1" : body.substr(caret + 1);
    try {
      std::size_t used = 0;
      unsigned long n = std::stoul(ns, &used);
      if (used != ns.size()) throw FormatError("bad root literal");
      long long k = std::stoll(ks, &used);
      if (used != ks.size()) throw FormatError("bad root literal");
      Scalar z = zeta_power(f, static_cast<unsigned>(n), k);
      return neg ? -z : z;
    } catch (const std::logic_error&) {
      throw FormatError("bad root-of-unity literal '" + text + "'");
    }
  }
  return Scalar::parse_rational(f, text);
}

inline Scalar scalar_from_json(Field f, const json& j) {
  if (j.is_string()) return parse_scalar(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  if (j.is_object() && j.contains("coeffs")) {
    if (f.kind() != FieldKind::cyclotomic) throw FormatError("coefficient vector outside a cyclotomic field");
    std::vector<mpq_class> c;
    for (const auto& x : j.at("coeffs")) {
      if (!x.is_string() && !x.is_number_integer()) throw FormatError("coefficients must be rational strings");
      c.push_back(x.is_string() ? mpq_class(Scalar::parse_rational(Field::rationals(), x.get<std::string>()).coeffs()[0])
                                : mpq_class(static_cast<long>(x.get<long long>())));
    }
    if (c.size() < f.degree()) c.resize(f.degree(), mpq_class(0));
    return Scalar::from_coeffs(f, std::move(c));  // longer input is reduced
  }
  throw FormatError("bad scalar " + j.dump());
}

inline json sparse_terms(const SparseVec& v) {
  json t = json::array();
  for (const auto& [k, c] : v) t.push_back({{"k", k}, {"c", to_json(c)}});
  return t;
}

inline SparseVec sparse_from_json(Field f, const json& terms, std::size_t bound) {
  if (!terms.is_array()) throw FormatError("terms must be an array");
  Vector v = zero_vector(f, bound);
  for (const auto& t : terms) v[detail::index(t, "k", bound)] += scalar_from_json(f, detail::req(t, "c"));
  return to_sparse(v);
}

inline json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline LinearMap matrix_from_json(Field f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw FormatError("matrix must have " + std::to_string(rows) + " rows");
  LinearMap m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw FormatError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, j[r][c]);
  }
  return m;
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

inline Vector vector_from_json(Field f, const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw FormatError(std::string(what) + " must have " + std::to_string(n) + " entries");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw FormatError("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

/// Inline object, or {"ref": path} relative to `base`.
inline json resolve_ref(const json& j, const std::filesystem::path& base) {
  if (j.is_object() && j.contains("ref")) return read_json_file(base / detail::get<std::string>(j, "ref"));
  return j;
}

// ---------------------------------------------------------------------------
// Hopf data

inline json to_json(const HopfData& h) {
  const std::size_t n = h.dim();
  json j;
  j["field"] = to_json(h.field());
  j["dim"] = n;
  j["labels"] = h.labels();
  j["unit"] = vector_to_json(h.algebra.unit);
  json mult = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!h.algebra.product(i, k).empty())
        mult.push_back({{"i", i}, {"j", k}, {"terms", sparse_terms(h.algebra.product(i, k))}});
  j["mult"] = mult;
  json delta = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json terms = json::array();
    for (const auto& d : h.coalgebra.delta[i]) terms.push_back({{"j", d.left}, {"k", d.right}, {"c", to_json(d.coeff)}});
    delta.push_back({{"i", i}, {"terms", terms}});
  }
  j["delta"] = delta;
  j["counit"] = vector_to_json(h.coalgebra.counit);
  j["antipode"] = matrix_to_json(h.antipode);
  return j;
}

inline HopfData hopf_from_json(const json& j, const FieldLimits& lim = {}) {
  const Field f = field_from_json(detail::req(j, "field"), lim);
  const auto n = detail::get<std::size_t>(j, "dim");
  if (n == 0 || n > HopfLimits{}.max_dim) throw FormatError("dim out of range");
  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = n;
  if (j.contains("labels")) {
    h.algebra.labels = detail::get<std::vector<std::string>>(j, "labels");
    if (h.algebra.labels.size() != n) throw FormatError("labels must have dim entries");
  } else {
    for (std::size_t i = 0; i < n; ++i) h.algebra.labels.push_back(default_label(i));
  }
  h.algebra.unit = vector_from_json(f, detail::req(j, "unit"), n, "unit");
  h.algebra.mult.assign(n * n, {});
  for (const auto& e : detail::req(j, "mult")) {
    std::size_t a = detail::index(e, "i", n), b = detail::index(e, "j", n);
    h.algebra.mult[a * n + b] = sparse_from_json(f, detail::req(e, "terms"), n);
  }
  h.coalgebra.delta.assign(n, {});
  for (const auto& e : detail::req(j, "delta")) {
    std::size_t i = detail::index(e, "i", n);
    Tensor t(f, {n, n});
    for (const auto& term : detail::req(e, "terms"))
      t.add({detail::index(term, "j", n), detail::index(term, "k", n)}, scalar_from_json(f, detail::req(term, "c")));
    t.for_each([&](const Tensor::Index& k, const Scalar& c) { h.coalgebra.delta[i].push_back({k[0], k[1], c}); });
  }
  h.coalgebra.counit = vector_from_json(f, detail::req(j, "counit"), n, "counit");
  h.antipode = matrix_from_json(f, detail::req(j, "antipode"), n, n);
  validate_shape(h);
  return h;
}

// ---------------------------------------------------------------------------
// Groups and operators

inline json to_json(const GroupTable& g) {
  json table = json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return {{"name", g.name()}, {"order", g.order()}, {"identity", g.identity()}, {"labels", g.labels()}, {"table", table}};
}

/// Cayley table {name, order, table, identity[, labels]} or permutation
/// generators {name, generators: [[...], ...]}.
inline GroupTable group_from_json(const json& j) {
  std::string name = j.contains("name") ? detail::get<std::string>(j, "name") : std::string();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = detail::get<std::vector<std::string>>(j, "labels");
  if (j.contains("generators")) {
    auto gens = detail::get<std::vector<std::vector<Elem>>>(j, "generators");
    for (const auto& p : gens) {
      std::vector<bool> seen(p.size(), false);
      for (Elem x : p) {
        if (x >= p.size() || seen[x]) throw FormatError("generator is not a permutation");
        seen[x] = true;
      }
    }
    try {
      return from_permutations(gens, name, labels);
    } catch (const GroupError& e) {
      throw FormatError(e.what());
    }
  }
  const auto n = detail::get<std::size_t>(j, "order");
  if (n == 0 || n > 4096) throw FormatError("group order out of range");
  const json& t = detail::req(j, "table");
  if (!t.is_array() || t.size() != n) throw FormatError("table must have order rows");
  BinaryOp op(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n) throw FormatError("table row must have order entries");
    for (std::size_t b = 0; b < n; ++b) {
      if (!t[a][b].is_number_integer() || t[a][b].get<long long>() < 0 || t[a][b].get<std::size_t>() >= n)
        throw FormatError("table entry out of range");
      op.at(Elem(a), Elem(b)) = t[a][b].get<Elem>();
    }
  }
  try {
    GroupTable g(std::move(op), name, labels);
    if (j.contains("identity") && detail::get<Elem>(j, "identity") != g.identity())
      throw FormatError("declared identity differs from the table's identity");
    return g;
  } catch (const GroupError& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const GroupMap& m) { return m.image; }

inline GroupMap map_from_json(const json& j, std::size_t domain, std::size_t codomain) {
  if (!j.is_array() || j.size() != domain) throw FormatError("map must have " + std::to_string(domain) + " entries");
  GroupMap m;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= codomain)
      throw FormatError("map value out of range");
    m.image.push_back(v.get<Elem>());
  }
  return m;
}

// ---------------------------------------------------------------------------
// Relative Rota-Baxter data

inline json to_json(const RelRBHopf& d) {
  json phi = json::array();
  for (std::size_t g = 0; g < d.phi.dim_g; ++g)
    for (std::size_t h = 0; h < d.phi.dim_h; ++h)
      if (!d.phi.at(g, h).empty()) phi.push_back({{"g", g}, {"h", h}, {"terms", sparse_terms(d.phi.at(g, h))}});
  return {{"field", to_json(d.H.field())}, {"H", to_json(d.H)}, {"G", to_json(d.G)}, {"phi", phi}, {"B", matrix_to_json(d.B)}};
}

inline RelRBHopf rrb_from_json(const json& j, const std::filesystem::path& base = ".", const FieldLimits& lim = {}) {
  RelRBHopf d;
  d.H = hopf_from_json(resolve_ref(detail::req(j, "H"), base), lim);
  d.G = hopf_from_json(resolve_ref(detail::req(j, "G"), base), lim);
  if (d.H.field() != d.G.field()) throw FormatError("H and G over different fields");
  if (j.contains("field") && field_from_json(j.at("field"), lim) != d.H.field())
    throw FormatError("declared field differs from H's field");
  const Field f = d.H.field();
  const std::size_t ng = d.G.dim(), nh = d.H.dim();
  d.phi = ActionData{ng, nh, std::vector<SparseVec>(ng * nh)};
  for (const auto& e : detail::req(j, "phi")) {
    std::size_t g = detail::index(e, "g", ng), h = detail::index(e, "h", nh);
    d.phi.phi[g * nh + h] = sparse_from_json(f, detail::req(e, "terms"), nh);
  }
  d.B = matrix_from_json(f, detail::req(j, "B"), ng, nh);
  return d;
}

// ---------------------------------------------------------------------------
// Lie algebras

inline json to_json(const LieData& l) {
  json br = json::array();
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t k = 0; k < l.dim; ++k)
      if (!l.at(i, k).empty()) br.push_back({{"i", i}, {"j", k}, {"terms", sparse_terms(l.at(i, k))}});
  return {{"field", to_json(l.field)}, {"dim", l.dim}, {"labels", l.labels}, {"brackets", br}};
}

/// Brackets are taken as given for every listed ordered pair; nothing is
/// antisymmetrized on load, so check_lie sees the file's constants.
inline LieData lie_from_json(const json& j, const FieldLimits& lim = {}) {
  const Field f = j.contains("field") ? field_from_json(j.at("field"), lim) : Field::rationals();
  const auto n = detail::get<std::size_t>(j, "dim");
  if (n == 0 || n > 256) throw FormatError("dim out of range");
  LieData l = make_lie(f, n, j.contains("labels") ? detail::get<std::vector<std::string>>(j, "labels")
                                                    : std::vector<std::string>{});
  for (const auto& e : detail::req(j, "brackets")) {
    std::size_t a = detail::index(e, "i", n), b = detail::index(e, "j", n);
    l.brackets[a * n + b] = sparse_from_json(f, detail::req(e, "terms"), n);
  }
  return l;
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const Witness& w) {
  return {{"indices", w.indices}, {"location", w.location}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline json to_json(const VerificationReport& r) {
  json j;
  j["subject"] = r.subject;
  j["status"] = r.passed() ? "pass" : "fail";
  j["identity_name"] = r.identity_name;
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  std::size_t failed = 0;
  json checks = json::array();
  for (const auto& c : r.checks) {
    failed += !c.passed;
    json cj = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"evaluated", c.evaluated}};
    if (c.witness) cj["witness"] = to_json(*c.witness);
    checks.push_back(cj);
  }
  j["stats"] = {{"identities", r.checks.size()}, {"failed", failed}, {"evaluated", r.evaluated}};
  j["checks"] = checks;
  j["notes"] = r.notes;
  return j;
}

inline Witness witness_from_json(const json& j) {
  return {detail::get<std::vector<std::size_t>>(j, "indices"), detail::get<std::string>(j, "location"),
          detail::get<std::string>(j, "lhs"), detail::get<std::string>(j, "rhs")};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.subject = detail::get<std::string>(j, "subject");
  for (const auto& c : detail::req(j, "checks")) {
    CheckResult cr{detail::get<std::string>(c, "name"), detail::get<std::string>(c, "status") == "pass",
                   detail::get<std::size_t>(c, "evaluated"), std::nullopt};
    if (c.contains("witness")) cr.witness = witness_from_json(c.at("witness"));
    r.add(std::move(cr));
  }
  if (j.contains("notes")) r.notes = detail::get<std::vector<std::string>>(j, "notes");
  return r;
}

/// One line per check: name, status, evaluated, witness.
inline std::string to_tsv(const VerificationReport& r) {
  std::ostringstream out;
  out << "subject\t" << r.subject << "\n";
  out << "status\t" << (r.passed() ? "pass" : "fail") << "\n";
  out << "check\tstatus\tevaluated\twitness\n";
  for (const auto& c : r.checks) {
    out << c.name << "\t" << (c.passed ? "pass" : "fail") << "\t" << c.evaluated << "\t";
    if (c.witness) {
      out << "[";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) out << (i ? "," : "") << c.witness->indices[i];
      out << "] " << c.witness->location << ": " << c.witness->lhs << " != " << c.witness->rhs;
    }
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note\t" << n << "\n";
  return out.str();
}

}  // namespace hopfrb::io
