#pragma once

/// Verification reports and the identity-suite runner shared by every
/// checker in the library.
///
/// An identity is a name, a box of index ranges, and a probe that evaluates
/// both sides at one index tuple. The runner walks tuples in lexicographic
/// order and records the first mismatch, so reports are deterministic and a
/// witness can be re-evaluated later with `IdentitySuite::reconfirm`.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfrb {

struct Witness {
  std::vector<std::size_t> indices;
  std::string location;  // which component of the compared values differs
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t evaluated = 0;
  std::optional<Witness> witness;
};

struct VerificationReport {
  std::string subject;
  std::string identity_name;  // first failing identity, empty on pass
  std::optional<Witness> witness;
  std::size_t evaluated = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const { return identity_name.empty(); }
  explicit operator bool() const { return passed(); }

  void add(CheckResult r) {
    evaluated += r.evaluated;
    if (!r.passed && identity_name.empty()) {
      identity_name = r.name;
      witness = r.witness;
    }
    checks.push_back(std::move(r));
  }

  /// Folds another report in; its checks keep their names, prefixed.
  void merge(const VerificationReport& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      if (!prefix.empty()) c.name = prefix + ": " + c.name;
      add(std::move(c));
    }
    if (other.checks.empty() && !other.passed()) {
      CheckResult c{prefix.empty() ? other.identity_name : prefix + ": " + other.identity_name, false,
                    other.evaluated, other.witness};
      add(std::move(c));
    }
    for (const auto& n : other.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool check_passed(const std::string& name) const {
    const auto* c = find(name);
    return c && c->passed;
  }
};

/// Result of one probe: nullopt when both sides agree.
using ProbeResult = std::optional<Witness>;
using Probe = std::function<ProbeResult(std::span<const std::size_t>)>;

struct Identity {
  std::string name;
  std::vector<std::size_t> extents;
  Probe probe;
};

enum class SuiteMode { first_failure, full };

class IdentitySuite {
public:
  explicit IdentitySuite(std::string subject = {}) : subject_(std::move(subject)) {}

  IdentitySuite& add(std::string name, std::vector<std::size_t> extents, Probe probe) {
    identities_.push_back({std::move(name), std::move(extents), std::move(probe)});
    return *this;
  }

  /// A single boolean fact with an explanatory witness on failure.
  IdentitySuite& add_fact(std::string name, std::function<ProbeResult()> fact) {
    return add(std::move(name), {}, [f = std::move(fact)](std::span<const std::size_t>) { return f(); });
  }

  VerificationReport run(SuiteMode mode = SuiteMode::first_failure) const {
    VerificationReport rep;
    rep.subject = subject_;
    for (const auto& id : identities_) {
      CheckResult res = run_one(id);
      bool failed = !res.passed;
      rep.add(std::move(res));
      if (failed && mode == SuiteMode::first_failure) break;
    }
    return rep;
  }

  /// Re-evaluates the witness of a failed report; true iff it is still a
  /// genuine violation.
  bool reconfirm(const VerificationReport& rep) const {
    if (rep.passed() || !rep.witness) return false;
    for (const auto& id : identities_) {
      if (id.name != rep.identity_name) continue;
      if (rep.witness->indices.size() != id.extents.size()) return false;
      for (std::size_t k = 0; k < id.extents.size(); ++k)
        if (rep.witness->indices[k] >= id.extents[k]) return false;
      return id.probe(rep.witness->indices).has_value();
    }
    return false;
  }

  const std::vector<Identity>& identities() const { return identities_; }

private:
  static CheckResult run_one(const Identity& id) {
    CheckResult res{id.name, true, 0, std::nullopt};
    std::vector<std::size_t> idx(id.extents.size(), 0);
    for (auto e : id.extents)
      if (e == 0) return res;
    while (true) {
      ++res.evaluated;
      if (auto w = id.probe(idx)) {
        res.passed = false;
        w->indices = idx;
        res.witness = std::move(w);
        return res;
      }
      std::size_t k = idx.size();
      while (k > 0) {
        --k;
        if (++idx[k] < id.extents[k]) break;
        idx[k] = 0;
        if (k == 0) return res;
      }
      if (idx.empty()) return res;
    }
  }

  std::string subject_;
  std::vector<Identity> identities_;
};

/// A precondition of an operation failed; the report says which.
class PreconditionError : public std::runtime_error {
public:
  PreconditionError(const std::string& what, VerificationReport rep)
      : std::runtime_error(what + (rep.identity_name.empty() ? "" : ": " + rep.identity_name)), report(std::move(rep)) {}
  VerificationReport report;
};

inline ProbeResult mismatch(std::string location, std::string lhs, std::string rhs) {
  return Witness{{}, std::move(location), std::move(lhs), std::move(rhs)};
}

inline ProbeResult expect(bool ok, std::string location, std::string lhs = {}, std::string rhs = {}) {
  if (ok) return std::nullopt;
  return mismatch(std::move(location), std::move(lhs), std::move(rhs));
}

}  // namespace hopfrb
