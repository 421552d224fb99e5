#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "word.hpp"

namespace asphere {

/// An equation between coefficient symbols: left = right (right carries the
/// sign), e.g. a = d^-1. This is the whole relation language.
struct Relation {
  std::string left;
  SignedSym right;

  std::string str() const { return left + "=" + right.str(); }
  friend bool operator==(const Relation&, const Relation&) = default;
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.left != b.left) return a.left < b.left;
    return sym_less(a.right, b.right);
  }

  /// Parses "a=d^-1" or "a = d".
  static Relation parse(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("relation needs '=': " + s);
    auto trim = [](std::string t) {
      size_t b = t.find_first_not_of(" \t");
      size_t e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    std::string l = trim(s.substr(0, eq));
    std::string r = trim(s.substr(eq + 1));
    if (l.empty() || r.empty()) throw std::invalid_argument("malformed relation: " + s);
    SignedSym rs{r, +1};
    if (auto c = r.find('^'); c != std::string::npos) {
      if (r.substr(c) != "^-1") throw std::invalid_argument("malformed relation: " + s);
      rs = {r.substr(0, c), -1};
    }
    return {l, rs};
  }
};

/// Result of normalize_word: the theory either forces the word trivial,
/// certifies it a nonzero power of a nontrivial symbol (hence nontrivial in
/// any torsion-free group), or cannot decide.
struct WordClass {
  enum Kind { Trivial, NontrivialPower, Unknown } kind = Unknown;
  std::string symbol;  // for NontrivialPower
  int exponent = 0;    // for NontrivialPower
  CoeffWord normal_form;

  bool trivial() const { return kind == Trivial; }
  bool nontrivial_power() const { return kind == NontrivialPower; }
};

struct ContradictionWitness {
  std::string symbol;
  int exponent;  // witness equation symbol^exponent = 1, exponent != 0
  std::string str() const {
    return symbol + (exponent == 1 ? "" : "^" + std::to_string(exponent)) + "=1";
  }
};

/// Congruence closure over signed coefficient symbols with a distinguished
/// identity class and torsion-freeness contradiction detection. The relation
/// language is exactly symbol = signed symbol; close() returns a new theory.
class CoefficientTheory {
 public:
  enum class Status { Open, Consistent, Contradictory };

  CoefficientTheory() = default;
  CoefficientTheory(std::vector<std::string> alphabet, std::set<std::string> trivial,
                    std::set<std::string> nontrivial)
      : alphabet_(std::move(alphabet)),
        trivial_(std::move(trivial)),
        nontrivial_(std::move(nontrivial)) {}

  /// The presentation's base theory: alphabet a..i, b = 1, and
  /// a, c, d, f, g, i assumed nontrivial.
  static CoefficientTheory base() {
    return CoefficientTheory({"a", "b", "c", "d", "e", "f", "g", "h", "i"}, {"b"},
                             {"a", "c", "d", "f", "g", "i"});
  }

  /// A theory with no built-in assumptions, for ad-hoc alphabets.
  static CoefficientTheory free(std::vector<std::string> alphabet,
                                std::set<std::string> nontrivial = {}) {
    return CoefficientTheory(std::move(alphabet), {}, std::move(nontrivial));
  }

  CoefficientTheory& add(const Relation& r) {
    relations_.push_back(r);
    status_ = Status::Open;
    return *this;
  }
  CoefficientTheory& add(const std::string& r) { return add(Relation::parse(r)); }

  const std::vector<Relation>& relations() const { return relations_; }
  const std::set<std::string>& trivial_symbols() const { return trivial_; }
  const std::set<std::string>& nontrivial_symbols() const { return nontrivial_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  bool closed() const { return status_ != Status::Open; }
  bool consistent() const { return status_ == Status::Consistent; }
  bool contradictory() const { return status_ == Status::Contradictory; }
  const std::optional<ContradictionWitness>& witness() const { return witness_; }

  /// Merges relations to a fixed point. Identifying a class with its own
  /// inverse class forces s^2 = 1: a contradiction when the class holds a
  /// nontrivial symbol, and s = 1 otherwise (G is torsion free). A nontrivial
  /// symbol landing in the identity class is a contradiction.
  CoefficientTheory close() const {
    CoefficientTheory th = *this;
    th.parent_.clear();
    th.status_ = Status::Consistent;
    th.witness_.reset();
    th.parent_[SignedSym{"1", -1}] = one();
    for (const auto& s : th.trivial_) {
      if (th.status_ == Status::Contradictory) break;
      th.merge({s, +1}, one());
    }
    for (const auto& r : th.relations_) {
      if (th.status_ == Status::Contradictory) break;
      th.merge({r.left, +1}, r.right);
    }
    if (th.status_ == Status::Consistent) th.assign_reps();
    return th;
  }

  /// True iff the closed theory forces rel. Requires consistency.
  bool entails(const Relation& rel) const {
    require_consistent();
    return find({rel.left, +1}) == find(rel.right);
  }

  /// Rewrites each symbol to its class representative, drops identity
  /// symbols, freely reduces, and classifies the result.
  WordClass normalize_word(const CoeffWord& w) const {
    require_consistent();
    CoeffWord rw;
    for (const auto& s : w.syms) {
      SignedSym r = rep(s);
      if (r.name == "1") continue;
      rw.syms.push_back(r);
    }
    rw = rw.reduced();
    WordClass out;
    out.normal_form = rw;
    if (rw.empty()) {
      out.kind = WordClass::Trivial;
      return out;
    }
    const SignedSym& first = rw.syms.front();
    bool single_power = std::all_of(rw.syms.begin(), rw.syms.end(),
                                    [&](const SignedSym& s) { return s == first; });
    if (single_power) {
      if (auto nt = nontrivial_member(first)) {
        out.kind = WordClass::NontrivialPower;
        out.symbol = nt->name;
        // nt and first name the same group element, so the word is nt^k
        int k = static_cast<int>(rw.size());
        out.exponent = nt->sign > 0 ? k : -k;
        return out;
      }
    }
    out.kind = WordClass::Unknown;
    return out;
  }

  /// Class representative of a signed symbol; the identity maps to "1".
  SignedSym rep(const SignedSym& s) const { return find(s); }
  static SignedSym one() { return {"1", +1}; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : relations_) j["relations"].push_back(r.str());
    j["trivial"] = trivial_;
    j["nontrivial"] = nontrivial_;
    switch (status_) {
      case Status::Open: j["status"] = "open"; break;
      case Status::Consistent: j["status"] = "consistent"; break;
      case Status::Contradictory:
        j["status"] = "contradictory";
        j["witness"] = witness_ ? witness_->str() : "";
        break;
    }
    return j;
  }

 private:
  void require_consistent() const {
    if (status_ == Status::Open) throw std::logic_error("theory not closed");
    if (status_ == Status::Contradictory)
      throw std::logic_error("theory is contradictory (" +
                             (witness_ ? witness_->str() : std::string("no witness")) + ")");
  }

  SignedSym find(SignedSym s) const {
    while (true) {
      auto it = parent_.find(s);
      if (it == parent_.end() || it->second == s) return s;
      s = it->second;
    }
  }

  void link(const SignedSym& a, const SignedSym& b) {
    SignedSym ra = find(a), rb = find(b);
    if (!(ra == rb)) parent_[ra] = rb;
  }

  bool is_nontrivial_class(const SignedSym& root) const {
    for (const auto& n : nontrivial_)
      if (find({n, +1}) == root || find({n, -1}) == root) return true;
    return false;
  }

  std::optional<SignedSym> nontrivial_member(const SignedSym& s) const {
    SignedSym root = find(s);
    for (const auto& n : nontrivial_) {
      if (find({n, +1}) == root) return SignedSym{n, +1};
      if (find({n, -1}) == root) return SignedSym{n, -1};
    }
    return std::nullopt;
  }

  std::string pick_witness_symbol(const SignedSym& ra, const SignedSym& rb,
                                  const std::string& preferred,
                                  const std::string& fallback) const {
    if (nontrivial_.count(preferred)) return preferred;
    if (nontrivial_.count(fallback)) return fallback;
    for (const auto& n : nontrivial_)
      if (find({n, +1}) == ra || find({n, -1}) == ra || find({n, +1}) == rb ||
          find({n, -1}) == rb)
        return n;
    return preferred;
  }

  // Merge classes of a and b with inverse mirroring; b is the "new" side, so
  // contradiction witnesses name its base symbol when possible.
  void merge(const SignedSym& a, const SignedSym& b) {
    if (status_ == Status::Contradictory) return;
    SignedSym ra = find(a), rb = find(b);
    if (ra == rb) return;
    SignedSym id = find(one());
    bool self_inverse = (find(a.inverse()) == rb || find(b.inverse()) == ra);
    if (self_inverse && !(ra == id || rb == id)) {
      if (is_nontrivial_class(ra) || is_nontrivial_class(rb)) {
        status_ = Status::Contradictory;
        witness_ = ContradictionWitness{pick_witness_symbol(ra, rb, b.name, a.name), 2};
        return;
      }
      // s^2 = 1 in a torsion-free group: the whole class collapses to 1
      link(ra, id);
      link(find(a.inverse()), find(one()));
      link(find(b), find(one()));
      link(find(b.inverse()), find(one()));
      check_identity_class();
      return;
    }
    link(ra, rb);
    link(find(a.inverse()), find(b.inverse()));
    check_identity_class();
  }

  void check_identity_class() {
    SignedSym id = find(one());
    for (const auto& n : nontrivial_) {
      if (find({n, +1}) == id || find({n, -1}) == id) {
        status_ = Status::Contradictory;
        witness_ = ContradictionWitness{n, 1};
        return;
      }
    }
  }

  // Canonical representatives: least member of each class under sym_less.
  // Name-major ordering makes rep(C^-1) = rep(C)^-1 automatically.
  void assign_reps() {
    std::vector<SignedSym> all = {one(), one().inverse()};
    for (const auto& s : alphabet_) {
      all.push_back({s, +1});
      all.push_back({s, -1});
    }
    std::map<SignedSym, std::vector<SignedSym>> classes;
    for (const auto& s : all) classes[find(s)].push_back(s);
    std::map<SignedSym, SignedSym> newparent;
    for (auto& [root, members] : classes) {
      SignedSym target = *std::min_element(
          members.begin(), members.end(),
          [](const SignedSym& x, const SignedSym& y) { return sym_less(x, y); });
      for (const auto& m : members) newparent[m] = target;
    }
    parent_ = std::move(newparent);
  }

  std::vector<std::string> alphabet_;
  std::set<std::string> trivial_;
  std::set<std::string> nontrivial_;
  std::vector<Relation> relations_;
  mutable std::map<SignedSym, SignedSym> parent_;
  Status status_ = Status::Open;
  std::optional<ContradictionWitness> witness_;
};

/// Theory-aware reduction: coefficient symbols rewrite to their class
/// representatives (identity symbols vanish), then stable-letter pairs with
/// nothing between them cancel, cyclically for cyclic words.
inline MixedWord free_reduce(const MixedWord& w, const CoefficientTheory& th) {
  MixedWord rw;
  rw.cyclic = w.cyclic;
  for (const auto& t : w.toks) {
    if (t.stable) {
      rw.toks.push_back(t);
    } else {
      SignedSym r = th.rep({t.name, t.sign});
      if (r.name == "1") continue;
      rw.toks.push_back({false, r.name, r.sign});
    }
  }
  return free_reduce(rw);
}

}  // namespace asphere
