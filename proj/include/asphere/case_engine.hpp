#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "case_tables.hpp"
#include "curvature.hpp"
#include "weight_test.hpp"

namespace asphere {

inline const MixedWord& builtin_relator() {
  static const MixedWord s = parse_word("a t b t c t^-1 d t e t f t^-1 g t h t i t^-1");
  return s;
}

/// The degree-2 label set S of the built-in relator, with the coefficient
/// involution sigma and the label <-> relation dictionary.
class LabelSet {
 public:
  static const LabelSet& instance() {
    static const LabelSet s;
    return s;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const Degree2Label& label(int i) const { return labels_.at(i); }
  const std::string& name(int i) const { return names_.at(i); }
  const Relation& relation(int i) const { return relations_.at(i); }
  int sigma(int i) const { return sigma_.at(i); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("not a degree-2 label: " + name);
  }

  /// Index of the label equivalent to the given 2-symbol word up to rotation
  /// and inversion, or -1.
  int find_word(const CoeffWord& w) const {
    if (w.size() != 2) return -1;
    for (int i = 0; i < size(); ++i) {
      const CoeffWord& l = labels_[i].label;
      CoeffWord rot;
      rot.syms = {l.syms[1], l.syms[0]};
      if (w == l || w == rot || w == l.inverse() || w == rot.inverse()) return i;
    }
    return -1;
  }

  /// The coefficient involution on signed symbols.
  static SignedSym sigma_symbol(const SignedSym& s) {
    static const std::map<std::string, SignedSym> m = {
        {"a", {"c", -1}}, {"b", {"b", -1}}, {"c", {"a", -1}},
        {"d", {"i", -1}}, {"e", {"h", -1}}, {"f", {"g", -1}},
        {"g", {"f", -1}}, {"h", {"e", -1}}, {"i", {"d", -1}}};
    SignedSym t = m.at(s.name);
    t.sign *= s.sign;
    return t;
  }

 private:
  LabelSet() {
    auto th = CoefficientTheory::base().close();
    labels_ = degree2_labels(builtin_relator(), th);
    for (const auto& d : labels_) {
      names_.push_back(d.str());
      // the label word x y^s is trivial exactly when x = y^(-s)
      relations_.push_back(Relation{d.label.syms[0].name,
                                    {d.label.syms[1].name, -d.label.syms[1].sign}});
    }
    for (int i = 0; i < size(); ++i) {
      CoeffWord img;
      for (const auto& s : labels_[i].label.syms) img.syms.push_back(sigma_symbol(s));
      int j = find_word(img.reduced());
      if (j < 0) throw std::logic_error("sigma image of " + names_[i] + " left the label set");
      sigma_.push_back(j);
    }
  }

  std::vector<Degree2Label> labels_;
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
  std::vector<int> sigma_;
};

/// Image of a label under the coefficient involution.
inline int symmetry_action(int label) { return LabelSet::instance().sigma(label); }

inline std::vector<int> sigma_image(const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) out.push_back(symmetry_action(l));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically least of the orbit under the symmetry group {id, sigma}.
inline std::vector<int> canonicalize_labels(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  auto img = sigma_image(labels);
  return img < labels ? img : labels;
}

/// A case: a subset of S read as the set of admissible degree-2 labels, with
/// the coefficient theory it induces.
struct CaseSpec {
  std::vector<int> admitted;  // sorted label indices
  CoefficientTheory theory;   // closed, consistent

  int N() const { return static_cast<int>(admitted.size()); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (int l : admitted) out.push_back(LabelSet::instance().name(l));
    return out;
  }
  std::string str() const {
    std::string s = "{";
    auto nm = names();
    for (size_t i = 0; i < nm.size(); ++i) s += (i ? ", " : "") + nm[i];
    return s + "}";
  }
};

inline CoefficientTheory theory_of(const std::vector<int>& labels) {
  auto th = CoefficientTheory::base();
  for (int l : labels) th.add(LabelSet::instance().relation(l));
  return th.close();
}

/// Builds the case for a label subset: closes the induced theory and
/// saturates the admitted set with every entailed label. Returns nothing for
/// contradictory subsets.
inline std::optional<CaseSpec> make_case(std::vector<int> labels) {
  const auto& S = LabelSet::instance();
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto th = theory_of(labels);
  if (th.contradictory()) return std::nullopt;
  std::vector<int> saturated;
  for (int l = 0; l < S.size(); ++l)
    if (th.entails(S.relation(l))) saturated.push_back(l);
  return CaseSpec{saturated, theory_of(saturated)};
}

inline CaseSpec canonicalize(const CaseSpec& c) {
  auto canon = canonicalize_labels(c.admitted);
  if (canon == c.admitted) return c;
  return CaseSpec{canon, theory_of(canon)};
}

/// All consistent, saturated, canonical cases with exactly N admitted labels.
inline std::vector<CaseSpec> enumerate_cases(int N) {
  if (N < 0 || N > LabelSet::instance().size())
    throw std::invalid_argument("N out of range");
  std::set<std::vector<int>> seen;
  std::vector<CaseSpec> out;
  const int n = LabelSet::instance().size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > N) continue;
    std::vector<int> labels;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) labels.push_back(i);
    auto c = make_case(labels);
    if (!c || c->N() != N) continue;
    auto canon = canonicalize_labels(c->admitted);
    if (seen.insert(canon).second) out.push_back(CaseSpec{canon, theory_of(canon)});
  }
  std::sort(out.begin(), out.end(),
            [](const CaseSpec& a, const CaseSpec& b) { return a.admitted < b.admitted; });
  return out;
}

// ---- certified tables ----------------------------------------------------

struct TablePattern {
  std::string citation;
  std::vector<int> canonical;  // canonicalized label indices
};

namespace detail {

inline std::vector<int> parse_label_names(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string name;
  while (in >> name) out.push_back(LabelSet::instance().index_of(name));
  return out;
}

inline std::vector<TablePattern> expand(const std::vector<RawTableItem>& raw) {
  std::vector<TablePattern> out;
  for (const auto& item : raw) {
    auto base = parse_label_names(item.base);
    std::vector<std::vector<int>> cases;
    std::string rset = item.rset;
    if (rset.empty()) {
      cases.push_back(base);
    } else {
      for (int r : parse_label_names(rset)) {
        auto c = base;
        c.push_back(r);
        cases.push_back(c);
      }
    }
    for (auto& c : cases) out.push_back({item.citation, canonicalize_labels(c)});
  }
  return out;
}

struct Tables {
  std::vector<TablePattern> wt1, wt2, cv1, cv2, cd1, cd2, cd3, open;
  std::map<std::vector<int>, std::string> curvature_index;  // cv1..cd3
  std::map<std::vector<int>, std::string> open_index;
  std::map<std::vector<int>, std::string> weight_index;  // wt1, wt2

  static const Tables& instance() {
    static const Tables t;
    return t;
  }

 private:
  Tables() {
    wt1 = expand(table_wt1());
    wt2 = expand(table_wt2());
    cv1 = expand(table_cv1());
    cv2 = expand(table_cv2());
    cd1 = expand(table_cd1());
    cd2 = expand(table_cd2());
    cd3 = expand(table_cd3());
    open = expand(table_open());
    for (const auto* tab : {&cv1, &cv2, &cd1, &cd2, &cd3})
      for (const auto& p : *tab) curvature_index.try_emplace(p.canonical, p.citation);
    for (const auto* tab : {&wt1, &wt2})
      for (const auto& p : *tab) weight_index.try_emplace(p.canonical, p.citation);
    for (const auto& p : open) open_index.try_emplace(p.canonical, p.citation);
  }
};

}  // namespace detail

/// The open-case table, expanded to one pattern per R-set element.
inline std::vector<TablePattern> theorem_exceptions() { return detail::Tables::instance().open; }

// ---- classification ------------------------------------------------------

struct ClassificationReport {
  enum class Verdict { WeightTest, Curvature, Exceptional, DistributionNeeded };

  CaseSpec canonical_case;
  Verdict verdict;
  Rational bound;      // curvature upper bound, units of pi
  RegionShape shape;   // witnessing degree sequence
  std::string citation;
  std::string notes;

  std::string verdict_str() const {
    switch (verdict) {
      case Verdict::WeightTest: return "ASPHERICAL_WEIGHT_TEST";
      case Verdict::Curvature: return "ASPHERICAL_CURVATURE";
      case Verdict::Exceptional: return "EXCEPTIONAL";
      case Verdict::DistributionNeeded: return "DISTRIBUTION_NEEDED";
    }
    return "";
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["admitted"] = canonical_case.names();
    j["N"] = canonical_case.N();
    j["verdict"] = verdict_str();
    j["bound"] = bound.str();
    j["shape"] = shape.str();
    if (!citation.empty()) j["citation"] = citation;
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }
};

/// Runs a weight recipe against a case's theory: checks the elimination
/// identity of the recorded presentation, then the weight test.
inline WeightReport run_weight_recipe(const WeightRecipe& recipe, const CoefficientTheory& th) {
  auto r1 = parse_word(recipe.r1, {"t", "x"});
  auto r2 = parse_word(recipe.r2, {"t", "x"});
  auto target = parse_word(recipe.specialized_relator, {"t", "x"});
  if (!cyclically_equal(eliminate_variable(r1.as_cyclic(), r2, "x"), target))
    throw std::logic_error("weight recipe " + std::string(recipe.id) +
                           " fails its elimination identity");
  StarGraph g = build_star_graph({r1, r2});
  WeightFunction theta;
  for (const auto& e : g.edges) theta.weights[e.id] = Rational(1);
  for (const auto* z : recipe.zero_edges) theta.weights[z] = Rational(0);
  return check_weight_test(g, theta, th, 4);
}

/// Classifies a case. Priority: a weight-test family match verified live;
/// a curvature bound at most -pi/3; membership in a certified curvature
/// table; membership in the open table; otherwise distribution needed.
inline ClassificationReport classify(const CaseSpec& input) {
  const auto& tables = detail::Tables::instance();
  ClassificationReport rep;
  rep.canonical_case = canonicalize(input);
  const auto& c = rep.canonical_case;

  auto bound = curvature_upper_bound(builtin_relator(), c.theory);
  rep.bound = bound.bound;
  rep.shape = bound.shape;

  // 1: weight-test families, verified on the case's own theory. The family
  // core may match the case or its sigma image.
  for (const auto& labels : {c.admitted, sigma_image(c.admitted)}) {
    std::set<int> have(labels.begin(), labels.end());
    for (const auto& recipe : weight_recipes()) {
      bool match = true;
      for (int l : detail::parse_label_names(recipe.core)) match = match && have.count(l);
      if (!match) continue;
      auto th = theory_of(labels);
      auto wrep = run_weight_recipe(recipe, th);
      if (wrep.pass()) {
        rep.verdict = ClassificationReport::Verdict::WeightTest;
        auto it = tables.weight_index.find(c.admitted);
        rep.citation = it != tables.weight_index.end() ? it->second : std::string(recipe.id);
        rep.notes = "weight test verified with recipe " + std::string(recipe.id);
        return rep;
      }
    }
  }

  // 2: sound curvature bound
  if (rep.bound <= Rational(-1, 3)) {
    rep.verdict = ClassificationReport::Verdict::Curvature;
    auto it = tables.curvature_index.find(c.admitted);
    if (it != tables.curvature_index.end()) rep.citation = it->second;
    return rep;
  }

  // 3: certified curvature tables
  if (auto it = tables.curvature_index.find(c.admitted); it != tables.curvature_index.end()) {
    rep.verdict = ClassificationReport::Verdict::Curvature;
    rep.citation = it->second;
    rep.notes = "certified by table " + it->second;
    return rep;
  }

  // 4: open table
  if (auto it = tables.open_index.find(c.admitted); it != tables.open_index.end()) {
    rep.verdict = ClassificationReport::Verdict::Exceptional;
    rep.citation = it->second;
    return rep;
  }

  rep.verdict = ClassificationReport::Verdict::DistributionNeeded;
  return rep;
}

/// The symmetry is induced by flipping the stable letter and inverting the
/// relator: checks that relabeling the relator through sigma agrees with
/// flip-and-invert up to cyclic rotation.
inline bool verify_sigma_symmetry() {
  MixedWord s = builtin_relator();
  MixedWord flipped;
  for (const auto& t : s.toks)
    flipped.toks.push_back(t.stable ? Token{true, t.name, -t.sign} : t);
  MixedWord lhs = flipped.inverse();
  MixedWord rhs;
  for (const auto& t : s.toks) {
    if (t.stable) {
      rhs.toks.push_back(t);
    } else {
      SignedSym img = LabelSet::sigma_symbol({t.name, t.sign});
      rhs.toks.push_back({false, img.name, img.sign});
    }
  }
  return cyclically_equal(lhs, rhs);
}

}  // namespace asphere
