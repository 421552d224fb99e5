#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "theory.hpp"

namespace asphere {

/// Star graph of a relative presentation. Vertices are the signed stable
/// letters; one edge per stable-letter occurrence per relator, labeled with
/// the coefficient segment that follows the occurrence. The edge for
/// occurrence i runs from L_i^(-e_i) to L_{i+1}^(e_{i+1}) (cyclically).
struct StarGraph {
  struct Edge {
    std::string id;       // "r<relator>.<occurrence>", occurrence 1-based
    int relator = 0;
    int occurrence = 0;   // 1-based within the relator
    CoeffWord label;
    SignedSym from;
    SignedSym to;
  };

  std::vector<SignedSym> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> relator_cycles;  // edge indices per relator
  std::vector<MixedWord> relators;

  int edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("no edge with id " + id);
  }
};

/// One stable-letter occurrence with its trailing coefficient segment.
struct Occurrence {
  std::string letter;
  int exponent;
  CoeffWord segment;
};

inline std::vector<Occurrence> occurrences_of(const MixedWord& relator) {
  // keep the caller's spelling so edge numbering follows the written word
  MixedWord w = detail::reduce_cyclic_no_rotate(relator.as_cyclic());
  std::vector<Occurrence> occ;
  std::vector<size_t> letter_pos;
  for (size_t i = 0; i < w.toks.size(); ++i)
    if (w.toks[i].stable) letter_pos.push_back(i);
  if (letter_pos.empty()) return occ;
  for (size_t k = 0; k < letter_pos.size(); ++k) {
    size_t p = letter_pos[k];
    size_t q = letter_pos[(k + 1) % letter_pos.size()];
    Occurrence o{w.toks[p].name, w.toks[p].sign, {}};
    for (size_t i = (p + 1) % w.toks.size(); i != q; i = (i + 1) % w.toks.size())
      o.segment.syms.push_back({w.toks[i].name, w.toks[i].sign});
    occ.push_back(std::move(o));
  }
  return occ;
}

inline StarGraph build_star_graph(const std::vector<MixedWord>& relators) {
  StarGraph g;
  g.relators = relators;
  std::set<std::string> letters;
  for (size_t r = 0; r < relators.size(); ++r) {
    auto occ = occurrences_of(relators[r]);
    if (occ.empty())
      throw std::invalid_argument("relator " + std::to_string(r) + " has no stable letter");
    for (const auto& o : occ) letters.insert(o.letter);
    std::vector<int> cycle;
    for (size_t i = 0; i < occ.size(); ++i) {
      const Occurrence& cur = occ[i];
      const Occurrence& nxt = occ[(i + 1) % occ.size()];
      StarGraph::Edge e;
      e.relator = static_cast<int>(r);
      e.occurrence = static_cast<int>(i) + 1;
      e.id = "r" + std::to_string(r) + "." + std::to_string(e.occurrence);
      e.label = cur.segment;
      e.from = {cur.letter, -cur.exponent};
      e.to = {nxt.letter, nxt.exponent};
      cycle.push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back(std::move(e));
    }
    g.relator_cycles.push_back(std::move(cycle));
  }
  for (const auto& l : letters) {
    g.vertices.push_back({l, +1});
    g.vertices.push_back({l, -1});
  }
  return g;
}

/// A closed path in the star graph: a sequence of directed edge traversals.
struct GraphCycle {
  struct Trav {
    int edge;
    int dir;  // +1 forward, -1 backward
    friend bool operator==(const Trav&, const Trav&) = default;
    friend auto operator<=>(const Trav&, const Trav&) = default;
  };
  std::vector<Trav> travs;
  CoeffWord label;  // product of edge labels with orientation, freely reduced

  size_t length() const { return travs.size(); }
};

namespace detail {

inline SignedSym trav_start(const StarGraph& g, GraphCycle::Trav t) {
  return t.dir > 0 ? g.edges[t.edge].from : g.edges[t.edge].to;
}
inline SignedSym trav_end(const StarGraph& g, GraphCycle::Trav t) {
  return t.dir > 0 ? g.edges[t.edge].to : g.edges[t.edge].from;
}
inline bool is_backtrack(GraphCycle::Trav a, GraphCycle::Trav b) {
  return a.edge == b.edge && a.dir == -b.dir;
}

inline std::vector<GraphCycle::Trav> cycle_canonical_key(const std::vector<GraphCycle::Trav>& v) {
  auto rot = [](const std::vector<GraphCycle::Trav>& c, size_t k) {
    std::vector<GraphCycle::Trav> r(c.begin() + k, c.end());
    r.insert(r.end(), c.begin(), c.begin() + k);
    return r;
  };
  std::vector<GraphCycle::Trav> rev;
  for (auto it = v.rbegin(); it != v.rend(); ++it) rev.push_back({it->edge, -it->dir});
  auto best = v;
  for (size_t k = 0; k < v.size(); ++k) {
    if (auto a = rot(v, k); a < best) best = a;
    if (auto b = rot(rev, k); b < best) best = b;
  }
  return best;
}

inline CoeffWord cycle_label(const StarGraph& g, const std::vector<GraphCycle::Trav>& travs) {
  CoeffWord w;
  for (const auto& t : travs) {
    CoeffWord part = t.dir > 0 ? g.edges[t.edge].label : g.edges[t.edge].label.inverse();
    w.syms.insert(w.syms.end(), part.syms.begin(), part.syms.end());
  }
  return w.reduced();
}

}  // namespace detail

/// All cyclically reduced closed paths of length <= max_len, deduplicated up
/// to rotation and reversal.
inline std::vector<GraphCycle> enumerate_cycles(const StarGraph& g, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::set<std::vector<GraphCycle::Trav>> seen;
  std::vector<GraphCycle> out;
  std::vector<GraphCycle::Trav> path;

  auto emit = [&] {
    auto key = detail::cycle_canonical_key(path);
    if (seen.insert(key).second) {
      GraphCycle c;
      c.travs = key;
      c.label = detail::cycle_label(g, key);
      out.push_back(std::move(c));
    }
  };

  std::function<void(SignedSym, SignedSym)> walk = [&](SignedSym start, SignedSym at) {
    if (static_cast<int>(path.size()) >= max_len + 1) return;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      for (int dir : {+1, -1}) {
        GraphCycle::Trav t{e, dir};
        if (!(detail::trav_start(g, t) == at)) continue;
        if (!path.empty() && detail::is_backtrack(path.back(), t)) continue;
        if (static_cast<int>(path.size()) + 1 > max_len) continue;
        path.push_back(t);
        if (detail::trav_end(g, t) == start && !detail::is_backtrack(path.back(), path.front()))
          emit();
        walk(start, detail::trav_end(g, t));
        path.pop_back();
      }
    }
  };

  for (const auto& v : g.vertices) {
    path.clear();
    walk(v, v);
  }
  std::sort(out.begin(), out.end(), [](const GraphCycle& a, const GraphCycle& b) {
    if (a.travs.size() != b.travs.size()) return a.travs.size() < b.travs.size();
    return a.travs < b.travs;
  });
  return out;
}

/// A candidate degree-2 vertex label: a length-2 cycle through two corner
/// edges, not refuted by the torsion-freeness oracle.
struct Degree2Label {
  int edge_a = 0;         // edge indices in the star graph
  int edge_b = 0;
  int sign = +1;          // cycle is (edge_a forward, edge_b^sign)
  CoeffWord label;        // display-canonical label word
  WordClass::Kind status = WordClass::Unknown;  // Trivial or Unknown

  std::string str() const {
    std::string s;
    for (const auto& t : label.syms) s += t.str();
    return s;
  }
};

namespace detail {

/// Display canonicalization for length-2 labels, following the usual listing
/// convention: same-sign pairs as [x y] with x < y; mixed-sign pairs as
/// [x y^-1] with x < y for loop pairs and x > y for cross-edge pairs.
inline CoeffWord display_label2(const CoeffWord& w, bool loop_pair) {
  if (w.size() != 2) return w;
  CoeffWord a = w;
  CoeffWord b;  // rotation
  b.syms = {w.syms[1], w.syms[0]};
  const std::vector<CoeffWord> cands = {a, b, a.inverse(), b.inverse()};
  for (const auto& c : cands)
    if (c.syms[0].sign > 0 && c.syms[1].sign > 0 && c.syms[0].name <= c.syms[1].name) return c;
  for (const auto& c : cands) {
    if (c.syms[0].sign < 0 || c.syms[1].sign > 0) continue;
    if (loop_pair ? c.syms[0].name <= c.syms[1].name : c.syms[0].name >= c.syms[1].name)
      return c;
  }
  for (const auto& c : cands)
    if (c.syms[0].sign > 0) return c;
  return w;
}

}  // namespace detail

/// The possible degree-2 vertex labels of a region over the given relator:
/// length-2 cycles of its star graph whose label the theory cannot refute
/// (a refuted label is a nonzero power of a nontrivial symbol). Labels are
/// reported up to rotation and inversion.
inline std::vector<Degree2Label> degree2_labels(const MixedWord& relator,
                                                const CoefficientTheory& th) {
  StarGraph g = build_star_graph({relator});
  std::vector<Degree2Label> out;
  for (const auto& c : enumerate_cycles(g, 2)) {
    if (c.length() != 2) continue;
    WordClass cls = th.normalize_word(c.label);
    if (cls.nontrivial_power()) continue;  // refuted by torsion freeness
    // normalize traversals to the form (edge_a forward, edge_b^sign)
    GraphCycle::Trav t0 = c.travs[0], t1 = c.travs[1];
    if (t0.dir < 0 && t1.dir < 0) {
      std::swap(t0, t1);
      t0.dir = t1.dir = +1;  // reversal of the cycle
    } else if (t0.dir < 0) {
      std::swap(t0, t1);  // rotation
    }
    Degree2Label d;
    d.edge_a = t0.edge;
    d.edge_b = t1.edge;
    d.sign = t1.dir;
    bool loop_pair = g.edges[t0.edge].from == g.edges[t0.edge].to;
    d.label = detail::display_label2(c.label, loop_pair);
    d.status = cls.kind;
    out.push_back(std::move(d));
  }
  // Group loop pairs by their vertex (in vertex order), cross-edge pairs
  // last; the usual listing order for the built-in relator.
  auto group = [&](const Degree2Label& d) {
    const auto& e = g.edges[d.edge_a];
    if (!(e.from == e.to)) return static_cast<int>(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v)
      if (g.vertices[v] == e.from) return static_cast<int>(v);
    return static_cast<int>(g.vertices.size());
  };
  std::sort(out.begin(), out.end(), [&](const Degree2Label& x, const Degree2Label& y) {
    if (group(x) != group(y)) return group(x) < group(y);
    if (x.label.size() != 2 || y.label.size() != 2) return x.str() < y.str();
    if (group(x) < static_cast<int>(g.vertices.size())) {
      auto kx = std::make_tuple(x.label.syms[0].name, x.label.syms[1].name, -x.label.syms[1].sign);
      auto ky = std::make_tuple(y.label.syms[0].name, y.label.syms[1].name, -y.label.syms[1].sign);
      return kx < ky;
    }
    // cross-edge pairs: first symbol descending, then second descending
    auto kx = std::make_tuple(x.label.syms[0].name, x.label.syms[1].name);
    auto ky = std::make_tuple(y.label.syms[0].name, y.label.syms[1].name);
    return kx > ky;
  });
  return out;
}

// ---- exports -------------------------------------------------------------

inline std::string to_dot(const StarGraph& g) {
  std::string s = "digraph star {\n";
  for (const auto& v : g.vertices) s += "  \"" + v.str() + "\";\n";
  for (const auto& e : g.edges) {
    std::string lbl = e.label.empty() ? "1" : e.label.str();
    s += "  \"" + e.from.str() + "\" -> \"" + e.to.str() + "\" [label=\"" + lbl +
         "\", id=\"" + e.id + "\"];\n";
  }
  s += "}\n";
  return s;
}

inline nlohmann::json to_json(const StarGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(v.str());
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"id", e.id},
                          {"relator", e.relator},
                          {"occurrence", e.occurrence},
                          {"label", e.label.empty() ? "1" : e.label.str()},
                          {"from", e.from.str()},
                          {"to", e.to.str()}});
  j["relator_cycles"] = nlohmann::json::array();
  for (const auto& cyc : g.relator_cycles) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : cyc) arr.push_back(g.edges[e].id);
    j["relator_cycles"].push_back(arr);
  }
  return j;
}

}  // namespace asphere
