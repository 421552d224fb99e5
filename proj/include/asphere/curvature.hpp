#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rational.hpp"
#include "star_graph.hpp"

namespace asphere {

/// Vertex degrees around a region, k-gon corners in order.
struct RegionShape {
  std::vector<int> degrees;

  static RegionShape with(int twos, int threes) {
    RegionShape s;
    s.degrees.assign(twos, 2);
    s.degrees.insert(s.degrees.end(), threes, 3);
    return s;
  }

  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < degrees.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(degrees[i]);
    }
    return out + ")";
  }
};

/// Curvature of a k-gon region with the given corner degrees, in units of pi:
/// (2 - k) + sum 2/d_i.
inline Rational region_curvature(const RegionShape& shape) {
  if (shape.degrees.empty()) throw std::invalid_argument("region needs at least one corner");
  Rational c(2 - static_cast<long long>(shape.degrees.size()));
  for (int d : shape.degrees) {
    if (d < 2) throw std::invalid_argument("corner degree must be at least 2");
    c += Rational(2, d);
  }
  return c;
}

inline std::string curvature_str(const Rational& c) {
  if (c == Rational(0)) return "0";
  return c.str() + " pi";
}

/// Candidate degree-2 labels at one corner of the region, with their
/// admissibility under a theory.
struct CornerTable {
  struct Entry {
    CoeffWord label;
    int other_corner;  // 1-based corner position of the cycle's second edge
    int sign;          // +1: both corners from like-oriented regions
    enum class Status { Admissible, Candidate, Refuted } status;
  };
  struct Corner {
    int position;       // 1-based position in the relator
    std::string name;   // "v_a" style, from the corner's coefficient
    std::vector<Entry> entries;
    bool capable = false;  // has an admissible entry
  };
  std::vector<Corner> corners;

  std::vector<int> capable_positions() const {
    std::vector<int> out;
    for (const auto& c : corners)
      if (c.capable) out.push_back(c.position);
    return out;
  }
};

namespace detail {

// The relator as d_1 L^(e_1) d_2 L^(e_2) ... d_n L^(e_n): coeffs[p-1] = d_p
// (d_1 is the leading coefficient), exps[p-1] = e_p. Corner p of the region
// carries d_p and is flanked by arcs p-1 and p.
struct RelatorShape {
  std::vector<std::string> coeffs;
  std::vector<int> exps;
};

inline RelatorShape relator_shape(const MixedWord& relator) {
  auto occ = occurrences_of(relator);
  const int n = static_cast<int>(occ.size());
  RelatorShape rs;
  for (int p = 1; p <= n; ++p) {
    const CoeffWord& seg = occ[(p - 2 + n) % n].segment;  // d_p trails occurrence p-1
    if (seg.size() != 1)
      throw std::invalid_argument("corner analysis needs single-symbol coefficient segments");
    if (seg.syms[0].sign != +1)
      throw std::invalid_argument("corner analysis needs positive coefficient letters");
    rs.coeffs.push_back(seg.syms[0].name);
    rs.exps.push_back(occ[p - 1].exponent);
  }
  return rs;
}

}  // namespace detail

/// Corner table of the relator's region: corner p carries coefficient d_p;
/// its candidate labels are the degree-2 cycles through the corner's edge.
/// Admissible means the theory forces the label trivial.
inline CornerTable corner_table(const MixedWord& relator, const CoefficientTheory& th) {
  if (!th.closed() || th.contradictory())
    throw std::invalid_argument("corner_table needs a closed consistent theory");
  auto rs = detail::relator_shape(relator);
  const int n = static_cast<int>(rs.coeffs.size());
  // Candidates come from the base theory so the table lists every structural
  // possibility; admissibility is judged under th.
  std::vector<std::string> sorted_coeffs = rs.coeffs;
  std::sort(sorted_coeffs.begin(), sorted_coeffs.end());
  auto base = sorted_coeffs == std::vector<std::string>{"a", "b", "c", "d", "e",
                                                        "f", "g", "h", "i"}
                  ? CoefficientTheory::base()
                  : CoefficientTheory::free({sorted_coeffs.begin(), sorted_coeffs.end()});
  auto labels = degree2_labels(relator, base.close());

  CornerTable table;
  for (int p = 1; p <= n; ++p) table.corners.push_back({p, "v_" + rs.coeffs[p - 1], {}, false});
  // the edge of occurrence i carries coefficient d_{i+1}: its corner is i+1
  auto corner_of_edge = [&](int edge_occurrence) { return edge_occurrence % n + 1; };

  StarGraph g = build_star_graph({relator});
  for (const auto& d : labels) {
    int ca = corner_of_edge(g.edges[d.edge_a].occurrence);
    int cb = corner_of_edge(g.edges[d.edge_b].occurrence);
    CornerTable::Entry::Status st;
    WordClass cls = th.normalize_word(d.label);
    if (cls.trivial())
      st = CornerTable::Entry::Status::Admissible;
    else if (cls.nontrivial_power())
      st = CornerTable::Entry::Status::Refuted;
    else
      st = CornerTable::Entry::Status::Candidate;
    table.corners[ca - 1].entries.push_back({d.label, cb, d.sign, st});
    table.corners[cb - 1].entries.push_back({d.label, ca, d.sign, st});
    if (st == CornerTable::Entry::Status::Admissible) {
      table.corners[ca - 1].capable = true;
      table.corners[cb - 1].capable = true;
    }
  }
  return table;
}

namespace detail {

/// Whether adjacent corners p and p+1 can both have degree 2 with the given
/// label choices. The region across the shared edge contributes the two
/// partner corners; they must be consecutive corners of one copy of the
/// relator, glued anti-parallel, with one orientation for both.
inline bool adjacent_pair_compatible(const RelatorShape& rs, int p, const CornerTable::Entry& at_p,
                                     const CornerTable::Entry& at_next) {
  if (at_p.sign != at_next.sign) return false;  // one neighbor region, one orientation
  const int n = static_cast<int>(rs.coeffs.size());
  auto coeff = [&](int pos) { return rs.coeffs[((pos - 1) % n + n) % n]; };
  const std::string w1 = coeff(at_p.other_corner);      // partner symbol at corner p
  const std::string w2 = coeff(at_next.other_corner);   // partner symbol at corner p+1
  const int shared_exp = rs.exps[p - 1];                // exponent of the shared edge
  for (int j = 1; j <= n; ++j) {
    int ej = rs.exps[j - 1];
    const std::string& dj = coeff(j);
    const std::string& dj1 = coeff(j + 1);
    if (at_p.sign > 0) {
      if (ej == -shared_exp && dj == w2 && dj1 == w1) return true;
    } else {
      if (ej == shared_exp && dj == w1 && dj1 == w2) return true;
    }
  }
  return false;
}

}  // namespace detail

struct CurvatureBound {
  Rational bound;        // units of pi
  RegionShape shape;     // witnessing degree sequence
  int degree2_corners;   // m
  std::vector<int> witness_positions;  // a maximum compatible corner set
};

/// Upper bound on the curvature of a region over the relator: m = the largest
/// number of corners that can simultaneously have degree 2, respecting
/// admissibility and the adjacent-pair gluing exclusion; the bound is
/// c(2^m, 3^(9-m)). Sound but not claimed tight.
inline CurvatureBound curvature_upper_bound(const MixedWord& relator,
                                            const CoefficientTheory& th) {
  auto table = corner_table(relator, th);
  auto rs = detail::relator_shape(relator);
  const int n = static_cast<int>(rs.coeffs.size());

  // admissible label choices per corner
  std::vector<std::vector<CornerTable::Entry>> choices(n);
  for (const auto& c : table.corners)
    for (const auto& e : c.entries)
      if (e.status == CornerTable::Entry::Status::Admissible)
        choices[c.position - 1].push_back(e);

  int best = 0;
  std::vector<int> best_set;
  // assignment[p] = -1 (degree >= 3) or an index into choices[p]
  std::vector<int> assignment(n, -1);
  auto compatible = [&](int p, int q) {  // q = p+1 cyclically, both assigned
    return detail::adjacent_pair_compatible(rs, p + 1, choices[p][assignment[p]],
                                            choices[q][assignment[q]]);
  };
  std::function<void(int, int)> search = [&](int pos, int count) {
    if (count + (n - pos) <= best) return;  // cannot beat the best
    if (pos == n) {
      // wrap-around adjacency between corner n and corner 1
      if (assignment[n - 1] >= 0 && assignment[0] >= 0 && !compatible(n - 1, 0)) return;
      if (count > best) {
        best = count;
        best_set.clear();
        for (int i = 0; i < n; ++i)
          if (assignment[i] >= 0) best_set.push_back(i + 1);
      }
      return;
    }
    assignment[pos] = -1;
    search(pos + 1, count);
    for (int k = 0; k < static_cast<int>(choices[pos].size()); ++k) {
      assignment[pos] = k;
      if (pos > 0 && assignment[pos - 1] >= 0 && !compatible(pos - 1, pos)) continue;
      search(pos + 1, count + 1);
    }
    assignment[pos] = -1;
  };
  search(0, 0);

  CurvatureBound out;
  out.degree2_corners = best;
  out.shape = RegionShape::with(best, n - best);
  out.bound = region_curvature(out.shape);
  out.witness_positions = best_set;
  return out;
}

/// Exposed for validation: can corners p and p+1 (1-based, cyclically
/// adjacent) both be degree 2 under the theory?
inline bool corners_jointly_degree2(const MixedWord& relator, const CoefficientTheory& th,
                                    int p, int q) {
  auto rs = detail::relator_shape(relator);
  const int n = static_cast<int>(rs.coeffs.size());
  if (q != p % n + 1) throw std::invalid_argument("corners are not cyclically adjacent");
  auto table = corner_table(relator, th);
  for (const auto& ep : table.corners[p - 1].entries) {
    if (ep.status != CornerTable::Entry::Status::Admissible) continue;
    for (const auto& eq : table.corners[q - 1].entries) {
      if (eq.status != CornerTable::Entry::Status::Admissible) continue;
      if (detail::adjacent_pair_compatible(rs, p, ep, eq)) return true;
    }
  }
  return false;
}

}  // namespace asphere
