#pragma once

#include <string>
#include <vector>

namespace asphere {

/// One row of a certified-case table, before R-set expansion: the base
/// labels always hold; when rset is nonempty the row stands for one case per
/// R-set element (base plus that single label).
struct RawTableItem {
  const char* citation;
  const char* base;  // space-separated label names
  const char* rset;  // space-separated label names, "" when absent
};

/// Families certified by an explicit weight function on a transformed
/// presentation (table wt1 uses the substitution x = t^-1 a t t, wt2 the
/// substitution x = t^-1 a t).
inline const std::vector<RawTableItem>& table_wt1() {
  static const std::vector<RawTableItem> t = {
      {"wt1.1", "ad ag dg^-1", ""},
      {"wt1.2", "ad ag dg^-1", "cf cf^-1 ci ci^-1 fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"wt1.3", "ad ag dg^-1 he^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt1.4", "ad ag dg^-1 hb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt1.5", "ad ag dg^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt1.6", "ad ag dg^-1 ci cf fi^-1", ""},
      {"wt1.7", "ad ag dg^-1 ci cf^-1 fi", ""},
      {"wt1.8", "ad ag dg^-1 ci^-1 cf fi", ""},
      {"wt1.9", "ad ag dg^-1 ci^-1 cf^-1 fi^-1", ""},
      {"wt1.10", "ad ag dg^-1 he^-1 hb^-1 eb^-1", ""},
      {"wt1.11", "ad ag dg^-1 ci cf fi^-1", "he^-1 hb^-1"},
      {"wt1.12", "ad ag dg^-1 ci cf^-1 fi", "he^-1 hb^-1 eb^-1"},
      {"wt1.13", "ad ag dg^-1 ci^-1 cf fi", "he^-1 hb^-1 eb^-1"},
      {"wt1.14", "ad ag dg^-1 ci^-1 cf^-1 fi^-1", "he^-1 hb^-1 eb^-1"},
      {"wt1.15", "ad ag dg^-1 he^-1 hb^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt1.16", "ad ag dg^-1 ci cf fi^-1 he^-1 hb^-1 eb^-1", ""},
      {"wt1.17", "ad ag dg^-1 ci cf^-1 fi he^-1 hb^-1 eb^-1", ""},
      {"wt1.18", "ad ag dg^-1 ci^-1 cf fi he^-1 hb^-1 eb^-1", ""},
      {"wt1.19", "ad ag dg^-1 ci^-1 cf^-1 fi^-1 he^-1 hb^-1 eb^-1", ""},
  };
  return t;
}

inline const std::vector<RawTableItem>& table_wt2() {
  static const std::vector<RawTableItem> t = {
      {"wt2.1", "ad ag^-1 dg", ""},
      {"wt2.2", "ad ag^-1 dg", "cf cf^-1 ci ci^-1 fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"wt2.3", "ad ag^-1 dg he^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.4", "ad ag^-1 dg hb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.5", "ad ag^-1 dg eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.6", "ad ag^-1 dg ci cf^-1 fi", ""},
      {"wt2.7", "ad ag^-1 dg ci^-1 cf fi", ""},
      {"wt2.8", "ad ag^-1 dg ci^-1 cf^-1 fi^-1", ""},
      {"wt2.9", "ad ag^-1 dg he^-1 hb^-1 eb^-1", ""},
      {"wt2.10", "ad ag^-1 dg ci cf^-1 fi", "he^-1 hb^-1"},
      {"wt2.11", "ad ag^-1 dg ci^-1 cf fi", "he^-1 hb^-1 eb^-1"},
      {"wt2.12", "ad ag^-1 dg ci^-1 cf^-1 fi^-1", "he^-1 hb^-1 eb^-1"},
      {"wt2.13", "ad ag^-1 dg he^-1 hb^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.14", "ad ag^-1 dg ci cf^-1 fi he^-1 hb^-1 eb^-1", ""},
      {"wt2.15", "ad ag^-1 dg ci^-1 cf fi he^-1 hb^-1 eb^-1", ""},
      {"wt2.16", "ad ag^-1 dg ci^-1 cf^-1 fi^-1 he^-1 hb^-1 eb^-1", ""},
      {"wt2.17", "ad^-1 ag dg", ""},
      {"wt2.18", "ad^-1 ag dg", "cf cf^-1 ci ci^-1 fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"wt2.19", "ad^-1 ag dg he^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.20", "ad^-1 ag dg hb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.21", "ad^-1 ag dg eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.22", "ad^-1 ag dg ci^-1 cf fi", ""},
      {"wt2.23", "ad^-1 ag dg ci^-1 cf^-1 fi^-1", ""},
      {"wt2.24", "ad^-1 ag dg he^-1 hb^-1 eb^-1", ""},
      {"wt2.25", "ad^-1 ag dg ci^-1 cf fi", "he^-1 hb^-1"},
      {"wt2.26", "ad^-1 ag dg ci^-1 cf^-1 fi^-1", "he^-1 hb^-1 eb^-1"},
      {"wt2.27", "ad^-1 ag dg he^-1 hb^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"wt2.28", "ad^-1 ag dg ci^-1 cf fi he^-1 hb^-1 eb^-1", ""},
      {"wt2.29", "ad^-1 ag dg ci^-1 cf^-1 fi^-1 he^-1 hb^-1 eb^-1", ""},
  };
  return t;
}

/// Single relations: two degree-2 corners, region curvature at most -pi/3.
inline const std::vector<RawTableItem>& table_cv1() {
  static const std::vector<RawTableItem> t = {
      {"cv1.1", "ad", ""},    {"cv1.2", "ad^-1", ""}, {"cv1.3", "dg", ""},
      {"cv1.4", "dg^-1", ""}, {"cv1.5", "ag", ""},    {"cv1.6", "ag^-1", ""},
      {"cv1.7", "he^-1", ""}, {"cv1.8", "hb^-1", ""},
  };
  return t;
}

/// Three degree-2 corners, region curvature at most 0.
inline const std::vector<RawTableItem>& table_cv2() {
  static const std::vector<RawTableItem> t = {
      {"cv2.1", "ad cf", ""},
      {"cv2.2", "ad", "cf^-1 ci ci^-1 fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"cv2.3", "ad^-1", "cf cf^-1 fi fi^-1 he^-1 hb^-1"},
      {"cv2.4", "ag", "cf cf^-1 fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"cv2.5", "ag^-1", "cf^-1 fi he^-1 eb^-1"},
      {"cv2.6", "dg", "fi fi^-1 he^-1 hb^-1 eb^-1"},
      {"cv2.7", "dg^-1", "fi^-1 hb^-1 eb^-1"},
      {"cv2.8", "ad cf eb^-1", ""},
      {"cv2.9", "ad ci hb^-1", ""},
      {"cv2.10", "ad ci^-1 eb^-1", ""},
      {"cv2.11", "ag fi he^-1", ""},
      {"cv2.12", "ag fi hb^-1", ""},
      {"cv2.13", "ag fi^-1 hb^-1", ""},
      {"cv2.14", "ag^-1 fi he^-1", ""},
      {"cv2.15", "dg fi he^-1", ""},
      {"cv2.16", "ad^-1 ag^-1 dg^-1", ""},
      {"cv2.17", "he^-1 hb^-1 eb^-1", ""},
      {"cv2.18", "ad^-1 ag^-1 dg^-1", "cf ci fi"},
      {"cv2.19", "he^-1 hb^-1 eb^-1", "ad ag dg"},
  };
  return t;
}

/// Cases settled by pairing positively curved regions with neighbors.
inline const std::vector<RawTableItem>& table_cd1() {
  static const std::vector<RawTableItem> t = {
      {"cd1.1", "ag^-1 fi eb^-1", ""},  {"cd1.2", "ad ci he^-1", ""},
      {"cd1.3", "ad^-1 fi he^-1", ""},  {"cd1.4", "ad^-1 fi^-1 he^-1", ""},
      {"cd1.5", "ag cf hb^-1", ""},     {"cd1.6", "ad ci^-1 he^-1", ""},
      {"cd1.7", "ag cf^-1 hb^-1", ""},  {"cd1.8", "ad fi", "he^-1 eb^-1"},
      {"cd1.9", "ad fi^-1 eb^-1", ""},  {"cd1.10", "ag fi eb^-1", ""},
      {"cd1.11", "ag fi^-1 eb^-1", ""},
  };
  return t;
}

inline const std::vector<RawTableItem>& table_cd2() {
  static const std::vector<RawTableItem> t = {
      {"cd2.1", "ag cf he^-1", ""},
      {"cd2.2", "ad cf^-1 he^-1", ""},
      {"cd2.3", "ad cf", "he^-1 hb^-1"},
      {"cd2.4", "ad cf^-1 hb^-1", ""},
      {"cd2.5", "ad fi hb^-1", ""},
      {"cd2.6", "ad^-1 cf", "hb^-1 he^-1"},
      {"cd2.7", "ad^-1 fi hb^-1", ""},
      {"cd2.8", "ag cf^-1 he^-1", ""},
      {"cd2.9", "ag^-1 cf^-1 he^-1", ""},
      {"cd2.10", "dg^-1 fi^-1 hb^-1", ""},
      {"cd2.11", "dg fi hb^-1", ""},
      {"cd2.12", "dg fi^-1", "eb^-1 hb^-1"},
      {"cd2.13", "ad^-1 cf^-1 he^-1", ""},
      {"cd2.14", "ad fi^-1 hb^-1", ""},
      {"cd2.15", "ad^-1 cf^-1 hb^-1", ""},
      {"cd2.16", "ad^-1 ci^-1 hb^-1", ""},
      {"cd2.17", "ad^-1 fi^-1 hb^-1", ""},
      {"cd2.18", "ag^-1 fi^-1", "he^-1 hb^-1"},
      {"cd2.19", "he^-1 hb^-1 eb^-1 ag", "cf fi"},
      {"cd2.20", "he^-1 hb^-1 eb^-1 ad", "cf ci fi"},
      {"cd2.21", "he^-1 hb^-1 eb^-1 dg fi", ""},
  };
  return t;
}

inline const std::vector<RawTableItem>& table_cd3() {
  static const std::vector<RawTableItem> t = {
      {"cd3.1", "ad cf^-1 eb^-1", ""},     {"cd3.2", "ag^-1 hb^-1", ""},
      {"cd3.3", "ag^-1 fi^-1", ""},        {"cd3.4", "ad^-1 ci^-1", ""},
      {"cd3.5", "ad^-1 eb^-1", ""},        {"cd3.6", "dg^-1 he^-1", ""},
      {"cd3.7", "ad ci^-1 hb^-1", ""},     {"cd3.8", "ad fi^-1 he^-1", ""},
      {"cd3.9", "ad^-1 cf eb^-1", ""},     {"cd3.10", "dg fi^-1 he^-1", ""},
      {"cd3.11", "ad^-1 ci^-1 he^-1", ""}, {"cd3.12", "ag cf^-1 eb^-1", ""},
      {"cd3.13", "ad^-1 fi eb^-1", ""},    {"cd3.14", "ag^-1 cf^-1 hb^-1", ""},
      {"cd3.15", "ad^-1 fi^-1 eb^-1", ""}, {"cd3.16", "ag^-1 fi^-1 eb^-1", ""},
      {"cd3.17", "ag^-1 fi hb^-1", ""},    {"cd3.18", "ad^-1 cf^-1 eb^-1", ""},
      {"cd3.19", "ag fi^-1 he^-1", ""},
  };
  return t;
}

/// The open cases: neither the weight test nor curvature distribution
/// settles them.
inline const std::vector<RawTableItem>& table_open() {
  static const std::vector<RawTableItem> t = {
      {"open.1", "dg^-1 fi^-1 he^-1", ""},
      {"open.2", "ad^-1 ag^-1 dg^-1", "cf^-1 ci^-1 fi^-1 he^-1 hb^-1 eb^-1"},
      {"open.3", "he^-1 hb^-1 eb^-1", "ad^-1 ag^-1 dg^-1"},
      {"open.4", "ad^-1 ag^-1 dg^-1 he^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"open.5", "ad^-1 ag^-1 dg^-1 hb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"open.6", "ad^-1 ag^-1 dg^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"open.7", "he^-1 hb^-1 eb^-1 ad", "cf^-1 ci^-1 fi^-1"},
      {"open.8", "he^-1 hb^-1 eb^-1 ad^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"open.9", "he^-1 hb^-1 eb^-1 ag", "cf^-1 fi^-1"},
      {"open.10", "he^-1 hb^-1 eb^-1 ag^-1", "cf^-1 fi fi^-1"},
      {"open.11", "he^-1 hb^-1 eb^-1 dg fi^-1", ""},
      {"open.12", "he^-1 hb^-1 eb^-1 dg^-1 fi^-1", ""},
      {"open.13", "ad^-1 ag^-1 dg^-1 ci^-1 cf^-1 fi^-1", ""},
      {"open.14", "ad^-1 ag^-1 dg^-1 he^-1 hb^-1 eb^-1", ""},
      {"open.15", "ad^-1 ag^-1 dg^-1 ci^-1 cf^-1 fi^-1", "he^-1 eb^-1"},
      {"open.16", "ad^-1 ag^-1 dg^-1 he^-1 hb^-1 eb^-1", "cf cf^-1 ci ci^-1 fi fi^-1"},
      {"open.17", "ad^-1 ag^-1 dg^-1 ci^-1 cf^-1 fi^-1 he^-1 hb^-1 eb^-1", ""},
  };
  return t;
}

/// A weight-test recipe: the transformed presentation and weight function
/// used to certify every case containing the core labels.
struct WeightRecipe {
  const char* id;
  const char* core;                 // label names that select this recipe
  const char* specialized_relator;  // the relator with the core applied, b = 1
  const char* r1;
  const char* r2;
  const char* substitution;         // the word defining x
  std::vector<const char*> zero_edges;
};

inline const std::vector<WeightRecipe>& weight_recipes() {
  static const std::vector<WeightRecipe> r = {
      {"wt1", "ad ag dg^-1", "a t t c t^-1 a^-1 t e t f t^-1 a^-1 t h t i t^-1",
       "x c t x^-1 e t f t x^-1 h t i", "x^-1 t^-1 a t t", "t^-1 a t t",
       {"r0.1", "r0.7", "r1.1", "r1.2"}},
      {"wt2a", "ad ag^-1 dg", "a t t c t^-1 a^-1 t e t f t^-1 a t h t i t^-1",
       "x t c x^-1 e t f x h t i", "x^-1 t^-1 a t", "t^-1 a t",
       {"r0.2", "r0.3", "r1.2", "r1.3"}},
      {"wt2b", "ad^-1 ag dg", "a t t c t^-1 a t e t f t^-1 a^-1 t h t i t^-1",
       "x t c x e t f x^-1 h t i", "x^-1 t^-1 a t", "t^-1 a t",
       {"r0.4", "r0.5", "r1.2", "r1.3"}},
  };
  return r;
}

}  // namespace asphere
