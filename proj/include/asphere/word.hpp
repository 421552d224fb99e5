#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace asphere {

/// A group symbol with a sign: "a" or "a^-1". Used both for coefficient
/// symbols (elements of the abstract group G) and, inside MixedWord tokens,
/// for stable letters.
struct SignedSym {
  std::string name;
  int sign = +1;  // +1 or -1

  SignedSym inverse() const { return {name, -sign}; }
  friend bool operator==(const SignedSym&, const SignedSym&) = default;
  friend std::strong_ordering operator<=>(const SignedSym& a, const SignedSym& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.sign <=> b.sign;  // container ordering; canonical order is sym_less
  }
  std::string str() const { return sign > 0 ? name : name + "^-1"; }
};

// Order positive before negative for canonical forms.
inline bool sym_less(const SignedSym& a, const SignedSym& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.sign > b.sign;
}

/// A freely reduced (or not yet reduced) word in the coefficient symbols.
struct CoeffWord {
  std::vector<SignedSym> syms;

  bool empty() const { return syms.empty(); }
  size_t size() const { return syms.size(); }

  CoeffWord inverse() const {
    CoeffWord r;
    for (auto it = syms.rbegin(); it != syms.rend(); ++it) r.syms.push_back(it->inverse());
    return r;
  }

  /// Free reduction: cancel adjacent s s^-1 pairs until none remain.
  CoeffWord reduced() const {
    CoeffWord r;
    for (const auto& s : syms) {
      if (!r.syms.empty() && r.syms.back().name == s.name && r.syms.back().sign == -s.sign)
        r.syms.pop_back();
      else
        r.syms.push_back(s);
    }
    return r;
  }

  CoeffWord operator*(const CoeffWord& o) const {
    CoeffWord r = *this;
    r.syms.insert(r.syms.end(), o.syms.begin(), o.syms.end());
    return r.reduced();
  }

  std::string str() const {
    std::string out;
    for (const auto& s : syms) {
      if (!out.empty()) out += ' ';
      out += s.str();
    }
    return out;
  }

  friend bool operator==(const CoeffWord&, const CoeffWord&) = default;
  friend bool operator<(const CoeffWord& a, const CoeffWord& b) {
    return std::lexicographical_compare(a.syms.begin(), a.syms.end(), b.syms.begin(),
                                        b.syms.end(), sym_less);
  }
};

/// One token of a mixed word: either a coefficient symbol or a stable letter.
struct Token {
  bool stable = false;
  std::string name;
  int sign = +1;

  Token inverse() const { return {stable, name, -sign}; }
  friend bool operator==(const Token&, const Token&) = default;
  std::string str() const { return sign > 0 ? name : name + "^-1"; }
};

inline bool token_less(const Token& a, const Token& b) {
  if (a.name != b.name) return a.name < b.name;
  if (a.sign != b.sign) return a.sign > b.sign;
  return a.stable < b.stable;
}

/// A word in the free product G * F(stable letters), stored as a flat token
/// sequence. The cyclic flag marks relators; reduction canonicalizes the
/// rotation of cyclic words so equality is structural.
struct MixedWord {
  std::vector<Token> toks;
  bool cyclic = false;

  bool empty() const { return toks.empty(); }
  size_t size() const { return toks.size(); }

  MixedWord as_cyclic() const {
    MixedWord w = *this;
    w.cyclic = true;
    return w;
  }
  MixedWord as_linear() const {
    MixedWord w = *this;
    w.cyclic = false;
    return w;
  }

  MixedWord inverse() const {
    MixedWord r;
    r.cyclic = cyclic;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it) r.toks.push_back(it->inverse());
    return r;
  }

  std::string str() const {
    std::string out;
    for (const auto& t : toks) {
      if (!out.empty()) out += ' ';
      out += t.str();
    }
    return out;
  }

  friend bool operator==(const MixedWord&, const MixedWord&) = default;
  friend bool operator<(const MixedWord& a, const MixedWord& b) {
    if (a.cyclic != b.cyclic) return a.cyclic < b.cyclic;
    return std::lexicographical_compare(a.toks.begin(), a.toks.end(), b.toks.begin(),
                                        b.toks.end(), token_less);
  }
};

struct ParseError : std::runtime_error {
  size_t position;  // 1-based character offset
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {
inline const std::vector<std::string>& default_coeff_alphabet() {
  static const std::vector<std::string> a = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  return a;
}
}  // namespace detail

/// Parses relator syntax: whitespace-separated tokens, each `name` or
/// `name^-1`. Declared stable letters (default {t}) are stable; names in the
/// coefficient alphabet (default a..i) are coefficients; anything else is an
/// undeclared-symbol error. Does not reduce; round-trips through str().
inline MixedWord parse_word(const std::string& text,
                            const std::vector<std::string>& stable_letters = {"t"},
                            const std::vector<std::string>& coeff_alphabet =
                                detail::default_coeff_alphabet()) {
  MixedWord w;
  size_t i = 0;
  auto is_name_char = [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    size_t start = i;
    if (!(text[i] >= 'a' && text[i] <= 'z'))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", start + 1);
    std::string name;
    while (i < text.size() && is_name_char(text[i])) name += text[i++];
    int sign = +1;
    if (i < text.size() && text[i] == '^') {
      if (text.compare(i, 3, "^-1") != 0)
        throw ParseError("expected '^-1'", i + 1);
      sign = -1;
      i += 3;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed token", i + 1);
    bool stable = std::find(stable_letters.begin(), stable_letters.end(), name) != stable_letters.end();
    if (!stable &&
        std::find(coeff_alphabet.begin(), coeff_alphabet.end(), name) == coeff_alphabet.end())
      throw ParseError("undeclared symbol '" + name + "'", start + 1);
    w.toks.push_back({stable, name, sign});
  }
  return w;
}

/// Number of stable-letter occurrences: the equation length sum |e_1|+...+|e_n|.
inline int equation_length(const MixedWord& w) {
  int n = 0;
  for (const auto& t : w.toks) n += t.stable ? 1 : 0;
  return n;
}

/// True iff the stable-letter exponent sum is zero.
inline bool is_singular(const MixedWord& w) {
  int s = 0;
  for (const auto& t : w.toks) s += t.stable ? t.sign : 0;
  return s == 0;
}

namespace detail {

inline MixedWord reduce_linear(const MixedWord& w) {
  MixedWord r;
  r.cyclic = false;
  for (const auto& t : w.toks) {
    r.toks.push_back(t);
    // cancel trailing s s^-1 pairs as they form
    while (r.toks.size() >= 2) {
      const Token& a = r.toks[r.toks.size() - 2];
      const Token& b = r.toks.back();
      if (a.stable == b.stable && a.name == b.name && a.sign == -b.sign) {
        r.toks.pop_back();
        r.toks.pop_back();
      } else {
        break;
      }
    }
  }
  return r;
}

inline MixedWord rotate(const MixedWord& w, size_t k) {
  MixedWord r;
  r.cyclic = w.cyclic;
  size_t n = w.toks.size();
  for (size_t i = 0; i < n; ++i) r.toks.push_back(w.toks[(k + i) % n]);
  return r;
}

inline MixedWord canonical_rotation(const MixedWord& w) {
  if (w.toks.empty()) return w;
  MixedWord best = w;
  for (size_t k = 1; k < w.toks.size(); ++k) {
    MixedWord c = rotate(w, k);
    if (std::lexicographical_compare(c.toks.begin(), c.toks.end(), best.toks.begin(),
                                     best.toks.end(), token_less))
      best = c;
  }
  return best;
}

// Cyclic reduction that keeps the input spelling's starting point.
inline MixedWord reduce_cyclic_no_rotate(const MixedWord& w) {
  MixedWord r = reduce_linear(w);
  r.cyclic = true;
  while (r.toks.size() >= 2) {
    const Token& a = r.toks.front();
    const Token& b = r.toks.back();
    if (a.stable == b.stable && a.name == b.name && a.sign == -b.sign) {
      r.toks.erase(r.toks.begin());
      r.toks.pop_back();
      r = reduce_linear(r);
      r.cyclic = true;
    } else {
      break;
    }
  }
  return r;
}

}  // namespace detail

class CoefficientTheory;  // theory.hpp
MixedWord free_reduce(const MixedWord& w, const CoefficientTheory& th);

/// Free reduction with no coefficient theory: cancel adjacent inverse pairs,
/// cyclically for cyclic words, and put cyclic words in canonical rotation
/// (lexicographically least token sequence).
inline MixedWord free_reduce(const MixedWord& w) {
  if (!w.cyclic) return detail::reduce_linear(w);
  return detail::canonical_rotation(detail::reduce_cyclic_no_rotate(w));
}

/// All rotations of w and of its inverse, as linear words. This is the
/// equality-up-to-cyclic-permutation-and-inversion test set.
inline std::set<MixedWord> cyclic_forms(const MixedWord& w) {
  std::set<MixedWord> out;
  MixedWord base = free_reduce(w.as_cyclic()).as_linear();
  MixedWord inv = free_reduce(w.inverse().as_cyclic()).as_linear();
  size_t n = base.toks.size();
  if (n == 0) {
    out.insert(base);
    return out;
  }
  for (size_t k = 0; k < n; ++k) {
    out.insert(detail::rotate(base, k));
    out.insert(detail::rotate(inv, k));
  }
  return out;
}

/// True iff a and b are equal as cyclic words up to rotation and inversion.
inline bool cyclically_equal(const MixedWord& a, const MixedWord& b) {
  MixedWord ca = free_reduce(a.as_cyclic());
  MixedWord cb = free_reduce(b.as_cyclic());
  if (ca == cb) return true;
  return free_reduce(a.inverse().as_cyclic()) == cb;
}

/// Replaces every occurrence of the stable letter `letter`^±1 by
/// replacement^±1 and freely reduces. Empty replacements are rejected: they
/// would erase a stable letter.
inline MixedWord apply_substitution(const MixedWord& w, const std::string& letter,
                                    const MixedWord& replacement) {
  if (replacement.empty()) throw std::invalid_argument("empty replacement word");
  MixedWord repl_inv = replacement.inverse();
  MixedWord out;
  out.cyclic = w.cyclic;
  for (const auto& t : w.toks) {
    if (t.stable && t.name == letter) {
      const MixedWord& r = t.sign > 0 ? replacement : repl_inv;
      out.toks.insert(out.toks.end(), r.toks.begin(), r.toks.end());
    } else {
      out.toks.push_back(t);
    }
  }
  return free_reduce(out);
}

/// r2 must contain exactly one occurrence of `letter` (either sign): it
/// defines the letter. Returns r1 with the letter eliminated, reduced.
inline MixedWord eliminate_variable(const MixedWord& r1, const MixedWord& r2,
                                    const std::string& letter) {
  int count = 0;
  size_t pos = 0;
  for (size_t i = 0; i < r2.toks.size(); ++i)
    if (r2.toks[i].stable && r2.toks[i].name == letter) { ++count; pos = i; }
  if (count != 1)
    throw std::invalid_argument("defining relator must contain exactly one occurrence of '" +
                                letter + "', found " + std::to_string(count));
  // Rotate r2 so it reads letter^s * u = 1, then letter = (u^-1)^s.
  MixedWord rot = detail::rotate(r2.as_linear(), pos);
  int s = rot.toks.front().sign;
  MixedWord u;
  u.toks.assign(rot.toks.begin() + 1, rot.toks.end());
  MixedWord defn = u.inverse();
  if (s < 0) defn = defn.inverse();  // letter^-1 * u = 1  =>  letter = u
  return apply_substitution(r1, letter, defn);
}

// ---- JSON serialization -------------------------------------------------

inline nlohmann::json to_json(const MixedWord& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : w.toks)
    arr.push_back({{"kind", t.stable ? "stable" : "coeff"}, {"name", t.name}, {"sign", t.sign}});
  return arr;
}

inline MixedWord word_from_json(const nlohmann::json& arr) {
  MixedWord w;
  for (const auto& j : arr)
    w.toks.push_back({j.at("kind").get<std::string>() == "stable", j.at("name").get<std::string>(),
                      j.at("sign").get<int>()});
  return w;
}

}  // namespace asphere
