/* Copyright 2026 The mzkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
//
// Words over the two working alphabets.
//
//   X  = {x0, x1},      ordered x0 < x1.
//   Y0 = {y0, y1, ...}, ordered y0 > y1 > y2 > ...  (smaller subscript wins).
//   Y  = Y0 without y0.
//
// A multi-index (s1,...,sr) with all si >= 1 corresponds to the X-word
// x0^{s1-1} x1 ... x0^{sr-1} x1 and to the Y-word y_{s1}...y_{sr}.  Weight of
// a Y/Y0 word is the subscript sum; on X the natural grading is the length.

#ifndef MZKIT_WORDS_HPP
#define MZKIT_WORDS_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mzkit/common.hpp"

namespace mzkit {

enum class Alphabet { X, Y, Y0 };

inline std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::X: return "X";
    case Alphabet::Y: return "Y";
    default: return "Y0";
  }
}

struct Word {
  Alphabet alph = Alphabet::X;
  // For X the entries are 0/1 (the letter subscripts); for Y/Y0 the entries
  // are the letter subscripts s (s >= 1 on Y, s >= 0 on Y0).
  std::vector<int> letters;

  Word() = default;
  Word(Alphabet a, std::vector<int> ls) : alph(a), letters(std::move(ls)) { validate(); }

  void validate() const {
    for (int s : letters) {
      bool ok = (alph == Alphabet::X)   ? (s == 0 || s == 1)
                : (alph == Alphabet::Y) ? (s >= 1)
                                        : (s >= 0);
      if (!ok) throw domain_error("letter subscript out of range for alphabet " + alphabet_name(alph));
    }
  }

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  // Subscript sum; on X this coincides with the number of x1's, so callers
  // wanting the grading should use grade().
  int subscript_sum() const {
    int s = 0;
    for (int v : letters) s += v;
    return s;
  }

  // The grading used for truncation and for graded-lex iteration order:
  // length on X, weight on Y, weight+length on Y0 (y0 alone has weight 0,
  // so weight+length is the grading that keeps graded pieces finite).
  int grade() const {
    switch (alph) {
      case Alphabet::X: return length();
      case Alphabet::Y: return subscript_sum();
      default: return subscript_sum() + length();
    }
  }

  // Weight in the multi-index sense: length on X, subscript sum on Y/Y0.
  int weight() const { return alph == Alphabet::X ? length() : subscript_sum(); }

  bool operator==(const Word& o) const { return alph == o.alph && letters == o.letters; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  Word concat(const Word& o) const {
    if (alph != o.alph) throw domain_error("concat across alphabets");
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }

  Word subword(int from, int len) const {
    Word r;
    r.alph = alph;
    r.letters.assign(letters.begin() + from, letters.begin() + from + len);
    return r;
  }

  std::string str() const {
    if (letters.empty()) return "1";
    std::string s;
    if (alph == Alphabet::X) {
      for (int v : letters) s += (v == 0 ? "x0" : "x1");
    } else {
      for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += 'y';
        s += std::to_string(letters[i]);
      }
    }
    return s;
  }
};

// Letter comparison under the declared alphabet order.
inline bool letter_less(Alphabet a, int p, int q) {
  if (a == Alphabet::X) return p < q;   // x0 < x1
  return p > q;                         // y_i < y_j iff i > j
}

// Plain lexicographic order (a proper prefix is smaller).
inline bool lex_less(const Word& u, const Word& v) {
  const size_t n = std::min(u.letters.size(), v.letters.size());
  for (size_t i = 0; i < n; ++i) {
    if (u.letters[i] != v.letters[i]) return letter_less(u.alph, u.letters[i], v.letters[i]);
  }
  return u.letters.size() < v.letters.size();
}

// Graded-lex order: by grade, then lexicographic.  This is the canonical
// deterministic iteration order used everywhere (maps, serialization).
inline bool graded_lex_less(const Word& u, const Word& v) {
  const int gu = u.grade(), gv = v.grade();
  if (gu != gv) return gu < gv;
  return lex_less(u, v);
}

struct WordLess {
  bool operator()(const Word& u, const Word& v) const { return graded_lex_less(u, v); }
};

// ---------------------------------------------------------------------------
// Parsing and multi-index encodings
// ---------------------------------------------------------------------------

// Accepts "x0x1x1", "y2,y1", or "1" (empty word).  The alphabet is inferred;
// an explicit expectation can be passed to cross-check.
inline Word parse_word(const std::string& text, std::optional<Alphabet> expect = std::nullopt) {
  Word w;
  if (text == "1") {
    w.alph = expect.value_or(Alphabet::X);
    return w;
  }
  if (text.empty()) throw domain_error("empty word text (use \"1\" for the empty word)");
  if (text[0] == 'x') {
    w.alph = Alphabet::X;
    size_t i = 0;
    while (i < text.size()) {
      if (text[i] != 'x' || i + 1 >= text.size() || (text[i + 1] != '0' && text[i + 1] != '1'))
        throw domain_error("bad X-word syntax: " + text);
      w.letters.push_back(text[i + 1] - '0');
      i += 2;
    }
  } else if (text[0] == 'y') {
    bool has_zero = false;
    size_t i = 0;
    while (i < text.size()) {
      if (text[i] != 'y') throw domain_error("bad Y-word syntax: " + text);
      ++i;
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw domain_error("bad Y-word syntax: " + text);
      int s = std::stoi(text.substr(i, j - i));
      if (s == 0) has_zero = true;
      w.letters.push_back(s);
      i = j;
      if (i < text.size()) {
        if (text[i] != ',') throw domain_error("bad Y-word syntax: " + text);
        ++i;
        if (i == text.size()) throw domain_error("bad Y-word syntax: " + text);
      }
    }
    w.alph = has_zero ? Alphabet::Y0 : Alphabet::Y;
  } else {
    throw domain_error("unrecognized word syntax: " + text);
  }
  if (expect) {
    if (*expect == Alphabet::Y0 && w.alph == Alphabet::Y) w.alph = Alphabet::Y0;
    else if (*expect != w.alph) throw domain_error("word " + text + " is not over alphabet " + alphabet_name(*expect));
  }
  w.validate();
  return w;
}

// (s1,...,sr), all si >= 1  ->  x0^{s1-1} x1 ... x0^{sr-1} x1.
inline Word encode_x(const std::vector<int>& s) {
  Word w;
  w.alph = Alphabet::X;
  for (int si : s) {
    if (si < 1) throw domain_error("encode_x needs entries >= 1");
    for (int i = 0; i < si - 1; ++i) w.letters.push_back(0);
    w.letters.push_back(1);
  }
  return w;
}

// (s1,...,sr) -> y_{s1}...y_{sr}; lands in Y when all entries are positive,
// in Y0 as soon as a zero appears.
inline Word encode_y(const std::vector<int>& s) {
  Word w;
  w.alph = Alphabet::Y;
  for (int si : s) {
    if (si < 0) throw domain_error("encode_y needs entries >= 0");
    if (si == 0) w.alph = Alphabet::Y0;
    w.letters.push_back(si);
  }
  return w;
}

// Inverse of encode_x.  Defined on X* x1 and the empty word only.
inline std::vector<int> decode_x(const Word& w) {
  if (w.alph != Alphabet::X) throw domain_error("decode_x expects an X-word");
  if (!w.empty() && w.letters.back() != 1)
    throw domain_error("word " + w.str() + " ends in x0 and is not y-encodable");
  std::vector<int> s;
  int run = 0;
  for (int v : w.letters) {
    if (v == 0) ++run;
    else { s.push_back(run + 1); run = 0; }
  }
  return s;
}

inline Word as_y0(const Word& w) {
  if (w.alph == Alphabet::X) throw domain_error("as_y0 expects a Y/Y0 word");
  Word r = w;
  r.alph = Alphabet::Y0;
  return r;
}

inline Word as_y(const Word& w) {
  if (w.alph == Alphabet::X) throw domain_error("as_y expects a Y/Y0 word");
  for (int s : w.letters)
    if (s == 0) throw domain_error("word " + w.str() + " contains y0 and is not a Y-word");
  Word r = w;
  r.alph = Alphabet::Y;
  return r;
}

// Word-level projection X* -> Y* : kills words ending in x0, maps
// x0^{s1-1}x1...x0^{sr-1}x1 to y_{s1}...y_{sr}.  The empty word survives.
inline std::optional<Word> pi_y_word(const Word& w) {
  if (w.alph != Alphabet::X) throw domain_error("pi_y expects an X-word");
  if (!w.empty() && w.letters.back() != 1) return std::nullopt;
  return encode_y(decode_x(w));
}

// Section Y* -> X* (left inverse of the projection above).
inline Word pi_x_word(const Word& w) {
  if (w.alph == Alphabet::X) throw domain_error("pi_x expects a Y-word");
  std::vector<int> s = w.letters;
  for (int v : s)
    if (v < 1) throw domain_error("pi_x needs subscripts >= 1");
  return encode_x(s);
}

// ---------------------------------------------------------------------------
// Word enumeration
// ---------------------------------------------------------------------------

// All nonempty words with grade() <= maxgrade, in graded-lex order.
inline std::vector<Word> words_up_to(Alphabet a, int maxgrade) {
  std::vector<Word> out;
  if (a == Alphabet::X) {
    for (int n = 1; n <= maxgrade; ++n) {
      std::vector<int> cur(n, 0);
      while (true) {
        out.emplace_back(a, cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == 1) cur[i--] = 0;
        if (i < 0) break;
        cur[i] = 1;
      }
    }
    return out;
  }
  // Y: compositions of w for w = 1..maxgrade.  Y0: letter y_s costs s+1
  // toward the grade, i.e. compositions of g with part p standing for y_{p-1}.
  std::vector<Word> block;
  for (int g = 1; g <= maxgrade; ++g) {
    block.clear();
    std::vector<int> parts;
    // enumerate compositions of g recursively
    const std::function<void(int)> rec = [&](int rem) {
      if (rem == 0) {
        std::vector<int> ls;
        ls.reserve(parts.size());
        for (int p : parts) ls.push_back(a == Alphabet::Y ? p : p - 1);
        block.emplace_back(a, std::move(ls));
        return;
      }
      for (int p = 1; p <= rem; ++p) {
        parts.push_back(p);
        rec(rem - p);
        parts.pop_back();
      }
    };
    rec(g);
    std::sort(block.begin(), block.end(), [](const Word& u, const Word& v) { return lex_less(u, v); });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lyndon words
// ---------------------------------------------------------------------------

// A word is Lyndon iff nonempty and strictly smaller than each of its proper
// suffixes (under the alphabet's lexicographic order).
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (int i = 1; i < w.length(); ++i) {
    const Word suf = w.subword(i, w.length() - i);
    if (!lex_less(w, suf)) return false;
  }
  return true;
}

// All Lyndon words with grade() <= maxgrade, in increasing lex order, via
// Duval's generator (ranks run over the alphabet in increasing order; on Y
// the rank r stands for the letter y_{maxgrade - r}).  Y0 is not supported:
// no construction here needs Lyndon words over Y0.
inline std::vector<Word> lyndon_words(Alphabet a, int maxgrade) {
  if (a == Alphabet::Y0) throw domain_error("lyndon_words: Y0 is not supported");
  if (maxgrade <= 0) return {};
  const int k = (a == Alphabet::X) ? 2 : maxgrade;  // alphabet size in play
  const int n = maxgrade;                            // max length
  const auto rank_to_letter = [&](int r) { return a == Alphabet::X ? r : maxgrade - r; };

  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    {
      std::vector<int> ls;
      ls.reserve(w.size());
      for (int r : w) ls.push_back(rank_to_letter(r));
      Word cand(a, std::move(ls));
      if (cand.grade() <= maxgrade) out.push_back(std::move(cand));
    }
    const int m = static_cast<int>(w.size());
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  // Duval emits in lex order over full length-bounded sets; the grade filter
  // preserves relative order, so `out` is already sorted lexicographically.
  return out;
}

// Right standard factorization of a Lyndon word of length >= 2: l = u v where
// v is the lexicographically smallest (equivalently, the longest Lyndon)
// proper suffix.  Both halves are Lyndon and u < l < v.
inline std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.length() < 2) throw domain_error("standard_factorization needs length >= 2");
  if (!is_lyndon(l)) throw domain_error("standard_factorization: " + l.str() + " is not Lyndon");
  int best = 1;
  for (int i = 2; i < l.length(); ++i) {
    const Word s = l.subword(i, l.length() - i);
    if (lex_less(s, l.subword(best, l.length() - best))) best = i;
  }
  return {l.subword(0, best), l.subword(best, l.length() - best)};
}

// Unique non-increasing Lyndon factorization w = l1 l2 ... lm (l1 >= l2 >= ...),
// computed with Duval's linear-time algorithm.
inline std::vector<Word> lyndon_factorization(const Word& w) {
  std::vector<Word> out;
  const auto& s = w.letters;
  int i = 0, n = w.length();
  while (i < n) {
    int j = i + 1, k = i;
    while (j < n && !letter_less(w.alph, s[j], s[k])) {
      if (letter_less(w.alph, s[k], s[j])) k = i; else ++k;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

}  // namespace mzkit

#endif  // MZKIT_WORDS_HPP
