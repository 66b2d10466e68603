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
// Deterministic JSON views of the core value types.  All exact numbers are
// rendered as strings (rationals in lowest terms, "a/b" or "a"); iteration
// follows the canonical graded-lex word order, so output is byte-identical
// across runs for identical inputs.

#ifndef MZKIT_IO_JSON_HPP
#define MZKIT_IO_JSON_HPP

#include <string>

#include <json.hpp>

#include "mzkit/ncpoly.hpp"
#include "mzkit/ratexpr.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

using ordered_json = nlohmann::ordered_json;

inline std::string alphabet_str(Alphabet a) {
  switch (a) {
    case Alphabet::X: return "X";
    case Alphabet::Y: return "Y";
    default: return "Y0";
  }
}

inline std::string letter_str(Alphabet a, int letter) {
  return (a == Alphabet::X ? "x" : "y") + std::to_string(letter);
}

namespace detail {
inline std::string coeff_str(const Rat& c) { return rat_str(c); }
inline std::string coeff_str(const Int& c) { return c.str(); }
}  // namespace detail

template <class C>
ordered_json ncpoly_json(const NCPoly<C>& p) {
  ordered_json out;
  out["alphabet"] = alphabet_str(p.alph);
  out["terms"] = ordered_json::array();
  for (const auto& [w, c] : p.terms) {
    ordered_json term;
    term["word"] = w.str();
    term["coeff"] = detail::coeff_str(c);
    out["terms"].push_back(std::move(term));
  }
  return out;
}

// Star expressions are normalized first, so equal expressions serialize
// identically.
inline ordered_json ratexpr_json(const RatExpr& e) {
  const RatExpr n = star_shuffle_normalize(e);
  ordered_json out;
  out["alphabet"] = alphabet_str(n.alph);
  out["terms"] = ordered_json::array();
  for (const RatTerm& t : n.terms) {
    ordered_json term;
    term["coeff"] = rat_str(t.coeff);
    term["stars"] = ordered_json::array();
    for (const StarAtom& s : t.stars) {
      ordered_json atom;
      atom["letter"] = letter_str(n.alph, s.letter);
      atom["c"] = rat_str(s.c);
      if (s.power != 1) atom["power"] = s.power;
      term["stars"].push_back(std::move(atom));
    }
    term["word"] = t.word.str();
    out["terms"].push_back(std::move(term));
  }
  return out;
}

// Ascending coefficient list ["p_0", "p_1", ...] (empty for the zero
// polynomial).
inline ordered_json onevar_json(const OneVarPoly& p) {
  ordered_json out = ordered_json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(rat_str(p.at(k)));
  return out;
}

}  // namespace mzkit

#endif  // MZKIT_IO_JSON_HPP
