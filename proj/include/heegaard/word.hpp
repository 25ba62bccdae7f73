#pragma once
// Heegaard words in power notation and the compiler from words to
// compressed beta systems.  A word is a list of twist factors
// (generator name, exponent); factors apply left to right.  One factor
// rewrites, for each marked edge of its generator, every crossing of
// that edge as "follow the twist curve k times, then cross":
// substitute the letter l by I^k l, where I is the pushoff of the twist
// curve along its positive sides, rotated to start right after that
// edge.  Crossings of the opposite sign pick up the inverted rule
// automatically.

#include <heegaard/bigint.hpp>
#include <heegaard/curves.hpp>
#include <heegaard/errors.hpp>
#include <heegaard/marked.hpp>
#include <heegaard/slp.hpp>

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace heegaard {

struct WordFactor {
  std::string name;
  Int exp;
  bool operator==(const WordFactor& o) const { return name == o.name && exp == o.exp; }
};

struct HeegaardWord {
  std::int32_t genus = 0;
  std::vector<WordFactor> factors;  // no adjacent equal names, no zero exponents
};

struct TwistLetter {
  std::string name;
  int sign = 1;
};

inline Int total_twists(const HeegaardWord& w) {
  Int n = 0;
  for (const WordFactor& f : w.factors) n += f.exp < 0 ? -f.exp : f.exp;
  return n;
}

inline std::size_t log_weight(const HeegaardWord& w) {
  std::size_t n = 0;
  for (const WordFactor& f : w.factors) n += bit_length(f.exp);
  return n;
}

// Run-length merge into power notation; adjacent inverse factors cancel
// and the merge cascades, so the result satisfies the word invariants.
inline HeegaardWord compact_to_power_notation(std::int32_t genus,
                                              const std::vector<TwistLetter>& letters) {
  HeegaardWord w{genus, {}};
  for (const TwistLetter& l : letters) {
    require(l.sign == 1 || l.sign == -1, errc::domain, "twist letter sign must be +-1");
    if (!w.factors.empty() && w.factors.back().name == l.name) {
      w.factors.back().exp += l.sign;
      if (w.factors.back().exp == 0) w.factors.pop_back();
    } else {
      w.factors.push_back({l.name, l.sign});
    }
  }
  return w;
}

namespace detail {

inline HeegaardWord compact_factors(std::int32_t genus, const std::vector<WordFactor>& in) {
  HeegaardWord w{genus, {}};
  for (const WordFactor& f : in) {
    if (f.exp == 0) continue;
    if (!w.factors.empty() && w.factors.back().name == f.name) {
      w.factors.back().exp += f.exp;
      if (w.factors.back().exp == 0) w.factors.pop_back();
    } else {
      w.factors.push_back(f);
    }
  }
  return w;
}

}  // namespace detail

// Whitespace-separated `name^exp` tokens, exponent defaulting to 1; the
// leftmost token is the twist applied first.
inline HeegaardWord parse_word(const std::string& text, const MarkedSurface& ms) {
  std::vector<WordFactor> factors;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string token = text.substr(i, j - i);
    i = j;
    std::size_t caret = token.find('^');
    std::string name = token.substr(0, caret == std::string::npos ? token.size() : caret);
    ms.generator(name);  // throws on unknown names
    Int exp = 1;
    if (caret != std::string::npos) {
      exp = from_dec(token.substr(caret + 1));
      require(exp != 0, errc::domain, "zero exponent in token '" + token + "'");
    }
    factors.push_back({std::move(name), std::move(exp)});
  }
  return detail::compact_factors(ms.genus, factors);
}

inline std::string format_word(const HeegaardWord& w) {
  std::string out;
  for (const WordFactor& f : w.factors) {
    if (!out.empty()) out += ' ';
    out += f.name;
    if (f.exp != 1) out += "^" + to_dec(f.exp);
  }
  return out;
}

namespace detail {

// Winding word inserted before a crossing with arc j of the twist curve: the
// pushoff of the curve along its positive sides, rotated to start right after
// arc j.  A strand crossing side +l approaches on the +l flank, so the wind
// must hug that flank; rounding each vertex clockwise from the previous arc's
// arrival dart traces exactly the +side corridor.  The corner relation makes
// every consecutive pair of the block share a face, so insertion preserves
// realizability at every junction.
inline Word winding_word(const MarkedSurface& ms, const Generator& s, std::size_t j) {
  const CellularSurface& surf = ms.surface;
  Word w;
  for (std::size_t t = 1; t <= s.edges.size(); ++t) {
    std::size_t i = (j + t) % s.edges.size();
    Letter prev = s.edges[(i + s.edges.size() - 1) % s.edges.size()];
    Word block = surf.sweep_letters(side_arrive_dart(prev), side_start_dart(s.edges[i]), false);
    w.insert(w.end(), block.begin(), block.end());
  }
  return w;
}

}  // namespace detail

inline SequenceMulticurve apply_single_twist(const std::string& name, const Int& k,
                                             const SequenceMulticurve& beta,
                                             const MarkedSurface& ms) {
  if (k == 0) return beta;
  const Generator& s = ms.generator(name);
  std::map<Letter, Slp> rules;
  for (std::size_t j = 0; j < s.edges.size(); ++j) {
    Slp loop = slp_power(slp_trivial(detail::winding_word(ms, s, j)), k);
    rules[s.edges[j]] = slp_concat({std::move(loop), slp_trivial({s.edges[j]})});
  }
  SequenceMulticurve out;
  for (const Slp& comp : beta.components)
    out.components.push_back(slp_substitute(comp, rules));
  return out;
}

inline SequenceMulticurve apply_word(const HeegaardWord& w, const MarkedSurface& ms) {
  require(w.genus == ms.genus, errc::domain, "word genus differs from surface genus");
  SequenceMulticurve beta = edged_to_sequences(ms.surface, ms.alpha);
  for (const WordFactor& f : w.factors)
    beta = apply_single_twist(f.name, f.exp, beta, ms);
  return beta;
}

// Guarded expand-and-reduce pass for consumers that need normal form.
inline SequenceMulticurve cyclically_reduce_sequences(const SequenceMulticurve& m,
                                                      std::uint64_t guard) {
  SequenceMulticurve out;
  for (const Slp& comp : m.components)
    out.components.push_back(slp_trivial(cyclic_reduce(slp_expand(comp, guard))));
  return out;
}

}  // namespace heegaard
