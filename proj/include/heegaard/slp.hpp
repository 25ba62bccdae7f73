#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "heegaard/bigint.hpp"
#include "heegaard/errors.hpp"

namespace heegaard {

// A letter is a signed edge reference: +(id+1) for the edge traversed
// forward, -(id+1) for the reverse.  Zero is not a letter.
using Letter = std::int32_t;

inline Letter letter_of_edge(int edge, int sign) {
  return sign >= 0 ? Letter(edge + 1) : Letter(-(edge + 1));
}
inline int edge_of_letter(Letter l) { return int(l < 0 ? -l : l) - 1; }
inline int sign_of_letter(Letter l) { return l < 0 ? -1 : 1; }

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& l : r) l = -l;
  return r;
}

// Removes adjacent inverse pairs until none remain.
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// Free reduction plus cancellation across the cyclic seam.
inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

inline Word rotate_word(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word r(w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

// One assignment of a straight line program.  A simple assignment holds a
// single letter; a proper assignment concatenates signed references to
// earlier assignments (1-based, negative means inverted).
struct SlpAssignment {
  Letter sym = 0;
  std::vector<std::int32_t> refs;
  bool simple() const { return sym != 0; }
};

// Straight line program with a designated root assignment.  Immutable value
// type: every operation returns a new program.  The empty word is a proper
// assignment with no references.
class Slp {
 public:
  Slp() {
    asg_.push_back(SlpAssignment{});
    root_ = 1;
  }

  Slp(std::vector<SlpAssignment> asg, std::int32_t root)
      : asg_(std::move(asg)), root_(root) {
    validate();
  }

  const std::vector<SlpAssignment>& assignments() const { return asg_; }
  std::int32_t root() const { return root_; }
  std::size_t var_count() const { return asg_.size(); }

  // Total size of all right hand sides.
  std::size_t complexity() const {
    std::size_t m = 0;
    for (const auto& a : asg_) m += a.simple() ? 1 : a.refs.size();
    return m;
  }

  std::vector<Int> lengths() const {
    std::vector<Int> len(asg_.size());
    for (std::size_t i = 0; i < asg_.size(); ++i) {
      if (asg_[i].simple()) {
        len[i] = 1;
      } else {
        Int s = 0;
        for (auto r : asg_[i].refs) s += len[std::size_t(std::abs(r)) - 1];
        len[i] = s;
      }
    }
    return len;
  }

 private:
  void validate() const {
    require(!asg_.empty(), errc::domain, "slp has no assignments");
    for (std::size_t i = 0; i < asg_.size(); ++i) {
      const auto& a = asg_[i];
      if (a.simple()) {
        require(a.refs.empty(), errc::domain, "slp assignment is both simple and proper");
      } else {
        for (auto r : a.refs)
          require(r != 0 && std::size_t(std::abs(r)) <= i, errc::domain,
                  "slp reference is not to an earlier assignment");
      }
    }
    require(root_ >= 1 && std::size_t(root_) <= asg_.size(), errc::domain,
            "slp root out of range");
  }

  std::vector<SlpAssignment> asg_;
  std::int32_t root_ = 1;
};

inline Int slp_length(const Slp& s) {
  return s.lengths()[std::size_t(s.root()) - 1];
}

// Program whose expansion is exactly `w`.
inline Slp slp_trivial(const Word& w) {
  std::vector<SlpAssignment> asg;
  if (w.empty()) {
    asg.push_back(SlpAssignment{});
    return Slp(std::move(asg), 1);
  }
  SlpAssignment top;
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w[i] != 0, errc::domain, "zero letter in word");
    asg.push_back(SlpAssignment{w[i], {}});
    top.refs.push_back(std::int32_t(i + 1));
  }
  if (w.size() == 1) return Slp(std::move(asg), 1);
  asg.push_back(std::move(top));
  return Slp(std::move(asg), std::int32_t(asg.size()));
}

// Inversion reuses the whole program and negates the root reference.
inline Slp slp_inverse(const Slp& s) {
  auto asg = s.assignments();
  asg.push_back(SlpAssignment{0, {std::int32_t(-s.root())}});
  return Slp(std::move(asg), std::int32_t(asg.size()));
}

inline Slp slp_concat(const std::vector<Slp>& parts) {
  std::vector<SlpAssignment> asg;
  SlpAssignment top;
  for (const auto& p : parts) {
    std::int32_t base = std::int32_t(asg.size());
    for (const auto& a : p.assignments()) {
      SlpAssignment b = a;
      for (auto& r : b.refs) r += r > 0 ? base : -base;
      asg.push_back(std::move(b));
    }
    top.refs.push_back(base + p.root());
  }
  if (asg.empty()) return Slp();
  asg.push_back(std::move(top));
  return Slp(std::move(asg), std::int32_t(asg.size()));
}

// k-th power via binary doubling; negative k is the power of the inverse.
inline Slp slp_power(const Slp& s, const Int& k) {
  if (k == 0) return Slp();
  if (k < 0) return slp_power(slp_inverse(s), -k);
  auto asg = s.assignments();
  std::int32_t square = s.root();
  SlpAssignment top;
  Int rest = k;
  while (true) {
    if ((rest & 1) != 0) top.refs.push_back(square);
    rest >>= 1;
    if (rest == 0) break;
    asg.push_back(SlpAssignment{0, {square, square}});
    square = std::int32_t(asg.size());
  }
  if (top.refs.size() == 1 && top.refs[0] == square && asg.size() == s.assignments().size())
    return s;
  asg.push_back(std::move(top));
  return Slp(std::move(asg), std::int32_t(asg.size()));
}

// Signed occurrence counts of every edge in one pass over the program.
// Entry e of the result is {count of +(e+1), count of -(e+1)}.
inline std::vector<std::pair<Int, Int>> slp_count_all(const Slp& s, std::size_t edge_count) {
  const auto& asg = s.assignments();
  // per assignment, per edge: forward and backward counts
  std::vector<std::vector<std::pair<Int, Int>>> cnt(asg.size());
  for (std::size_t i = 0; i < asg.size(); ++i) {
    cnt[i].assign(edge_count, {0, 0});
    if (asg[i].simple()) {
      int e = edge_of_letter(asg[i].sym);
      require(std::size_t(e) < edge_count, errc::domain, "letter outside edge alphabet");
      if (asg[i].sym > 0)
        cnt[i][std::size_t(e)].first = 1;
      else
        cnt[i][std::size_t(e)].second = 1;
    } else {
      for (auto r : asg[i].refs) {
        const auto& child = cnt[std::size_t(std::abs(r)) - 1];
        for (std::size_t e = 0; e < edge_count; ++e) {
          if (r > 0) {
            cnt[i][e].first += child[e].first;
            cnt[i][e].second += child[e].second;
          } else {
            cnt[i][e].first += child[e].second;
            cnt[i][e].second += child[e].first;
          }
        }
      }
    }
  }
  return cnt[std::size_t(s.root()) - 1];
}

// Number of occurrences of one signed letter.
inline Int slp_count(const Slp& s, Letter l) {
  std::size_t e = std::size_t(edge_of_letter(l));
  std::size_t edges = e + 1;
  for (const auto& a : s.assignments())
    if (a.simple()) edges = std::max(edges, std::size_t(edge_of_letter(a.sym)) + 1);
  auto all = slp_count_all(s, edges);
  return l > 0 ? all[e].first : all[e].second;
}

inline Word slp_expand(const Slp& s, std::uint64_t guard) {
  Int total = slp_length(s);
  require(total <= guard, errc::guard,
          "expansion length " + to_dec(total) + " exceeds guard " + std::to_string(guard));
  Word out;
  out.reserve(std::size_t(total));
  std::vector<std::int32_t> stack{s.root()};
  const auto& asg = s.assignments();
  while (!stack.empty()) {
    std::int32_t r = stack.back();
    stack.pop_back();
    const auto& a = asg[std::size_t(std::abs(r)) - 1];
    if (a.simple()) {
      out.push_back(r > 0 ? a.sym : -a.sym);
    } else if (r > 0) {
      for (auto it = a.refs.rbegin(); it != a.refs.rend(); ++it) stack.push_back(*it);
    } else {
      for (auto ref : a.refs) stack.push_back(-ref);
    }
  }
  return out;
}

namespace detail {

// Appends assignments so that the expansion of `v` splits at position `p`,
// returning signed references to the two halves.  A zero reference stands
// for the empty side.
inline std::pair<std::int32_t, std::int32_t> split_ref(std::vector<SlpAssignment>& asg,
                                                       const std::vector<Int>& len,
                                                       std::int32_t v, const Int& p) {
  const Int& total = len[std::size_t(std::abs(v)) - 1];
  if (p == 0) return {0, v};
  if (p == total) return {v, 0};
  const SlpAssignment a = asg[std::size_t(std::abs(v)) - 1];
  if (v < 0) {
    auto [x, y] = split_ref(asg, len, -v, total - p);
    return {-y, -x};
  }
  // proper assignment: locate the child containing position p
  Int cum = 0;
  for (std::size_t j = 0; j < a.refs.size(); ++j) {
    const Int& child_len = len[std::size_t(std::abs(a.refs[j])) - 1];
    if (p < cum + child_len) {
      auto [x, y] = split_ref(asg, len, a.refs[j], p - cum);
      SlpAssignment before, after;
      before.refs.assign(a.refs.begin(), a.refs.begin() + std::ptrdiff_t(j));
      if (x != 0) before.refs.push_back(x);
      if (y != 0) after.refs.push_back(y);
      after.refs.insert(after.refs.end(), a.refs.begin() + std::ptrdiff_t(j) + 1, a.refs.end());
      asg.push_back(std::move(before));
      std::int32_t b = std::int32_t(asg.size());
      asg.push_back(std::move(after));
      return {b, std::int32_t(asg.size())};
    }
    cum += child_len;
  }
  throw error(errc::domain, "split position outside expansion");
}

}  // namespace detail

// Splits the expansion at position p (0 <= p <= length).
inline std::pair<Slp, Slp> slp_split(const Slp& s, const Int& p) {
  require(p >= 0 && p <= slp_length(s), errc::domain, "split position out of range");
  auto asg = s.assignments();
  // split_ref only reads lengths of original variables, never of helpers
  std::vector<Int> len = s.lengths();
  auto [x, y] = detail::split_ref(asg, len, s.root(), p);
  auto make = [&](std::int32_t r) {
    auto copy = asg;
    if (r == 0) {
      copy.push_back(SlpAssignment{});
      return Slp(std::move(copy), std::int32_t(copy.size()));
    }
    if (r > 0) return Slp(std::move(copy), r);
    copy.push_back(SlpAssignment{0, {r}});
    return Slp(std::move(copy), std::int32_t(copy.size()));
  };
  return {make(x), make(y)};
}

// Cyclic rotation: expansion w becomes w[k:] + w[:k].  Negative k rotates
// the other way.
inline Slp slp_rotate(const Slp& s, const Int& k) {
  Int total = slp_length(s);
  if (total == 0) return s;
  Int r = k % total;
  if (r < 0) r += total;
  if (r == 0) return s;
  auto asg = s.assignments();
  std::vector<Int> len = s.lengths();
  auto [x, y] = detail::split_ref(asg, len, s.root(), r);
  SlpAssignment top;
  if (y != 0) top.refs.push_back(y);
  if (x != 0) top.refs.push_back(x);
  asg.push_back(std::move(top));
  return Slp(std::move(asg), std::int32_t(asg.size()));
}

// Replaces letters by whole programs.  A rule for letter l also applies to
// -l as the inverse program; giving explicit rules for both signs is
// allowed only if their expansions are mutually inverse, checked here by
// guarded expansion.
inline Slp slp_substitute(const Slp& s, const std::map<Letter, Slp>& rules,
                          std::uint64_t guard = 1000000) {
  for (const auto& [l, rule] : rules) {
    require(l != 0, errc::domain, "substitution rule for the zero letter");
    auto other = rules.find(-l);
    if (l > 0 && other != rules.end()) {
      require(slp_length(rule) == slp_length(other->second) &&
                  slp_expand(rule, guard) == inverse_word(slp_expand(other->second, guard)),
              errc::domain, "conflicting substitution rules are not mutually inverse");
    }
  }
  std::vector<SlpAssignment> asg;
  std::map<Letter, std::int32_t> rule_root;
  for (const auto& [l, rule] : rules) {
    std::int32_t base = std::int32_t(asg.size());
    for (const auto& a : rule.assignments()) {
      SlpAssignment b = a;
      for (auto& r : b.refs) r += r > 0 ? base : -base;
      asg.push_back(std::move(b));
    }
    rule_root[l] = base + rule.root();
  }
  std::int32_t base = std::int32_t(asg.size());
  for (const auto& a : s.assignments()) {
    SlpAssignment b = a;
    if (a.simple()) {
      auto it = rule_root.find(a.sym);
      if (it != rule_root.end()) {
        b.sym = 0;
        b.refs = {it->second};
      } else if ((it = rule_root.find(-a.sym)) != rule_root.end()) {
        b.sym = 0;
        b.refs = {-it->second};
      }
    } else {
      for (auto& r : b.refs) r += r > 0 ? base : -base;
    }
    asg.push_back(std::move(b));
  }
  return Slp(std::move(asg), base + s.root());
}

}  // namespace heegaard
