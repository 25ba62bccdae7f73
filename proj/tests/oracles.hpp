#pragma once

// Independent reference implementations used only by tests.  These favour
// directness over efficiency: programs are expanded assignment by
// assignment into full words, so they are valid oracles for small inputs.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "heegaard/bigint.hpp"
#include "heegaard/slp.hpp"

namespace oracle {

using heegaard::Int;
using heegaard::Letter;
using heegaard::Slp;
using heegaard::Word;

// Eager expansion of every assignment.
inline std::vector<Word> expand_all(const Slp& s) {
  std::vector<Word> val;
  for (const auto& a : s.assignments()) {
    Word w;
    if (a.simple()) {
      w.push_back(a.sym);
    } else {
      for (auto r : a.refs) {
        const Word& child = val[std::size_t(std::abs(r)) - 1];
        if (r > 0) {
          w.insert(w.end(), child.begin(), child.end());
        } else {
          for (auto it = child.rbegin(); it != child.rend(); ++it) w.push_back(-*it);
        }
      }
    }
    val.push_back(std::move(w));
  }
  return val;
}

inline Word expand(const Slp& s) {
  return expand_all(s)[std::size_t(s.root()) - 1];
}

inline Int count(const Word& w, Letter l) {
  Int n = 0;
  for (Letter x : w)
    if (x == l) ++n;
  return n;
}

// Letter-by-letter substitution on a plain word.
inline Word substitute(const Word& w, const std::map<Letter, Word>& rules) {
  Word out;
  for (Letter l : w) {
    auto it = rules.find(l);
    if (it != rules.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
      continue;
    }
    it = rules.find(-l);
    if (it != rules.end()) {
      for (auto r = it->second.rbegin(); r != it->second.rend(); ++r) out.push_back(-*r);
      continue;
    }
    out.push_back(l);
  }
  return out;
}

using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {

// quotient with remainder centered in (-|b|/2, |b|/2], via the canonical
// nonnegative remainder
inline Int centered_quot(const Int& a, const Int& b) {
  Int m = b < 0 ? Int(-b) : b;
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return (a - r) / b;
}

}  // namespace detail

// Smith diagonal by plain elementary operations: first nonzero pivot, no
// size-driven pivot selection, centered quotients to keep entries small.
// Returns the full diagonal, zeros included.
inline std::vector<Int> smith_by_elementary_ops(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows && pi == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = detail::centered_quot(a[i][t], a[t][t]);
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = detail::centered_quot(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest; fold an offending row in and redo
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(a[t][t] < 0 ? Int(-a[t][t]) : a[t][t]);
    ++t;
  }
  while (diag.size() < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

namespace detail {

inline Int minor_det(const IntMatrix& a, const std::vector<std::size_t>& ri,
                     const std::vector<std::size_t>& cj) {
  const std::size_t k = ri.size();
  if (k == 1) return a[ri[0]][cj[0]];
  Int det = 0;
  std::vector<std::size_t> rest(ri.begin() + 1, ri.end());
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub;
    for (std::size_t jj = 0; jj < k; ++jj)
      if (jj != j) sub.push_back(cj[jj]);
    Int term = a[ri[0]][cj[j]] * minor_det(a, rest, sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                    std::size_t from, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}

}  // namespace detail

// Invariant factors from determinantal divisors: d_k is the gcd of all k by
// k minors divided by the gcd of all (k-1) by (k-1) minors.  No elementary
// operations at all, so it is a second route independent of both the
// implementation and the oracle above.  Exponential in the matrix size.
inline std::vector<Int> smith_by_minors(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<Int> divisor{1};  // divisor[k] = gcd of k by k minors
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<std::size_t> rsel, csel;
    detail::subsets(rows, k, rsel, 0, [&](const std::vector<std::size_t>& ri) {
      if (g == 1) return;
      std::vector<std::size_t> cur;
      detail::subsets(cols, k, cur, 0, [&](const std::vector<std::size_t>& cj) {
        if (g == 1) return;
        g = boost::multiprecision::gcd(g, detail::minor_det(a, ri, cj));
        if (g < 0) g = -g;
      });
    });
    divisor.push_back(g);
    if (g == 0) break;
  }
  std::vector<Int> diag;
  for (std::size_t k = 1; k < divisor.size(); ++k) {
    if (divisor[k] == 0) break;
    diag.push_back(divisor[k] / divisor[k - 1]);
  }
  while (diag.size() < n) diag.push_back(0);
  return diag;
}

}  // namespace oracle
