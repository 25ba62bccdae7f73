#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heegaard/bigint.hpp"
#include "heegaard/curves.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/errors.hpp"
#include "heegaard/marked.hpp"
#include "heegaard/slp.hpp"
#include "heegaard/word.hpp"

namespace heegaard {

using IntMatrix = std::vector<std::vector<Int>>;

// Presentation of the fundamental group: one relator per beta component,
// written over the generator alphabet 1..generators (one per alpha curve).
struct GroupPresentation {
  std::int32_t generators = 0;
  std::vector<Slp> relators;
};

// First homology as invariant factors d1 | d2 | ... plus the rank of the
// free part.  The group is finite exactly when betti is zero.
struct HomologySummary {
  std::vector<Int> factors;
  std::int64_t betti = 0;

  bool finite() const { return betti == 0; }

  Int order() const {
    require(finite(), errc::domain, "infinite group has no order");
    Int n = 1;
    for (const Int& d : factors) n *= d;
    return n;
  }

  bool operator==(const HomologySummary& o) const {
    return factors == o.factors && betti == o.betti;
  }
};

struct SmithNormalForm {
  HomologySummary summary;
  std::vector<Int> diagonal;  // full diagonal, zeros included
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;  // left * input * right = diag
};

// Rewrites each beta sequence as a relator: letters on alpha edges become
// signed generators, letters elsewhere are erased.
inline GroupPresentation get_pi1(const HeegaardDiagram& d) {
  require(d.sequences.has_value(), errc::domain,
          "fundamental group needs beta as sequences");
  const MarkedSurface& ms = d.marked;
  std::vector<Letter> gen_of(std::size_t(ms.surface.edge_count()), 0);
  for (std::size_t j = 0; j < ms.alpha.size(); ++j)
    for (Letter l : ms.alpha[j])
      gen_of[std::size_t(edge_of_letter(l))] =
          Letter(sign_of_letter(l) * std::int32_t(j + 1));
  GroupPresentation p;
  p.generators = ms.genus;
  for (const Slp& comp : d.sequences->components) {
    auto asg = comp.assignments();
    for (SlpAssignment& a : asg) {
      if (!a.simple()) continue;
      Letter g = gen_of[std::size_t(edge_of_letter(a.sym))];
      if (g == 0) {
        a.sym = 0;  // erased letter becomes the empty word
      } else {
        a.sym = Letter(sign_of_letter(a.sym)) * g;
      }
    }
    p.relators.emplace_back(std::move(asg), comp.root());
  }
  return p;
}

// Exponent sum of each generator in the relator's expansion.
inline std::vector<Int> abelianized_relator(const Slp& relator, std::int32_t generators) {
  auto counts = slp_count_all(relator, std::size_t(generators));
  std::vector<Int> row;
  row.reserve(std::size_t(generators));
  for (const auto& [fwd, bwd] : counts) row.push_back(fwd - bwd);
  return row;
}

// K[i][j] is the signed count of beta_i against alpha_j.
inline IntMatrix presentation_matrix(const HeegaardDiagram& d) {
  require(d.sequences.has_value(), errc::domain,
          "presentation matrix needs beta as sequences");
  const MarkedSurface& ms = d.marked;
  require(d.sequences->components.size() == ms.alpha.size(), errc::domain,
          "presentation matrix needs one beta per alpha");
  IntMatrix k;
  for (const Slp& b : d.sequences->components) {
    std::vector<Int> row;
    for (const auto& a : ms.alpha)
      row.push_back(algebraic_intersection(b, a, ms.surface));
    k.push_back(std::move(row));
  }
  return k;
}

namespace detail {

// Quotient with remainder in (-|b|/2, |b|/2], which keeps entries reduced
// against the current pivot throughout the elimination.
inline Int balanced_quot(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && 2 * (r < 0 ? Int(-r) : r) > (b < 0 ? Int(-b) : b))
    q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace detail

// Diagonalization by elementary operations, smallest pivot first and all
// quotients balanced; each pivot is made to divide the remaining block, so
// the diagonal comes out as the divisibility chain directly.
inline SmithNormalForm smith_normal_form(IntMatrix k, bool with_transforms = false) {
  const std::size_t n = k.size();
  require(n > 0, errc::domain, "empty matrix");
  for (const auto& row : k)
    require(row.size() == n, errc::domain, "matrix is not square");
  IntMatrix u, v;
  if (with_transforms) {
    u = detail::identity_matrix(n);
    v = detail::identity_matrix(n);
  }
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(k[a], k[b]);
    if (with_transforms) std::swap(u[a], u[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& row : k) std::swap(row[a], row[b]);
    if (with_transforms)
      for (auto& row : v) std::swap(row[a], row[b]);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < n; ++j) k[dst][j] += c * k[src][j];
    if (with_transforms)
      for (std::size_t j = 0; j < n; ++j) u[dst][j] += c * u[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < n; ++i) k[i][dst] += c * k[i][src];
    if (with_transforms)
      for (std::size_t i = 0; i < n; ++i) v[i][dst] += c * v[i][src];
  };
  auto row_negate = [&](std::size_t a) {
    for (auto& x : k[a]) x = -x;
    if (with_transforms)
      for (auto& x : u[a]) x = -x;
  };

  std::size_t t = 0;
  while (t < n) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (k[i][j] == 0) continue;
        Int cur = k[i][j] < 0 ? Int(-k[i][j]) : k[i][j];
        if (pi == n || cur < (k[pi][pj] < 0 ? Int(-k[pi][pj]) : k[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == n) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (k[i][t] == 0) continue;
        row_axpy(i, t, -detail::balanced_quot(k[i][t], k[t][t]));
        if (k[i][t] != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (k[t][j] == 0) continue;
        col_axpy(j, t, -detail::balanced_quot(k[t][j], k[t][t]));
        if (k[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        for (std::size_t i = t + 1; i < n && clean; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (k[i][j] % k[t][t] != 0) {
              row_axpy(t, i, 1);
              clean = false;
              break;
            }
      }
    }
    if (k[t][t] < 0) row_negate(t);
    ++t;
  }

  SmithNormalForm out;
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal.push_back(k[i][i]);
    if (k[i][i] != 0)
      out.summary.factors.push_back(k[i][i]);
    else
      ++out.summary.betti;
  }
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

// Corank by fraction-free elimination; every intermediate entry is a minor
// of the input, so the arithmetic stays exact without rationals.
inline std::int64_t betti_number(IntMatrix a) {
  const std::size_t n = a.size();
  require(n > 0, errc::domain, "empty matrix");
  for (const auto& row : a)
    require(row.size() == n, errc::domain, "matrix is not square");
  Int denom = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != r) std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / denom;
      a[i][c] = 0;
    }
    denom = a[r][c];
    ++r;
  }
  return std::int64_t(n - r);
}

// Matrix method for genus 1: the beta class in the torus evolves by
// (p,q) -> (p,q-kp) under l^k and (p,q) -> (p+kq,q) under a^k, starting
// from (1,0); the resulting group is Z/|q|.  This twist-to-matrix
// assignment is the one consistent with the compiled pipeline.
inline HomologySummary lens_matrix_oracle(const HeegaardWord& w) {
  require(w.genus == 1, errc::domain, "matrix method needs a genus 1 word");
  Int p = 1, q = 0;
  for (const WordFactor& f : w.factors) {
    if (f.name == "l")
      q -= f.exp * p;
    else if (f.name == "a")
      p += f.exp * q;
    else
      throw error(errc::domain, "unknown genus 1 twist: " + f.name);
  }
  HomologySummary h;
  if (q == 0) {
    h.betti = 1;
  } else {
    h.factors.push_back(q < 0 ? Int(-q) : q);
  }
  return h;
}

inline HomologySummary homology(const HeegaardDiagram& d) {
  return smith_normal_form(presentation_matrix(d)).summary;
}

// Elementary moves on a presentation with a fixed generator set.  These
// rewrite relators without changing the group; none of them is a
// simplifier on its own.
inline GroupPresentation tietze_invert(GroupPresentation p, std::size_t i) {
  require(i < p.relators.size(), errc::domain, "relator index out of range");
  p.relators[i] = slp_inverse(p.relators[i]);
  return p;
}

inline GroupPresentation tietze_rotate(GroupPresentation p, std::size_t i, const Int& k) {
  require(i < p.relators.size(), errc::domain, "relator index out of range");
  p.relators[i] = slp_rotate(p.relators[i], k);
  return p;
}

inline GroupPresentation tietze_multiply(GroupPresentation p, std::size_t i, std::size_t j) {
  require(i < p.relators.size() && j < p.relators.size(), errc::domain,
          "relator index out of range");
  require(i != j, errc::domain, "relator multiplied with itself");
  p.relators[i] = slp_concat({p.relators[i], p.relators[j]});
  return p;
}

}  // namespace heegaard
