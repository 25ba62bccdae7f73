#pragma once
// Curve representations on a cellular surface and the conversions
// between them.  An edged curve is a closed walk of signed surface
// edges.  An intersection sequence is the word of signed edge
// crossings read along a curve kept transverse to the skeleton, stored
// as one SLP per component.  Normal coordinates count crossings per
// edge.
//
// edged_to_sequences pushes each component off the skeleton to one
// side, uniform along the whole component, and reads the crossing word
// as vertex sweeps between consecutive edges.  The side is chosen to
// make the word shortest.  Transits of embedded curves never
// interleave around a vertex; interleaved transits mean the input
// crosses itself or another component and are rejected.

#include <heegaard/bigint.hpp>
#include <heegaard/errors.hpp>
#include <heegaard/slp.hpp>
#include <heegaard/surface.hpp>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace heegaard {

using EdgedCurve = std::vector<Letter>;  // signed edges in traversal order
using EdgedMulticurve = std::vector<EdgedCurve>;

struct SequenceMulticurve {
  std::vector<Slp> components;

  std::size_t complexity() const {
    std::size_t n = 0;
    for (const Slp& c : components) n += c.complexity();
    return n;
  }
};

struct NormalCoordinates {
  std::vector<std::vector<Int>> components;  // per component, count per edge id
};

namespace detail {

struct Transit {
  std::int32_t comp = 0;
  Dart in = 0, out = 0;
};

// chords with interleaved endpoints around a vertex cross essentially
inline void check_laminar(const CellularSurface& s,
                          const std::vector<std::vector<Transit>>& at_vertex) {
  std::vector<std::vector<Dart>> rots = s.vertex_rotations();
  for (std::int32_t v = 0; v < s.vertex_count(); ++v) {
    const std::vector<Transit>& ts = at_vertex[std::size_t(v)];
    if (ts.size() < 2) continue;
    const std::vector<Dart>& rot = rots[std::size_t(v)];
    auto pos = [&rot](Dart d) {
      for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == d) return std::int64_t(i);
      throw error(errc::domain, "dart missing from rotation");
    };
    std::int64_t deg = std::int64_t(rot.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        std::int64_t p = pos(ts[i].in), span = (pos(ts[i].out) - p + deg) % deg;
        auto inside = [&](Dart d) {
          std::int64_t x = (pos(d) - p + deg) % deg;
          return x > 0 && x < span;
        };
        if (inside(ts[j].in) != inside(ts[j].out))
          throw error(errc::domain, ts[i].comp == ts[j].comp
                                        ? "edged curve crosses itself at a vertex"
                                        : "edged components cross at a vertex");
      }
  }
}

}  // namespace detail

inline SequenceMulticurve edged_to_sequences(const CellularSurface& s,
                                             const EdgedMulticurve& curves) {
  std::set<std::int32_t> used;
  std::vector<std::vector<detail::Transit>> at_vertex(std::size_t(s.vertex_count()));
  std::vector<std::vector<detail::Transit>> transits(curves.size());
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const EdgedCurve& c = curves[ci];
    require(!c.empty(), errc::domain, "empty edge list");
    for (Letter l : c) {
      require(l != 0 && edge_of_letter(l) < s.edge_count(), errc::domain,
              "edge list letter outside surface");
      require(used.insert(edge_of_letter(l)).second, errc::domain,
              "edge used twice across the multicurve");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      Letter cur = c[j], nxt = c[(j + 1) % c.size()];
      Dart in = side_arrive_dart(cur), out = side_start_dart(nxt);
      require(s.dart_vertex(in) == s.dart_vertex(out), errc::domain,
              "edge list is not a closed walk");
      detail::Transit t{std::int32_t(ci), in, out};
      transits[ci].push_back(t);
      at_vertex[std::size_t(s.dart_vertex(in))].push_back(t);
    }
  }
  detail::check_laminar(s, at_vertex);

  SequenceMulticurve out;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    // the pushoff runs on one side of the whole component; pick the
    // side reading the shorter word
    Word ccw, cw;
    for (const detail::Transit& t : transits[ci]) {
      Word a = s.sweep_letters(t.in, t.out, true);
      ccw.insert(ccw.end(), a.begin(), a.end());
      Word b = s.sweep_letters(t.in, t.out, false);
      cw.insert(cw.end(), b.begin(), b.end());
    }
    out.components.push_back(slp_trivial(cyclic_reduce(ccw.size() <= cw.size() ? ccw : cw)));
  }
  return out;
}

inline NormalCoordinates sequences_to_normal_coords(const CellularSurface& s,
                                                    const SequenceMulticurve& m,
                                                    std::uint64_t desk_guard = 10000) {
  NormalCoordinates nc;
  for (const Slp& comp : m.components) {
    // reducedness is only checkable by expansion, so verify it at desk
    // scale and trust larger programs to their producers
    if (slp_length(comp) <= desk_guard) {
      Word w = slp_expand(comp, desk_guard);
      require(cyclic_reduce(w) == w, errc::domain,
              "component sequence is not cyclically reduced");
    }
    auto counts = slp_count_all(comp, std::size_t(s.edge_count()));
    std::vector<Int> v;
    v.reserve(counts.size());
    for (const auto& c : counts) v.push_back(c.first + c.second);
    nc.components.push_back(std::move(v));
  }
  return nc;
}

// crossings of a component against each triangle side must pair up into
// corners; checks every triangular face
inline void check_normal_coordinates(const CellularSurface& s,
                                     const std::vector<Int>& coords) {
  require(coords.size() == std::size_t(s.edge_count()), errc::domain,
          "coordinate vector length differs from edge count");
  for (const FaceWord& f : s.faces()) {
    if (f.size() != 3) continue;
    corner_coordinates(coords[std::size_t(edge_of_letter(f[0]))],
                       coords[std::size_t(edge_of_letter(f[1]))],
                       coords[std::size_t(edge_of_letter(f[2]))]);
  }
}

// signed crossing total of a compressed sequence against an edged curve
inline Int algebraic_intersection(const Slp& b, const EdgedCurve& a,
                                  const CellularSurface& s) {
  auto counts = slp_count_all(b, std::size_t(s.edge_count()));
  Int total = 0;
  for (Letter l : a) {
    const auto& c = counts[std::size_t(edge_of_letter(l))];
    Int d = c.first - c.second;
    total += l > 0 ? d : -d;
  }
  return total;
}

inline Int geometric_count(const Slp& b, const EdgedCurve& a, const CellularSurface& s) {
  auto counts = slp_count_all(b, std::size_t(s.edge_count()));
  Int total = 0;
  for (Letter l : a) {
    const auto& c = counts[std::size_t(edge_of_letter(l))];
    total += c.first + c.second;
  }
  return total;
}

}  // namespace heegaard
