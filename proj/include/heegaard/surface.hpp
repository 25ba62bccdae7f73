#pragma once
// Closed oriented surfaces as cellular complexes.  Faces are stored as
// CCW boundary words of sides, a side being a signed letter: +e means
// edge e traversed forward.  Darts reuse the letter encoding for edge
// ends: +(e+1) is the tail end, -(e+1) the head end.  The CCW rotation
// at a vertex is derived from the corners: the successor of the start
// dart of side k+1 is the arrival dart of side k.
//
// Intersection-sequence letters are direction-true: a curve records +e
// when it crosses edge e with the edge pointing left across its path.
// A sweep around a vertex therefore reads the dart value on CW routes
// and the negated dart value on CCW routes.

#include <heegaard/bigint.hpp>
#include <heegaard/errors.hpp>
#include <heegaard/slp.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace heegaard {

using Dart = std::int32_t;
using Side = Letter;

inline Dart tail_dart(std::int32_t e) { return e + 1; }
inline Dart head_dart(std::int32_t e) { return -(e + 1); }
inline std::int32_t dart_edge(Dart d) { return std::abs(d) - 1; }

// start/arrival darts of a side traversal
inline Dart side_start_dart(Side s) { return s; }
inline Dart side_arrive_dart(Side s) { return -s; }

struct EdgeEnds {
  std::int32_t tail = 0;
  std::int32_t head = 0;
};

using FaceWord = std::vector<Side>;

class CellularSurface {
 public:
  CellularSurface(std::int32_t vertex_count, std::vector<EdgeEnds> edges,
                  std::vector<FaceWord> faces)
      : v_count_(vertex_count), edges_(std::move(edges)), faces_(std::move(faces)) {
    validate();
  }

  static CellularSurface from_rotations(std::int32_t vertex_count,
                                        std::vector<EdgeEnds> edges,
                                        const std::vector<std::vector<Dart>>& rotations);

  std::int32_t vertex_count() const { return v_count_; }
  std::int32_t edge_count() const { return std::int32_t(edges_.size()); }
  std::int32_t face_count() const { return std::int32_t(faces_.size()); }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  const std::vector<FaceWord>& faces() const { return faces_; }
  const FaceWord& face(std::int32_t f) const { return faces_[std::size_t(f)]; }

  std::int32_t euler() const { return v_count_ - edge_count() + face_count(); }
  std::int32_t genus() const { return (2 - euler()) / 2; }

  std::int32_t tail_of(Side s) const {
    const EdgeEnds& e = edges_[std::size_t(dart_edge(s))];
    return s > 0 ? e.tail : e.head;
  }
  std::int32_t head_of(Side s) const {
    const EdgeEnds& e = edges_[std::size_t(dart_edge(s))];
    return s > 0 ? e.head : e.tail;
  }
  std::int32_t dart_vertex(Dart d) const {
    const EdgeEnds& e = edges_[std::size_t(dart_edge(d))];
    return d > 0 ? e.tail : e.head;
  }

  // CCW rotation: succ(d) is the next dart counterclockwise around the
  // vertex of d.
  Dart succ(Dart d) const { return succ_[dart_index(d)]; }
  Dart pred(Dart d) const { return pred_[dart_index(d)]; }

  // (face index, position) of the unique occurrence of a side
  std::pair<std::int32_t, std::int32_t> side_place(Side s) const {
    return place_[dart_index(s)];
  }
  std::int32_t side_face(Side s) const { return side_place(s).first; }

  std::vector<std::vector<Dart>> vertex_rotations() const {
    std::vector<std::vector<Dart>> rots(static_cast<std::size_t>(v_count_));
    std::vector<bool> seen(succ_.size(), false);
    for (std::int32_t e = 0; e < edge_count(); ++e)
      for (Dart d : {tail_dart(e), head_dart(e)}) {
        if (seen[dart_index(d)]) continue;
        std::vector<Dart>& cycle = rots[std::size_t(dart_vertex(d))];
        Dart c = d;
        while (!seen[dart_index(c)]) {
          seen[dart_index(c)] = true;
          cycle.push_back(c);
          c = succ(c);
        }
      }
    return rots;
  }

  // Letters read by a curve pushoff passing from `in` to `out` around
  // their common vertex, sweeping CCW or CW.  Direction-true signs.
  Word sweep_letters(Dart in, Dart out, bool ccw) const {
    require(dart_vertex(in) == dart_vertex(out), errc::domain,
            "sweep darts must share a vertex");
    Word w;
    for (Dart d = ccw ? succ(in) : pred(in); d != out; d = ccw ? succ(d) : pred(d)) {
      require(d != in, errc::domain, "sweep failed to reach the out dart");
      w.push_back(ccw ? -d : d);
    }
    return w;
  }

  bool is_triangulation() const {
    for (const FaceWord& f : faces_) {
      if (f.size() != 3) return false;
      std::int32_t a = dart_edge(f[0]), b = dart_edge(f[1]), c = dart_edge(f[2]);
      if (a == b || b == c || a == c) return false;
    }
    return true;
  }

 private:
  std::size_t dart_index(Dart d) const {
    std::size_t e = std::size_t(dart_edge(d));
    require(e < edges_.size(), errc::domain, "dart outside edge range");
    return 2 * e + (d < 0 ? 1 : 0);
  }

  void validate() {
    require(v_count_ >= 1, errc::domain, "surface needs at least one vertex");
    for (const EdgeEnds& e : edges_)
      require(e.tail >= 0 && e.tail < v_count_ && e.head >= 0 && e.head < v_count_,
              errc::domain, "edge endpoint outside vertex range");

    std::size_t darts = 2 * edges_.size();
    succ_.assign(darts, 0);
    pred_.assign(darts, 0);
    place_.assign(darts, {-1, -1});

    std::vector<int> side_seen(darts, 0);
    for (std::int32_t f = 0; f < face_count(); ++f) {
      const FaceWord& w = faces_[std::size_t(f)];
      require(!w.empty(), errc::domain, "empty face boundary");
      for (std::size_t k = 0; k < w.size(); ++k) {
        Side s = w[k];
        require(s != 0 && std::size_t(dart_edge(s)) < edges_.size(), errc::domain,
                "face side outside edge range");
        ++side_seen[dart_index(s)];
        place_[dart_index(s)] = {f, std::int32_t(k)};
        Side t = w[(k + 1) % w.size()];
        require(head_of(s) == tail_of(t), errc::domain, "face boundary is not a closed walk");
      }
    }
    for (std::size_t i = 0; i < darts; ++i)
      require(side_seen[i] == 1, errc::domain,
              "every edge must appear exactly once per sign across faces");

    // corners define the rotation
    for (const FaceWord& w : faces_)
      for (std::size_t k = 0; k < w.size(); ++k) {
        Side s = w[k], t = w[(k + 1) % w.size()];
        succ_[dart_index(side_start_dart(t))] = side_arrive_dart(s);
      }
    for (std::int32_t e = 0; e < edge_count(); ++e)
      for (Dart d : {tail_dart(e), head_dart(e)})
        pred_[dart_index(succ(d))] = d;

    // rotation cycles must partition the darts by vertex, one cycle per
    // vertex (pinched complexes are not surfaces)
    std::vector<bool> seen(darts, false);
    std::vector<int> cycles_at(std::size_t(v_count_), 0);
    for (std::int32_t e = 0; e < edge_count(); ++e)
      for (Dart d : {tail_dart(e), head_dart(e)}) {
        if (seen[dart_index(d)]) continue;
        ++cycles_at[std::size_t(dart_vertex(d))];
        Dart c = d;
        while (!seen[dart_index(c)]) {
          seen[dart_index(c)] = true;
          require(dart_vertex(c) == dart_vertex(d), errc::domain,
                  "rotation cycle crosses vertices");
          c = succ(c);
        }
      }
    for (std::int32_t v = 0; v < v_count_; ++v)
      require(cycles_at[std::size_t(v)] == 1 || (edges_.empty() && v_count_ == 1),
              errc::domain, "vertex darts split into several rotation cycles");

    // connectivity over the vertex graph
    if (!edges_.empty()) {
      std::vector<std::int32_t> comp(static_cast<std::size_t>(v_count_));
      std::iota(comp.begin(), comp.end(), 0);
      auto find = [&](std::int32_t x) {
        while (comp[std::size_t(x)] != x) x = comp[std::size_t(x)] = comp[std::size_t(comp[std::size_t(x)])];
        return x;
      };
      for (const EdgeEnds& e : edges_) comp[std::size_t(find(e.tail))] = find(e.head);
      for (std::int32_t v = 0; v < v_count_; ++v)
        require(find(v) == find(0), errc::domain, "surface is not connected");
    }

    require((2 - euler()) % 2 == 0 && euler() <= 2, errc::domain,
            "euler characteristic does not fit a closed oriented surface");
  }

  std::int32_t v_count_;
  std::vector<EdgeEnds> edges_;
  std::vector<FaceWord> faces_;
  std::vector<Dart> succ_, pred_;
  std::vector<std::pair<std::int32_t, std::int32_t>> place_;
};

inline CellularSurface CellularSurface::from_rotations(
    std::int32_t vertex_count, std::vector<EdgeEnds> edges,
    const std::vector<std::vector<Dart>>& rotations) {
  std::size_t darts = 2 * edges.size();
  std::vector<Dart> pred(darts, 0);
  std::vector<int> seen(darts, 0);
  auto idx = [&](Dart d) {
    std::size_t e = std::size_t(dart_edge(d));
    require(e < edges.size(), errc::domain, "rotation dart outside edge range");
    return 2 * e + (d < 0 ? 1 : 0);
  };
  for (const std::vector<Dart>& cycle : rotations)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Dart d = cycle[i], nxt = cycle[(i + 1) % cycle.size()];
      pred[idx(nxt)] = d;
      ++seen[idx(d)];
    }
  for (std::size_t i = 0; i < darts; ++i)
    require(seen[i] == 1, errc::domain, "rotations must list every dart exactly once");

  // trace faces: after arriving along a side, the next side starts at
  // the CCW predecessor of the arrival dart
  std::vector<FaceWord> faces;
  std::vector<int> used(darts, 0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (Side s : {Side(e + 1), Side(-(std::int32_t(e) + 1))}) {
      if (used[idx(side_start_dart(s))]) continue;
      FaceWord w;
      Side c = s;
      while (!used[idx(side_start_dart(c))]) {
        used[idx(side_start_dart(c))] = 1;
        w.push_back(c);
        c = pred[idx(side_arrive_dart(c))];
      }
      faces.push_back(std::move(w));
    }
  return CellularSurface(vertex_count, std::move(edges), std::move(faces));
}

// ---- corner coordinates -------------------------------------------------

struct CornerCoords {
  Int xy, yz, zx;  // arcs cutting the corner between the named sides
};

// side crossing counts (x, y, z) of a triangle, in boundary order
inline CornerCoords corner_coordinates(const Int& x, const Int& y, const Int& z) {
  require((x + y + z) % 2 == 0, errc::domain,
          "corner coordinates need even side-count sum");
  CornerCoords c{(x + y - z) / 2, (y + z - x) / 2, (z + x - y) / 2};
  require(c.xy >= 0 && c.yz >= 0 && c.zx >= 0, errc::domain,
          "side counts violate the triangle inequality");
  return c;
}

// ---- subdivisions -------------------------------------------------------

struct BarycentricSubdivision {
  CellularSurface surface;
  // old edge e splits into halves 2e (tail->mid) and 2e+1 (mid->head)
  std::vector<std::int32_t> edge_midpoint;  // new vertex on old edge e
  std::vector<std::int32_t> face_center;    // new vertex inside old face f
  // update an edge list along the subdivision: +-e -> its two halves
  std::vector<Letter> map_edge_list(const std::vector<Letter>& edges) const {
    std::vector<Letter> out;
    out.reserve(2 * edges.size());
    for (Letter l : edges) {
      std::int32_t e = edge_of_letter(l);
      Letter h1 = Letter(2 * e + 1), h2 = Letter(2 * e + 2);
      if (l > 0) {
        out.push_back(h1);
        out.push_back(h2);
      } else {
        out.push_back(-h2);
        out.push_back(-h1);
      }
    }
    return out;
  }
};

inline BarycentricSubdivision barycentric_subdivision(const CellularSurface& s) {
  std::int32_t V = s.vertex_count(), E = s.edge_count(), F = s.face_count();
  std::vector<EdgeEnds> edges(std::size_t(2 * E));
  std::vector<std::int32_t> midpoint(static_cast<std::size_t>(E)), center(static_cast<std::size_t>(F));
  for (std::int32_t e = 0; e < E; ++e) {
    midpoint[std::size_t(e)] = V + e;
    edges[std::size_t(2 * e)] = {s.edges()[std::size_t(e)].tail, V + e};
    edges[std::size_t(2 * e + 1)] = {V + e, s.edges()[std::size_t(e)].head};
  }
  std::vector<FaceWord> faces;
  for (std::int32_t f = 0; f < F; ++f) {
    center[std::size_t(f)] = V + E + f;
    const FaceWord& w = s.face(f);
    std::size_t L = w.size();
    // spokes: per position, center->corner vertex then center->midpoint
    std::vector<std::int32_t> corner_spoke(L), mid_spoke(L);
    for (std::size_t k = 0; k < L; ++k) {
      corner_spoke[k] = std::int32_t(edges.size());
      edges.push_back({V + E + f, s.tail_of(w[k])});
      mid_spoke[k] = std::int32_t(edges.size());
      edges.push_back({V + E + f, V + dart_edge(w[k])});
    }
    for (std::size_t k = 0; k < L; ++k) {
      Side sk = w[k];
      std::int32_t e = dart_edge(sk);
      Letter h1 = Letter(2 * e + 1), h2 = Letter(2 * e + 2);
      Letter first = sk > 0 ? h1 : -h2;
      Letter second = sk > 0 ? h2 : -h1;
      std::int32_t next_corner = corner_spoke[(k + 1) % L];
      faces.push_back({Letter(corner_spoke[k] + 1), first, -Letter(mid_spoke[k] + 1)});
      faces.push_back({Letter(mid_spoke[k] + 1), second, -Letter(next_corner + 1)});
    }
  }
  return {CellularSurface(V + E + F, std::move(edges), std::move(faces)),
          std::move(midpoint), std::move(center)};
}

struct StarTriangulation {
  CellularSurface surface;
  std::vector<std::int32_t> face_center;  // new vertex inside old face f
  // spoke edge toward the start vertex of side k of old face f
  std::vector<std::vector<std::int32_t>> spokes;
  std::int32_t old_edge_count = 0;        // edges below this id are original
};

// cone every face from a new center vertex; original edges keep ids, so
// edge lists of curves stay valid
inline StarTriangulation star_triangulation(const CellularSurface& s) {
  std::int32_t V = s.vertex_count(), E = s.edge_count(), F = s.face_count();
  std::vector<EdgeEnds> edges = s.edges();
  std::vector<std::int32_t> center(static_cast<std::size_t>(F));
  std::vector<std::vector<std::int32_t>> spokes(static_cast<std::size_t>(F));
  std::vector<FaceWord> faces;
  for (std::int32_t f = 0; f < F; ++f) {
    center[std::size_t(f)] = V + f;
    const FaceWord& w = s.face(f);
    std::size_t L = w.size();
    std::vector<std::int32_t>& sp = spokes[std::size_t(f)];
    for (std::size_t k = 0; k < L; ++k) {
      sp.push_back(std::int32_t(edges.size()));
      edges.push_back({V + f, s.tail_of(w[k])});
    }
    for (std::size_t k = 0; k < L; ++k)
      faces.push_back(
          {Letter(sp[k] + 1), w[k], -Letter(sp[(k + 1) % L] + 1)});
  }
  return {CellularSurface(V + F, std::move(edges), std::move(faces)), std::move(center),
          std::move(spokes), E};
}

}  // namespace heegaard
