#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "heegaard/marked.hpp"
#include "heegaard/rng.hpp"
#include "heegaard/surface.hpp"

using namespace heegaard;

namespace {

FaceWord min_rotation(const FaceWord& w) {
  FaceWord best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    FaceWord r = rotate_word(w, k);
    if (r < best) best = r;
  }
  return best;
}

std::multiset<FaceWord> canonical_faces(const CellularSurface& s) {
  std::multiset<FaceWord> out;
  for (const FaceWord& f : s.faces()) out.insert(min_rotation(f));
  return out;
}

// A closed curve entering a face through one edge must leave through an
// edge of the same face.  Crossing letter w exits the face holding side
// w and enters the face holding side -w.
void check_trace(const CellularSurface& s, const Word& w) {
  REQUIRE(!w.empty());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter cur = w[i], nxt = w[(i + 1) % w.size()];
    CHECK(s.side_face(-cur) == s.side_face(nxt));
  }
}

Word scan(const CellularSurface& s, std::int32_t edge, bool ccw, bool rev) {
  Word w = s.sweep_letters(head_dart(edge), tail_dart(edge), ccw);
  return rev ? inverse_word(w) : w;
}

}  // namespace

TEST_CASE("genus 1 marked surface matches the reference table") {
  MarkedSurface ms = build_marked_surface(1);
  CHECK(ms.genus == 1);
  CHECK(ms.surface.genus() == 1);
  CHECK(ms.surface.vertex_count() == 1);
  CHECK(ms.surface.edge_count() == 2);
  CHECK(ms.surface.faces() == std::vector<FaceWord>{{1, 2, -1, -2}});
  CHECK(ms.alpha == std::vector<std::vector<Letter>>{{1}});
  REQUIRE(ms.generators.size() == 2);
  CHECK(ms.generators[0].name == "a");
  CHECK(ms.generators[0].edges == std::vector<Letter>{1});
  CHECK(ms.generators[0].base == Word{2});
  CHECK(ms.generators[0].offsets == std::vector<std::int32_t>{0});
  CHECK(ms.generators[1].name == "l");
  CHECK(ms.generators[1].edges == std::vector<Letter>{2});
  CHECK(ms.generators[1].base == Word{-1});
  CHECK(ms.generators[1].offsets == std::vector<std::int32_t>{0});
  CHECK(ms.generator("l").base == Word{-1});
  CHECK(ms.find("x") == nullptr);
}

TEST_CASE("genus 2 marked surface matches the reference table") {
  MarkedSurface ms = build_marked_surface(2);
  CHECK(ms.genus == 2);
  CHECK(ms.surface.genus() == 2);
  CHECK(ms.surface.vertex_count() == 1);
  CHECK(ms.surface.edge_count() == 5);
  CHECK(ms.alpha == std::vector<std::vector<Letter>>{{1}, {5}});
  REQUIRE(ms.generators.size() == 5);
  const char* names[] = {"a", "b", "c", "d", "e"};
  std::vector<Word> bases = {{2}, {-3, 1}, {2, 4}, {-3, -5}, {-4}};
  for (int i = 0; i < 5; ++i) {
    CHECK(ms.generators[std::size_t(i)].name == names[i]);
    CHECK(ms.generators[std::size_t(i)].edges == std::vector<Letter>{Letter(i + 1)});
    CHECK(ms.generators[std::size_t(i)].base == bases[std::size_t(i)]);
    CHECK(ms.generators[std::size_t(i)].offsets == std::vector<std::int32_t>{0});
  }
}

TEST_CASE("table words are honest vertex scans") {
  // each stored word is the sweep read around the vertex between leaving
  // and re-entering the curve's edge, on the frozen side and reading
  // direction of the construction
  MarkedSurface t1 = build_marked_surface(1);
  CHECK(scan(t1.surface, 0, true, false) == t1.generator("a").base);
  CHECK(scan(t1.surface, 1, true, false) == t1.generator("l").base);

  MarkedSurface t2 = build_marked_surface(2);
  struct Route {
    const char* name;
    std::int32_t edge;
    bool ccw, rev;
  };
  for (Route r : std::initializer_list<Route>{{"a", 0, true, false},
                                              {"b", 1, false, true},
                                              {"c", 2, true, true},
                                              {"d", 3, true, true},
                                              {"e", 4, false, false}})
    CHECK(scan(t2.surface, r.edge, r.ccw, r.rev) == t2.generator(r.name).base);
}

TEST_CASE("generator words are face-consistent traces") {
  for (std::int32_t g = 1; g <= 8; ++g) {
    MarkedSurface ms = build_marked_surface(g);
    for (const Generator& s : ms.generators) {
      check_trace(ms.surface, s.base);
      CHECK(free_reduce(s.base) == s.base);
      REQUIRE(s.offsets.size() == s.edges.size());
      for (std::int32_t off : s.offsets) {
        CHECK(off >= 0);
        CHECK(std::size_t(off) < std::max<std::size_t>(s.base.size(), 1));
      }
    }
  }
}

TEST_CASE("chain surfaces have the right shape") {
  for (std::int32_t g = 3; g <= 8; ++g) {
    MarkedSurface ms = build_marked_surface(g);
    const CellularSurface& s = ms.surface;
    CHECK(s.genus() == g);
    CHECK(s.vertex_count() == g);
    CHECK(s.edge_count() == 4 * g - 2);
    CHECK(s.face_count() == g);
    CHECK(std::int32_t(ms.generators.size()) == 3 * g - 1);
    REQUIRE(std::int32_t(ms.alpha.size()) == g);
    // alpha curves are the a-handle loops
    for (std::int32_t h = 0; h < g; ++h) {
      CHECK(ms.alpha[std::size_t(h)] == ms.generators[std::size_t(h)].edges);
      CHECK(ms.generators[std::size_t(h)].name == "a" + std::to_string(h + 1));
    }
    // distinct generators never share an edge
    std::set<std::int32_t> used;
    for (const Generator& gen : ms.generators)
      for (Letter l : gen.edges)
        CHECK(used.insert(edge_of_letter(l)).second);
  }
}

TEST_CASE("rotations round-trip through face tracing") {
  for (std::int32_t g : {1, 2, 3, 5}) {
    MarkedSurface ms = build_marked_surface(g);
    const CellularSurface& s = ms.surface;
    CellularSurface back = CellularSurface::from_rotations(
        s.vertex_count(), s.edges(), s.vertex_rotations());
    CHECK(canonical_faces(back) == canonical_faces(s));
    for (std::int32_t e = 0; e < s.edge_count(); ++e)
      for (Dart d : {tail_dart(e), head_dart(e)}) {
        CHECK(back.succ(d) == s.succ(d));
        CHECK(s.pred(s.succ(d)) == d);
        CHECK(s.dart_vertex(s.succ(d)) == s.dart_vertex(d));
      }
  }
}

TEST_CASE("surface validation rejects broken complexes") {
  // a side used twice with the same sign
  CHECK_THROWS_AS(CellularSurface(1, {{0, 0}, {0, 0}}, {{1, 2, 1, -2}}), error);
  // boundary word that is not a closed walk
  CHECK_THROWS_AS(CellularSurface(2, {{0, 1}, {0, 0}}, {{1, 2, -1}, {-2}}), error);
  // two tori sharing no vertex
  CHECK_THROWS_AS(CellularSurface(2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}},
                                  {{1, 2, -1, -2}, {3, 4, -3, -4}}),
                  error);
  // pinched wedge of two circles
  CHECK_THROWS_AS(CellularSurface(1, {{0, 0}, {0, 0}}, {{1, -1}, {2, -2}}), error);
  CHECK_THROWS_AS(build_marked_surface(0), error);
  CHECK_THROWS_AS(build_marked_surface(-3), error);
}

TEST_CASE("corner coordinates") {
  CornerCoords c = corner_coordinates(2, 2, 2);
  CHECK(c.xy == 1);
  CHECK(c.yz == 1);
  CHECK(c.zx == 1);
  c = corner_coordinates(0, 0, 0);
  CHECK(c.xy == 0);
  CHECK(c.yz == 0);
  CHECK(c.zx == 0);
  c = corner_coordinates(5, 3, 2);
  CHECK(c.xy == 3);
  CHECK(c.yz == 0);
  CHECK(c.zx == 2);
  CHECK_THROWS_AS(corner_coordinates(1, 0, 0), error);   // odd sum
  CHECK_THROWS_AS(corner_coordinates(5, 1, 2), error);   // no triangle fits
  CHECK_THROWS_AS(corner_coordinates(0, 0, 2), error);
}

TEST_CASE("corner coordinates round-trip at arbitrary precision") {
  Rng rng(23);
  auto big = [&rng] {
    Int v = 0;
    for (int i = 0; i < 3; ++i) v = v * Int("18446744073709551616") + rng.uniform(~0ull);
    return v;
  };
  for (int trial = 0; trial < 40; ++trial) {
    Int xy = big(), yz = big(), zx = big();
    CornerCoords c = corner_coordinates(xy + zx, xy + yz, yz + zx);
    CHECK(c.xy == xy);
    CHECK(c.yz == yz);
    CHECK(c.zx == zx);
  }
}

TEST_CASE("barycentric subdivision of the two-triangle sphere") {
  CellularSurface sphere(3, {{0, 1}, {1, 2}, {2, 0}}, {{1, 2, 3}, {-3, -2, -1}});
  CHECK(sphere.genus() == 0);
  BarycentricSubdivision b = barycentric_subdivision(sphere);
  CHECK(b.surface.genus() == 0);
  CHECK(b.surface.vertex_count() == 3 + 3 + 2);
  CHECK(b.surface.edge_count() == 6 + 12);
  CHECK(b.surface.face_count() == 12);
  CHECK(b.surface.is_triangulation());
  CHECK(b.edge_midpoint == std::vector<std::int32_t>{3, 4, 5});
  CHECK(b.face_center == std::vector<std::int32_t>{6, 7});
}

TEST_CASE("barycentric subdivision preserves genus and refines curves") {
  for (std::int32_t g : {1, 2, 4}) {
    MarkedSurface ms = build_marked_surface(g);
    BarycentricSubdivision b = barycentric_subdivision(ms.surface);
    const CellularSurface& s = ms.surface;
    CHECK(b.surface.genus() == g);
    CHECK(b.surface.vertex_count() == s.vertex_count() + s.edge_count() + s.face_count());
    CHECK(b.surface.edge_count() == 6 * s.edge_count());
    CHECK(b.surface.face_count() == 4 * s.edge_count());
    for (const Generator& gen : ms.generators) {
      std::vector<Letter> lifted = b.map_edge_list(gen.edges);
      REQUIRE(lifted.size() == 2 * gen.edges.size());
      // consecutive halves share the midpoint vertex of the old edge
      for (std::size_t i = 0; i < gen.edges.size(); ++i) {
        std::int32_t mid = b.edge_midpoint[std::size_t(edge_of_letter(gen.edges[i]))];
        CHECK(b.surface.head_of(lifted[2 * i]) == mid);
        CHECK(b.surface.tail_of(lifted[2 * i + 1]) == mid);
      }
    }
  }
  // orientation: +e becomes its halves in order, -e the reversed inverses
  BarycentricSubdivision b = barycentric_subdivision(build_marked_surface(1).surface);
  CHECK(b.map_edge_list({1}) == std::vector<Letter>{1, 2});
  CHECK(b.map_edge_list({-1}) == std::vector<Letter>{-2, -1});
  CHECK(b.map_edge_list({2, -1}) == std::vector<Letter>{3, 4, -2, -1});
}

TEST_CASE("star triangulation cones every face and keeps old edges") {
  for (std::int32_t g : {1, 2, 3, 6}) {
    MarkedSurface ms = build_marked_surface(g);
    const CellularSurface& s = ms.surface;
    StarTriangulation st = star_triangulation(s);
    CHECK(st.surface.genus() == g);
    CHECK(st.surface.is_triangulation());
    CHECK(st.old_edge_count == s.edge_count());
    CHECK(st.surface.face_count() == 2 * s.edge_count());
    CHECK(st.surface.vertex_count() == s.vertex_count() + s.face_count());
    for (std::int32_t e = 0; e < s.edge_count(); ++e) {
      CHECK(st.surface.edges()[std::size_t(e)].tail == s.edges()[std::size_t(e)].tail);
      CHECK(st.surface.edges()[std::size_t(e)].head == s.edges()[std::size_t(e)].head);
    }
    for (std::int32_t f = 0; f < s.face_count(); ++f) {
      REQUIRE(st.spokes[std::size_t(f)].size() == s.face(f).size());
      for (std::size_t k = 0; k < s.face(f).size(); ++k) {
        std::int32_t sp = st.spokes[std::size_t(f)][k];
        CHECK(st.surface.edges()[std::size_t(sp)].tail == st.face_center[std::size_t(f)]);
        CHECK(st.surface.edges()[std::size_t(sp)].head == s.tail_of(s.face(f)[k]));
      }
    }
  }
}

TEST_CASE("sweep letters read crossings with direction-true signs") {
  MarkedSurface ms = build_marked_surface(2);
  const CellularSurface& s = ms.surface;
  // around the single vertex, from the head of edge c back to its tail
  CHECK(s.sweep_letters(head_dart(2), tail_dart(2), true) == Word{-4, -2});
  CHECK(s.sweep_letters(head_dart(2), tail_dart(2), false) ==
        Word{-5, -4, 5, 1, -2, -1});
  // the two routes between the same darts cross complementary dart sets,
  // ccw reading the negated dart and cw the dart itself
  for (std::int32_t e = 0; e < s.edge_count(); ++e) {
    Word ccw = s.sweep_letters(head_dart(e), tail_dart(e), true);
    Word cw = s.sweep_letters(head_dart(e), tail_dart(e), false);
    CHECK(ccw.size() + cw.size() == std::size_t(2 * s.edge_count() - 2));
    std::set<Dart> crossed;
    for (Letter l : ccw) crossed.insert(-l);
    for (Letter l : cw) crossed.insert(l);
    CHECK(crossed.size() == ccw.size() + cw.size());
    CHECK(!crossed.count(head_dart(e)));
    CHECK(!crossed.count(tail_dart(e)));
  }
}
