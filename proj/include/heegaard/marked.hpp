#pragma once
// Canonical marked model surfaces.  build_marked_surface(g) returns the
// fixed genus-g cellular surface together with the alpha system and all
// 3g-1 twist generators realized as edged curves.  Each generator
// carries its base intersection word, anchored right after the body of
// its first edge, and a rotation offset per edge entry selecting the
// word as read from just after that edge.
//
// For g <= 2 the surface is a one-vertex complex and the generator data
// is the frozen reference table.  For g >= 3 the surface is a chain of
// handles: one vertex per handle carrying the loops a_h and b_h, with
// neighbouring handles joined by a parallel pair of arcs s_j (south)
// and n_j (north) whose union bounds the connector curve c_j.  Edge
// ids: a_h = h, b_h = g+h, s_j = 2g+2j, n_j = 2g+2j+1.

#include <heegaard/errors.hpp>
#include <heegaard/slp.hpp>
#include <heegaard/surface.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heegaard {

struct Generator {
  std::string name;
  std::vector<Letter> edges;          // signed edge traversal of the curve
  Word base;                          // base intersection-sequence word
  std::vector<std::int32_t> offsets;  // rotation offset per edge entry
};

struct MarkedSurface {
  CellularSurface surface;
  std::vector<std::vector<Letter>> alpha;  // g disjoint edged curves
  std::vector<Generator> generators;       // 3g-1 named twist curves
  std::int32_t genus = 0;

  const Generator* find(const std::string& name) const {
    for (const Generator& s : generators)
      if (s.name == name) return &s;
    return nullptr;
  }
  const Generator& generator(const std::string& name) const {
    const Generator* s = find(name);
    require(s != nullptr, errc::domain, "unknown generator name: " + name);
    return *s;
  }
};

namespace detail {

inline MarkedSurface build_genus_1() {
  // one vertex, loops a=0 and b=1, square face
  CellularSurface s(1, {{0, 0}, {0, 0}}, {{1, 2, -1, -2}});
  MarkedSurface ms{std::move(s), {{1}}, {}, 1};
  ms.generators.push_back({"a", {1}, {2}, {0}});
  ms.generators.push_back({"l", {2}, {-1}, {0}});
  return ms;
}

inline MarkedSurface build_genus_2() {
  // one vertex, loops a..e = 0..4, a triangle and a heptagon
  CellularSurface s(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
                    {{1, 3, -5}, {2, -1, -2, 4, 5, -4, -3}});
  MarkedSurface ms{std::move(s), {{1}, {5}}, {}, 2};
  ms.generators.push_back({"a", {1}, {2}, {0}});
  ms.generators.push_back({"b", {2}, {-3, 1}, {0}});
  ms.generators.push_back({"c", {3}, {2, 4}, {0}});
  ms.generators.push_back({"d", {4}, {-3, -5}, {0}});
  ms.generators.push_back({"e", {5}, {-4}, {0}});
  return ms;
}

inline MarkedSurface build_chain(std::int32_t g) {
  auto ea = [g](std::int32_t h) { return h; };
  auto eb = [g](std::int32_t h) { return g + h; };
  auto es = [g](std::int32_t j) { return 2 * g + 2 * j; };
  auto en = [g](std::int32_t j) { return 2 * g + 2 * j + 1; };

  std::vector<EdgeEnds> edges(std::size_t(4 * g - 2));
  for (std::int32_t h = 0; h < g; ++h) {
    edges[std::size_t(ea(h))] = {h, h};
    edges[std::size_t(eb(h))] = {h, h};
  }
  for (std::int32_t j = 0; j + 1 < g; ++j) {
    edges[std::size_t(es(j))] = {j, j + 1};
    edges[std::size_t(en(j))] = {j, j + 1};
  }

  std::vector<std::vector<Dart>> rot;
  rot.resize(std::size_t(g));
  for (std::int32_t h = 0; h < g; ++h) {
    std::vector<Dart>& r = rot[std::size_t(h)];
    r = {tail_dart(ea(h)), head_dart(eb(h)), head_dart(ea(h))};
    if (h > 0) r.push_back(head_dart(es(h - 1)));
    if (h + 1 < g) r.push_back(tail_dart(en(h)));
    r.push_back(tail_dart(eb(h)));
    if (h + 1 < g) r.push_back(tail_dart(es(h)));
    if (h > 0) r.push_back(head_dart(en(h - 1)));
  }

  CellularSurface s = CellularSurface::from_rotations(g, std::move(edges), rot);
  require(s.genus() == g, errc::domain, "chain construction produced wrong genus");

  MarkedSurface ms{std::move(s), {}, {}, g};
  const CellularSurface& srf = ms.surface;
  for (std::int32_t h = 0; h < g; ++h) ms.alpha.push_back({Letter(ea(h) + 1)});
  for (std::int32_t h = 0; h < g; ++h) {
    Word w = srf.sweep_letters(head_dart(ea(h)), tail_dart(ea(h)), false);
    ms.generators.push_back(
        {"a" + std::to_string(h + 1), {Letter(ea(h) + 1)}, std::move(w), {0}});
  }
  for (std::int32_t h = 0; h < g; ++h) {
    Word w = srf.sweep_letters(head_dart(eb(h)), tail_dart(eb(h)), true);
    ms.generators.push_back(
        {"b" + std::to_string(h + 1), {Letter(eb(h) + 1)}, std::move(w), {0}});
  }
  for (std::int32_t j = 0; j + 1 < g; ++j) {
    // c_j runs out along s_j and back along n_j
    Word far = srf.sweep_letters(head_dart(es(j)), head_dart(en(j)), true);
    Word near = srf.sweep_letters(tail_dart(en(j)), tail_dart(es(j)), true);
    std::int32_t split = std::int32_t(far.size());
    Word w = std::move(far);
    w.insert(w.end(), near.begin(), near.end());
    ms.generators.push_back({"c" + std::to_string(j + 1),
                             {Letter(es(j) + 1), -Letter(en(j) + 1)},
                             std::move(w),
                             {0, split}});
  }
  return ms;
}

}  // namespace detail

inline MarkedSurface build_marked_surface(std::int32_t g) {
  require(g >= 1, errc::domain, "genus must be at least 1");
  if (g == 1) return detail::build_genus_1();
  if (g == 2) return detail::build_genus_2();
  return detail::build_chain(g);
}

}  // namespace heegaard
