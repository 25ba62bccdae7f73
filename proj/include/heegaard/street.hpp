#pragma once

// Street complexes.  Tracing a compressed multicurve over a marked surface
// produces an overlay of ports (edge intervals between crossings), chords
// (curve arcs inside faces) and regions (complementary disks).  Regions
// coarsen into junctions and blocks, blocks chain into streets, and the
// union of regions across ports gives the complementary pieces whose genus
// and boundary census decides whether a diagram is a Heegaard diagram.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heegaard/curves.hpp"
#include "heegaard/diagram.hpp"

namespace heegaard {

inline constexpr std::uint64_t street_guard_default = 1000000;

// the street complex of an embedded multicurve has junction and street
// counts bounded by a multiple of the cell count of the surface alone,
// independent of how often the curves wrap
inline constexpr std::int64_t street_census_factor = 4;

struct StreetCrossing {
  std::int32_t component = 0;
  std::int64_t position = 0;
};

struct Street {
  bool closed = false;
  std::vector<std::int64_t> ports;
  Word letters;
};

struct StreetPiece {
  std::int64_t chi = 0;
  std::int64_t boundary = 0;
  std::int32_t genus = 0;
  std::int64_t regions = 0;
  std::vector<std::set<std::int32_t>> circle_components;
};

struct StreetComplex {
  std::vector<Word> words;
  std::vector<std::vector<StreetCrossing>> edge_order;
  std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> crossing_place;
  std::int64_t crossings = 0;

  std::vector<std::int64_t> port_start;
  std::int64_t port_count = 0;
  std::vector<std::int64_t> segment_region;
  std::int64_t region_count = 0;
  std::vector<bool> region_block;
  std::int64_t junctions = 0;
  std::vector<Street> streets;

  std::vector<std::int64_t> chord_start;
  std::vector<std::array<std::int64_t, 2>> chord_side;

  std::vector<std::int32_t> region_piece;
  std::vector<StreetPiece> pieces;

  std::int32_t port_edge(std::int64_t p) const {
    auto it = std::upper_bound(port_start.begin(), port_start.end(), p);
    return std::int32_t(it - port_start.begin()) - 1;
  }
  std::int64_t port_of(std::int32_t e, std::int64_t i) const {
    return port_start[std::size_t(e)] + i;
  }
  std::int64_t ports_on(std::int32_t e) const {
    return port_start[std::size_t(e) + 1] - port_start[std::size_t(e)];
  }
  std::int64_t port_region(std::int64_t p, bool minus) const {
    return segment_region[std::size_t(2 * p + (minus ? 1 : 0))];
  }
  std::int64_t chord_of(std::int32_t component, std::int64_t position) const {
    return chord_start[std::size_t(component)] + position;
  }
};

struct DiagramCheck {
  bool valid = false;
  std::vector<StreetPiece> pieces;
};

namespace detail {

struct DisjointSets {
  std::vector<std::int64_t> up;
  explicit DisjointSets(std::int64_t n) : up(std::size_t(n)) {
    std::iota(up.begin(), up.end(), std::int64_t(0));
  }
  std::int64_t find(std::int64_t x) {
    while (up[std::size_t(x)] != x) {
      up[std::size_t(x)] = up[std::size_t(up[std::size_t(x)])];
      x = up[std::size_t(x)];
    }
    return x;
  }
  void unite(std::int64_t a, std::int64_t b) { up[std::size_t(find(a))] = find(b); }
};

inline void check_crossing_guard(const Int& total, std::uint64_t guard) {
  require(total <= Int(guard), errc::guard,
          "beta encodes " + to_dec(total) + " crossings but the guard allows " +
              std::to_string(guard));
}

// a strand crossing an edge with letter l passes from the face of side +l
// into the face of side -l, so the arc after position k lies in the face
// of side -w[k] and leaves it through the side +w[k+1]
inline void validate_strand_words(const CellularSurface& s, const std::vector<Word>& words) {
  for (const Word& w : words) {
    require(!w.empty(), errc::domain, "component sequence is empty");
    for (Letter l : w)
      require(l != 0 && edge_of_letter(l) < s.edge_count(), errc::domain,
              "sequence letter outside edge range");
    for (std::size_t k = 0; k < w.size(); ++k)
      require(s.side_face(-w[k]) == s.side_face(w[(k + 1) % w.size()]), errc::domain,
              "sequence is not realizable on the surface");
  }
}

// route one: order the crossings along each edge by following both strands
// into the face behind the edge until their exit sides diverge; parallel
// strands of distinct components tie break as a left pushoff of the
// component with the smaller index
struct StrandOrder {
  const CellularSurface* s;
  const std::vector<Word>* words;
  std::int64_t total;

  struct Cursor {
    std::int32_t comp;
    std::int64_t pos;
    std::int64_t dir;
  };

  Letter exit_letter(const Cursor& c) const {
    const Word& w = (*words)[std::size_t(c.comp)];
    std::int64_t n = std::int64_t(w.size());
    if (c.dir > 0) return w[std::size_t((c.pos + 1) % n)];
    return -w[std::size_t((c.pos + n - 1) % n)];
  }

  void advance(Cursor& c) const {
    std::int64_t n = std::int64_t((*words)[std::size_t(c.comp)].size());
    c.pos = (c.pos + c.dir + n) % n;
  }

  bool operator()(const StreetCrossing& u, const StreetCrossing& v) const {
    if (u.component == v.component && u.position == v.position) return false;
    Letter lu = (*words)[std::size_t(u.component)][std::size_t(u.position)];
    Letter lv = (*words)[std::size_t(v.component)][std::size_t(v.position)];
    Cursor cu{u.component, u.position, lu > 0 ? 1 : -1};
    Cursor cv{v.component, v.position, lv > 0 ? 1 : -1};
    // both strands just crossed into the face behind the shared edge
    Side entry = -Side(std::abs(lu));
    for (std::int64_t step = 0; step <= total + 1; ++step) {
      Letter mu = exit_letter(cu), mv = exit_letter(cv);
      if (mu != mv) {
        auto [f, p_in] = s->side_place(entry);
        std::int64_t n = std::int64_t(s->face(f).size());
        std::int64_t qu = s->side_place(mu).second, qv = s->side_place(mv).second;
        return (qu - p_in + n) % n < (qv - p_in + n) % n;
      }
      advance(cu);
      advance(cv);
      entry = -mu;
    }
    if (u.component == v.component) {
      require(cu.dir != cv.dir, errc::domain, "component is a proper power");
      throw error(errc::domain, "multicurve is not embedded on the surface");
    }
    std::int64_t base_dir = u.component < v.component ? cu.dir : cv.dir;
    return (base_dir > 0) == (u.component < v.component);
  }
};

inline std::vector<std::vector<StreetCrossing>> order_from_words(const CellularSurface& s,
                                                                 const std::vector<Word>& words) {
  validate_strand_words(s, words);
  std::vector<std::vector<StreetCrossing>> order(std::size_t(s.edge_count()));
  std::int64_t total = 0;
  for (std::size_t c = 0; c < words.size(); ++c)
    for (std::size_t k = 0; k < words[c].size(); ++k) {
      order[std::size_t(edge_of_letter(words[c][k]))].push_back(
          {std::int32_t(c), std::int64_t(k)});
      ++total;
    }
  StrandOrder cmp{&s, &words, total};
  for (auto& column : order) std::sort(column.begin(), column.end(), cmp);
  return order;
}

// route two: on a triangulation the corner counts of the summed coordinate
// vector locate every arc, and walking arc to arc across edges recovers the
// cycles together with their crossing order along each edge
struct CoordTrace {
  std::vector<Word> words;
  std::vector<std::vector<StreetCrossing>> order;
  std::vector<std::vector<std::int64_t>> cycle_counts;
};

inline CoordTrace order_from_coords(const CellularSurface& s,
                                    const std::vector<std::vector<std::int64_t>>& comps) {
  std::size_t E = std::size_t(s.edge_count());
  std::vector<std::int64_t> n(E, 0);
  for (const auto& c : comps)
    for (std::size_t e = 0; e < E; ++e) n[e] += c[e];
  std::vector<std::int64_t> cross_start(E + 1, 0);
  for (std::size_t e = 0; e < E; ++e) cross_start[e + 1] = cross_start[e] + n[e];
  std::int64_t total = cross_start[E];

  auto app = [&](Side side, std::int64_t epos) {
    std::size_t e = std::size_t(edge_of_letter(side));
    return 2 * (cross_start[e] + epos) + (side < 0 ? 1 : 0);
  };
  auto edge_pos = [&](Side side, std::int64_t side_pos) {
    std::size_t e = std::size_t(edge_of_letter(side));
    return side > 0 ? side_pos : n[e] - 1 - side_pos;
  };

  std::vector<std::int64_t> partner(std::size_t(2 * total), -1);
  for (std::int32_t f = 0; f < s.face_count(); ++f) {
    const FaceWord& w = s.face(f);
    std::array<Int, 3> x{Int(n[std::size_t(edge_of_letter(w[0]))]),
                         Int(n[std::size_t(edge_of_letter(w[1]))]),
                         Int(n[std::size_t(edge_of_letter(w[2]))])};
    CornerCoords cc = corner_coordinates(x[0], x[1], x[2]);
    std::array<std::int64_t, 3> corner{to_int64(cc.xy, "corner count"),
                                       to_int64(cc.yz, "corner count"),
                                       to_int64(cc.zx, "corner count")};
    for (int i = 0; i < 3; ++i) {
      Side si = w[std::size_t(i)], sj = w[std::size_t((i + 1) % 3)];
      std::int64_t xi = n[std::size_t(edge_of_letter(si))];
      for (std::int64_t t = 0; t < corner[std::size_t(i)]; ++t) {
        std::int64_t a = app(si, edge_pos(si, xi - 1 - t));
        std::int64_t b = app(sj, edge_pos(sj, t));
        partner[std::size_t(a)] = b;
        partner[std::size_t(b)] = a;
      }
    }
  }
  for (std::int64_t a : partner)
    require(a >= 0, errc::domain, "coordinates do not close up");

  CoordTrace out;
  out.order.assign(E, {});
  for (std::size_t e = 0; e < E; ++e)
    out.order[e].assign(std::size_t(n[e]), StreetCrossing{-1, -1});
  std::vector<bool> visited(std::size_t(total), false);
  for (std::size_t e = 0; e < E; ++e)
    for (std::int64_t idx = 0; idx < n[e]; ++idx) {
      if (visited[std::size_t(cross_start[e] + idx)]) continue;
      std::int32_t cycle = std::int32_t(out.words.size());
      Word word;
      std::vector<std::int64_t> counts(E, 0);
      std::int64_t start = 2 * (cross_start[e] + idx);
      std::int64_t cur = start;
      do {
        std::int64_t b = partner[std::size_t(cur)];
        std::int64_t crossing = b / 2;
        std::size_t be = 0;
        while (cross_start[be + 1] <= crossing) ++be;
        std::int64_t bidx = crossing - cross_start[be];
        Letter letter = (b % 2) ? -Letter(be + 1) : Letter(be + 1);
        out.order[be][std::size_t(bidx)] = {cycle, std::int64_t(word.size())};
        word.push_back(letter);
        ++counts[be];
        visited[std::size_t(crossing)] = true;
        cur = b ^ 1;
      } while (cur != start);
      out.words.push_back(std::move(word));
      out.cycle_counts.push_back(std::move(counts));
    }

  std::vector<std::vector<std::int64_t>> want = comps, got = out.cycle_counts;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  require(want == got, errc::domain, "coordinates do not split into the listed components");
  return out;
}

// the shared overlay: ports and face sides split into segments, segments
// merge across face corners and along both flanks of every chord, and the
// resulting regions carry the street and piece structure
inline StreetComplex build_overlay(const CellularSurface& s, std::vector<Word> words,
                                   std::vector<std::vector<StreetCrossing>> order) {
  StreetComplex sc;
  sc.words = std::move(words);
  sc.edge_order = std::move(order);
  std::int32_t E = s.edge_count();

  sc.port_start.assign(std::size_t(E) + 1, 0);
  for (std::int32_t e = 0; e < E; ++e) {
    sc.crossings += std::int64_t(sc.edge_order[std::size_t(e)].size());
    sc.port_start[std::size_t(e) + 1] =
        sc.port_start[std::size_t(e)] + std::int64_t(sc.edge_order[std::size_t(e)].size()) + 1;
  }
  sc.port_count = sc.port_start[std::size_t(E)];

  sc.crossing_place.assign(sc.words.size(), {});
  for (std::size_t c = 0; c < sc.words.size(); ++c)
    sc.crossing_place[c].assign(sc.words[c].size(), {-1, -1});
  for (std::int32_t e = 0; e < E; ++e)
    for (std::size_t i = 0; i < sc.edge_order[std::size_t(e)].size(); ++i) {
      const StreetCrossing& x = sc.edge_order[std::size_t(e)][i];
      auto& slot = sc.crossing_place[std::size_t(x.component)][std::size_t(x.position)];
      require(slot.first < 0, errc::domain, "edge order repeats a crossing");
      slot = {e, std::int64_t(i)};
    }
  for (const auto& comp : sc.crossing_place)
    for (const auto& slot : comp)
      require(slot.first >= 0, errc::domain, "edge order misses a crossing");

  auto count_on = [&](std::int32_t e) {
    return std::int64_t(sc.edge_order[std::size_t(e)].size());
  };
  auto seg = [&](std::int64_t port, bool minus) { return 2 * port + (minus ? 1 : 0); };
  auto first_seg = [&](Side side) {
    std::int32_t e = edge_of_letter(side);
    return side > 0 ? seg(sc.port_of(e, 0), false) : seg(sc.port_of(e, count_on(e)), true);
  };
  auto last_seg = [&](Side side) {
    std::int32_t e = edge_of_letter(side);
    return side > 0 ? seg(sc.port_of(e, count_on(e)), false) : seg(sc.port_of(e, 0), true);
  };
  auto before_seg = [&](Side side, std::int64_t idx) {
    std::int32_t e = edge_of_letter(side);
    return side > 0 ? seg(sc.port_of(e, idx), false) : seg(sc.port_of(e, idx + 1), true);
  };
  auto after_seg = [&](Side side, std::int64_t idx) {
    std::int32_t e = edge_of_letter(side);
    return side > 0 ? seg(sc.port_of(e, idx + 1), false) : seg(sc.port_of(e, idx), true);
  };

  DisjointSets ds(2 * sc.port_count);
  for (std::int32_t f = 0; f < s.face_count(); ++f) {
    const FaceWord& w = s.face(f);
    for (std::size_t k = 0; k < w.size(); ++k)
      ds.unite(last_seg(w[k]), first_seg(w[(k + 1) % w.size()]));
  }

  sc.chord_start.assign(sc.words.size() + 1, 0);
  for (std::size_t c = 0; c < sc.words.size(); ++c)
    sc.chord_start[c + 1] = sc.chord_start[c] + std::int64_t(sc.words[c].size());
  std::int64_t chord_total = sc.chord_start[sc.words.size()];

  for (std::size_t c = 0; c < sc.words.size(); ++c) {
    const Word& w = sc.words[c];
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::size_t k1 = (k + 1) % w.size();
      std::int64_t ia = sc.crossing_place[c][k].second;
      std::int64_t ib = sc.crossing_place[c][k1].second;
      ds.unite(after_seg(-w[k], ia), before_seg(w[k1], ib));
      ds.unite(before_seg(-w[k], ia), after_seg(w[k1], ib));
    }
  }

  // compress regions in order of their smallest segment
  sc.segment_region.assign(std::size_t(2 * sc.port_count), -1);
  std::vector<std::int64_t> region_of_root(std::size_t(2 * sc.port_count), -1);
  for (std::int64_t g = 0; g < 2 * sc.port_count; ++g) {
    std::int64_t root = ds.find(g);
    if (region_of_root[std::size_t(root)] < 0) region_of_root[std::size_t(root)] = sc.region_count++;
    sc.segment_region[std::size_t(g)] = region_of_root[std::size_t(root)];
  }
  std::int64_t structural = (2 - 2 * std::int64_t(s.genus())) - s.vertex_count() + E + sc.crossings;
  require(sc.region_count == structural, errc::domain,
          "multicurve is not embedded on the surface");

  // chords keep the regions on their two flanks; left is the side of the
  // segment just before the start appearance along its face side
  sc.chord_side.assign(std::size_t(chord_total), {-1, -1});
  std::vector<std::int64_t> region_chords(std::size_t(sc.region_count), 0);
  for (std::size_t c = 0; c < sc.words.size(); ++c) {
    const Word& w = sc.words[c];
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::int64_t ia = sc.crossing_place[c][k].second;
      std::int64_t left = sc.segment_region[std::size_t(before_seg(-w[k], ia))];
      std::int64_t right = sc.segment_region[std::size_t(after_seg(-w[k], ia))];
      sc.chord_side[std::size_t(sc.chord_of(std::int32_t(c), std::int64_t(k)))] = {left, right};
      ++region_chords[std::size_t(left)];
      ++region_chords[std::size_t(right)];
    }
  }

  // a block is a strip meeting exactly two side segments and at least one
  // chord; bigon faces without crossings stay junctions
  std::vector<std::int64_t> region_segs(std::size_t(sc.region_count), 0);
  std::vector<std::array<std::int64_t, 2>> region_seg_pair(std::size_t(sc.region_count),
                                                           {-1, -1});
  for (std::int64_t g = 0; g < 2 * sc.port_count; ++g) {
    std::int64_t r = sc.segment_region[std::size_t(g)];
    if (region_segs[std::size_t(r)] < 2) region_seg_pair[std::size_t(r)][std::size_t(region_segs[std::size_t(r)])] = g;
    ++region_segs[std::size_t(r)];
  }
  sc.region_block.assign(std::size_t(sc.region_count), false);
  for (std::int64_t r = 0; r < sc.region_count; ++r)
    sc.region_block[std::size_t(r)] =
        region_segs[std::size_t(r)] == 2 && region_chords[std::size_t(r)] >= 1;
  for (bool b : sc.region_block) sc.junctions += b ? 0 : 1;

  // streets walk directed port states through blocks; walking marks both
  // directions so each street is listed once
  auto state_id = [&](std::int64_t port, bool from_minus) { return 2 * port + (from_minus ? 1 : 0); };
  std::vector<bool> state_done(std::size_t(2 * sc.port_count), false);
  auto walk = [&](std::int64_t port, bool from_minus, bool closed) {
    Street st;
    st.closed = closed;
    std::int64_t p = port;
    bool minus = from_minus;
    for (std::int64_t step = 0; step <= 2 * sc.port_count; ++step) {
      std::int32_t e = sc.port_edge(p);
      st.ports.push_back(p);
      st.letters.push_back(minus ? -Letter(e + 1) : Letter(e + 1));
      state_done[std::size_t(state_id(p, minus))] = true;
      state_done[std::size_t(state_id(p, !minus))] = true;
      std::int64_t r = sc.port_region(p, !minus);
      if (!sc.region_block[std::size_t(r)]) {
        require(!closed, errc::domain, "street walk left a closed cycle");
        return st;
      }
      std::int64_t entered = seg(p, !minus);
      std::int64_t other = region_seg_pair[std::size_t(r)][0] == entered
                               ? region_seg_pair[std::size_t(r)][1]
                               : region_seg_pair[std::size_t(r)][0];
      p = other / 2;
      minus = other % 2 == 1;
      if (closed && p == port && minus == from_minus) return st;
    }
    throw error(errc::domain, "street walk failed to terminate");
  };
  for (std::int64_t p = 0; p < sc.port_count; ++p)
    for (int m = 0; m < 2; ++m) {
      if (state_done[std::size_t(state_id(p, m == 1))]) continue;
      bool own_block = sc.region_block[std::size_t(sc.port_region(p, m == 1))];
      bool far_block = sc.region_block[std::size_t(sc.port_region(p, m == 0))];
      if (!own_block && far_block) sc.streets.push_back(walk(p, m == 1, false));
    }
  for (std::int64_t p = 0; p < sc.port_count; ++p)
    for (int m = 0; m < 2; ++m) {
      if (state_done[std::size_t(state_id(p, m == 1))]) continue;
      bool own_block = sc.region_block[std::size_t(sc.port_region(p, m == 1))];
      bool far_block = sc.region_block[std::size_t(sc.port_region(p, m == 0))];
      if (own_block && far_block) sc.streets.push_back(walk(p, m == 1, true));
    }
  for (std::int64_t p = 0; p < sc.port_count; ++p) {
    if (state_done[std::size_t(state_id(p, false))]) continue;
    bool any_block = sc.region_block[std::size_t(sc.port_region(p, false))] ||
                     sc.region_block[std::size_t(sc.port_region(p, true))];
    if (!any_block) {
      Street st;
      st.ports.push_back(p);
      st.letters.push_back(Letter(sc.port_edge(p) + 1));
      state_done[std::size_t(state_id(p, false))] = true;
      state_done[std::size_t(state_id(p, true))] = true;
      sc.streets.push_back(std::move(st));
    }
  }

  // pieces are the complement components: regions merged across every port
  DisjointSets pd(sc.region_count);
  for (std::int64_t p = 0; p < sc.port_count; ++p)
    pd.unite(sc.port_region(p, false), sc.port_region(p, true));
  std::vector<std::int32_t> piece_of_root(std::size_t(sc.region_count), -1);
  sc.region_piece.assign(std::size_t(sc.region_count), -1);
  std::int32_t piece_count = 0;
  for (std::int64_t r = 0; r < sc.region_count; ++r) {
    std::int64_t root = pd.find(r);
    if (piece_of_root[std::size_t(root)] < 0) piece_of_root[std::size_t(root)] = piece_count++;
    sc.region_piece[std::size_t(r)] = piece_of_root[std::size_t(root)];
  }
  sc.pieces.assign(std::size_t(piece_count), StreetPiece{});
  auto piece_at = [&](std::int64_t region) { return std::size_t(sc.region_piece[std::size_t(region)]); };

  // bordered euler count: original vertices, strand side copies of each
  // crossing, ports plus chord sides as edges, regions as faces
  std::vector<std::int64_t> v_count(std::size_t(piece_count), 0);
  std::vector<std::int64_t> e_count(std::size_t(piece_count), 0);
  std::vector<std::int64_t> f_count(std::size_t(piece_count), 0);
  std::vector<std::int64_t> vertex_region(std::size_t(s.vertex_count()), -1);
  for (std::int32_t f = 0; f < s.face_count(); ++f)
    for (Side side : s.face(f)) {
      std::int64_t& slot = vertex_region[std::size_t(s.tail_of(side))];
      if (slot < 0) slot = sc.segment_region[std::size_t(first_seg(side))];
    }
  for (std::int32_t v = 0; v < s.vertex_count(); ++v) {
    require(vertex_region[std::size_t(v)] >= 0, errc::domain, "vertex misses every face corner");
    ++v_count[piece_at(vertex_region[std::size_t(v)])];
  }
  for (std::int64_t ch = 0; ch < chord_total; ++ch) {
    ++v_count[piece_at(sc.chord_side[std::size_t(ch)][0])];
    ++v_count[piece_at(sc.chord_side[std::size_t(ch)][1])];
    ++e_count[piece_at(sc.chord_side[std::size_t(ch)][0])];
    ++e_count[piece_at(sc.chord_side[std::size_t(ch)][1])];
  }
  for (std::int64_t p = 0; p < sc.port_count; ++p) ++e_count[piece_at(sc.port_region(p, false))];
  for (std::int64_t r = 0; r < sc.region_count; ++r) {
    ++f_count[piece_at(r)];
    ++sc.pieces[piece_at(r)].regions;
  }

  // boundary circles: chord sides link along each strand side through the
  // crossings
  DisjointSets cd(2 * chord_total);
  for (std::size_t c = 0; c < sc.words.size(); ++c) {
    std::int64_t len = std::int64_t(sc.words[c].size());
    for (std::int64_t k = 0; k < len; ++k) {
      std::int64_t before = sc.chord_of(std::int32_t(c), (k + len - 1) % len);
      std::int64_t after = sc.chord_of(std::int32_t(c), k);
      cd.unite(2 * before, 2 * after);
      cd.unite(2 * before + 1, 2 * after + 1);
    }
  }
  std::vector<std::int32_t> circle_of_root(std::size_t(2 * chord_total), -1);
  std::vector<std::size_t> circle_piece;
  std::vector<std::set<std::int32_t>> circle_comps;
  for (std::size_t c = 0; c < sc.words.size(); ++c)
    for (std::size_t k = 0; k < sc.words[c].size(); ++k)
      for (int side = 0; side < 2; ++side) {
        std::int64_t id = 2 * sc.chord_of(std::int32_t(c), std::int64_t(k)) + side;
        std::int64_t root = cd.find(id);
        if (circle_of_root[std::size_t(root)] < 0) {
          circle_of_root[std::size_t(root)] = std::int32_t(circle_piece.size());
          circle_piece.push_back(piece_at(sc.chord_side[std::size_t(id / 2)][std::size_t(side)]));
          circle_comps.push_back({});
        }
        circle_comps[std::size_t(circle_of_root[std::size_t(root)])].insert(std::int32_t(c));
      }
  for (std::size_t i = 0; i < circle_piece.size(); ++i) {
    ++sc.pieces[circle_piece[i]].boundary;
    sc.pieces[circle_piece[i]].circle_components.push_back(circle_comps[i]);
  }

  for (std::int32_t pc = 0; pc < piece_count; ++pc) {
    StreetPiece& piece = sc.pieces[std::size_t(pc)];
    piece.chi = v_count[std::size_t(pc)] - e_count[std::size_t(pc)] + f_count[std::size_t(pc)];
    std::int64_t twice_genus = 2 - piece.chi - piece.boundary;
    require(twice_genus >= 0 && twice_genus % 2 == 0, errc::domain,
            "multicurve is not embedded on the surface");
    piece.genus = std::int32_t(twice_genus / 2);
  }
  return sc;
}

}  // namespace detail

// recover the cyclic crossing words of a normal multicurve on a
// triangulated surface; components come back in trace order
inline SequenceMulticurve coords_to_sequences(const CellularSurface& s,
                                              const NormalCoordinates& nc,
                                              std::uint64_t guard = street_guard_default) {
  require(s.is_triangulation(), errc::domain, "coordinate tracing needs a triangulated surface");
  Int total = 0;
  std::vector<std::vector<std::int64_t>> comps;
  for (const auto& comp : nc.components) {
    require(comp.size() == std::size_t(s.edge_count()), errc::domain,
            "coordinate vector length differs from edge count");
    std::vector<std::int64_t> v;
    for (const Int& x : comp) {
      require(x >= 0, errc::domain, "normal coordinates must be nonnegative");
      total += x;
      v.push_back(to_int64(x, "normal coordinate"));
    }
    comps.push_back(std::move(v));
  }
  detail::check_crossing_guard(total, guard);
  detail::CoordTrace t = detail::order_from_coords(s, comps);
  SequenceMulticurve out;
  for (const Word& w : t.words) out.components.push_back(slp_trivial(w));
  return out;
}

inline StreetComplex trace_street_complex(const HeegaardDiagram& d,
                                          std::uint64_t guard = street_guard_default) {
  const CellularSurface& s = d.marked.surface;
  if (d.sequences) {
    Int total = 0;
    for (const Slp& comp : d.sequences->components) {
      Int len = slp_length(comp);
      require(len > 0, errc::domain, "component sequence is empty");
      total += len;
    }
    detail::check_crossing_guard(total, guard);
    std::vector<Word> words;
    for (const Slp& comp : d.sequences->components) {
      Word w = cyclic_reduce(slp_expand(comp, guard));
      require(!w.empty(), errc::domain, "component sequence reduces to the empty word");
      words.push_back(std::move(w));
    }
    auto order = detail::order_from_words(s, words);
    return detail::build_overlay(s, std::move(words), std::move(order));
  }
  require(d.coordinates.has_value(), errc::domain, "diagram has no beta encoding");
  require(s.is_triangulation(), errc::domain, "coordinate tracing needs a triangulated surface");
  Int total = 0;
  std::vector<std::vector<std::int64_t>> comps;
  for (const auto& comp : d.coordinates->components) {
    std::vector<std::int64_t> v;
    for (const Int& x : comp) {
      total += x;
      v.push_back(to_int64(x, "normal coordinate"));
    }
    comps.push_back(std::move(v));
  }
  detail::check_crossing_guard(total, guard);
  detail::CoordTrace t = detail::order_from_coords(s, comps);
  return detail::build_overlay(s, std::move(t.words), std::move(t.order));
}

// a diagram is valid when the beta complement is a single planar piece
// bounded by one circle per curve side, two per genus
inline DiagramCheck check_diagram(const HeegaardDiagram& d,
                                  std::uint64_t guard = street_guard_default) {
  if (d.sequences) {
    for (const Slp& comp : d.sequences->components)
      if (slp_length(comp) == 0) return {false, {}};
  } else if (d.coordinates) {
    for (const auto& comp : d.coordinates->components) {
      Int total = 0;
      for (const Int& x : comp) total += x;
      if (total == 0) return {false, {}};
    }
  }
  StreetComplex sc = trace_street_complex(d, guard);
  bool valid = sc.pieces.size() == 1 && sc.pieces[0].boundary == 2 * d.genus() &&
               sc.pieces[0].genus == 0;
  return {valid, std::move(sc.pieces)};
}

}  // namespace heegaard
