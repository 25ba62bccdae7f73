#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#include "heegaard/bigint.hpp"
#include "heegaard/curves.hpp"
#include "heegaard/errors.hpp"
#include "heegaard/marked.hpp"
#include "heegaard/word.hpp"

namespace heegaard {

// A diagram is the marked surface carrying the alpha system plus a beta
// system held as compressed sequences, normal coordinates, or both.
struct HeegaardDiagram {
  MarkedSurface marked;
  std::optional<SequenceMulticurve> sequences;
  std::optional<NormalCoordinates> coordinates;

  std::int32_t genus() const { return marked.genus; }

  std::size_t beta_count() const {
    return sequences ? sequences->components.size() : coordinates->components.size();
  }
};

// Validating constructor: at least one beta encoding, alpha count equal to
// the genus, and agreement of the two encodings when both are given.
inline HeegaardDiagram make_diagram(MarkedSurface marked,
                                    std::optional<SequenceMulticurve> sequences,
                                    std::optional<NormalCoordinates> coordinates,
                                    std::uint64_t desk_guard = 10000) {
  require(marked.alpha.size() == std::size_t(marked.genus), errc::domain,
          "alpha system size differs from genus");
  require(sequences.has_value() || coordinates.has_value(), errc::domain,
          "diagram needs at least one beta encoding");
  if (coordinates) {
    for (const auto& comp : coordinates->components) {
      require(comp.size() == std::size_t(marked.surface.edge_count()), errc::domain,
              "coordinate vector length differs from edge count");
      for (const Int& n : comp)
        require(n >= 0, errc::domain, "negative normal coordinate");
    }
  }
  if (sequences && coordinates) {
    NormalCoordinates derived =
        sequences_to_normal_coords(marked.surface, *sequences, desk_guard);
    require(derived.components == coordinates->components, errc::domain,
            "beta encodings disagree");
  }
  return HeegaardDiagram{std::move(marked), std::move(sequences), std::move(coordinates)};
}

// Compiles a twist word into a diagram.  Compiled sequences can carry
// removable backtracks, and normal coordinates only describe the reduced
// curve, so components are reduced at desk scale first; coordinates are
// attached only when every component fits the guard and is thus certified
// reduced, otherwise the diagram stays sequence-only.
inline HeegaardDiagram word_to_diagram(const HeegaardWord& w, const MarkedSurface& marked,
                                       std::uint64_t desk_guard = 10000) {
  SequenceMulticurve beta = apply_word(w, marked);
  bool certified = true;
  for (Slp& comp : beta.components) {
    if (slp_length(comp) > desk_guard) {
      certified = false;
      continue;
    }
    Word expanded = slp_expand(comp, desk_guard);
    Word reduced = cyclic_reduce(expanded);
    if (reduced != expanded) comp = slp_trivial(reduced);
  }
  std::optional<NormalCoordinates> coords;
  if (certified) coords = sequences_to_normal_coords(marked.surface, beta, desk_guard);
  return HeegaardDiagram{marked, std::move(beta), std::move(coords)};
}

// Size of the diagram: the surface cell count, the alpha edge list lengths,
// and the beta term measured in bits of the normal coordinates when present
// and as program complexity otherwise.
inline Int diagram_complexity(const HeegaardDiagram& d) {
  const CellularSurface& s = d.marked.surface;
  Int total = Int(s.vertex_count()) + s.edge_count() + s.face_count();
  for (const auto& a : d.marked.alpha) total += Int(a.size());
  if (d.coordinates) {
    for (const auto& comp : d.coordinates->components)
      for (const Int& n : comp) total += std::max<std::size_t>(bit_length(n), 1);
  } else {
    total += Int(d.sequences->complexity());
  }
  return total;
}

}  // namespace heegaard
