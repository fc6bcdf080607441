#ifndef COVERCALC_GRAPH_COVER_HPP
#define COVERCALC_GRAPH_COVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "covercalc/piece_graph.hpp"

namespace covercalc {

// A labeled-graph covering map between piece graphs. Vertex and slot maps
// are functions so tests can construct deliberately broken maps.
struct GraphCoverMap {
  PieceGraph total;
  PieceGraph base;
  std::function<PieceGraph::Vertex(const PieceGraph::Vertex&)> vertex_map;
  // Slot correspondence at a total vertex; must be a bijection of edge stars.
  std::function<int(const PieceGraph::Vertex&, int)> slot_map;
};

// Universal cover of a labeled base graph: total vertices are freely reduced
// words over the base's edge-slot alphabet, mapped by walking the base.
// Materializable to the given radius; slot correspondence is the identity.
GraphCoverMap graph_universal_cover(const PieceGraph& base, int radius);

struct CoverCheck {
  bool ok = true;
  int checked_vertices = 0;
  std::vector<std::string> violations;
};

// Exhaustively verify local bijectivity and piece compatibility on the
// total graph's ball(R). Violations are reported, not thrown.
CoverCheck check_cover(const GraphCoverMap& map, int radius);

}  // namespace covercalc

#endif
