#include "covercalc/graph_cover.hpp"

#include <algorithm>

#include "covercalc/errors.hpp"

namespace covercalc {

GraphCoverMap graph_universal_cover(const PieceGraph& base, int radius) {
  if (base.kind() != PieceGraph::Kind::Lattice)
    throw input_error("graph_universal_cover: expected a labeled lattice base");
  (void)radius;  // both graphs are lazy; the radius documents intent

  GraphCoverMap map;
  map.base = base;
  map.total = PieceGraph::free_tree(/*pair_count=*/[&] {
    return base.degree(base.root()) / 2;
  }(), base.piece(base.root()));

  PieceGraph base_copy = base;
  map.vertex_map = [base_copy](const PieceGraph::Vertex& word) {
    // Walk the base along the word's slot labels: letter +i is slot 2(i-1),
    // letter -i is slot 2(i-1)+1.
    PieceGraph::Vertex at = base_copy.root();
    for (int letter : word) {
      int slot = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
      at = base_copy.neighbor(at, slot);
    }
    return at;
  };
  map.slot_map = [](const PieceGraph::Vertex&, int slot) { return slot; };
  return map;
}

CoverCheck check_cover(const GraphCoverMap& map, int radius) {
  CoverCheck check;
  auto ball = map.total.materialize(radius);
  auto note = [&check](std::string msg) {
    check.ok = false;
    if (check.violations.size() < 32) check.violations.push_back(std::move(msg));
  };

  for (int i = 0; i < ball.size(); ++i) {
    const auto& v = ball.verts[static_cast<std::size_t>(i)];
    ++check.checked_vertices;
    auto bv = map.vertex_map(v);
    int deg = map.total.degree(v);
    int base_deg = map.base.degree(bv);
    if (deg != base_deg) {
      note("degree mismatch over " + map.total.vertex_name(v));
      continue;
    }
    // Star bijectivity: the slot map must hit each base slot exactly once.
    std::vector<char> hit(static_cast<std::size_t>(base_deg), 0);
    for (int s = 0; s < deg; ++s) {
      int bs = map.slot_map(v, s);
      if (bs < 0 || bs >= base_deg || hit[static_cast<std::size_t>(bs)]) {
        note("slot map not bijective at " + map.total.vertex_name(v));
        break;
      }
      hit[static_cast<std::size_t>(bs)] = 1;
      if (map.vertex_map(map.total.neighbor(v, s)) != map.base.neighbor(bv, bs)) {
        note("edge " + map.total.vertex_name(v) + " slot " + std::to_string(s) +
             " does not project to the base edge");
        break;
      }
    }
    auto piece = map.total.piece(v);
    auto base_piece = map.base.piece(bv);
    if (!(piece == base_piece))
      note("piece mismatch over " + map.total.vertex_name(v) + ": (" +
           std::to_string(piece.genus) + "," + std::to_string(piece.punctures) +
           ") vs (" + std::to_string(base_piece.genus) + "," +
           std::to_string(base_piece.punctures) + ")");
  }
  return check;
}

}  // namespace covercalc
