#ifndef COVERCALC_PIECE_GRAPH_HPP
#define COVERCALC_PIECE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "covercalc/end_spec.hpp"
#include "covercalc/surface.hpp"

namespace covercalc {

// Lazy, locally finite graph whose vertices carry finite-type pieces: the
// computational model of infinite-type surfaces. A piece's boundary-circle
// count equals the vertex degree; gluing happens along edges.
class PieceGraph {
public:
  using Vertex = std::vector<int>;

  struct Piece {
    int genus = 0;
    int punctures = 0;
    bool operator==(const Piece&) const = default;
  };

  enum class Kind { Lattice, Ray, RegularTree, FreeTree, FiniteGraph, BctSelection };

  // Cayley graph of Z^dim with 2*dim edge slots per vertex (+e_i, -e_i).
  static PieceGraph lattice(int dim, Piece piece);
  // Z^2 of one-handled pieces with one puncture per vertex on the axis ray
  // (k, 0), k >= 0; the spots accumulate only to the unique end.
  static PieceGraph spotted_lattice();
  // One-sided infinite path 0 - 1 - 2 - ...; the flute model uses pieces
  // with one puncture each.
  static PieceGraph ray(Piece piece);
  // The valence-regular tree, realized as the Cayley graph of the free
  // product of `valence` copies of Z/2 (slot = involution index).
  static PieceGraph regular_tree(int valence, Piece piece);
  // Tree of freely reduced words over pair_count inverse pairs: the
  // universal cover of lattice(pair_count) with matching slot labels.
  static PieceGraph free_tree(int pair_count, Piece piece);
  static PieceGraph finite_graph(std::vector<std::vector<int>> adjacency,
                                 std::vector<Piece> pieces);
  // Selected subtree of the blooming-Cantor-tree Lambda-decomposition for a
  // tame end spec (see cover_forge::embed_in_bct).
  static PieceGraph bct_selection(const EndSpec& spec, bool genus_infinite);

  Kind kind() const { return kind_; }
  Vertex root() const;
  int degree(const Vertex& v) const;
  Vertex neighbor(const Vertex& v, int slot) const;
  Piece piece(const Vertex& v) const;
  // Boundary circles of the piece removed by the boundary-plus-ray deletion
  // (the P_i operation); these count neither as boundary nor as ends.
  int ray_deleted_slots(const Vertex& v) const;
  std::string vertex_name(const Vertex& v) const;

  struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  struct Ball {
    std::vector<Vertex> verts;
    std::vector<int> dist;
    std::vector<std::vector<int>> adj;  // ids of materialized neighbors
    std::vector<Piece> pieces;
    std::unordered_map<Vertex, int, VertexHash> index;
    int radius = 0;
    bool exhausted = false;  // the whole graph fits inside this ball

    int size() const { return static_cast<int>(verts.size()); }
    long long edge_count() const;
  };

  Ball materialize(int radius, std::size_t vertex_bound = kDefaultVertexBound) const;

  static constexpr std::size_t kDefaultVertexBound = 4'000'000;

  // Selection predicates of the BctSelection generator (rules (1)/(2)).
  bool bct_keeps_planar_part(const Vertex& v) const;
  bool bct_keeps_genus_part(const Vertex& v) const;

private:
  Kind kind_ = Kind::FiniteGraph;
  int param_ = 0;  // lattice dim / tree valence / free-tree pair count
  Piece base_piece_;
  bool spotted_axis_ = false;

  std::vector<std::vector<int>> finite_adj_;
  std::vector<Piece> finite_pieces_;

  EndSpec sel_spec_;
  bool sel_genus_infinite_ = false;

  std::vector<int> selected_children(const Vertex& v) const;
};

}  // namespace covercalc

#endif
