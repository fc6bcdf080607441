#ifndef COVERCALC_CORE_GRAPH_HPP
#define COVERCALC_CORE_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "covercalc/word.hpp"

namespace covercalc {

// Folded Stallings core graph of a finitely generated subgroup of a free
// group. Edges are oriented and labeled by generator index; vertex 0 is the
// basepoint after canonicalization.
struct CoreGraph {
  struct Edge {
    int src = 0;
    int dst = 0;
    int label = 0;  // positive generator index
    auto operator<=>(const Edge&) const = default;
  };

  int rank = 0;  // ambient rank (edge label alphabet size)
  int vertex_count = 0;
  int basepoint = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int cycle_rank() const { return edge_count() - vertex_count + 1; }

  // Outgoing edge with the given signed label (positive: src->, negative:
  // traversing an edge backwards), or -1.
  int step(int vertex, int signed_label) const;

  bool folded() const;
  // Every vertex has exactly one in- and one out-edge per label.
  bool complete() const;

  // Deterministic serialization of the canonical form.
  std::string str() const;
};

struct FoldReport {
  CoreGraph graph;
  int rank = 0;                          // cycle rank of the core graph
  std::optional<long long> index;        // finite index, or nullopt for infinite
  std::vector<Word> free_basis;          // one word per non-tree edge
};

// Fold the wedge of the given generator loops into the canonical core graph
// of the subgroup they generate.
FoldReport fold_core_graph(const std::vector<Word>& generators, int ambient_rank);

// Membership test against a folded graph: true iff w reads a closed path at
// the basepoint. Requires the subgroup to have finite index, or the word to
// stay on the graph (partial reads return false).
bool reads_closed_path(const CoreGraph& g, const Word& w);

}  // namespace covercalc

#endif
