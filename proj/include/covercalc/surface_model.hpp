#ifndef COVERCALC_SURFACE_MODEL_HPP
#define COVERCALC_SURFACE_MODEL_HPP

#include <string>

#include "covercalc/end_spec.hpp"
#include "covercalc/piece_graph.hpp"

namespace covercalc {

// Standard piece-graph models of the named infinite-type surfaces:
//   LochNess           Z^2 grid of one-handled 4-boundary pieces
//   BloomingCantorTree 4-valent tree of the same pieces
//   CantorTree         3-valent tree of planar pieces
//   Flute              one-ended ray of once-punctured planar pieces
//   SpottedLochNess    Z^2 grid with punctures along an axis ray
PieceGraph build_named(NamedSurface::Tag name);

struct EndCensusReport {
  EndSpec spec = EndSpec::unrecognized();
  EndSpec previous = EndSpec::unrecognized();  // at the preceding radius
  bool stabilized = false;
  int radius = 0;
  std::string diagnostic;
};

// Genus-marked end census at truncation radius R (>= 1): components of
// ball(3L) minus ball(L) that meet sphere(3L) contribute end classes; the
// spec is accepted when two consecutive radii agree.
EndCensusReport end_spec_of(const PieceGraph& g, int radius);

// Sum of piece genus over ball(R) plus the cycle rank of the ball subgraph;
// monotone in R and unbounded exactly for infinite-genus models.
long long genus_lower_bound(const PieceGraph& g, int radius);

enum class GenusClass { Zero, Finite, Infinite };
GenusClass genus_class(const PieceGraph& g, int radius);

// Match (genus class, end spec) against the named-surface table. Finite
// graphs classify as finite-type surfaces; unstabilized censuses report
// Unrecognized.
NamedSurface classify_named(const PieceGraph& g, int radius);

// DOT rendering of ball(R) with piece annotations.
std::string ball_to_dot(const PieceGraph& g, int radius, const std::string& name = "ball");

}  // namespace covercalc

#endif
