#ifndef COVERCALC_FINITE_COVER_HPP
#define COVERCALC_FINITE_COVER_HPP

#include <vector>

#include "covercalc/quotient.hpp"
#include "covercalc/surface.hpp"

namespace covercalc {

// How one base peripheral lifts: `count` lifts, each wrapping `order` times.
// Regular covers always give a single class per peripheral; irregular covers
// may contribute several classes (one per cycle length).
struct PeripheralLift {
  long long order = 1;
  long long count = 0;
  bool operator==(const PeripheralLift&) const = default;
};

struct CoverResult {
  long long degree = 1;
  FiniteSurface cover;
  // One entry per base peripheral, in peripheral_words order.
  std::vector<std::vector<PeripheralLift>> peripheral_lifts;

  long long total_lifts(std::size_t peripheral) const;
};

// The canonical surjection pi_1(S) -> H_1(S, Z/nZ): each standard generator
// to a distinct basis vector of (Z/n)^{2g+b+p-1} (open) or (Z/n)^{2g}
// (closed). Requires n >= 2.
FiniteQuotientHom mod_n_hom(const FiniteSurface& s, long long n);

// Exact topological type of the cover of S determined by hom. For closed S
// the hom must kill the surface relator. With regular=true the degree is the
// order of the generated quotient; otherwise the hom must be a transitive
// permutation action and the cover corresponds to a point stabilizer.
CoverResult cover_type(const FiniteSurface& s, const FiniteQuotientHom& hom,
                       bool regular = true);

// Homology lifting criterion: a loop lifts closed iff its image dies in Q.
bool lifts_closed(const Word& w, const FiniteQuotientHom& hom);

}  // namespace covercalc

#endif
