#ifndef COVERCALC_SURFACE_HPP
#define COVERCALC_SURFACE_HPP

#include <string>
#include <vector>

#include "covercalc/word.hpp"

namespace covercalc {

// Finite-type surface S^b_{g,p}: genus g, b boundary circles, p punctures.
//
// The standard free basis of pi_1 (open case) is a_1,b_1,...,a_g,b_g,
// c_1,...,c_{b+p-1}: a_i -> index 2i-1, b_i -> index 2i, c_j -> index 2g+j.
// Closed surfaces use the 2g handle generators subject to the relator.
struct FiniteSurface {
  int genus = 0;
  int boundary = 0;
  int punctures = 0;

  int chi() const { return 2 - 2 * genus - boundary - punctures; }
  int ends() const { return boundary + punctures; }
  bool closed() const { return ends() == 0; }

  // Rank of the free pi_1; only meaningful when ends() >= 1.
  int free_rank() const { return 2 * genus + ends() - 1; }
  int generator_count() const { return closed() ? 2 * genus : free_rank(); }

  bool nonabelian_pi1() const {
    return closed() ? genus >= 2 : generator_count() >= 2;
  }

  // Kind conversions: cap boundary circles / open them into punctures.
  FiniteSurface capped() const { return {genus, 0, punctures}; }
  FiniteSurface interior() const { return {genus, 0, punctures + boundary}; }

  bool operator==(const FiniteSurface&) const = default;
  std::string str() const;
};

// Product of handle commutators followed by the peripheral generators:
// [a_1,b_1]...[a_g,b_g] c_1 ... c_{b+p-1}. This is the word the last
// peripheral inverts, and the relator a closed-surface hom must kill.
Word surface_relation_word(const FiniteSurface& s);

// The b+p peripheral words: c_1, ..., c_{b+p-1} and the relation word's
// inverse. Empty for closed surfaces. Peripheral k (0-based) is a boundary
// circle when k < b, a puncture otherwise.
std::vector<Word> peripheral_words(const FiniteSurface& s);

}  // namespace covercalc

#endif
