#ifndef COVERCALC_END_SPEC_HPP
#define COVERCALC_END_SPEC_HPP

#include <string>

#include "covercalc/surface.hpp"

namespace covercalc {

// Genus-marked end space in the tame class the classifiers emit. Anything
// outside this class is reported as Unrecognized rather than approximated.
struct EndSpec {
  enum class Kind {
    Empty,                  // closed surfaces
    FinitePlanar,           // k >= 1 isolated planar ends
    FiniteMixed,            // k_planar isolated planar + k_genus genus ends
    OmegaPlusOnePlanar,     // omega isolated planar ends + one planar limit
    OmegaPlusOneGenusLimit, // omega isolated planar ends + one genus limit
    CantorPlanar,           // E = Cantor set, E_g empty
    CantorAllGenus,         // E_g = E = Cantor set
    Unrecognized,
  };

  Kind kind = Kind::Unrecognized;
  int planar_count = 0;  // FinitePlanar / FiniteMixed
  int genus_count = 0;   // FiniteMixed

  static EndSpec empty() { return {Kind::Empty, 0, 0}; }
  static EndSpec finite_planar(int k) { return {Kind::FinitePlanar, k, 0}; }
  static EndSpec finite_mixed(int kp, int kg) { return {Kind::FiniteMixed, kp, kg}; }
  static EndSpec omega_plus_one_planar() { return {Kind::OmegaPlusOnePlanar, 0, 0}; }
  static EndSpec omega_plus_one_genus() { return {Kind::OmegaPlusOneGenusLimit, 0, 0}; }
  static EndSpec cantor_planar() { return {Kind::CantorPlanar, 0, 0}; }
  static EndSpec cantor_all_genus() { return {Kind::CantorAllGenus, 0, 0}; }
  static EndSpec unrecognized() { return {Kind::Unrecognized, 0, 0}; }

  bool recognized() const { return kind != Kind::Unrecognized; }
  bool has_isolated_planar_ends() const;
  // Whether the pair (genus, spec) is realizable by a surface, with genus
  // infinite (true) or zero (false).
  bool realizable_with_infinite_genus() const;
  bool realizable_with_zero_genus() const;

  bool operator==(const EndSpec&) const = default;
  std::string str() const;
};

// The surfaces named by the classification tables.
struct NamedSurface {
  enum class Tag {
    Plane,
    Sphere,
    Annulus,
    Torus,
    Flute,
    LochNess,
    SpottedLochNess,
    CantorTree,
    BloomingCantorTree,
    FiniteType,
    Unrecognized,
  };

  Tag tag = Tag::Unrecognized;
  FiniteSurface finite;  // only for FiniteType

  static NamedSurface make(Tag t) { return {t, {}}; }
  static NamedSurface finite_type(FiniteSurface s) { return {Tag::FiniteType, s}; }

  bool infinite_type() const {
    return tag == Tag::Flute || tag == Tag::LochNess || tag == Tag::SpottedLochNess ||
           tag == Tag::CantorTree || tag == Tag::BloomingCantorTree;
  }
  bool noncompact() const;
  bool nonabelian_pi1() const;

  bool operator==(const NamedSurface&) const = default;
  std::string str() const;
};

}  // namespace covercalc

#endif
