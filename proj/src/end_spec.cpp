#include "covercalc/end_spec.hpp"

namespace covercalc {

bool EndSpec::has_isolated_planar_ends() const {
  switch (kind) {
    case Kind::FinitePlanar:
      return planar_count > 0;
    case Kind::FiniteMixed:
      return planar_count > 0;
    case Kind::OmegaPlusOnePlanar:
    case Kind::OmegaPlusOneGenusLimit:
      return true;
    default:
      return false;
  }
}

bool EndSpec::realizable_with_infinite_genus() const {
  // Infinite genus forces a nonempty set of ends accumulated by genus.
  switch (kind) {
    case Kind::FiniteMixed:
      return genus_count >= 1;
    case Kind::OmegaPlusOneGenusLimit:
    case Kind::CantorAllGenus:
      return true;
    default:
      return false;
  }
}

bool EndSpec::realizable_with_zero_genus() const {
  switch (kind) {
    case Kind::Empty:
    case Kind::FinitePlanar:
    case Kind::OmegaPlusOnePlanar:
    case Kind::CantorPlanar:
      return true;
    default:
      return false;
  }
}

std::string EndSpec::str() const {
  switch (kind) {
    case Kind::Empty:
      return "Empty";
    case Kind::FinitePlanar:
      return "FinitePlanar(" + std::to_string(planar_count) + ")";
    case Kind::FiniteMixed:
      return "FiniteMixed(" + std::to_string(planar_count) + "," +
             std::to_string(genus_count) + ")";
    case Kind::OmegaPlusOnePlanar:
      return "OmegaPlusOnePlanar";
    case Kind::OmegaPlusOneGenusLimit:
      return "OmegaPlusOneGenusLimit";
    case Kind::CantorPlanar:
      return "CantorPlanar";
    case Kind::CantorAllGenus:
      return "CantorAllGenus";
    default:
      return "Unrecognized";
  }
}

bool NamedSurface::noncompact() const {
  switch (tag) {
    case Tag::Sphere:
    case Tag::Torus:
      return false;
    case Tag::FiniteType:
      return !finite.closed() || finite.punctures > 0;
    case Tag::Unrecognized:
      return false;
    default:
      return true;  // plane, annulus, and all infinite-type surfaces
  }
}

bool NamedSurface::nonabelian_pi1() const {
  switch (tag) {
    case Tag::Plane:
    case Tag::Sphere:
    case Tag::Annulus:
    case Tag::Torus:
      return false;
    case Tag::FiniteType:
      return finite.nonabelian_pi1();
    case Tag::Unrecognized:
      return false;
    default:
      return true;  // infinite-type surfaces have pi_1 = F_infinity
  }
}

std::string NamedSurface::str() const {
  switch (tag) {
    case Tag::Plane:
      return "Plane";
    case Tag::Sphere:
      return "Sphere";
    case Tag::Annulus:
      return "Annulus";
    case Tag::Torus:
      return "Torus";
    case Tag::Flute:
      return "Flute";
    case Tag::LochNess:
      return "LochNess";
    case Tag::SpottedLochNess:
      return "SpottedLochNess";
    case Tag::CantorTree:
      return "CantorTree";
    case Tag::BloomingCantorTree:
      return "BloomingCantorTree";
    case Tag::FiniteType:
      return "FiniteType " + finite.str();
    default:
      return "Unrecognized";
  }
}

}  // namespace covercalc
