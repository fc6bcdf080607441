#include "covercalc/surface_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covercalc/errors.hpp"

namespace covercalc {

PieceGraph build_named(NamedSurface::Tag name) {
  using Tag = NamedSurface::Tag;
  switch (name) {
    case Tag::LochNess:
      return PieceGraph::lattice(2, {1, 0});
    case Tag::BloomingCantorTree:
      return PieceGraph::regular_tree(4, {1, 0});
    case Tag::CantorTree:
      return PieceGraph::regular_tree(3, {0, 0});
    case Tag::Flute:
      return PieceGraph::ray({0, 1});
    case Tag::SpottedLochNess:
      return PieceGraph::spotted_lattice();
    default:
      throw input_error("build_named: only infinite-type names have piece-graph models");
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

struct EndClass {
  bool genus = false;        // positive-genus piece in both probe bands
  bool deep_punctures = false;  // punctured piece beyond distance 2L
  long long shallow_punctures = 0;
  int children = 0;  // unbounded refinements past distance 2L
};

struct Census {
  bool valid = false;
  bool exhausted = false;
  long long total_punctures = 0;    // whole ball (finite graphs only use this)
  long long interior_punctures = 0; // distance <= L
  std::vector<EndClass> classes;
};

Census take_census(const PieceGraph::Ball& ball, int L) {
  Census census;
  if (ball.radius < 3 * L) return census;
  census.valid = true;
  census.exhausted = ball.exhausted;

  const int n = ball.size();
  for (int i = 0; i < n; ++i) {
    census.total_punctures += ball.pieces[static_cast<std::size_t>(i)].punctures;
    if (ball.dist[static_cast<std::size_t>(i)] <= L)
      census.interior_punctures += ball.pieces[static_cast<std::size_t>(i)].punctures;
  }
  if (census.exhausted) return census;  // a finite surface: no end classes

  auto in_annulus = [&](int i) {
    int d = ball.dist[static_cast<std::size_t>(i)];
    return d > L && d <= 3 * L;
  };
  auto in_outer = [&](int i) {
    int d = ball.dist[static_cast<std::size_t>(i)];
    return d > 2 * L && d <= 3 * L;
  };

  UnionFind comp(static_cast<std::size_t>(n));
  UnionFind sub(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!in_annulus(i)) continue;
    for (int j : ball.adj[static_cast<std::size_t>(i)]) {
      if (j < i) continue;
      if (in_annulus(j)) comp.unite(i, j);
      if (in_outer(i) && in_outer(j)) sub.unite(i, j);
    }
  }

  // Unbounded candidates: annulus components meeting sphere(3L).
  std::unordered_map<int, int> root_class;
  for (int i = 0; i < n; ++i) {
    if (!in_annulus(i) || ball.dist[static_cast<std::size_t>(i)] != 3 * L) continue;
    int r = comp.find(i);
    if (!root_class.count(r)) root_class.emplace(r, static_cast<int>(root_class.size()));
  }
  census.classes.resize(root_class.size());
  auto class_index = [&](int i) -> int {
    auto it = root_class.find(comp.find(i));
    return it == root_class.end() ? -1 : it->second;
  };

  std::vector<char> genus_inner(root_class.size(), 0), genus_outer(root_class.size(), 0);
  for (int i = 0; i < n; ++i) {
    if (!in_annulus(i)) continue;
    int c = class_index(i);
    if (c < 0) continue;
    int d = ball.dist[static_cast<std::size_t>(i)];
    const auto& piece = ball.pieces[static_cast<std::size_t>(i)];
    if (piece.genus > 0) {
      if (d <= 2 * L)
        genus_inner[static_cast<std::size_t>(c)] = 1;
      else
        genus_outer[static_cast<std::size_t>(c)] = 1;
    }
    if (piece.punctures > 0) {
      if (d > 2 * L)
        census.classes[static_cast<std::size_t>(c)].deep_punctures = true;
      else
        census.classes[static_cast<std::size_t>(c)].shallow_punctures += piece.punctures;
    }
  }
  for (std::size_t c = 0; c < census.classes.size(); ++c)
    census.classes[c].genus = genus_inner[c] && genus_outer[c];

  // Children: unbounded components of the outer band, attributed to classes.
  std::unordered_map<int, char> sub_seen;
  for (int i = 0; i < n; ++i) {
    if (!in_outer(i) || ball.dist[static_cast<std::size_t>(i)] != 3 * L) continue;
    int r = sub.find(i);
    if (!sub_seen.count(r)) {
      sub_seen.emplace(r, 1);
      int c = class_index(i);
      if (c >= 0) ++census.classes[static_cast<std::size_t>(c)].children;
    }
  }
  return census;
}

EndSpec assemble(const Census& census) {
  if (!census.valid) return EndSpec::unrecognized();
  if (census.exhausted) {
    return census.total_punctures == 0
               ? EndSpec::empty()
               : EndSpec::finite_planar(static_cast<int>(census.total_punctures));
  }
  if (census.classes.empty()) return EndSpec::unrecognized();

  std::vector<const EndClass*> limits, simples;
  for (const auto& c : census.classes) {
    if (c.children >= 2 || c.deep_punctures)
      limits.push_back(&c);
    else
      simples.push_back(&c);
  }

  if (limits.empty()) {
    long long planar = census.interior_punctures;
    int genus = 0;
    for (const auto* c : simples) {
      planar += c->shallow_punctures;
      if (c->genus)
        ++genus;
      else
        ++planar;
    }
    if (genus == 0) return EndSpec::finite_planar(static_cast<int>(planar));
    return EndSpec::finite_mixed(static_cast<int>(planar), genus);
  }

  if (limits.size() == 1) {
    for (const auto* c : simples)
      if (c->genus) return EndSpec::unrecognized();
    return limits[0]->genus ? EndSpec::omega_plus_one_genus()
                            : EndSpec::omega_plus_one_planar();
  }

  // Several limit classes: only the Cantor patterns are tame, and they
  // carry no isolated planar ends at all.
  if (!simples.empty() || census.interior_punctures > 0) return EndSpec::unrecognized();
  bool all_genus = true, all_planar = true;
  for (const auto* c : limits) {
    if (c->deep_punctures || c->shallow_punctures > 0) return EndSpec::unrecognized();
    (c->genus ? all_planar : all_genus) = false;
  }
  if (all_genus) return EndSpec::cantor_all_genus();
  if (all_planar) return EndSpec::cantor_planar();
  return EndSpec::unrecognized();
}

}  // namespace

EndCensusReport end_spec_of(const PieceGraph& g, int radius) {
  if (radius < 1) throw input_error("end_spec_of: radius must be at least 1");
  int L1 = std::max(radius, 2);
  int L0 = L1 - 1;
  auto ball = g.materialize(3 * L1);
  EndCensusReport report;
  report.radius = radius;
  report.previous = assemble(take_census(ball, L0));
  report.spec = assemble(take_census(ball, L1));
  report.stabilized = report.spec.recognized() && report.spec == report.previous;
  if (!report.stabilized)
    report.diagnostic = "census at L=" + std::to_string(L0) + " gave " +
                        report.previous.str() + ", at L=" + std::to_string(L1) +
                        " gave " + report.spec.str();
  return report;
}

long long genus_lower_bound(const PieceGraph& g, int radius) {
  if (radius < 1) throw input_error("genus_lower_bound: radius must be at least 1");
  auto ball = g.materialize(radius);
  long long total = 0;
  for (const auto& piece : ball.pieces) total += piece.genus;
  return total + (ball.edge_count() - ball.size() + 1);
}

GenusClass genus_class(const PieceGraph& g, int radius) {
  long long inner = genus_lower_bound(g, radius);
  long long outer = genus_lower_bound(g, radius + 2);
  if (outer == 0) return GenusClass::Zero;
  if (outer > inner) return GenusClass::Infinite;
  return GenusClass::Finite;
}

NamedSurface classify_named(const PieceGraph& g, int radius) {
  auto report = end_spec_of(g, radius);
  if (!report.stabilized) return NamedSurface::make(NamedSurface::Tag::Unrecognized);
  const EndSpec& spec = report.spec;
  using Tag = NamedSurface::Tag;

  auto probe = g.materialize(3 * std::max(radius, 2));
  if (probe.exhausted) {
    long long genus_total = 0;
    for (const auto& piece : probe.pieces) genus_total += piece.genus;
    genus_total += probe.edge_count() - probe.size() + 1;
    int genus = static_cast<int>(genus_total);
    if (spec.kind == EndSpec::Kind::Empty) {
      if (genus == 0) return NamedSurface::make(Tag::Sphere);
      if (genus == 1) return NamedSurface::make(Tag::Torus);
      return NamedSurface::finite_type({genus, 0, 0});
    }
    int p = spec.planar_count;
    if (genus == 0 && p == 1) return NamedSurface::make(Tag::Plane);
    if (genus == 0 && p == 2) return NamedSurface::make(Tag::Annulus);
    return NamedSurface::finite_type({genus, 0, p});
  }

  GenusClass gc = genus_class(g, radius);
  switch (spec.kind) {
    case EndSpec::Kind::FinitePlanar:
      if (gc == GenusClass::Zero) {
        if (spec.planar_count == 1) return NamedSurface::make(Tag::Plane);
        if (spec.planar_count == 2) return NamedSurface::make(Tag::Annulus);
        return NamedSurface::finite_type({0, 0, spec.planar_count});
      }
      if (gc == GenusClass::Finite) {
        int genus = static_cast<int>(genus_lower_bound(g, 3 * std::max(radius, 2)));
        return NamedSurface::finite_type({genus, 0, spec.planar_count});
      }
      return NamedSurface::make(Tag::Unrecognized);
    case EndSpec::Kind::FiniteMixed:
      if (gc == GenusClass::Infinite && spec == EndSpec::finite_mixed(0, 1))
        return NamedSurface::make(Tag::LochNess);
      return NamedSurface::make(Tag::Unrecognized);
    case EndSpec::Kind::OmegaPlusOnePlanar:
      return gc == GenusClass::Zero ? NamedSurface::make(Tag::Flute)
                                    : NamedSurface::make(Tag::Unrecognized);
    case EndSpec::Kind::OmegaPlusOneGenusLimit:
      return gc == GenusClass::Infinite ? NamedSurface::make(Tag::SpottedLochNess)
                                        : NamedSurface::make(Tag::Unrecognized);
    case EndSpec::Kind::CantorPlanar:
      return gc == GenusClass::Zero ? NamedSurface::make(Tag::CantorTree)
                                    : NamedSurface::make(Tag::Unrecognized);
    case EndSpec::Kind::CantorAllGenus:
      return gc == GenusClass::Infinite ? NamedSurface::make(Tag::BloomingCantorTree)
                                        : NamedSurface::make(Tag::Unrecognized);
    default:
      return NamedSurface::make(Tag::Unrecognized);
  }
}

std::string ball_to_dot(const PieceGraph& g, int radius, const std::string& name) {
  auto ball = g.materialize(radius);
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < ball.size(); ++i) {
    const auto& piece = ball.pieces[static_cast<std::size_t>(i)];
    os << "  n" << i << " [label=\"" << g.vertex_name(ball.verts[static_cast<std::size_t>(i)])
       << "\\ng=" << piece.genus << " p=" << piece.punctures << "\"];\n";
  }
  for (int i = 0; i < ball.size(); ++i)
    for (int j : ball.adj[static_cast<std::size_t>(i)])
      if (i < j) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace covercalc
