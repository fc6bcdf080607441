#include "covercalc/piece_graph.hpp"

#include <algorithm>
#include <queue>

#include "covercalc/errors.hpp"

namespace covercalc {

PieceGraph PieceGraph::lattice(int dim, Piece piece) {
  if (dim < 1) throw input_error("lattice: dimension must be positive");
  PieceGraph g;
  g.kind_ = Kind::Lattice;
  g.param_ = dim;
  g.base_piece_ = piece;
  return g;
}

PieceGraph PieceGraph::spotted_lattice() {
  PieceGraph g = lattice(2, Piece{1, 0});
  g.spotted_axis_ = true;
  return g;
}

PieceGraph PieceGraph::ray(Piece piece) {
  PieceGraph g;
  g.kind_ = Kind::Ray;
  g.base_piece_ = piece;
  return g;
}

PieceGraph PieceGraph::regular_tree(int valence, Piece piece) {
  if (valence < 3) throw input_error("regular_tree: valence must be at least 3");
  PieceGraph g;
  g.kind_ = Kind::RegularTree;
  g.param_ = valence;
  g.base_piece_ = piece;
  return g;
}

PieceGraph PieceGraph::free_tree(int pair_count, Piece piece) {
  if (pair_count < 1) throw input_error("free_tree: need at least one pair");
  PieceGraph g;
  g.kind_ = Kind::FreeTree;
  g.param_ = pair_count;
  g.base_piece_ = piece;
  return g;
}

PieceGraph PieceGraph::finite_graph(std::vector<std::vector<int>> adjacency,
                                    std::vector<Piece> pieces) {
  if (adjacency.size() != pieces.size())
    throw input_error("finite_graph: one piece per vertex required");
  PieceGraph g;
  g.kind_ = Kind::FiniteGraph;
  g.finite_adj_ = std::move(adjacency);
  g.finite_pieces_ = std::move(pieces);
  return g;
}

PieceGraph PieceGraph::bct_selection(const EndSpec& spec, bool genus_infinite) {
  if (!spec.recognized() || spec.kind == EndSpec::Kind::Empty)
    throw input_error("bct_selection: spec must be a nonempty tame end spec");
  if (genus_infinite && !spec.realizable_with_infinite_genus())
    throw input_error("bct_selection: spec unrealizable with infinite genus");
  if (!genus_infinite && !spec.realizable_with_zero_genus())
    throw input_error("bct_selection: spec unrealizable with zero genus");
  PieceGraph g;
  g.kind_ = Kind::BctSelection;
  g.sel_spec_ = spec;
  g.sel_genus_infinite_ = genus_infinite;
  return g;
}

PieceGraph::Vertex PieceGraph::root() const {
  switch (kind_) {
    case Kind::Lattice:
      return Vertex(static_cast<std::size_t>(param_), 0);
    case Kind::Ray:
      return {0};
    case Kind::FiniteGraph:
      return {0};
    default:
      return {};  // trees and selections root at the empty word
  }
}

namespace {

// Comb form: a zeros followed by b ones. Returns false when the string
// mixes 0s after 1s.
bool comb_form(const std::vector<int>& v, int& zeros, int& ones) {
  zeros = ones = 0;
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) {
    ++zeros;
    ++i;
  }
  while (i < v.size() && v[i] == 1) {
    ++ones;
    ++i;
  }
  return i == v.size();
}

}  // namespace

bool PieceGraph::bct_keeps_planar_part(const Vertex& v) const {
  int a = 0, b = 0;
  switch (sel_spec_.kind) {
    case EndSpec::Kind::CantorPlanar:
    case EndSpec::Kind::CantorAllGenus:
      return true;
    case EndSpec::Kind::FinitePlanar:
      return comb_form(v, a, b) && a <= sel_spec_.planar_count - 1;
    case EndSpec::Kind::FiniteMixed:
      return comb_form(v, a, b) && a <= sel_spec_.planar_count + sel_spec_.genus_count - 1;
    case EndSpec::Kind::OmegaPlusOnePlanar:
    case EndSpec::Kind::OmegaPlusOneGenusLimit:
      return comb_form(v, a, b);
    default:
      return false;
  }
}

bool PieceGraph::bct_keeps_genus_part(const Vertex& v) const {
  int a = 0, b = 0;
  switch (sel_spec_.kind) {
    case EndSpec::Kind::CantorAllGenus:
      return true;
    case EndSpec::Kind::FiniteMixed: {
      if (!comb_form(v, a, b)) return false;
      int lo = sel_spec_.planar_count;
      int hi = sel_spec_.planar_count + sel_spec_.genus_count - 1;
      return b >= 1 ? (a >= lo && a <= hi) : (a <= hi);
    }
    case EndSpec::Kind::OmegaPlusOneGenusLimit:
      return comb_form(v, a, b) && b == 0;
    default:
      return false;
  }
}

std::vector<int> PieceGraph::selected_children(const Vertex& v) const {
  std::vector<int> out;
  for (int c : {0, 1}) {
    Vertex child = v;
    child.push_back(c);
    if (bct_keeps_planar_part(child)) out.push_back(c);
  }
  return out;
}

int PieceGraph::degree(const Vertex& v) const {
  switch (kind_) {
    case Kind::Lattice:
      return 2 * param_;
    case Kind::Ray:
      return v[0] == 0 ? 1 : 2;
    case Kind::RegularTree:
      return param_;
    case Kind::FreeTree:
      return 2 * param_;
    case Kind::FiniteGraph:
      return static_cast<int>(finite_adj_[static_cast<std::size_t>(v[0])].size());
    case Kind::BctSelection:
      return (v.empty() ? 0 : 1) + static_cast<int>(selected_children(v).size());
  }
  return 0;
}

PieceGraph::Vertex PieceGraph::neighbor(const Vertex& v, int slot) const {
  if (slot < 0 || slot >= degree(v)) throw input_error("neighbor: slot out of range");
  switch (kind_) {
    case Kind::Lattice: {
      Vertex u = v;
      int axis = slot / 2;
      u[static_cast<std::size_t>(axis)] += (slot % 2 == 0) ? 1 : -1;
      return u;
    }
    case Kind::Ray:
      return {v[0] == 0 ? 1 : (slot == 0 ? v[0] + 1 : v[0] - 1)};
    case Kind::RegularTree: {
      Vertex u = v;
      if (!u.empty() && u.back() == slot)
        u.pop_back();
      else
        u.push_back(slot);
      return u;
    }
    case Kind::FreeTree: {
      int letter = (slot % 2 == 0) ? (slot / 2 + 1) : -(slot / 2 + 1);
      Vertex u = v;
      if (!u.empty() && u.back() == -letter)
        u.pop_back();
      else
        u.push_back(letter);
      return u;
    }
    case Kind::FiniteGraph:
      return {finite_adj_[static_cast<std::size_t>(v[0])][static_cast<std::size_t>(slot)]};
    case Kind::BctSelection: {
      if (!v.empty() && slot == 0) {
        Vertex u = v;
        u.pop_back();
        return u;
      }
      int child_idx = v.empty() ? slot : slot - 1;
      Vertex u = v;
      u.push_back(selected_children(v)[static_cast<std::size_t>(child_idx)]);
      return u;
    }
  }
  throw internal_error("neighbor: unhandled kind");
}

PieceGraph::Piece PieceGraph::piece(const Vertex& v) const {
  switch (kind_) {
    case Kind::Lattice:
      if (spotted_axis_ && v[1] == 0 && v[0] >= 0) return {base_piece_.genus, 1};
      return base_piece_;
    case Kind::FiniteGraph:
      return finite_pieces_[static_cast<std::size_t>(v[0])];
    case Kind::BctSelection:
      return {bct_keeps_genus_part(v) ? 1 : 0, 0};
    default:
      return base_piece_;
  }
}

int PieceGraph::ray_deleted_slots(const Vertex& v) const {
  if (kind_ != Kind::BctSelection) return 0;
  int n = (v.empty() ? 1 : 0);  // the root curve lambda_0 itself
  n += 2 - static_cast<int>(selected_children(v).size());
  if (!bct_keeps_genus_part(v)) ++n;  // boundary toward the unkept torus part
  return n;
}

std::string PieceGraph::vertex_name(const Vertex& v) const {
  std::string s;
  switch (kind_) {
    case Kind::Lattice:
      s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s + ")";
    case Kind::Ray:
      return std::to_string(v[0]);
    case Kind::FiniteGraph:
      return "v" + std::to_string(v[0]);
    default:
      if (v.empty()) return "e";
      for (int x : v) s += (x < 0 ? "-" : "") + std::to_string(std::abs(x));
      return s;
  }
}

long long PieceGraph::Ball::edge_count() const {
  long long twice = 0;
  for (const auto& a : adj) twice += static_cast<long long>(a.size());
  return twice / 2;
}

PieceGraph::Ball PieceGraph::materialize(int radius, std::size_t vertex_bound) const {
  Ball ball;
  ball.radius = radius;
  Vertex r = root();
  ball.index.reserve(1024);
  ball.index.emplace(r, 0);
  ball.verts.push_back(r);
  ball.dist.push_back(0);
  std::size_t head = 0;
  while (head < ball.verts.size()) {
    Vertex v = ball.verts[head];
    int d = ball.dist[head];
    ++head;
    if (d == radius) continue;
    int deg = degree(v);
    for (int s = 0; s < deg; ++s) {
      Vertex u = neighbor(v, s);
      if (ball.index.count(u)) continue;
      if (ball.verts.size() >= vertex_bound)
        throw resource_error("materialize: ball vertex bound exceeded");
      ball.index.emplace(u, static_cast<int>(ball.verts.size()));
      ball.verts.push_back(std::move(u));
      ball.dist.push_back(d + 1);
    }
  }
  ball.adj.resize(ball.verts.size());
  ball.pieces.resize(ball.verts.size());
  ball.exhausted = true;
  for (std::size_t i = 0; i < ball.verts.size(); ++i) {
    const Vertex& v = ball.verts[i];
    ball.pieces[i] = piece(v);
    int deg = degree(v);
    for (int s = 0; s < deg; ++s) {
      auto it = ball.index.find(neighbor(v, s));
      if (it == ball.index.end())
        ball.exhausted = false;
      else
        ball.adj[i].push_back(it->second);
    }
  }
  return ball;
}

}  // namespace covercalc
