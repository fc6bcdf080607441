#include "covercalc/core_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

#include "covercalc/errors.hpp"

namespace covercalc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

struct RawEdge {
  int src, dst, label;
};

// Repeatedly identify endpoints of same-labeled edge pairs sharing a vertex
// until no such pair remains, then drop duplicate edges.
std::vector<RawEdge> fold_edges(std::vector<RawEdge> edges, UnionFind& uf) {
  bool changed = true;
  while (changed) {
    changed = false;
    // (vertex, signed label) -> first edge seen; a second hit folds.
    std::map<std::pair<int, int>, std::pair<int, int>> first;  // -> (other endpoint, edge idx)
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int s = uf.find(edges[i].src);
      int d = uf.find(edges[i].dst);
      auto out_key = std::make_pair(s, edges[i].label);
      auto in_key = std::make_pair(d, -edges[i].label);
      auto it = first.find(out_key);
      if (it != first.end() && it->second.second != static_cast<int>(i)) {
        if (uf.unite(it->second.first, d)) changed = true;
      } else {
        first[out_key] = {d, static_cast<int>(i)};
      }
      it = first.find(in_key);
      if (it != first.end() && it->second.second != static_cast<int>(i)) {
        if (uf.unite(it->second.first, s)) changed = true;
      } else {
        first[in_key] = {s, static_cast<int>(i)};
      }
      if (changed) break;  // restart scan with updated classes
    }
  }
  // Normalize and dedupe.
  std::vector<RawEdge> out;
  std::map<std::tuple<int, int, int>, bool> seen;
  for (const auto& e : edges) {
    int s = uf.find(e.src), d = uf.find(e.dst);
    auto key = std::make_tuple(s, d, e.label);
    if (!seen.count(key)) {
      seen[key] = true;
      out.push_back({s, d, e.label});
    }
  }
  return out;
}

}  // namespace

int CoreGraph::step(int vertex, int signed_label) const {
  for (const auto& e : edges) {
    if (signed_label > 0 && e.src == vertex && e.label == signed_label) return e.dst;
    if (signed_label < 0 && e.dst == vertex && e.label == -signed_label) return e.src;
  }
  return -1;
}

bool CoreGraph::folded() const {
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : edges) {
    if (++count[{e.src, e.label}] > 1) return false;
    if (++count[{e.dst, -e.label}] > 1) return false;
  }
  return true;
}

bool CoreGraph::complete() const {
  for (int v = 0; v < vertex_count; ++v)
    for (int l = 1; l <= rank; ++l)
      if (step(v, l) < 0 || step(v, -l) < 0) return false;
  return true;
}

std::string CoreGraph::str() const {
  std::string s = "core(V=" + std::to_string(vertex_count) + ",base=" +
                  std::to_string(basepoint) + ")[";
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(sorted[i].src) + "-" + std::to_string(sorted[i].label) + "->" +
         std::to_string(sorted[i].dst);
  }
  return s + "]";
}

FoldReport fold_core_graph(const std::vector<Word>& generators, int ambient_rank) {
  for (const auto& g : generators) {
    if (!g.reduced()) throw input_error("fold_core_graph: generators must be reduced");
    if (g.max_index() > ambient_rank)
      throw input_error("fold_core_graph: generator letter outside ambient basis");
  }

  // Wedge of subdivided loops at vertex 0.
  std::vector<RawEdge> edges;
  int next_vertex = 1;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    int prev = 0;
    const auto& ls = g.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? 0 : next_vertex++;
      int l = ls[i];
      if (l > 0)
        edges.push_back({prev, nxt, l});
      else
        edges.push_back({nxt, prev, -l});
      prev = nxt;
    }
  }

  UnionFind uf(next_vertex);
  edges = fold_edges(std::move(edges), uf);
  int base = uf.find(0);

  // Core-trim: drop degree-1 vertices other than the basepoint.
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::map<int, int> degree;
    degree[base];  // keep basepoint present even if isolated
    for (const auto& e : edges) {
      ++degree[e.src];
      ++degree[e.dst];
    }
    for (const auto& [v, d] : degree) {
      if (v != base && d <= 1) {
        std::vector<RawEdge> kept;
        for (const auto& e : edges)
          if (e.src != v && e.dst != v) kept.push_back(e);
        edges = std::move(kept);
        trimmed = true;
        break;
      }
    }
  }

  // Canonicalize: BFS from the basepoint, exploring signed labels in the
  // order +1,-1,+2,-2,... so isomorphic graphs serialize identically.
  std::map<std::pair<int, int>, int> adj;  // (vertex, signed label) -> target
  for (const auto& e : edges) {
    adj[{e.src, e.label}] = e.dst;
    adj[{e.dst, -e.label}] = e.src;
  }
  std::map<int, int> relabel;
  std::vector<int> order;
  relabel[base] = 0;
  order.push_back(base);
  std::queue<int> work;
  work.push(base);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (int l = 1; l <= ambient_rank; ++l) {
      for (int sl : {l, -l}) {
        auto it = adj.find({v, sl});
        if (it != adj.end() && !relabel.count(it->second)) {
          relabel[it->second] = static_cast<int>(order.size());
          order.push_back(it->second);
          work.push(it->second);
        }
      }
    }
  }
  if (relabel.size() != [&] {
        std::map<int, bool> vs;
        vs[base] = true;
        for (const auto& e : edges) vs[e.src] = vs[e.dst] = true;
        return vs.size();
      }())
    throw internal_error("fold_core_graph: core graph not connected");

  CoreGraph g;
  g.rank = ambient_rank;
  g.vertex_count = static_cast<int>(relabel.size());
  g.basepoint = 0;
  for (const auto& e : edges) g.edges.push_back({relabel[e.src], relabel[e.dst], e.label});
  std::sort(g.edges.begin(), g.edges.end());
  if (!g.folded()) throw internal_error("fold_core_graph: result not folded");

  FoldReport report;
  report.rank = g.cycle_rank();
  report.index = g.complete() ? std::optional<long long>(g.vertex_count) : std::nullopt;

  // Spanning tree by the same BFS; non-tree edges give the free basis.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<int> parent_label(static_cast<std::size_t>(g.vertex_count), 0);
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count), 0);
  std::vector<char> is_tree(g.edges.size(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  visited[0] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int l = 1; l <= g.rank; ++l) {
      for (int sl : {l, -l}) {
        int u = g.step(v, sl);
        if (u >= 0 && !visited[static_cast<std::size_t>(u)]) {
          visited[static_cast<std::size_t>(u)] = 1;
          parent[static_cast<std::size_t>(u)] = v;
          parent_label[static_cast<std::size_t>(u)] = sl;
          for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto& e = g.edges[i];
            bool fwd = sl > 0 && e.src == v && e.dst == u && e.label == sl;
            bool bwd = sl < 0 && e.dst == v && e.src == u && e.label == -sl;
            if (fwd || bwd) {
              is_tree[i] = 1;
              break;
            }
          }
          bfs.push(u);
        }
      }
    }
  }
  auto path_from_base = [&](int v) {
    std::vector<Letter> ls;
    while (v != 0) {
      ls.push_back(parent_label[static_cast<std::size_t>(v)]);
      v = parent[static_cast<std::size_t>(v)];
    }
    std::reverse(ls.begin(), ls.end());
    return Word(std::move(ls));
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (is_tree[i]) continue;
    const auto& e = g.edges[i];
    Word w = path_from_base(e.src) * Word::generator(e.label) * path_from_base(e.dst).inverse();
    report.free_basis.push_back(reduce_word(w));
  }
  if (static_cast<int>(report.free_basis.size()) != report.rank)
    throw internal_error("fold_core_graph: basis size disagrees with cycle rank");

  report.graph = std::move(g);
  return report;
}

bool reads_closed_path(const CoreGraph& g, const Word& w) {
  int v = g.basepoint;
  for (Letter l : w.letters()) {
    v = g.step(v, l);
    if (v < 0) return false;
  }
  return v == g.basepoint;
}

}  // namespace covercalc
