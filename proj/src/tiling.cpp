// Copyright 2026 The holocode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holocode/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "holocode/errors.hpp"

namespace holo {

Curvature validate_schlafli(int n, int k) {
  if (n < 3 || k < 3) {
    throw std::invalid_argument("validate_schlafli: need n >= 3 and k >= 3");
  }
  int f = n * k - 2 * (n + k);
  if (f > 0) return Curvature::hyperbolic;
  if (f == 0) return Curvature::flat;
  return Curvature::spherical;
}

int64_t max_boundary_ceiling() {
  if (const char* env = std::getenv("HOLOCODE_MAX_BOUNDARY")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}

int32_t TilingGraph::boundary_vertex(size_t pos) const {
  size_t b = boundary_order.size();
  const Edge& prev = edges[boundary_order[(pos + b - 1) % b]];
  const Edge& cur = edges[boundary_order[pos % b]];
  for (int32_t v : prev.vertices) {
    if (v == cur.vertices[0] || v == cur.vertices[1]) return v;
  }
  throw std::logic_error("boundary_vertex: consecutive boundary edges share no vertex");
}

namespace {

struct Boundary {
  std::vector<int32_t> edges;  // ccw
  std::vector<int32_t> verts;  // verts[i] between edges[i-1] and edges[i]
};

enum class Act { merge, link, pure, wedge };

void rebuild_boundary_verts(const TilingGraph& g, Boundary& b) {
  size_t n = b.edges.size();
  b.verts.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& prev = g.edges[b.edges[(i + n - 1) % n]].vertices;
    const auto& cur = g.edges[b.edges[i]].vertices;
    int32_t shared = -1;
    int matches = 0;
    for (int32_t v : prev) {
      if (v == cur[0] || v == cur[1]) {
        shared = v;
        ++matches;
      }
    }
    if (matches != 1) throw std::logic_error("inflate: boundary stitch is ambiguous");
    b.verts[i] = shared;
  }
}

/// One inflation step.  Every tile of the new layer covers a contiguous run
/// of current boundary edges; "link" coverage of a sibling's trailing free
/// edge realizes shared edges between neighbouring new tiles.
void inflate_layer(TilingGraph& g, Boundary& bd, int layer, int64_t max_boundary) {
  const int n = g.spec.n;
  const int k = g.spec.k;
  const bool vertex_mode = g.spec.inflation == Inflation::vertex;
  const size_t b_size = bd.edges.size();

  std::vector<Act> act(b_size);
  std::vector<int> pure_count(b_size, 0);
  for (size_t i = 0; i < b_size; ++i) {
    int d = k - g.vertex_tile_count[bd.verts[i]];
    if (d < 1) throw std::logic_error("inflate: over-saturated boundary vertex");
    if (d == 1) {
      act[i] = Act::merge;
    } else if (d == 2) {
      act[i] = Act::link;
    } else if (vertex_mode) {
      act[i] = Act::pure;
      pure_count[i] = d - 2;
    } else {
      act[i] = Act::wedge;
    }
  }

  size_t start = b_size;
  for (size_t i = 0; i < b_size; ++i) {
    if (act[i] != Act::merge) {
      start = i;
      break;
    }
  }
  if (start == b_size) throw GeometryError("inflate: layer would close onto itself");

  // Runs of old edges joined at merge vertices, in walk order from `start`.
  struct Run {
    size_t begin;  // walk offset of first old edge
    size_t count;
  };
  std::vector<Run> runs;
  for (size_t off = 0; off < b_size; ++off) {
    size_t pos = (start + off) % b_size;
    if (off == 0 || act[pos] != Act::merge) {
      runs.push_back({off, 1});
    } else {
      ++runs.back().count;
    }
  }

  // Projected new boundary size: n*T - B - 2*L with T tiles and L links.
  int64_t links = 0;
  int64_t tile_count = static_cast<int64_t>(runs.size());
  for (size_t r = 0; r < runs.size(); ++r) {
    size_t right_vertex = (start + runs[r].begin + runs[r].count) % b_size;
    if (act[right_vertex] == Act::link) links += 1;
    if (act[right_vertex] == Act::pure) {
      links += pure_count[right_vertex] + 1;
      tile_count += pure_count[right_vertex];
    }
  }
  int64_t new_b = n * tile_count - static_cast<int64_t>(b_size) - 2 * links;
  if (new_b > max_boundary) {
    throw ResourceLimitError("inflate: projected boundary size " + std::to_string(new_b) +
                             " exceeds ceiling " + std::to_string(max_boundary));
  }

  struct CoveredEdge {
    int32_t id;
    int32_t left;
    int32_t right;
  };
  std::vector<int32_t> new_boundary;
  new_boundary.reserve(static_cast<size_t>(new_b));
  int32_t first_f1 = -1;
  int32_t prev_last_free = -1;
  int32_t prev_last_free_left = -1;
  const bool closure_links = act[start] == Act::link || act[start] == Act::pure;
  const int64_t total_tiles = tile_count;
  int64_t emitted = 0;

  if (total_tiles < 2) throw std::logic_error("inflate: degenerate single-tile layer");

  auto emit_tile = [&](std::vector<CoveredEdge> covered, bool links_to_next) {
    const bool is_first = emitted == 0;
    const bool is_last = emitted == total_tiles - 1;
    if (is_last && closure_links) {
      // The layer ring closes by covering the first tile's leading free
      // edge, which runs from the closure vertex to the first fresh corner.
      const auto& fv = g.edges[first_f1].vertices;
      int32_t closure_v = bd.verts[start];
      covered.push_back({first_f1, closure_v, fv[0] == closure_v ? fv[1] : fv[0]});
    }
    int32_t tid = static_cast<int32_t>(g.tiles.size());
    size_t c = covered.size();
    if (c == 0 || c + 1 > static_cast<size_t>(n)) {
      throw std::logic_error("inflate: tile coverage out of range");
    }
    size_t f = static_cast<size_t>(n) - c;

    TilingGraph::Tile tile;
    tile.layer = layer;
    tile.edges.reserve(n);
    for (size_t i = c; i-- > 0;) tile.edges.push_back(covered[i].id);
    for (const CoveredEdge& ce : covered) {
      if (g.edges[ce.id].tiles[1] != -1) throw std::logic_error("inflate: edge covered twice");
      g.edges[ce.id].tiles[1] = tid;
    }
    // Corner counts: both endpoints of the covered chain plus interior
    // covered vertices, plus the f-1 fresh chain vertices.
    g.vertex_tile_count[covered.front().left] += 1;
    for (const CoveredEdge& ce : covered) g.vertex_tile_count[ce.right] += 1;

    int32_t left_attach = covered.front().left;
    int32_t right_attach = covered.back().right;
    int32_t chain_prev = left_attach;
    std::vector<int32_t> frees;
    frees.reserve(f);
    for (size_t i = 0; i < f; ++i) {
      int32_t vnext;
      if (i + 1 == f) {
        vnext = right_attach;
      } else {
        vnext = g.vertex_count++;
        g.vertex_tile_count.push_back(1);
      }
      int32_t eid = static_cast<int32_t>(g.edges.size());
      g.edges.push_back({{tid, -1}, {chain_prev, vnext}});
      frees.push_back(eid);
      chain_prev = vnext;
    }
    for (int32_t eid : frees) tile.edges.push_back(eid);
    g.tiles.push_back(std::move(tile));

    for (size_t i = 0; i < f; ++i) {
      if (i == 0 && is_first && closure_links) continue;  // covered at closure
      if (i + 1 == f && links_to_next) continue;          // covered by the next tile
      new_boundary.push_back(frees[i]);
    }
    if (is_first) first_f1 = frees.front();
    prev_last_free = frees.back();
    prev_last_free_left = f >= 2 ? g.edges[frees.back()].vertices[0] : left_attach;
    ++emitted;
  };

  for (size_t r = 0; r < runs.size(); ++r) {
    size_t right_vertex = (start + runs[r].begin + runs[r].count) % b_size;
    Act right = act[right_vertex];
    std::vector<CoveredEdge> covered;
    if (r > 0) {
      size_t left_vertex = (start + runs[r].begin) % b_size;
      Act left = act[left_vertex];
      if (left == Act::link || left == Act::pure) {
        covered.push_back({prev_last_free, prev_last_free_left, bd.verts[left_vertex]});
      }
    }
    for (size_t i = 0; i < runs[r].count; ++i) {
      size_t pos = (start + runs[r].begin + i) % b_size;
      covered.push_back({bd.edges[pos], bd.verts[pos], bd.verts[(pos + 1) % b_size]});
    }
    bool run_links = right == Act::link || right == Act::pure;
    bool is_final_emission = (r + 1 == runs.size()) && right != Act::pure;
    emit_tile(std::move(covered), run_links && !is_final_emission);

    if (right == Act::pure) {
      int32_t fan = bd.verts[right_vertex];
      for (int j = 0; j < pure_count[right_vertex]; ++j) {
        bool last_overall = (r + 1 == runs.size()) && (j + 1 == pure_count[right_vertex]);
        emit_tile({{prev_last_free, prev_last_free_left, fan}}, !last_overall);
      }
    }
  }

  if (static_cast<int64_t>(new_boundary.size()) != new_b) {
    throw std::logic_error("inflate: boundary size bookkeeping mismatch");
  }
  bd.edges = std::move(new_boundary);
  rebuild_boundary_verts(g, bd);
}

}  // namespace

TilingGraph generate(const TilingSpec& spec, int64_t max_boundary) {
  if (validate_schlafli(spec.n, spec.k) != Curvature::hyperbolic) {
    throw GeometryError("generate: {" + std::to_string(spec.n) + "," + std::to_string(spec.k) +
                        "} is not hyperbolic (n*k - 2*(n+k) must be positive)");
  }
  if (spec.layers < 0) throw std::invalid_argument("generate: layers must be >= 0");
  if (spec.n > max_boundary) throw ResourceLimitError("generate: seed exceeds boundary ceiling");

  TilingGraph g;
  g.spec = spec;
  g.vertex_count = spec.n;
  g.vertex_tile_count.assign(spec.n, 1);
  TilingGraph::Tile seed;
  seed.layer = 0;
  Boundary bd;
  for (int32_t i = 0; i < spec.n; ++i) {
    g.edges.push_back({{0, -1}, {i, (i + 1) % spec.n}});
    seed.edges.push_back(i);
    bd.edges.push_back(i);
    bd.verts.push_back(i);
  }
  g.tiles.push_back(std::move(seed));

  for (int layer = 1; layer <= spec.layers; ++layer) {
    inflate_layer(g, bd, layer, max_boundary);
  }

  // Boundary order starts at the smallest boundary edge id.
  size_t pivot =
      std::min_element(bd.edges.begin(), bd.edges.end()) - bd.edges.begin();
  g.boundary_order.reserve(bd.edges.size());
  for (size_t i = 0; i < bd.edges.size(); ++i) {
    g.boundary_order.push_back(bd.edges[(pivot + i) % bd.edges.size()]);
  }
  return g;
}

void TilingGraph::check_invariants() const {
  size_t expected_boundary = 0;
  std::vector<int> edge_use(edges.size(), 0);
  for (size_t t = 0; t < tiles.size(); ++t) {
    if (tiles[t].edges.size() != static_cast<size_t>(spec.n)) {
      throw std::logic_error("tiling invariant: tile arity != n");
    }
    for (int32_t e : tiles[t].edges) {
      ++edge_use[e];
      const Edge& ed = edges[e];
      if (ed.tiles[0] != static_cast<int32_t>(t) && ed.tiles[1] != static_cast<int32_t>(t)) {
        throw std::logic_error("tiling invariant: edge/tile incidence asymmetric");
      }
      int32_t other = ed.tiles[0] == static_cast<int32_t>(t) ? ed.tiles[1] : ed.tiles[0];
      if (other >= 0 && std::abs(tiles[other].layer - tiles[t].layer) > 1) {
        throw std::logic_error("tiling invariant: edge joins non-adjacent layers");
      }
    }
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    int expected = is_boundary_edge(static_cast<int32_t>(e)) ? 1 : 2;
    if (edge_use[e] != expected) {
      throw std::logic_error("tiling invariant: edge use count mismatch");
    }
    if (is_boundary_edge(static_cast<int32_t>(e))) ++expected_boundary;
  }
  if (boundary_order.size() != expected_boundary) {
    throw std::logic_error("tiling invariant: boundary_order does not cover the boundary");
  }
  std::set<int32_t> seen(boundary_order.begin(), boundary_order.end());
  if (seen.size() != boundary_order.size()) {
    throw std::logic_error("tiling invariant: boundary_order repeats an edge");
  }
  for (size_t i = 0; i < boundary_order.size(); ++i) {
    boundary_vertex(i);  // throws if consecutive edges do not meet
  }
  // Interior vertices are saturated.
  std::vector<bool> on_boundary(vertex_count, false);
  for (int32_t e : boundary_order) {
    on_boundary[edges[e].vertices[0]] = true;
    on_boundary[edges[e].vertices[1]] = true;
  }
  for (int32_t v = 0; v < vertex_count; ++v) {
    if (!on_boundary[v] && vertex_tile_count[v] != spec.k) {
      throw std::logic_error("tiling invariant: interior vertex degree != k");
    }
  }
}

namespace {

/// BFS distances (and lexicographic parent edges) from one vertex over the
/// tiling 1-skeleton.
struct Bfs {
  std::vector<int32_t> dist;
  std::vector<int32_t> parent_edge;
};

Bfs bfs_from(const TilingGraph& g, int32_t source,
             const std::vector<std::vector<std::pair<int32_t, int32_t>>>& adj) {
  Bfs r;
  r.dist.assign(g.vertex_count, std::numeric_limits<int32_t>::max());
  r.parent_edge.assign(g.vertex_count, -1);
  std::deque<int32_t> queue{source};
  r.dist[source] = 0;
  while (!queue.empty()) {
    int32_t v = queue.front();
    queue.pop_front();
    for (auto [eid, w] : adj[v]) {
      if (r.dist[w] > r.dist[v] + 1) {
        r.dist[w] = r.dist[v] + 1;
        r.parent_edge[w] = eid;
        queue.push_back(w);
      }
    }
  }
  return r;
}

std::vector<std::vector<std::pair<int32_t, int32_t>>> skeleton_adjacency(const TilingGraph& g) {
  std::vector<std::vector<std::pair<int32_t, int32_t>>> adj(g.vertex_count);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e].vertices;
    adj[a].push_back({static_cast<int32_t>(e), b});
    adj[b].push_back({static_cast<int32_t>(e), a});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

void collect_path(const TilingGraph& g, const Bfs& bfs, int32_t source, int32_t target,
                  std::set<int32_t>& out) {
  int32_t v = target;
  while (v != source) {
    int32_t e = bfs.parent_edge[v];
    if (e < 0) throw std::logic_error("min_cut: disconnected skeleton");
    out.insert(e);
    const auto& ev = g.edges[e].vertices;
    v = ev[0] == v ? ev[1] : ev[0];
  }
}

}  // namespace

MinCutResult min_cut(const TilingGraph& g, const std::vector<int32_t>& region) {
  const int64_t b = static_cast<int64_t>(g.boundary_size());
  std::vector<bool> in_region(b, false);
  for (int32_t pos : region) {
    if (pos < 0 || pos >= b) throw std::invalid_argument("min_cut: bad boundary position");
    in_region[pos] = true;
  }
  size_t count = 0;
  for (bool f : in_region) count += f;
  if (count == 0 || count == static_cast<size_t>(b)) return {0, {}};

  // Gap positions: boundary vertices where membership flips.
  std::vector<int32_t> gaps;
  for (int64_t i = 0; i < b; ++i) {
    if (in_region[i] != in_region[(i + b - 1) % b]) gaps.push_back(static_cast<int32_t>(i));
  }
  size_t m = gaps.size();  // even
  std::vector<int32_t> gap_vertex(m);
  for (size_t i = 0; i < m; ++i) gap_vertex[i] = g.boundary_vertex(gaps[i]);

  auto adj = skeleton_adjacency(g);
  std::vector<Bfs> bfs;
  bfs.reserve(m);
  for (size_t i = 0; i < m; ++i) bfs.push_back(bfs_from(g, gap_vertex[i], adj));

  if (m == 2) {
    std::set<int32_t> cut;
    collect_path(g, bfs[0], gap_vertex[0], gap_vertex[1], cut);
    return {bfs[0].dist[gap_vertex[1]], {cut.begin(), cut.end()}};
  }

  // Optimal non-crossing pairing of the gaps: interval DP on the cyclic gap
  // sequence cut open between gaps m-1 and 0.
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
  std::vector<std::vector<int64_t>> dp(m + 1, std::vector<int64_t>(m + 1, 0));
  std::vector<std::vector<size_t>> choice(m + 1, std::vector<size_t>(m + 1, 0));
  auto sp = [&](size_t i, size_t j) {
    return static_cast<int64_t>(bfs[i].dist[gap_vertex[j]]);
  };
  for (size_t len = 2; len <= m; len += 2) {
    for (size_t i = 0; i + len <= m; ++i) {
      size_t j = i + len;  // half-open [i, j)
      int64_t best = kInf;
      size_t best_mid = i + 1;
      for (size_t mid = i + 1; mid < j; mid += 2) {
        int64_t cost = sp(i, mid) + dp[i + 1][mid] + dp[mid + 1][j];
        if (cost < best) {
          best = cost;
          best_mid = mid;
        }
      }
      dp[i][j] = best;
      choice[i][j] = best_mid;
    }
  }
  std::set<int32_t> cut;
  std::vector<std::pair<size_t, size_t>> stack{{0, m}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (i >= j) continue;
    size_t mid = choice[i][j];
    collect_path(g, bfs[i], gap_vertex[i], gap_vertex[mid], cut);
    stack.push_back({i + 1, mid});
    stack.push_back({mid + 1, j});
  }
  return {static_cast<int32_t>(dp[0][m]), {cut.begin(), cut.end()}};
}

int32_t boundary_distance(const TilingGraph& g, int64_t i, int64_t j) {
  int64_t b = static_cast<int64_t>(g.boundary_size());
  if (i < 0 || i >= b || j < 0 || j >= b) {
    throw std::invalid_argument("boundary_distance: position out of range");
  }
  int64_t d = std::abs(i - j);
  return static_cast<int32_t>(std::min(d, b - d));
}

std::string to_string(Inflation inflation) {
  return inflation == Inflation::vertex ? "vertex" : "edge";
}

Inflation inflation_from_string(const std::string& name) {
  if (name == "vertex") return Inflation::vertex;
  if (name == "edge") return Inflation::edge;
  throw std::invalid_argument("inflation must be 'vertex' or 'edge'");
}

}  // namespace holo
