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

#ifndef HOLOCODE_TILING_HPP
#define HOLOCODE_TILING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace holo {

enum class Inflation { vertex, edge };
enum class Curvature { hyperbolic, flat, spherical };

/// Sign classification of n*k - 2*(n+k).  Throws std::invalid_argument for
/// n < 3 or k < 3.
Curvature validate_schlafli(int n, int k);

struct TilingSpec {
  int n = 5;
  int k = 4;
  Inflation inflation = Inflation::vertex;
  int layers = 0;
};

/// Regular {n,k} tiling of a disk, grown layer by layer, as pure
/// combinatorics.  Tile edge lists are counterclockwise; the edges a tile
/// shares with earlier tiles form a prefix of its list (in reversed boundary
/// order), followed by the edges that were free when it was created (in
/// boundary order).
struct TilingGraph {
  struct Tile {
    std::vector<int32_t> edges;  // ccw cyclic
    int32_t layer = 0;
  };
  struct Edge {
    std::array<int32_t, 2> tiles{-1, -1};     // tiles[1] < 0 on the boundary
    std::array<int32_t, 2> vertices{-1, -1};  // endpoints, unordered
  };

  TilingSpec spec;
  std::vector<Tile> tiles;
  std::vector<Edge> edges;
  std::vector<int32_t> boundary_order;  // boundary edge ids, ccw cycle
  int32_t vertex_count = 0;
  std::vector<int32_t> vertex_tile_count;

  bool is_boundary_edge(int32_t e) const { return edges[e].tiles[1] < 0; }
  size_t boundary_size() const { return boundary_order.size(); }
  int32_t layer_of(int32_t tile) const { return tiles[tile].layer; }
  /// Vertex between boundary_order[pos-1] and boundary_order[pos] (cyclic).
  int32_t boundary_vertex(size_t pos) const;

  /// Structural invariants: tile arity, edge/tile incidence symmetry,
  /// boundary cycle consistency, interior vertex degree k, layer adjacency.
  void check_invariants() const;
};

/// Default boundary-size ceiling; HOLOCODE_MAX_BOUNDARY overrides.
int64_t max_boundary_ceiling();

/// Grows `spec.layers` inflation layers around a single seed tile.
/// Throws GeometryError unless the symbol is hyperbolic, ResourceLimitError
/// when the projected boundary would exceed `max_boundary`.
TilingGraph generate(const TilingSpec& spec, int64_t max_boundary = max_boundary_ceiling());

struct MinCutResult {
  int32_t size = 0;
  std::vector<int32_t> cut_edges;  // tiling edge ids, deduplicated
};

/// Minimum number of edges a curve through the tiling must cross to separate
/// the given boundary region (positions into boundary_order) from its
/// complement.  Computed as shortest paths between boundary gap vertices in
/// the tiling 1-skeleton; disconnected regions use the optimal non-crossing
/// pairing of gaps.  Ties are broken toward lexicographically smaller edge
/// ids.
MinCutResult min_cut(const TilingGraph& graph, const std::vector<int32_t>& region);

/// Minimal cyclic arc separation between two boundary positions.
int32_t boundary_distance(const TilingGraph& graph, int64_t i, int64_t j);

std::string to_string(Inflation inflation);
Inflation inflation_from_string(const std::string& name);

}  // namespace holo

#endif
