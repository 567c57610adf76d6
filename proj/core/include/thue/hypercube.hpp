#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thue/graph.hpp"

namespace thue {

inline constexpr std::size_t kMaxHypercubeDim = 20;

/// Q_k on vertices 0..2^k-1, edge (x, x ^ 2^i) colored i.
struct HypercubeColoring {
  std::size_t k = 0;
  Graph graph;
  EdgeColoring coloring;
};

/// Edges are listed for x ascending and, within x, for each bit i ascending
/// with bit i of x clear. 1 <= k <= kMaxHypercubeDim.
HypercubeColoring build_hypercube(std::size_t k);

struct LayeredCube {
  Graph graph;
  EdgeColoring coloring;
  /// Hypercube label of every vertex of `graph`.
  std::vector<std::uint32_t> labels;
};

/// Induced subgraph of Q_k on the vertices within Hamming distance m of
/// `base`. Vertices are numbered by (distance, label), so `base` is vertex 0.
LayeredCube first_layers(std::size_t k, std::size_t m, std::uint32_t base = 0);

/// Walks from `start` along the unique edge of each color in turn. Returns
/// the end vertex, or nullopt if some color is missing or ambiguous at a
/// vertex or a vertex repeats.
std::optional<VertexId> follow_colors(const Graph& g, const EdgeColoring& c, VertexId start,
                                      std::span<const Color> colors);

struct PropertyResult {
  bool holds = true;
  std::optional<std::string> counterexample;
};

struct Lemma2Report {
  std::size_t k = 0;
  /// (1) every shortest path uses distinct colors.
  PropertyResult shortest_distinct;
  /// (2) all orderings of a distinct-color path's colors are paths with the
  /// same ends, and no other distinct-color path joins the same ends.
  PropertyResult permutations;
  /// (3) every distinct-color path is a shortest path.
  PropertyResult distinct_shortest;
  /// (4) C(k, i) vertices at distance i.
  PropertyResult layer_sizes;
  std::vector<std::size_t> layer_counts;
  /// Start vertices checked; all 2^k unless sampled.
  std::size_t starts_checked = 0;
  bool sampled = false;

  bool all_hold() const {
    return shortest_distinct.holds && permutations.holds && distinct_shortest.holds && layer_sizes.holds;
  }
};

/// Checks the four properties on the dimension-colored Q_k by path
/// enumeration. Every start vertex for k <= 4; for 5 <= k <= 8 only
/// `samples` start vertices drawn with `seed` (always including 0).
Lemma2Report verify_lemma2(std::size_t k, std::uint64_t seed = 0, std::size_t samples = 8);

nlohmann::json lemma2_to_json(const Lemma2Report& r);

struct SaturationViolation {
  Diamond diamond;
  std::size_t colors = 0;
};

/// A diamond qualifies when some pair of opposite vertices A, B is
/// saturated, A and B are not adjacent, and A and B have no common
/// neighbor besides the other two diamond vertices. Qualifying diamonds
/// colored with other than exactly two colors are returned.
std::vector<SaturationViolation> check_saturation_conclusion(const Graph& g, const EdgeColoring& c);

}  // namespace thue
