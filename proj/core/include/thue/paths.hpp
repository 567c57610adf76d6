#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "thue/graph.hpp"

namespace thue {

/// An open simple path whose color word is xx. vertices has 2h+1 entries.
struct SquareWitness {
  std::vector<VertexId> vertices;
  ColorWord colors;
  std::size_t half_len = 0;

  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

struct SearchOptions {
  /// Only squares with half length <= this bound are looked for.
  std::optional<std::size_t> max_half_len;
  /// Threads used by find_square_path; 0 or 1 means the calling thread only.
  unsigned workers = 1;
};

/// Lockstep square-path search over a (possibly partial) coloring.
///
/// A square path x0..xh = y0..yh is explored as two walkers that advance
/// together over equally colored edges; all 2h+1 vertices must be distinct
/// except that the first walker ends where the second one starts. Unassigned
/// edges are never traversed, which is what the solver relies on.
///
/// The object keeps a private copy of the colors and is cheap to update one
/// edge at a time. Not thread-safe; use one instance per thread.
class SquareSearcher {
 public:
  SquareSearcher(const Graph& g, std::span<const Color> colors, std::optional<std::size_t> max_half_len);

  void assign(EdgeId e, Color c) { colors_[e] = c; }
  void unassign(EdgeId e) { colors_[e] = EdgeColoring::kUnassigned; }
  Color color(EdgeId e) const { return colors_[e]; }

  /// First square path in search order whose first edge leaves `start`.
  std::optional<SquareWitness> find_from(VertexId start);
  /// Any square path among assigned edges.
  std::optional<SquareWitness> find_any();
  /// True iff some square path uses edge e (which must be assigned).
  bool has_square_through(EdgeId e);

  /// Search steps taken so far (one per walker pair extension).
  std::uint64_t steps() const { return steps_; }

 private:
  struct Step {
    VertexId vertex;
    EdgeId edge;
  };

  bool forward();
  bool backward();
  bool try_meet();
  bool within_bound(std::size_t extra) const;
  SquareWitness witness() const;
  void mark(VertexId v) { used_[v] = 1; }
  void unmark(VertexId v) { used_[v] = 0; }

  const Graph* g_;
  std::vector<Color> colors_;
  std::optional<std::size_t> bound_;
  std::vector<char> used_;
  // xb/yb grow backwards (last entry is the current back end), xf/yf grow
  // forwards. Initial edges are split with their tail in *b and head in *f.
  std::vector<VertexId> xb_, xf_, yb_, yf_;
  std::vector<Color> back_colors_, front_colors_;
  bool allow_backward_ = false;
  std::uint64_t steps_ = 0;
  std::optional<SquareWitness> found_;
};

/// Searches for a square open path. The coloring must be total on g.
///
/// Search order, which fixes the returned witness: start vertex x0
/// ascending; first edge x0->x1 by neighbor ascending; partner edge y0->y1
/// of the same color by edge id ascending, tail-to-head before head-to-tail;
/// then both walkers extend depth first with the first walker's next
/// neighbor ascending and the second walker's next neighbor ascending. With
/// several workers the start vertices are split between threads and the
/// witness with the smallest x0 is reported, so the result is unchanged.
std::optional<SquareWitness> find_square_path(const Graph& g, const EdgeColoring& c,
                                              const SearchOptions& options = {});

struct NonrepetitiveReport {
  bool nonrepetitive = true;
  std::optional<SquareWitness> witness;
};

NonrepetitiveReport is_nonrepetitive(const Graph& g, const EdgeColoring& c, const SearchOptions& options = {});

/// Checks a witness against the graph and coloring: path exists (respecting
/// orientation), vertices distinct, colors match, halves equal.
bool validate_witness(const Graph& g, const EdgeColoring& c, const SquareWitness& w);

/// Calls `visit` on every simple open path with at least one edge and at most
/// `max_len` edges. Undirected paths are reported once, from the smaller
/// endpoint; directed paths follow orientation. Returning false from `visit`
/// stops the enumeration. Exponential; intended as a test oracle.
void for_each_open_path(const Graph& g, std::optional<std::size_t> max_len,
                        const std::function<bool(std::span<const VertexId>)>& visit);

std::vector<std::vector<VertexId>> enumerate_open_paths(const Graph& g,
                                                        std::optional<std::size_t> max_len = std::nullopt);

/// Color word along a vertex path of g.
ColorWord path_colors(const Graph& g, const EdgeColoring& c, std::span<const VertexId> path);

nlohmann::json witness_to_json(const SquareWitness& w);
SquareWitness witness_from_json(const nlohmann::json& j);

}  // namespace thue
