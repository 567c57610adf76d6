#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thue/graph.hpp"
#include "thue/oracle.hpp"
#include "thue/paths.hpp"

namespace thue {

/// Where the pieces of a snout/variable/clause construction live.
struct SatLayout {
  std::size_t n = 0;  // variables
  std::size_t m = 0;  // clauses
  std::size_t M = 0;  // max literal occurrences (at least 1)
  /// Edges per branch (M + 1) and number of snout edges L*n + 2m + 1.
  std::size_t branch_len = 0;
  std::size_t snout_len = 0;

  // Vertices of the directed construction (kept by the undirected one).
  std::vector<VertexId> snout;              // a_0 (tip) .. a_{N-1}
  std::vector<VertexId> begin;              // b_1 .. b_n, then c
  std::vector<std::vector<VertexId>> true_branch;   // M inner vertices per variable
  std::vector<std::vector<VertexId>> false_branch;
  std::vector<VertexId> clause;             // e_1 .. e_m, then d
  std::vector<std::vector<VertexId>> detour;  // per clause, per literal

  /// Directed edges of the base construction in insertion order, with their
  /// w color (0-based) and whether they lie on the snout.
  std::vector<Edge> base_edges;
  std::vector<Color> base_colors;
  std::vector<char> base_in_snout;

  /// Undirected expansion only. For a non-snout base edge: the four inner
  /// vertices of its 5-path and its rank (1..3) within its color class. For
  /// a snout edge: p-side middles m_1..m_3, z_1, z_2, q-side middles
  /// n_1..n_3 (8 entries) and rank 0.
  std::vector<std::vector<VertexId>> expansion;
  std::vector<std::size_t> rank;

  /// Restricted instances: universal variables (1-based) and, per universal
  /// variable, the edge ids carrying {w^1} (true branch), {w^0} (false
  /// branch) and {w^0, w^1} (snout), and the two color ids w^0, w^1.
  std::vector<int> universal;
  std::vector<std::array<EdgeId, 3>> choice_edges;
  std::vector<std::array<Color, 2>> choice_colors;

  friend bool operator==(const SatLayout&, const SatLayout&) = default;
};

/// A generated instance together with bookkeeping.
struct ReductionArtifact {
  std::string kind;
  Graph graph;
  std::optional<EdgeColoring> coloring;
  std::optional<ColorConstraint> constraints;
  std::size_t palette_size = 0;
  std::optional<std::size_t> max_half_len;
  std::vector<std::string> vertex_gadget;
  std::vector<std::string> edge_gadget;
  std::vector<std::string> color_names;
  nlohmann::json params = nlohmann::json::object();
  std::optional<SatLayout> layout;
  /// Free-form construction data for generators without a typed layout.
  nlohmann::json extra = nlohmann::json::object();
};

bool operator==(const ReductionArtifact& a, const ReductionArtifact& b);

// --- snout / variable / clause reductions --------------------------------

/// Directed graph and coloring that has a square path iff f is satisfiable.
/// Clauses may have 1 to 3 literals.
ReductionArtifact reduce_3sat_directed(const CNFFormula& f);

/// Undirected version: snout edges become the 13-edge snout gadget and
/// other edges 5-edge paths with direction-determining colors.
ReductionArtifact reduce_3sat_undirected(const CNFFormula& f);

/// The undirected construction for the matrix read as an existential
/// formula, with list constraints whose choices select universal values.
ReductionArtifact reduce_qbf_restricted(const QBFInstance& q);

/// Colorings of a restricted artifact indexed by the choice bits: bit i set
/// means the snout edge of universal variable i takes w^1.
EdgeColoring resolve_choices(const ReductionArtifact& art, std::uint64_t bits);

/// True iff some choice of snout colors is nonrepetitive, decided by trying
/// every choice with find_square_path.
bool restricted_colorable(const ReductionArtifact& art, std::optional<std::uint64_t>* certificate = nullptr);

/// Square path built from a satisfying assignment, for directed and
/// undirected artifacts. Throws InvalidArgument if `a` does not satisfy the
/// formula the artifact was built from (`f`).
SquareWitness witness_square_path(const ReductionArtifact& art, const CNFFormula& f, const Assignment& a);

// --- clams ------------------------------------------------------------------

inline constexpr std::size_t kClamEdges = 12;
inline constexpr std::size_t kClamNewVertices = 8;

/// Every edge (A, B) becomes a clam with new vertices s, t, V, V', g1..g4:
/// outer diamond A-s-B-t, inner diamond s-V-t-V', gills V-g1, V-g2, V'-g3,
/// V'-g4. Palette 6, half-length bound 2. `extra["clams"]` lists, per input
/// edge, the first new vertex and first edge id.
ReductionArtifact reduce_edgecoloring_clam(const Graph& g);

/// Clam pattern p in {0,1,2}: outer pair P[p], inner P[p+1], gills P[p+2]
/// with P = {01, 23, 45}.
EdgeColoring clam_coloring_from_3ec(const ReductionArtifact& art, const Graph& g, const EdgeColoring& ec);

/// Colors of one clam: outer, inner and gill pairs (sorted).
struct ClamPattern {
  std::array<Color, 2> outer;
  std::array<Color, 2> inner;
  std::array<Color, 2> gills;

  friend auto operator<=>(const ClamPattern&, const ClamPattern&) = default;
};

/// Reads the pattern of clam `index`. Throws if a part does not use exactly
/// two colors or the gills at V and V' differ.
ClamPattern read_clam_pattern(const ReductionArtifact& art, const EdgeColoring& c, std::size_t index);

struct ClamPatternEnumeration {
  /// Distinct clam patterns over all solutions, colors relabeled so that the
  /// first clam reads 01|23|45.
  std::vector<ClamPattern> patterns;
  std::size_t solutions = 0;
  std::uint64_t nodes = 0;
  /// Every solution gives the three clams at the shared vertex pairwise
  /// disjoint patterns.
  bool clams_at_vertex_disjoint = true;
};

/// Three clams from a vertex A to B, C, D, each of B, C, D carrying a plume
/// of 4 so all four are saturated; all 2-bounded nonrepetitive 6-colorings
/// are enumerated with the star at A fixed.
ClamPatternEnumeration enumerate_clam_patterns();

/// Cubic graph with no 3-edge-coloring: two copies of K4 with one edge
/// subdivided, the two subdivision vertices joined by a bridge.
Graph bridged_double_k4();

// --- group cliques ----------------------------------------------------------

struct CliqueColoring {
  std::size_t m = 0;
  Graph graph;
  EdgeColoring coloring;
};

/// K_{2^m} on Z_2^m with edge (u, v) colored (u xor v) - 1, so the palette is
/// the 2^m - 1 nonzero elements. 1 <= m <= 7.
CliqueColoring group_clique_coloring(std::size_t m);

// --- Thue number instance ---------------------------------------------------

/// Gadget replacing one edge of the split restricted graph. Kind 'E' is a
/// 7-hypercube, 'P' the modified one, 'C' and 'N' the choice and negative
/// gadgets of a universal variable.
struct EdgeGadget {
  char kind = 'E';
  EdgeId source_edge = 0;  // edge of the split graph
  Color color = 0;         // its color there (w^0 for P, w^1 for N, ...)
  VertexId v0 = 0;
  VertexId v1 = 0;
  /// E and P: u0 (distance 3 from v0) and u1 (distance 4). C and N: u.
  std::vector<VertexId> attach;
  /// P only: u_{-1} and u_{-2}.
  std::vector<VertexId> near_saturated;
  /// Core vertices created for this gadget (contiguous; v0 and v1 belong to
  /// the split graph and are not among them).
  VertexId first_vertex = 0;
  std::size_t vertex_count = 0;
  std::vector<EdgeId> edges;
};

/// A 2^m-clique. `members` are gadget vertices identified with clique
/// vertices; every other clique vertex carries a plume (the first two layers
/// of a 7-hypercube centered at it).
struct ConsistencyGadget {
  std::string tag;
  std::vector<VertexId> members;
};

struct ThueOptions {
  /// Use 2^override the clique size instead of 2^m (for materializing
  /// small analogues in tests); colors budget follows.
  std::optional<std::size_t> clique_exponent;
  /// Refuse to build an explicit core with more vertices than this.
  std::size_t core_vertex_limit = 20'000'000;
};

/// The graph H of the Thue-number reduction, stored implicitly: the core
/// (all edge gadgets) is explicit; pendant plumes and the consistency
/// cliques with their hypercube plumes are kept as counts.
struct ThueInstance {
  std::size_t c = 0;
  std::size_t u = 0;
  std::size_t ell = 0;
  std::size_t m = 0;
  /// Exponent actually used for cliques (m unless overridden).
  std::size_t clique_exponent = 0;

  Graph core;
  std::vector<std::string> vertex_tag;
  std::vector<std::string> edge_tag;
  /// Pendant leaves attached to each core vertex.
  std::vector<std::uint64_t> pendants;
  std::vector<EdgeGadget> gadgets;
  std::vector<ConsistencyGadget> consistency;
  /// Consistency gadget each core vertex belongs to, or -1.
  std::vector<std::int32_t> member_of;

  /// The split restricted graph the gadgets replace, with its colors
  /// (singleton sets) and the choice pairs {w^0, w^1} per universal variable.
  Graph split;
  std::vector<std::vector<Color>> split_sets;
  std::vector<std::array<Color, 2>> choice_colors;

  std::uint64_t clique_size() const { return std::uint64_t{1} << clique_exponent; }
  /// 2^clique_exponent + 6.
  std::uint64_t palette_size() const { return clique_size() + 6; }
  std::uint64_t degree(VertexId v) const;
  std::uint64_t max_degree() const { return palette_size(); }
  /// Totals with every implicit part expanded, as decimal strings (they can
  /// exceed 64 bits).
  std::string total_vertices() const;
  std::string total_edges() const;

  /// The gadget's own edges as a graph: local 0 is v0, local 1 is v1 and
  /// local 2 + i is core vertex first_vertex + i. Implicit parts excluded.
  Graph gadget_graph(std::size_t index) const;

  /// Expands everything. Throws InvalidArgument if the result would have
  /// more than `vertex_limit` vertices.
  struct Materialized {
    Graph graph;
    std::vector<std::string> vertex_tag;
    /// Clique vertices per consistency gadget.
    std::vector<std::vector<VertexId>> cliques;
  };
  Materialized materialize(std::size_t vertex_limit) const;
};

/// Structural generator for the instance (H, 2^m + 6). Does not color H or
/// decide anything about it.
ThueInstance reduce_qbf_thue(const QBFInstance& q, const ThueOptions& options = {});

/// Artifact form: the explicit core with tags, params and the implicit parts
/// described in `extra`.
ReductionArtifact thue_instance_artifact(const ThueInstance& inst);

/// Serialization of artifacts. Round trip is exact.
nlohmann::json artifact_to_json(const ReductionArtifact& art);
ReductionArtifact artifact_from_json(const nlohmann::json& j);

}  // namespace thue
