#include "thue/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thue/hypercube.hpp"

namespace thue {

namespace {

__extension__ typedef unsigned __int128 Count;

std::string to_decimal(Count x) {
  if (x == 0) return "0";
  std::string out;
  while (x) {
    out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return {out.rbegin(), out.rend()};
}

// Dimension labels used by the P-gadget.
enum Dim : std::uint32_t { kA = 0, kB = 1, kC = 2, kD = 3, kAB = 4, kAC = 5, kAD = 6 };
constexpr std::uint32_t bit(Dim d) { return 1u << d; }

constexpr std::uint32_t kU0 = bit(kA) | bit(kB) | bit(kAB);
constexpr std::uint32_t kU1 = bit(kC) | bit(kD) | bit(kAC) | bit(kAD);
constexpr std::uint32_t kTop = 127;
constexpr std::uint32_t kUm1 = kU0 ^ (bit(kA) | bit(kC) | bit(kAC));
constexpr std::uint32_t kUm2 = kU0 ^ (bit(kA) | bit(kD) | bit(kAD));

// Vertices of the first two layers of a 7-cube around a clique vertex, the
// clique vertex included, and their edges.
constexpr std::uint64_t kPlumeVertices = 29;
constexpr std::uint64_t kPlumeEdges = 49;

class CoreBuilder {
 public:
  CoreBuilder(std::size_t base_vertices, std::vector<std::string> base_tags)
      : vertex_tag_(std::move(base_tags)) {
    b_.add_vertices(base_vertices);
  }

  VertexId vertex(const std::string& tag) {
    vertex_tag_.push_back(tag);
    return b_.add_vertex();
  }

  EdgeId edge(VertexId u, VertexId v, const std::string& tag, EdgeGadget& g) {
    edge_tag_.push_back(tag);
    const EdgeId e = b_.add_edge(u, v);
    g.edges.push_back(e);
    return e;
  }

  // Q_k with some labels pinned to existing vertices; the rest are created in
  // label order. Edges in `removed` (as label pairs, low label first) are
  // skipped. Returns label -> vertex.
  std::vector<VertexId> cube(std::size_t k, const std::map<std::uint32_t, VertexId>& pinned,
                             const std::set<std::pair<std::uint32_t, std::uint32_t>>& removed,
                             const std::string& tag, EdgeGadget& g) {
    const std::uint32_t n = 1u << k;
    std::vector<VertexId> at(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto it = pinned.find(x);
      at[x] = it != pinned.end() ? it->second : vertex(tag);
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        if (x & (1u << i)) continue;
        const std::uint32_t y = x | (1u << i);
        if (removed.count({x, y})) continue;
        edge(at[x], at[y], tag, g);
      }
    }
    return at;
  }

  std::size_t vertex_count() const { return b_.vertex_count(); }
  Graph build() const { return b_.build(); }
  std::vector<std::string> take_vertex_tags() { return std::move(vertex_tag_); }
  std::vector<std::string> take_edge_tags() { return std::move(edge_tag_); }

 private:
  GraphBuilder b_{false};
  std::vector<std::string> vertex_tag_;
  std::vector<std::string> edge_tag_;
};

}  // namespace

ThueInstance reduce_qbf_thue(const QBFInstance& q, const ThueOptions& options) {
  const ReductionArtifact restricted = reduce_qbf_restricted(q);
  const SatLayout& lay = *restricted.layout;
  const ColorConstraint& cons = *restricted.constraints;

  ThueInstance inst;
  inst.c = cons.palette().size();
  inst.u = q.existential.size();
  while ((std::uint64_t{1} << inst.ell) < inst.c + inst.u + 1) ++inst.ell;
  inst.m = 4 * inst.ell + 3;
  inst.clique_exponent = options.clique_exponent.value_or(inst.m);
  if (inst.clique_exponent < 3 || inst.clique_exponent > 40) {
    throw InvalidArgument("clique exponent must be in [3, 40]");
  }

  // Split every choice edge into three edges in series: {w^I} A {w^F}.
  const auto fresh_color = static_cast<Color>(restricted.palette_size);
  std::map<EdgeId, std::size_t> choice_of;  // edge -> universal index
  for (std::size_t i = 0; i < lay.choice_edges.size(); ++i) {
    for (EdgeId e : lay.choice_edges[i]) choice_of[e] = i;
  }
  inst.choice_colors = lay.choice_colors;
  GraphBuilder split(false);
  split.add_vertices(restricted.graph.vertex_count());
  std::vector<std::string> split_tags = restricted.vertex_gadget;
  std::vector<std::string> split_edge_tags;
  for (EdgeId e = 0; e < restricted.graph.edge_count(); ++e) {
    const auto [u, v] = restricted.graph.edge(e);
    auto it = choice_of.find(e);
    if (it == choice_of.end()) {
      split.add_edge(u, v);
      inst.split_sets.push_back(cons.allowed(e));
      split_edge_tags.push_back(restricted.edge_gadget[e]);
      continue;
    }
    const auto i = static_cast<Color>(it->second);
    const VertexId n1 = split.add_vertex();
    const VertexId n2 = split.add_vertex();
    split_tags.insert(split_tags.end(), 2, restricted.edge_gadget[e]);
    split.add_edge(u, n1);
    split.add_edge(n1, n2);
    split.add_edge(n2, v);
    inst.split_sets.push_back({fresh_color + 2 * i});
    inst.split_sets.push_back(cons.allowed(e));
    inst.split_sets.push_back({fresh_color + 2 * i + 1});
    split_edge_tags.insert(split_edge_tags.end(), 3, restricted.edge_gadget[e]);
  }
  inst.split = split.build();

  const std::size_t estimate = inst.split.vertex_count() + 128 * inst.split.edge_count();
  if (estimate > options.core_vertex_limit) {
    throw InvalidArgument("instance too large: about " + std::to_string(estimate) +
                          " core vertices exceed the limit of " + std::to_string(options.core_vertex_limit));
  }

  auto choice_index = [&](Color c) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < inst.choice_colors.size(); ++i) {
      if (c == inst.choice_colors[i][0] || c == inst.choice_colors[i][1]) return i;
    }
    return std::nullopt;
  };

  const std::uint64_t K = inst.clique_size();
  const std::uint64_t saturated = K + 6;
  CoreBuilder core(inst.split.vertex_count(), split_tags);
  std::map<VertexId, std::uint64_t> pendants;
  std::map<Color, std::vector<VertexId>> color_members;
  std::vector<std::vector<VertexId>> choice_members(inst.choice_colors.size(), std::vector<VertexId>(4));

  for (EdgeId e = 0; e < inst.split.edge_count(); ++e) {
    const auto [v0, v1] = inst.split.edge(e);
    const auto& set = inst.split_sets[e];
    EdgeGadget g;
    g.source_edge = e;
    g.color = set.front();
    g.v0 = v0;
    g.v1 = v1;
    g.first_vertex = static_cast<VertexId>(core.vertex_count());
    const auto ci = choice_index(set.front());
    if (!ci) {
      g.kind = 'E';
      const std::string tag = "E" + std::to_string(e);
      const auto at = core.cube(7, {{0, v0}, {kTop, v1}}, {}, tag, g);
      g.attach = {at[kU0], at[kU1]};
      color_members[g.color].push_back(at[kU0]);
      color_members[g.color].push_back(at[kU1]);
    } else if (set.size() == 2) {
      g.kind = 'C';
      const std::string tag = "C" + std::to_string(*ci + 1);
      const auto q2 = core.cube(2, {{0, v0}}, {}, tag, g);
      const VertexId u = core.vertex(tag);
      core.edge(q2[3], u, tag, g);  // m
      const VertexId qv = core.vertex(tag);
      core.edge(u, qv, tag, g);  // n
      const auto q3 = core.cube(3, {{0, qv}, {7, v1}}, {}, tag, g);
      g.attach = {u};
      for (std::uint32_t w : {1u, 2u}) pendants[q2[w]] += saturated - 2;
      pendants[q2[3]] += saturated - 3;
      for (std::uint32_t z : {1u, 2u, 4u}) pendants[q3[z]] += saturated - 3;
      pendants[u] += 5;
      choice_members[*ci][0] = u;
    } else if (set.front() == inst.choice_colors[*ci][0]) {
      g.kind = 'N';
      const std::string tag = "N" + std::to_string(*ci + 1);
      const auto q3 = core.cube(3, {{0, v0}}, {}, tag, g);
      const VertexId u = q3[7];
      core.cube(4, {{0, u}, {15, v1}}, {}, tag, g);
      g.attach = {u};
      for (std::uint32_t x = 1; x < 7; ++x) pendants[q3[x]] += saturated - 3;
      choice_members[*ci][1] = u;
    } else {
      g.kind = 'P';
      const std::string tag = "P" + std::to_string(*ci + 1);
      std::set<std::pair<std::uint32_t, std::uint32_t>> removed;
      auto drop = [&](std::uint32_t x, Dim d) {
        const std::uint32_t y = x ^ bit(d);
        removed.insert({std::min(x, y), std::max(x, y)});
      };
      for (Dim d : {kC, kD, kAC, kAD}) drop(kTop, d);
      drop(kUm1, kB);
      drop(kUm1, kC);
      drop(kUm2, kB);
      drop(kUm2, kD);
      const auto at = core.cube(7, {{0, v0}, {kTop, v1}}, removed, tag, g);
      g.attach = {at[kU0], at[kU1]};
      g.near_saturated = {at[kUm1], at[kUm2]};
      pendants[at[kUm1]] += K - 2;
      pendants[at[kUm2]] += K - 2;
      choice_members[*ci][2] = at[kU0];
      choice_members[*ci][3] = at[kU1];
    }
    g.vertex_count = core.vertex_count() - g.first_vertex;
    inst.gadgets.push_back(std::move(g));
  }

  for (auto& [color, members] : color_members) {
    inst.consistency.push_back({"Q" + std::to_string(color), members});
  }
  for (std::size_t i = 0; i < choice_members.size(); ++i) {
    inst.consistency.push_back({"QX" + std::to_string(i + 1), choice_members[i]});
  }

  inst.core = core.build();
  inst.vertex_tag = core.take_vertex_tags();
  inst.edge_tag = core.take_edge_tags();
  inst.pendants.assign(inst.core.vertex_count(), 0);
  for (const auto& [v, count] : pendants) inst.pendants[v] = count;
  inst.member_of.assign(inst.core.vertex_count(), -1);
  for (std::size_t i = 0; i < inst.consistency.size(); ++i) {
    if (inst.consistency[i].members.size() > K) throw InvalidArgument("clique too small for its members");
    for (VertexId v : inst.consistency[i].members) {
      if (inst.member_of[v] != -1) throw Error("internal error: vertex in two consistency gadgets");
      inst.member_of[v] = static_cast<std::int32_t>(i);
    }
  }
  for (VertexId v = 0; v < inst.core.vertex_count(); ++v) {
    if (inst.degree(v) > inst.palette_size()) {
      throw InvalidArgument("clique exponent " + std::to_string(inst.clique_exponent) + " too small: vertex " +
                            std::to_string(v) + " has degree " + std::to_string(inst.degree(v)));
    }
  }
  return inst;
}

std::uint64_t ThueInstance::degree(VertexId v) const {
  std::uint64_t d = core.degree(v) + pendants.at(v);
  if (member_of.at(v) >= 0) d += clique_size() - 1;
  return d;
}

namespace {

Count implicit_counts(const ThueInstance& inst, bool edges) {
  const Count K = inst.clique_size();
  Count total = edges ? inst.core.edge_count() : inst.core.vertex_count();
  for (std::uint64_t p : inst.pendants) total += p;
  for (const auto& q : inst.consistency) {
    const Count plumed = K - q.members.size();
    total += edges ? K * (K - 1) / 2 + plumed * kPlumeEdges : plumed * kPlumeVertices;
  }
  return total;
}

}  // namespace

std::string ThueInstance::total_vertices() const { return to_decimal(implicit_counts(*this, false)); }
std::string ThueInstance::total_edges() const { return to_decimal(implicit_counts(*this, true)); }

Graph ThueInstance::gadget_graph(std::size_t index) const {
  const EdgeGadget& g = gadgets.at(index);
  auto local = [&](VertexId v) -> VertexId {
    if (v == g.v0) return 0;
    if (v == g.v1) return 1;
    if (v < g.first_vertex || v >= g.first_vertex + g.vertex_count) throw Error("internal error: foreign vertex");
    return 2 + (v - g.first_vertex);
  };
  std::vector<Edge> edges;
  for (EdgeId e : g.edges) {
    const auto [u, v] = core.edge(e);
    edges.push_back({local(u), local(v)});
  }
  return Graph(2 + g.vertex_count, std::move(edges));
}

ThueInstance::Materialized ThueInstance::materialize(std::size_t vertex_limit) const {
  if (implicit_counts(*this, false) > vertex_limit) {
    throw InvalidArgument("materialized graph would have " + total_vertices() + " vertices");
  }
  Materialized out;
  GraphBuilder b(core);
  out.vertex_tag = vertex_tag;
  auto fresh = [&](const std::string& tag) {
    out.vertex_tag.push_back(tag);
    return b.add_vertex();
  };
  for (VertexId v = 0; v < core.vertex_count(); ++v) {
    for (std::uint64_t i = 0; i < pendants[v]; ++i) b.add_edge(v, fresh(vertex_tag[v] + ".plume"));
  }
  const LayeredCube plume = first_layers(7, 2, 0);
  for (const auto& q : consistency) {
    std::vector<VertexId> clique = q.members;
    while (clique.size() < clique_size()) {
      const VertexId center = fresh(q.tag);
      std::vector<VertexId> at{center};
      for (std::size_t i = 1; i < plume.graph.vertex_count(); ++i) at.push_back(fresh(q.tag + ".plume"));
      for (const auto& e : plume.graph.edges()) b.add_edge(at[e.u], at[e.v]);
      clique.push_back(center);
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) b.add_edge(clique[i], clique[j]);
    }
    out.cliques.push_back(std::move(clique));
  }
  out.graph = b.build();
  return out;
}

ReductionArtifact thue_instance_artifact(const ThueInstance& inst) {
  ReductionArtifact art;
  art.kind = "qbf-thue";
  art.graph = inst.core;
  art.palette_size = static_cast<std::size_t>(inst.palette_size());
  art.vertex_gadget = inst.vertex_tag;
  art.edge_gadget = inst.edge_tag;
  art.params = {{"c", inst.c},
                {"u", inst.u},
                {"ell", inst.ell},
                {"m", inst.m},
                {"clique_exponent", inst.clique_exponent},
                {"palette_size", inst.palette_size()}};
  nlohmann::json pend = nlohmann::json::object();
  for (VertexId v = 0; v < inst.pendants.size(); ++v) {
    if (inst.pendants[v]) pend[std::to_string(v)] = inst.pendants[v];
  }
  nlohmann::json gadgets = nlohmann::json::array();
  for (const auto& g : inst.gadgets) {
    gadgets.push_back({{"kind", std::string(1, g.kind)},
                       {"source_edge", g.source_edge},
                       {"color", g.color},
                       {"v0", g.v0},
                       {"v1", g.v1},
                       {"attach", g.attach},
                       {"near_saturated", g.near_saturated},
                       {"first_vertex", g.first_vertex},
                       {"vertex_count", g.vertex_count}});
  }
  nlohmann::json cons = nlohmann::json::array();
  for (const auto& q : inst.consistency) {
    cons.push_back({{"tag", q.tag},
                    {"members", q.members},
                    {"clique_size", inst.clique_size()},
                    {"plumed_vertices", inst.clique_size() - q.members.size()},
                    {"plume_vertices", kPlumeVertices},
                    {"plume_edges", kPlumeEdges}});
  }
  art.extra = {{"pendants", std::move(pend)},
               {"gadgets", std::move(gadgets)},
               {"consistency", std::move(cons)},
               {"total_vertices", inst.total_vertices()},
               {"total_edges", inst.total_edges()}};
  return art;
}

}  // namespace thue
