#include "thue/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace thue {

HypercubeColoring build_hypercube(std::size_t k) {
  if (k < 1 || k > kMaxHypercubeDim) {
    throw InvalidArgument("hypercube dimension must be in [1, " + std::to_string(kMaxHypercubeDim) + "]");
  }
  const std::uint32_t n = 1u << k;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  edges.reserve(k * n / 2);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      if (x & (1u << i)) continue;
      edges.push_back({x, x | (1u << i)});
      colors.push_back(static_cast<Color>(i));
    }
  }
  HypercubeColoring hc;
  hc.k = k;
  hc.graph = Graph(n, std::move(edges));
  hc.coloring = EdgeColoring(std::move(colors), k);
  return hc;
}

LayeredCube first_layers(std::size_t k, std::size_t m, std::uint32_t base) {
  if (k < 1 || k > kMaxHypercubeDim) throw InvalidArgument("hypercube dimension out of range");
  if (m > k) throw InvalidArgument("layer count exceeds dimension");
  const std::uint32_t n = 1u << k;
  if (base >= n) throw InvalidArgument("base vertex out of range");

  LayeredCube out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (static_cast<std::size_t>(std::popcount(x ^ base)) <= m) out.labels.push_back(x);
  }
  std::stable_sort(out.labels.begin(), out.labels.end(), [base](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a ^ base) < std::popcount(b ^ base);
  });
  std::map<std::uint32_t, VertexId> index;
  for (VertexId v = 0; v < out.labels.size(); ++v) index[out.labels[v]] = v;

  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (VertexId v = 0; v < out.labels.size(); ++v) {
    const std::uint32_t x = out.labels[v];
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t y = x ^ (1u << i);
      if (y < x) continue;
      auto it = index.find(y);
      if (it == index.end()) continue;
      edges.push_back({v, it->second});
      colors.push_back(static_cast<Color>(i));
    }
  }
  out.graph = Graph(out.labels.size(), std::move(edges));
  out.coloring = EdgeColoring(std::move(colors), k);
  return out;
}

std::optional<VertexId> follow_colors(const Graph& g, const EdgeColoring& c, VertexId start,
                                      std::span<const Color> colors) {
  g.check_vertex(start);
  std::set<VertexId> seen{start};
  VertexId at = start;
  for (Color want : colors) {
    std::optional<VertexId> next;
    for (const auto& inc : g.out(at)) {
      if (!c.is_assigned(inc.edge) || c[inc.edge] != want) continue;
      if (next) return std::nullopt;
      next = inc.neighbor;
    }
    if (!next || !seen.insert(*next).second) return std::nullopt;
    at = *next;
  }
  return at;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

std::string describe(VertexId s, const std::vector<VertexId>& path, const std::string& what) {
  std::ostringstream os;
  os << what << " from " << s << ":";
  for (VertexId v : path) os << ' ' << v;
  return os.str();
}

void fail(PropertyResult& p, std::string msg) {
  if (!p.holds) return;
  p.holds = false;
  p.counterexample = std::move(msg);
}

class Lemma2Checker {
 public:
  Lemma2Checker(const HypercubeColoring& hc, Lemma2Report& r) : hc_(hc), r_(r) {}

  void check_start(VertexId s) {
    const auto& g = hc_.graph;
    const auto d = bfs_distances(g, s);
    dist_.assign(d.size(), 0);
    for (std::size_t v = 0; v < d.size(); ++v) dist_[v] = *d[v];

    std::vector<std::size_t> layers(hc_.k + 1, 0);
    for (std::size_t x : dist_) ++layers[x];
    for (std::size_t i = 0; i <= hc_.k; ++i) {
      if (layers[i] != binomial(hc_.k, i)) {
        fail(r_.layer_sizes, "vertex " + std::to_string(s) + " has " + std::to_string(layers[i]) +
                                 " vertices at distance " + std::to_string(i));
      }
    }
    if (s == 0) r_.layer_counts = layers;

    start_ = s;
    path_ = {s};
    shortest_dfs(0);

    by_set_.clear();
    by_end_.clear();
    visited_.assign(g.vertex_count(), 0);
    visited_[s] = 1;
    path_ = {s};
    distinct_dfs(0);
    for (const auto& [mask, entry] : by_set_) {
      const auto& [count, ends] = entry;
      if (ends.size() != 1) {
        fail(r_.permutations, "color set " + std::to_string(mask) + " from " + std::to_string(s) +
                                  " reaches several end vertices");
      } else if (count != factorial(static_cast<std::size_t>(std::popcount(mask)))) {
        fail(r_.permutations, "color set " + std::to_string(mask) + " from " + std::to_string(s) +
                                  " has only " + std::to_string(count) + " orderings as paths");
      }
    }
    for (const auto& [end, masks] : by_end_) {
      if (masks.size() != 1) {
        fail(r_.permutations, "vertices " + std::to_string(s) + " and " + std::to_string(end) +
                                  " are joined by distinct-color paths with different color sets");
      }
    }
  }

 private:
  Color color(EdgeId e) const { return hc_.coloring[e]; }

  void shortest_dfs(std::uint32_t mask) {
    const VertexId at = path_.back();
    for (const auto& inc : hc_.graph.out(at)) {
      if (dist_[inc.neighbor] != dist_[at] + 1) continue;
      const std::uint32_t bit = 1u << color(inc.edge);
      path_.push_back(inc.neighbor);
      if (mask & bit) fail(r_.shortest_distinct, describe(start_, path_, "shortest path repeats a color"));
      shortest_dfs(mask | bit);
      path_.pop_back();
    }
  }

  void distinct_dfs(std::uint32_t mask) {
    const VertexId at = path_.back();
    if (mask) {
      auto& entry = by_set_[mask];
      ++entry.first;
      entry.second.insert(at);
      by_end_[at].insert(mask);
      if (dist_[at] != path_.size() - 1) {
        fail(r_.distinct_shortest, describe(start_, path_, "distinct-color path is not shortest"));
      }
    }
    for (const auto& inc : hc_.graph.out(at)) {
      const std::uint32_t bit = 1u << color(inc.edge);
      if ((mask & bit) || visited_[inc.neighbor]) continue;
      visited_[inc.neighbor] = 1;
      path_.push_back(inc.neighbor);
      distinct_dfs(mask | bit);
      path_.pop_back();
      visited_[inc.neighbor] = 0;
    }
  }

  const HypercubeColoring& hc_;
  Lemma2Report& r_;
  VertexId start_ = 0;
  std::vector<std::size_t> dist_;
  std::vector<VertexId> path_;
  std::vector<char> visited_;
  std::map<std::uint32_t, std::pair<std::uint64_t, std::set<VertexId>>> by_set_;
  std::map<VertexId, std::set<std::uint32_t>> by_end_;
};

}  // namespace

Lemma2Report verify_lemma2(std::size_t k, std::uint64_t seed, std::size_t samples) {
  if (k < 1 || k > 8) throw InvalidArgument("verify_lemma2 supports 1 <= k <= 8");
  const HypercubeColoring hc = build_hypercube(k);
  Lemma2Report r;
  r.k = k;
  const auto n = static_cast<VertexId>(hc.graph.vertex_count());

  std::vector<VertexId> starts;
  if (k <= 4) {
    for (VertexId v = 0; v < n; ++v) starts.push_back(v);
  } else {
    r.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(1, n - 1);
    std::set<VertexId> chosen{0};
    while (chosen.size() < std::min<std::size_t>(std::max<std::size_t>(samples, 1), n)) chosen.insert(pick(rng));
    starts.assign(chosen.begin(), chosen.end());
  }

  Lemma2Checker checker(hc, r);
  for (VertexId s : starts) checker.check_start(s);
  r.starts_checked = starts.size();
  return r;
}

nlohmann::json lemma2_to_json(const Lemma2Report& r) {
  auto prop = [](const PropertyResult& p) {
    nlohmann::json j{{"holds", p.holds}};
    if (p.counterexample) j["counterexample"] = *p.counterexample;
    return j;
  };
  return {{"k", r.k},
          {"shortest_paths_distinct", prop(r.shortest_distinct)},
          {"permutations", prop(r.permutations)},
          {"distinct_paths_shortest", prop(r.distinct_shortest)},
          {"layer_sizes", prop(r.layer_sizes)},
          {"layer_counts", r.layer_counts},
          {"starts_checked", r.starts_checked},
          {"sampled", r.sampled},
          {"all_hold", r.all_hold()}};
}

std::vector<SaturationViolation> check_saturation_conclusion(const Graph& g, const EdgeColoring& c) {
  if (g.directed()) throw InvalidArgument("check_saturation_conclusion requires an undirected graph");
  if (c.size() != g.edge_count() || !c.is_total()) throw InvalidArgument("coloring must be total");
  std::vector<SaturationViolation> out;
  if (g.edge_count() == 0) return out;
  const std::size_t delta = g.max_degree();

  auto qualifies = [&](VertexId a, VertexId b, VertexId x, VertexId y) {
    if (g.degree(a) != delta || g.degree(b) != delta) return false;
    if (g.find_edge(a, b)) return false;
    for (const auto& inc : g.out(a)) {
      const VertexId z = inc.neighbor;
      if (z != x && z != y && g.find_edge(z, b)) return false;
    }
    return true;
  };

  for (const Diamond& d : diamonds(g)) {
    if (!qualifies(d[0], d[2], d[1], d[3]) && !qualifies(d[1], d[3], d[0], d[2])) continue;
    std::set<Color> used;
    for (int i = 0; i < 4; ++i) used.insert(c[*g.find_edge(d[i], d[(i + 1) % 4])]);
    if (used.size() != 2) out.push_back({d, used.size()});
  }
  return out;
}

}  // namespace thue
