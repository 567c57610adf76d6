#include "thue/paths.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "thue/word.hpp"

namespace thue {

SquareSearcher::SquareSearcher(const Graph& g, std::span<const Color> colors,
                               std::optional<std::size_t> max_half_len)
    : g_(&g), colors_(colors.begin(), colors.end()), bound_(max_half_len), used_(g.vertex_count(), 0) {
  if (colors_.size() != g.edge_count()) throw InvalidArgument("coloring size does not match edge count");
  if (bound_ && *bound_ == 0) throw InvalidArgument("max_half_len must be positive");
}

bool SquareSearcher::within_bound(std::size_t extra) const {
  if (!bound_) return true;
  return xb_.size() + xf_.size() - 1 + extra <= *bound_;
}

SquareWitness SquareSearcher::witness() const {
  SquareWitness w;
  w.vertices.assign(xb_.rbegin(), xb_.rend());
  w.vertices.insert(w.vertices.end(), xf_.begin(), xf_.end());
  w.vertices.insert(w.vertices.end(), yb_.rbegin() + 1, yb_.rend());
  w.vertices.insert(w.vertices.end(), yf_.begin(), yf_.end());
  w.half_len = (w.vertices.size() - 1) / 2;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    w.colors.push_back(colors_[*g_->find_edge(w.vertices[i], w.vertices[i + 1])]);
  }
  return w;
}

bool SquareSearcher::try_meet() {
  if (xf_.back() != yb_.back()) return false;
  found_ = witness();
  return true;
}

// Extends both walkers at their front ends. The first walker may step onto
// the second walker's back end, which closes the square.
bool SquareSearcher::forward() {
  if (!within_bound(1)) return false;
  const VertexId x = xf_.back();
  const VertexId y = yf_.back();
  const VertexId meet = yb_.back();
  for (const auto& xi : g_->out(x)) {
    const Color c = colors_[xi.edge];
    if (c == EdgeColoring::kUnassigned) continue;
    const VertexId nx = xi.neighbor;
    const bool closes = nx == meet;
    if (!closes && used_[nx]) continue;
    if (!closes) mark(nx);
    xf_.push_back(nx);
    bool done = false;
    for (const auto& yi : g_->out(y)) {
      if (colors_[yi.edge] != c || used_[yi.neighbor]) continue;
      ++steps_;
      const VertexId ny = yi.neighbor;
      mark(ny);
      yf_.push_back(ny);
      done = closes ? try_meet() : forward();
      yf_.pop_back();
      unmark(ny);
      if (done) break;
    }
    xf_.pop_back();
    if (!closes) unmark(nx);
    if (done) return true;
  }
  return false;
}

// Extends both walkers at their back ends, trying every forward completion
// at each depth. The second walker may step back onto the first walker's
// front end, which closes the square.
bool SquareSearcher::backward() {
  if (try_meet()) return true;
  if (forward()) return true;
  if (!within_bound(1)) return false;
  const VertexId x = xb_.back();
  const VertexId y = yb_.back();
  const VertexId meet = xf_.back();
  for (const auto& xi : g_->in(x)) {
    const Color c = colors_[xi.edge];
    if (c == EdgeColoring::kUnassigned || used_[xi.neighbor]) continue;
    const VertexId px = xi.neighbor;
    mark(px);
    xb_.push_back(px);
    bool done = false;
    for (const auto& yi : g_->in(y)) {
      if (colors_[yi.edge] != c) continue;
      const VertexId py = yi.neighbor;
      const bool closes = py == meet;
      if (!closes && used_[py]) continue;
      ++steps_;
      if (!closes) mark(py);
      yb_.push_back(py);
      done = closes ? try_meet() : backward();
      yb_.pop_back();
      if (!closes) unmark(py);
      if (done) break;
    }
    xb_.pop_back();
    unmark(px);
    if (done) return true;
  }
  return false;
}

std::optional<SquareWitness> SquareSearcher::find_from(VertexId start) {
  g_->check_vertex(start);
  found_.reset();
  const auto& edges = g_->edges();
  for (const auto& xi : g_->out(start)) {
    const Color c = colors_[xi.edge];
    if (c == EdgeColoring::kUnassigned) continue;
    const VertexId x1 = xi.neighbor;
    for (EdgeId f = 0; f < edges.size(); ++f) {
      if (f == xi.edge || colors_[f] != c) continue;
      const int orientations = g_->directed() ? 1 : 2;
      for (int o = 0; o < orientations; ++o) {
        const VertexId y0 = o == 0 ? edges[f].u : edges[f].v;
        const VertexId y1 = o == 0 ? edges[f].v : edges[f].u;
        if (y0 == start || y1 == start || y1 == x1) continue;
        ++steps_;
        xb_ = {start};
        xf_ = {x1};
        yb_ = {y0};
        yf_ = {y1};
        mark(start);
        mark(x1);
        mark(y0);
        mark(y1);
        const bool done = try_meet() || forward();
        for (VertexId v : {start, x1, y0, y1}) unmark(v);
        if (done) return found_;
      }
    }
  }
  return std::nullopt;
}

std::optional<SquareWitness> SquareSearcher::find_any() {
  for (VertexId v = 0; v < g_->vertex_count(); ++v) {
    if (auto w = find_from(v)) return w;
  }
  return std::nullopt;
}

bool SquareSearcher::has_square_through(EdgeId e) {
  const auto& edges = g_->edges();
  const Color c = colors_.at(e);
  if (c == EdgeColoring::kUnassigned) throw InvalidArgument("edge is not colored");
  found_.reset();
  const int orientations = g_->directed() ? 1 : 2;
  for (EdgeId f = 0; f < edges.size(); ++f) {
    if (f == e || colors_[f] != c) continue;
    for (int role = 0; role < 2; ++role) {
      const Edge& xe = role == 0 ? edges[e] : edges[f];
      const Edge& ye = role == 0 ? edges[f] : edges[e];
      for (int ox = 0; ox < orientations; ++ox) {
        const VertexId x0 = ox == 0 ? xe.u : xe.v;
        const VertexId x1 = ox == 0 ? xe.v : xe.u;
        for (int oy = 0; oy < orientations; ++oy) {
          const VertexId y0 = oy == 0 ? ye.u : ye.v;
          const VertexId y1 = oy == 0 ? ye.v : ye.u;
          if (y0 == x0 || y1 == x0 || y1 == x1) continue;
          ++steps_;
          xb_ = {x0};
          xf_ = {x1};
          yb_ = {y0};
          yf_ = {y1};
          for (VertexId v : {x0, x1, y0, y1}) mark(v);
          const bool done = backward();
          for (VertexId v : {x0, x1, y0, y1}) unmark(v);
          if (done) return true;
        }
      }
    }
  }
  return false;
}

namespace {

void check_total(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count()) throw InvalidArgument("coloring size does not match edge count");
  if (!c.is_total()) throw InvalidArgument("coloring is partial");
}

}  // namespace

std::optional<SquareWitness> find_square_path(const Graph& g, const EdgeColoring& c,
                                              const SearchOptions& options) {
  check_total(g, c);
  const std::size_t n = g.vertex_count();
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || n < 2) {
    SquareSearcher s(g, c.colors(), options.max_half_len);
    return s.find_any();
  }

  std::vector<std::optional<SquareWitness>> per_start(n);
  std::atomic<std::size_t> best{n};
  auto run = [&](unsigned w) {
    SquareSearcher s(g, c.colors(), options.max_half_len);
    for (std::size_t v = w; v < n; v += workers) {
      if (v > best.load()) break;
      if (auto found = s.find_from(static_cast<VertexId>(v))) {
        per_start[v] = std::move(found);
        std::size_t cur = best.load();
        while (v < cur && !best.compare_exchange_weak(cur, v)) {
        }
        break;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  for (auto& t : threads) t.join();
  if (best.load() == n) return std::nullopt;
  return per_start[best.load()];
}

NonrepetitiveReport is_nonrepetitive(const Graph& g, const EdgeColoring& c, const SearchOptions& options) {
  NonrepetitiveReport report;
  report.witness = find_square_path(g, c, options);
  report.nonrepetitive = !report.witness;
  return report;
}

ColorWord path_colors(const Graph& g, const EdgeColoring& c, std::span<const VertexId> path) {
  ColorWord word;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto e = g.find_edge(path[i], path[i + 1]);
    if (!e) throw InvalidArgument("no edge between consecutive path vertices");
    word.push_back(c[*e]);
  }
  return word;
}

bool validate_witness(const Graph& g, const EdgeColoring& c, const SquareWitness& w) {
  if (w.half_len == 0 || w.vertices.size() != 2 * w.half_len + 1) return false;
  if (w.colors.size() != 2 * w.half_len) return false;
  std::vector<VertexId> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    if (w.vertices[i] >= g.vertex_count() || w.vertices[i + 1] >= g.vertex_count()) return false;
    const auto e = g.find_edge(w.vertices[i], w.vertices[i + 1]);
    if (!e || c.size() <= *e || !c.is_assigned(*e) || c[*e] != w.colors[i]) return false;
  }
  return is_square(w.colors);
}

void for_each_open_path(const Graph& g, std::optional<std::size_t> max_len,
                        const std::function<bool(std::span<const VertexId>)>& visit) {
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<VertexId> path;
  bool stop = false;
  std::function<void()> extend = [&] {
    if (max_len && path.size() - 1 >= *max_len) return;
    for (const auto& inc : g.out(path.back())) {
      if (used[inc.neighbor]) continue;
      path.push_back(inc.neighbor);
      used[inc.neighbor] = 1;
      if (g.directed() || path.front() < path.back()) stop = !visit(path);
      if (!stop) extend();
      used[inc.neighbor] = 0;
      path.pop_back();
      if (stop) return;
    }
  };
  for (VertexId v = 0; v < g.vertex_count() && !stop; ++v) {
    path = {v};
    used[v] = 1;
    extend();
    used[v] = 0;
  }
}

std::vector<std::vector<VertexId>> enumerate_open_paths(const Graph& g, std::optional<std::size_t> max_len) {
  std::vector<std::vector<VertexId>> out;
  for_each_open_path(g, max_len, [&](std::span<const VertexId> p) {
    out.emplace_back(p.begin(), p.end());
    return true;
  });
  return out;
}

nlohmann::json witness_to_json(const SquareWitness& w) {
  return {{"vertices", w.vertices}, {"colors", w.colors}, {"half_len", w.half_len}};
}

SquareWitness witness_from_json(const nlohmann::json& j) {
  SquareWitness w;
  try {
    w.vertices = j.at("vertices").get<std::vector<VertexId>>();
    w.colors = j.at("colors").get<ColorWord>();
    w.half_len = j.at("half_len").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
  return w;
}

}  // namespace thue
