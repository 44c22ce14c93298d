#include "kgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace kgraph {

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

std::string color_label(std::size_t color) { return std::to_string(color + 1); }

std::string join_messages(const std::vector<Violation>& violations) {
  std::string out = "invalid k-graph:";
  for (const auto& v : violations) out += "\n  " + v.message;
  return out;
}

BoolMatrix support(const IntMatrix& a) {
  BoolMatrix s(a.rows(), std::vector<bool>(a.cols(), false));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s[i][j] = sgn(a(i, j)) > 0;
  return s;
}

BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < n; ++j)
          if (b[l][j]) out[i][j] = true;
  return out;
}

// Support of A_1 A_2 ... A_k; rows are ranges, columns sources.
BoolMatrix diagonal_step_support(const KGraph& g) {
  BoolMatrix acc = support(g.matrix(0));
  for (std::size_t i = 1; i < g.rank(); ++i) acc = boolean_product(acc, support(g.matrix(i)));
  return acc;
}

bool is_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

SupportOrbit orbit_from(const BoolMatrix& step, std::size_t w, const CofinalityOptions& options) {
  const std::size_t n = step.size();
  SupportOrbit orbit;
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<bool> current(n, false);
  current[w] = true;
  while (true) {
    auto [it, inserted] = seen.emplace(current, orbit.sets.size());
    if (!inserted) {
      orbit.cycle_start = it->second;
      return orbit;
    }
    if (orbit.sets.size() >= options.max_states)
      throw Error(ErrorCode::IterationBoundExceeded,
                  "support orbit exceeded " + std::to_string(options.max_states) + " states");
    orbit.sets.push_back(current);
    std::vector<bool> next(n, false);
    for (std::size_t s = 0; s < n; ++s)
      if (current[s])
        for (std::size_t x = 0; x < n; ++x)
          if (step[s][x]) next[x] = true;
    current = std::move(next);
  }
}

// Unique-edge walk from v; returns the cycle if it closes at v with every
// visited vertex receiving exactly one edge of this color.
std::optional<std::vector<std::size_t>> entrance_free_cycle(const KGraph& g, std::size_t color,
                                                            std::size_t v) {
  const IntMatrix& a = g.matrix(color);
  const std::size_t n = g.size();
  std::vector<std::size_t> path{v};
  std::vector<bool> on_path(n, false);
  on_path[v] = true;
  std::size_t current = v;
  while (true) {
    if (a.row_sum(current) != 1) return std::nullopt;
    std::size_t next = n;
    for (std::size_t w = 0; w < n; ++w)
      if (sgn(a(current, w)) > 0) next = w;
    if (next == v) return path;
    if (on_path[next]) return std::nullopt;
    on_path[next] = true;
    path.push_back(next);
    current = next;
  }
}

Entrance make_entrance(const KGraph& g, std::size_t color, const std::vector<std::size_t>& cycle,
                       std::size_t position) {
  const IntMatrix& a = g.matrix(color);
  const std::size_t v = cycle[position];
  const std::size_t next = cycle[(position + 1) % cycle.size()];
  Entrance e;
  e.vertex = v;
  e.excess = a.row_sum(v) - 1;
  e.source = next;
  e.parallel_index = 1;
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (w != next && sgn(a(v, w)) > 0) {
      e.source = w;
      e.parallel_index = 0;
      break;
    }
  }
  return e;
}

CycleReport make_report(const KGraph& g, std::size_t color, std::vector<std::size_t> cycle,
                        std::optional<std::size_t> entrance_position) {
  CycleReport r;
  r.color = color;
  if (entrance_position) r.entrance = make_entrance(g, color, cycle, *entrance_position);
  r.cycle = std::move(cycle);
  return r;
}

}  // namespace

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::ShapeMismatch: return "ShapeMismatch";
    case ViolationKind::NegativeEntry: return "NegativeEntry";
    case ViolationKind::ZeroRow: return "ZeroRow";
    case ViolationKind::NonCommuting: return "NonCommuting";
  }
  return "Unknown";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::InvalidInput, join_messages(violations)), violations_(std::move(violations)) {}

std::optional<std::size_t> KGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  return std::nullopt;
}

std::size_t KGraph::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
}

std::vector<Violation> check(const RawGraph& raw) {
  std::vector<Violation> out;
  auto shape = [&](std::string message, std::size_t color = 0) {
    out.push_back({ViolationKind::ShapeMismatch, color, 0, 0, 0, std::move(message)});
  };

  if (raw.k < 1) shape("k must be at least 1, got " + std::to_string(raw.k));
  if (raw.k >= 1 && raw.matrices.size() != static_cast<std::size_t>(raw.k))
    shape("expected " + std::to_string(raw.k) + " matrices, got " +
          std::to_string(raw.matrices.size()));

  const std::size_t n = raw.vertices.size();
  if (n == 0) shape("vertex list is empty");
  {
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = ids.emplace(raw.vertices[i], i);
      if (!inserted) shape("duplicate vertex id '" + raw.vertices[i] + "'");
    }
  }

  bool shapes_ok = out.empty();
  for (std::size_t c = 0; c < raw.matrices.size(); ++c) {
    const auto& m = raw.matrices[c];
    bool square = m.size() == n;
    for (const auto& row : m) square = square && row.size() == n;
    if (!square) {
      shape("matrix " + color_label(c) + " is not " + std::to_string(n) + "x" + std::to_string(n), c);
      shapes_ok = false;
      continue;
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t w = 0; w < n; ++w)
        if (sgn(m[r][w]) < 0) {
          out.push_back({ViolationKind::NegativeEntry, c, 0, r, w,
                         "matrix " + color_label(c) + " has negative entry " + m[r][w].get_str() +
                             " at (" + std::to_string(r) + ", " + std::to_string(w) + ")"});
          shapes_ok = false;
        }
  }
  if (!shapes_ok) return out;

  std::vector<IntMatrix> mats;
  for (const auto& m : raw.matrices) mats.push_back(IntMatrix::from_rows(m));

  for (std::size_t c = 0; c < mats.size(); ++c)
    for (std::size_t v = 0; v < n; ++v)
      if (mats[c].row_sum(v) == 0)
        out.push_back({ViolationKind::ZeroRow, c, 0, v, 0,
                       "matrix " + color_label(c) + " has a zero row at vertex '" +
                           raw.vertices[v] + "' (vertex receives no color-" + color_label(c) +
                           " edge)"});

  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const IntMatrix ij = mats[i] * mats[j];
      const IntMatrix ji = mats[j] * mats[i];
      if (ij == ji) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (ij(r, c) != ji(r, c)) {
            out.push_back({ViolationKind::NonCommuting, i, j, r, c,
                           "matrices " + color_label(i) + " and " + color_label(j) +
                               " do not commute: products differ at (" + std::to_string(r) +
                               ", " + std::to_string(c) + ")"});
            r = n;
            break;
          }
    }
  return out;
}

KGraph validate(const RawGraph& raw) {
  auto violations = check(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  std::vector<IntMatrix> mats;
  for (const auto& m : raw.matrices) mats.push_back(IntMatrix::from_rows(m));
  return KGraph(raw.vertices, std::move(mats));
}

KGraph make_kgraph(const std::vector<IntMatrix>& matrices, std::vector<std::string> vertex_ids) {
  RawGraph raw;
  raw.k = static_cast<std::int64_t>(matrices.size());
  const std::size_t n = matrices.empty() ? 0 : matrices.front().rows();
  if (vertex_ids.empty())
    for (std::size_t i = 0; i < n; ++i) vertex_ids.push_back("v" + std::to_string(i));
  raw.vertices = std::move(vertex_ids);
  for (const auto& m : matrices) {
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    raw.matrices.push_back(std::move(rows));
  }
  return validate(raw);
}

RawGraph to_raw(const KGraph& g) {
  RawGraph raw;
  raw.k = static_cast<std::int64_t>(g.rank());
  raw.vertices = g.vertices();
  for (const auto& m : g.matrices()) {
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    raw.matrices.push_back(std::move(rows));
  }
  return raw;
}

IntMatrix degree_matrix(const KGraph& g, const DegreeVector& n) {
  if (n.n.size() != g.rank())
    throw Error(ErrorCode::LengthMismatch, "degree vector length " + std::to_string(n.n.size()) +
                                               " does not match k = " + std::to_string(g.rank()));
  IntMatrix out = IntMatrix::identity(g.size());
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (n.n[i] > 0) out = out * power(g.matrix(i), n.n[i]);
  return out;
}

std::size_t HereditarySet::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<std::size_t> HereditarySet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

bool is_hereditary(const KGraph& g, const std::vector<bool>& mask) {
  if (mask.size() != g.size()) return false;
  for (const auto& a : g.matrices())
    for (std::size_t u = 0; u < g.size(); ++u)
      if (mask[u])
        for (std::size_t w = 0; w < g.size(); ++w)
          if (sgn(a(u, w)) > 0 && !mask[w]) return false;
  return true;
}

HereditarySet reachable_into(const KGraph& g, std::size_t v) {
  if (v >= g.size()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<bool> members(g.size(), false);
  std::deque<std::size_t> queue{v};
  members[v] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& a : g.matrices())
      for (std::size_t w = 0; w < g.size(); ++w)
        if (sgn(a(u, w)) > 0 && !members[w]) {
          members[w] = true;
          queue.push_back(w);
        }
  }
  return HereditarySet(std::move(members));
}

HereditarySet reachable_into(const KGraph& g, std::string_view v) {
  return reachable_into(g, g.require_index(v));
}

SupportOrbit diagonal_support_orbit(const KGraph& g, std::size_t w,
                                    const CofinalityOptions& options) {
  if (w >= g.size()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  return orbit_from(diagonal_step_support(g), w, options);
}

std::optional<std::uint64_t> diagonal_entry_stage(const KGraph& g, std::size_t w,
                                                  const std::vector<bool>& target,
                                                  const CofinalityOptions& options) {
  const SupportOrbit orbit = diagonal_support_orbit(g, w, options);
  for (std::size_t t = 0; t < orbit.sets.size(); ++t)
    if (is_subset(orbit.sets[t], target)) return t;
  return std::nullopt;
}

bool is_cofinal(const KGraph& g, const CofinalityOptions& options) {
  const BoolMatrix step = diagonal_step_support(g);
  std::vector<SupportOrbit> orbits;
  orbits.reserve(g.size());
  for (std::size_t w = 0; w < g.size(); ++w) orbits.push_back(orbit_from(step, w, options));
  for (std::size_t v = 0; v < g.size(); ++v) {
    const HereditarySet h = reachable_into(g, v);
    for (std::size_t w = 0; w < g.size(); ++w) {
      const auto& sets = orbits[w].sets;
      const bool reached = std::any_of(sets.begin(), sets.end(),
                                       [&](const auto& s) { return is_subset(s, h.mask()); });
      if (!reached) return false;
    }
  }
  return true;
}

std::vector<bool> cycle_vertices(const KGraph& g, std::size_t color) {
  const IntMatrix& a = g.matrix(color);
  const std::size_t n = g.size();
  // Iterative Tarjan over the support digraph v -> w when a(v, w) > 0.
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> component_size;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_w;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next_w < n) {
        const std::size_t w = f.next_w++;
        if (sgn(a(f.v, w)) <= 0) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        const std::size_t id = component_size.size();
        std::size_t count = 0;
        while (true) {
          const std::size_t x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          component[x] = id;
          ++count;
          if (x == v) break;
        }
        component_size.push_back(count);
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }

  std::vector<bool> on_cycle(n, false);
  for (std::size_t v = 0; v < n; ++v)
    on_cycle[v] = component_size[component[v]] > 1 || sgn(a(v, v)) > 0;
  return on_cycle;
}

std::vector<std::size_t> shortest_cycle_through(const KGraph& g, std::size_t color,
                                                std::size_t v) {
  const IntMatrix& a = g.matrix(color);
  const std::size_t n = g.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // dist[x]: fewest steps x -> ... -> v following x -> w when a(x, w) > 0.
  std::vector<std::size_t> dist(n, kInf);
  dist[v] = 0;
  std::deque<std::size_t> queue{v};
  while (!queue.empty()) {
    const std::size_t y = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x)
      if (sgn(a(x, y)) > 0 && dist[x] == kInf) {
        dist[x] = dist[y] + 1;
        queue.push_back(x);
      }
  }
  std::size_t length = kInf;
  for (std::size_t w = 0; w < n; ++w)
    if (sgn(a(v, w)) > 0 && dist[w] != kInf) length = std::min(length, dist[w] + 1);
  if (length == kInf) return {};

  std::vector<std::size_t> cycle{v};
  std::size_t current = v;
  for (std::size_t remaining = length; remaining > 1; --remaining) {
    for (std::size_t w = 0; w < n; ++w)
      if (sgn(a(current, w)) > 0 && dist[w] == remaining - 1) {
        cycle.push_back(w);
        current = w;
        break;
      }
  }
  return cycle;
}

bool is_consistent(const KGraph& g, const CycleReport& report) {
  if (report.color >= g.rank() || report.cycle.empty()) return false;
  const IntMatrix& a = g.matrix(report.color);
  const std::size_t len = report.cycle.size();
  std::vector<bool> seen(g.size(), false);
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t v = report.cycle[t];
    if (v >= g.size() || seen[v]) return false;
    seen[v] = true;
    if (sgn(a(v, report.cycle[(t + 1) % len])) <= 0) return false;
  }
  if (!report.entrance) return true;
  const Entrance& e = *report.entrance;
  const auto pos = std::find(report.cycle.begin(), report.cycle.end(), e.vertex);
  if (pos == report.cycle.end()) return false;
  const std::size_t next = report.cycle[(static_cast<std::size_t>(pos - report.cycle.begin()) + 1) % len];
  if (e.excess != a.row_sum(e.vertex) - 1 || sgn(e.excess) <= 0) return false;
  if (e.source == next) return e.parallel_index >= 1 && a(e.vertex, next) > e.parallel_index;
  return sgn(a(e.vertex, e.source)) > 0;
}

CycleReport describe_cycle(const KGraph& g, std::size_t color, std::vector<std::size_t> cycle) {
  std::optional<std::size_t> position;
  for (std::size_t t = 0; t < cycle.size() && !position; ++t)
    if (g.matrix(color).row_sum(cycle[t]) >= 2) position = t;
  return make_report(g, color, std::move(cycle), position);
}

CycleAnalysis coordinate_cycle_analysis(const KGraph& g, std::size_t color) {
  if (color >= g.rank()) throw Error(ErrorCode::InvalidInput, "color out of range");
  const IntMatrix& a = g.matrix(color);
  const std::vector<bool> on_cycle = cycle_vertices(g, color);
  CycleAnalysis result;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!on_cycle[v]) continue;
    if (!result.has_cycle) {
      result.has_cycle = true;
      result.cycle = make_report(g, color, shortest_cycle_through(g, color, v), std::nullopt);
    }
    if (a.row_sum(v) >= 2) {
      result.entrance_cycle = make_report(g, color, shortest_cycle_through(g, color, v), 0);
      break;
    }
  }
  return result;
}

std::optional<T2Data> find_t2_data(const KGraph& g, const CofinalityOptions& options) {
  if (g.rank() != 2) throw Error(ErrorCode::InvalidInput, "find_t2_data requires k = 2");
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto blue = entrance_free_cycle(g, 0, v);
    if (!blue) continue;
    auto red = entrance_free_cycle(g, 1, v);
    if (!red) continue;
    T2Data data;
    data.vertex = v;
    data.zeta = make_report(g, 0, std::move(*blue), std::nullopt);
    data.xi = make_report(g, 1, std::move(*red), std::nullopt);
    return data;
  }
  const bool entrance_free = !coordinate_cycle_analysis(g, 0).entrance_cycle &&
                             !coordinate_cycle_analysis(g, 1).entrance_cycle;
  if (entrance_free && is_cofinal(g, options))
    throw Error(ErrorCode::StructureContradiction,
                "cofinal 2-graph without entrances has no vertex on entrance-free cycles of both colors");
  return std::nullopt;
}

std::uint64_t StageBox::volume() const {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    const auto width = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    if (v > std::numeric_limits<std::uint64_t>::max() / width)
      return std::numeric_limits<std::uint64_t>::max();
    v *= width;
  }
  return v;
}

bool StageBox::contains(const std::vector<std::int64_t>& m) const {
  if (m.size() != lo.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < lo[i] || m[i] > hi[i]) return false;
  return true;
}

StageBox StageBox::cube(std::size_t k, std::int64_t lo, std::int64_t hi) {
  return StageBox{std::vector<std::int64_t>(k, lo), std::vector<std::int64_t>(k, hi)};
}

std::size_t SkewWindow::layer_count() const { return static_cast<std::size_t>(box.volume()); }

std::vector<std::int64_t> SkewWindow::stage_of(std::size_t window_vertex) const {
  std::size_t layer = window_vertex / graph_size;
  std::vector<std::int64_t> m(box.dimension());
  for (std::size_t i = box.dimension(); i-- > 0;) {
    const auto width = static_cast<std::size_t>(box.hi[i] - box.lo[i]) + 1;
    m[i] = box.lo[i] + static_cast<std::int64_t>(layer % width);
    layer /= width;
  }
  return m;
}

std::size_t SkewWindow::index_of(std::size_t v, const std::vector<std::int64_t>& m) const {
  std::size_t layer = 0;
  for (std::size_t i = 0; i < box.dimension(); ++i) {
    const auto width = static_cast<std::size_t>(box.hi[i] - box.lo[i]) + 1;
    layer = layer * width + static_cast<std::size_t>(m[i] - box.lo[i]);
  }
  return layer * graph_size + v;
}

Integer SkewWindow::edge_count() const {
  Integer total = 0;
  for (const auto& e : edges) total += e.multiplicity;
  return total;
}

SkewWindow skew_product_window(const KGraph& g, const StageBox& box, const SkewOptions& options) {
  if (box.dimension() != g.rank() || box.hi.size() != box.lo.size())
    throw Error(ErrorCode::InvalidInput, "stage box dimension must equal k");
  const std::uint64_t layers = box.volume();
  if (layers == 0) throw Error(ErrorCode::InvalidInput, "stage box is empty");
  if (layers > options.max_window_vertices / g.size())
    throw Error(ErrorCode::BoxTooLarge, "skew window would have more than " +
                                            std::to_string(options.max_window_vertices) +
                                            " vertices");

  SkewWindow window;
  window.box = box;
  window.graph_size = g.size();
  const std::size_t n = g.size();
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const std::vector<std::int64_t> m = window.stage_of(layer * n);
    for (std::size_t color = 0; color < g.rank(); ++color) {
      std::vector<std::int64_t> target = m;
      target[color] += 1;
      const bool inside = box.contains(target);
      const IntMatrix& a = g.matrix(color);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          if (sgn(a(v, w)) <= 0) continue;
          if (inside)
            window.edges.push_back({layer * n + v, window.index_of(w, target), color, a(v, w)});
          else
            window.omitted.push_back({layer * n + v, w, color, a(v, w)});
        }
    }
  }
  return window;
}

std::optional<std::vector<std::size_t>> topological_order(const SkewWindow& window) {
  const std::size_t count = window.vertex_count();
  std::vector<std::vector<std::size_t>> out_edges(count);
  std::vector<std::size_t> indegree(count, 0);
  for (const auto& e : window.edges) {
    out_edges[e.range].push_back(e.source);
    ++indegree[e.source];
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < count; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  order.reserve(count);
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t w : out_edges[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != count) return std::nullopt;
  return order;
}

}  // namespace kgraph
