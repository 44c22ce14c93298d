// Finite k-graphs presented by commuting coordinate matrices, and the
// combinatorial analyses that only depend on those matrices.
//
// Orientation convention used throughout: matrices[i](v, w) counts the
// color-i edges with range v and source w. Row v therefore lists the edges
// arriving at v, and "following" an edge from v leads to its source w.
// Colors are 0-based in the API and 1-based in every rendered report.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/errors.hpp"
#include "kgraph/integer.hpp"

namespace kgraph {

/// Unvalidated graph description, as read from the graph JSON schema.
struct RawGraph {
  std::int64_t k = 0;
  std::vector<std::string> vertices;
  std::vector<std::vector<IntVector>> matrices;
};

enum class ViolationKind { ShapeMismatch, NegativeEntry, ZeroRow, NonCommuting };

struct Violation {
  ViolationKind kind;
  std::size_t color = 0;        // 0-based; first matrix for NonCommuting
  std::size_t other_color = 0;  // NonCommuting only
  std::size_t row = 0;          // vertex index, or witness position row
  std::size_t col = 0;          // witness position column / entry column
  std::string message;
};

std::string_view to_string(ViolationKind kind) noexcept;

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated finite k-graph: k >= 1 pairwise-commuting nonnegative N x N
/// matrices with no zero rows. Immutable after construction.
class KGraph {
 public:
  std::size_t rank() const noexcept { return matrices_.size(); }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& vertex(std::size_t index) const { return vertices_.at(index); }
  const std::vector<IntMatrix>& matrices() const noexcept { return matrices_; }
  const IntMatrix& matrix(std::size_t color) const { return matrices_.at(color); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws Error(UnknownVertex).
  std::size_t require_index(std::string_view id) const;

 private:
  friend KGraph validate(const RawGraph& raw);
  KGraph(std::vector<std::string> vertices, std::vector<IntMatrix> matrices)
      : vertices_(std::move(vertices)), matrices_(std::move(matrices)) {}

  std::vector<std::string> vertices_;
  std::vector<IntMatrix> matrices_;
};

/// Every invariant violation of a raw description; empty means valid.
std::vector<Violation> check(const RawGraph& raw);

/// Throws ValidationError listing every violated invariant.
KGraph validate(const RawGraph& raw);

/// Convenience for code and tests: vertices named v0, v1, ...
KGraph make_kgraph(const std::vector<IntMatrix>& matrices,
                   std::vector<std::string> vertex_ids = {});

RawGraph to_raw(const KGraph& g);

struct DegreeVector {
  std::vector<std::uint64_t> n;
};

/// A_n = prod_i A_i^{n_i}; A_0 is the identity.
IntMatrix degree_matrix(const KGraph& g, const DegreeVector& n);

class HereditarySet {
 public:
  HereditarySet() = default;
  explicit HereditarySet(std::vector<bool> members) : members_(std::move(members)) {}

  bool contains(std::size_t v) const { return v < members_.size() && members_[v]; }
  std::size_t size() const;
  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const;
  const std::vector<bool>& mask() const noexcept { return members_; }

  friend bool operator==(const HereditarySet&, const HereditarySet&) = default;

 private:
  std::vector<bool> members_;
};

/// True iff the mask is closed under passing to sources in every color.
bool is_hereditary(const KGraph& g, const std::vector<bool>& mask);

/// H = s(v Lambda): every vertex that is the source of a path with range v.
HereditarySet reachable_into(const KGraph& g, std::size_t v);
HereditarySet reachable_into(const KGraph& g, std::string_view v);

struct CofinalityOptions {
  std::size_t max_states = 4096;
};

/// Supports of row w of A_{(t,...,t)} for t = 0, 1, ... until the first
/// repeated set. sets[t] is the support at stage t; sets[cycle_start..]
/// repeats forever.
struct SupportOrbit {
  std::vector<std::vector<bool>> sets;
  std::size_t cycle_start = 0;
};

/// Throws Error(IterationBoundExceeded) past options.max_states sets.
SupportOrbit diagonal_support_orbit(const KGraph& g, std::size_t w,
                                    const CofinalityOptions& options = {});

/// Least diagonal stage t such that every source of a path in
/// w Lambda^{(t,...,t)} lies in target, if any.
std::optional<std::uint64_t> diagonal_entry_stage(const KGraph& g, std::size_t w,
                                                  const std::vector<bool>& target,
                                                  const CofinalityOptions& options = {});

bool is_cofinal(const KGraph& g, const CofinalityOptions& options = {});

struct Entrance {
  std::size_t vertex = 0;  // cycle vertex that receives the extra edge
  Integer excess;          // color-i edges at that range beyond the cycle edge
  std::size_t source = 0;  // source of one entering edge f
  std::size_t parallel_index = 0;  // f is the parallel_index-th edge source -> vertex
};

/// cycle[t] is the range of the t-th cycle edge and cycle[t+1] its source,
/// so matrix(color)(cycle[t], cycle[t+1 mod n]) > 0.
struct CycleReport {
  std::size_t color = 0;
  std::vector<std::size_t> cycle;
  std::optional<Entrance> entrance;
};

/// Checks the CycleReport invariants against g (edges present, vertices
/// distinct, entrance data consistent).
bool is_consistent(const KGraph& g, const CycleReport& report);

/// Report for a given cycle. The entrance, if any, is placed at the first
/// cycle vertex that receives two or more edges of this color.
CycleReport describe_cycle(const KGraph& g, std::size_t color, std::vector<std::size_t> cycle);

struct CycleAnalysis {
  bool has_cycle = false;
  std::optional<CycleReport> cycle;           // canonical cycle
  std::optional<CycleReport> entrance_cycle;  // canonical cycle with an entrance
};

CycleAnalysis coordinate_cycle_analysis(const KGraph& g, std::size_t color);

/// Vertices of the color subgraph that lie on some directed cycle.
std::vector<bool> cycle_vertices(const KGraph& g, std::size_t color);

/// Shortest cycle through v in the color subgraph, lexicographically least
/// among shortest, starting at v. Empty if v lies on no cycle.
std::vector<std::size_t> shortest_cycle_through(const KGraph& g, std::size_t color,
                                                std::size_t v);

struct T2Data {
  std::size_t vertex = 0;
  CycleReport zeta;  // entrance-free color-0 (blue) cycle at vertex
  CycleReport xi;    // entrance-free color-1 (red) cycle at vertex
};

/// Requires k = 2. Throws Error(StructureContradiction) when g is cofinal,
/// neither color has a cycle with an entrance, and still no vertex is found.
std::optional<T2Data> find_t2_data(const KGraph& g, const CofinalityOptions& options = {});

/// Inclusive integer box prod_i [lo_i, hi_i] in Z^k.
struct StageBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  std::size_t dimension() const noexcept { return lo.size(); }
  std::uint64_t volume() const;
  bool contains(const std::vector<std::int64_t>& m) const;
  /// Every axis set to [lo, hi].
  static StageBox cube(std::size_t k, std::int64_t lo, std::int64_t hi);
};

struct SkewEdge {
  std::size_t range = 0;   // window vertex index of (v, m)
  std::size_t source = 0;  // window vertex index of (w, m + e_color)
  std::size_t color = 0;
  Integer multiplicity;    // A[color](v, w)
};

struct OmittedEdge {
  std::size_t range = 0;  // window vertex index of (v, m)
  std::size_t source_vertex = 0;
  std::size_t color = 0;
  Integer multiplicity;
};

/// The part of the degree skew product Lambda x_d Z^k over a stage box.
/// Window vertex (v, m) has index stage_index(m) * N + v.
struct SkewWindow {
  StageBox box;
  std::size_t graph_size = 0;
  std::vector<SkewEdge> edges;
  std::vector<OmittedEdge> omitted;

  std::size_t layer_count() const;
  std::size_t vertex_count() const { return layer_count() * graph_size; }
  std::vector<std::int64_t> stage_of(std::size_t window_vertex) const;
  std::size_t vertex_of(std::size_t window_vertex) const { return window_vertex % graph_size; }
  std::size_t index_of(std::size_t v, const std::vector<std::int64_t>& m) const;
  /// Edges counted with multiplicity.
  Integer edge_count() const;
};

struct SkewOptions {
  std::uint64_t max_window_vertices = std::uint64_t{1} << 22;
};

/// Throws Error(BoxTooLarge) when |box| * N exceeds the cap and
/// Error(InvalidInput) for an empty box or dimension mismatch.
SkewWindow skew_product_window(const KGraph& g, const StageBox& box,
                               const SkewOptions& options = {});

/// Kahn topological order of the window's union graph, if it is acyclic.
std::optional<std::vector<std::size_t>> topological_order(const SkewWindow& window);

}  // namespace kgraph
