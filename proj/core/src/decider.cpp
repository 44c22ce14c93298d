#include "kgraph/decider.hpp"

#include <algorithm>
#include <sstream>

#include "kgraph/errors.hpp"
#include "kgraph/stiemke.hpp"

namespace kgraph {

namespace {

constexpr std::uint64_t kTraceDegreeBound = 3;

void require_color(const KGraph& g, std::size_t color) {
  if (color >= g.rank())
    throw Error(ErrorCode::InvalidInput, "color " + std::to_string(color + 1) + " out of range");
}

IntMatrix one_minus_transpose(const IntMatrix& a) {
  return IntMatrix::identity(a.rows()) - a.transpose();
}

// Every degree n in {0..bound}^k, first coordinate fastest.
std::vector<DegreeVector> degree_box(std::size_t k, std::uint64_t bound) {
  std::vector<DegreeVector> out;
  DegreeVector n{std::vector<std::uint64_t>(k, 0)};
  while (true) {
    out.push_back(n);
    std::size_t i = 0;
    while (i < k && n.n[i] == bound) n.n[i++] = 0;
    if (i == k) return out;
    ++n.n[i];
  }
}

std::string edge_name(const KGraph& g, std::size_t range, std::size_t source, std::size_t index) {
  return g.vertex(range) + "<-" + g.vertex(source) + "#" + std::to_string(index);
}

PropertyVerdict make(Answer a, const char* cite) { return {a, cite}; }

}  // namespace

IntMatrix build_condition_matrix(const KGraph& g) {
  const std::size_t n = g.size();
  IntMatrix m(n, g.rank() * n);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const IntMatrix block = one_minus_transpose(g.matrix(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, i * n + c) = block(r, c);
  }
  return m;
}

Certificate decide_condition(const KGraph& g) {
  const IntMatrix m = build_condition_matrix(g);
  const Alternative alt = stiemke_alternative(m);
  const std::size_t n = g.size();
  Certificate out;
  if (const auto* kernel = std::get_if<PositiveKernel>(&alt)) {
    FaithfulTrace t;
    const Rational first = kernel->xi[0];
    for (const auto& v : kernel->xi) t.g.push_back(v / first);
    out = std::move(t);
  } else {
    const auto& w = std::get<Witness>(alt);
    PositiveWitness p;
    for (std::size_t i = 0; i < g.rank(); ++i)
      p.x.emplace_back(w.x.begin() + static_cast<long>(i * n), w.x.begin() + static_cast<long>((i + 1) * n));
    p.c = w.image;
    out = std::move(p);
  }
  if (!verify_certificate(g, out))
    throw Error(ErrorCode::Internal, "certificate failed exact verification");
  return out;
}

bool verify_trace(const KGraph& g, const RatVector& t) {
  if (t.size() != g.size())
    throw Error(ErrorCode::LengthMismatch, "trace length " + std::to_string(t.size()) +
                                               " does not match vertex count " + std::to_string(g.size()));
  if (!is_strictly_positive(t)) return false;
  for (const auto& a : g.matrices())
    if (a * t != t) return false;
  for (const auto& n : degree_box(g.rank(), kTraceDegreeBound))
    if (degree_matrix(g, n) * t != t) return false;
  return true;
}

std::optional<IntVector> verify_witness(const KGraph& g, const std::vector<IntVector>& xs) {
  if (xs.size() != g.rank())
    throw Error(ErrorCode::LengthMismatch, "witness needs one vector per color");
  IntVector c(g.size());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (xs[i].size() != g.size())
      throw Error(ErrorCode::LengthMismatch, "witness block length does not match vertex count");
    c = add(c, one_minus_transpose(g.matrix(i)) * xs[i]);
  }
  if (!is_nonnegative(c) || is_zero(c)) return std::nullopt;
  return c;
}

bool verify_certificate(const KGraph& g, const Certificate& certificate) {
  if (const auto* t = std::get_if<FaithfulTrace>(&certificate))
    return !t->g.empty() && t->g[0] == 1 && verify_trace(g, t->g);
  const auto& w = std::get<PositiveWitness>(certificate);
  const auto c = verify_witness(g, w.x);
  return c && *c == w.c;
}

std::vector<IntVector> witness_from_entrance_cycle(const KGraph& g, std::size_t color,
                                                   const CycleReport& report) {
  require_color(g, color);
  if (!report.entrance)
    throw Error(ErrorCode::NoEntrance, "cycle report for color " + std::to_string(color + 1) +
                                           " has no entrance");
  std::vector<IntVector> xs(g.rank(), IntVector(g.size()));
  for (std::size_t v : report.cycle) xs[color][v] = -1;
  return xs;
}

CycleReport entrance_cycle_from_witness(const KGraph& g, std::size_t color, const IntVector& a) {
  require_color(g, color);
  const IntMatrix& m = g.matrix(color);
  const std::size_t n = g.size();
  if (a.size() != n) throw Error(ErrorCode::LengthMismatch, "witness length does not match vertex count");
  const IntVector c = one_minus_transpose(m) * a;
  if (!is_nonnegative(c) || is_zero(c))
    throw Error(ErrorCode::NotAWitness, "(1 - A^t) a is not nonnegative and nonzero");

  IntVector cur = a;
  while (true) {
    // c_w >= 0 and cur_w < 0 force an edge out of w (source w) into a range
    // u with cur_u < 0; following those edges must close a cycle.
    std::size_t start = n;
    for (std::size_t v = 0; v < n && start == n; ++v)
      if (sgn(cur[v]) < 0) start = v;
    if (start == n)
      throw Error(ErrorCode::Internal, "witness reduction lost its negative support");
    std::vector<std::size_t> walk{start};
    std::vector<std::size_t> position(n, n);
    position[start] = 0;
    while (true) {
      const std::size_t w = walk.back();
      std::size_t next = n;
      for (std::size_t u = 0; u < n && next == n; ++u)
        if (sgn(m(u, w)) > 0 && sgn(cur[u]) < 0) next = u;
      if (next == n) throw Error(ErrorCode::Internal, "sign chain broke off");
      if (position[next] != n) {
        std::vector<std::size_t> cycle(walk.begin() + static_cast<long>(position[next]), walk.end());
        std::reverse(cycle.begin(), cycle.end());
        // Rotate so the cycle starts at its least vertex for a stable report.
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        CycleReport report = describe_cycle(g, color, cycle);
        if (report.entrance) return report;
        // Entrance-free cycle: its indicator b has (1 - A^t) b = 0.
        const Integer shift = cur[cycle[0]];
        for (std::size_t v : cycle) cur[v] -= shift;
        break;
      }
      position[next] = walk.size();
      walk.push_back(next);
    }
  }
}

RatVector trace_extension(const KGraph& g, const HereditarySet& h, const RatVector& th,
                          const CofinalityOptions& options) {
  const std::size_t n = g.size();
  if (h.mask().size() != n || !is_hereditary(g, h.mask()))
    throw Error(ErrorCode::NotATraceOnH, "vertex set is not hereditary");
  const std::vector<std::size_t> members = h.indices();
  if (members.empty() || th.size() != members.size())
    throw Error(ErrorCode::NotATraceOnH, "trace length does not match the hereditary set");
  if (!is_strictly_positive(th))
    throw Error(ErrorCode::NotATraceOnH, "trace on H is not strictly positive");

  RatVector full(n);
  for (std::size_t i = 0; i < members.size(); ++i) full[members[i]] = th[i];
  for (const auto& a : g.matrices())
    for (std::size_t v : members) {
      Rational s = 0;
      for (std::size_t w : members) s += a(v, w) * full[w];
      if (s != full[v]) throw Error(ErrorCode::NotATraceOnH, "vector is not fixed on H by every A_i");
    }

  for (std::size_t w = 0; w < n; ++w) {
    if (h.contains(w)) continue;
    const auto stage = diagonal_entry_stage(g, w, h.mask(), options);
    if (!stage)
      throw Error(ErrorCode::NotCofinal, "no degree carries every path at " + g.vertex(w) + " into H");
    const IntMatrix an = degree_matrix(g, DegreeVector{std::vector<std::uint64_t>(g.rank(), *stage)});
    Rational s = 0;
    for (std::size_t x : members) s += an(w, x) * full[x];
    full[w] = s;
  }
  if (!verify_trace(g, full)) throw Error(ErrorCode::Internal, "extended trace failed verification");
  return full;
}

std::string infinite_projection_certificate(const KGraph& g, const CycleReport& report) {
  if (!report.entrance) throw Error(ErrorCode::NoEntrance, "cycle has no entrance");
  const std::size_t len = report.cycle.size();
  std::ostringstream os;
  os << "color " << report.color + 1 << " cycle mu = ";
  for (std::size_t t = 0; t < len; ++t)
    os << (t ? " " : "") << "mu_" << t + 1 << "=" << edge_name(g, report.cycle[t], report.cycle[(t + 1) % len], 0);
  const Entrance& e = *report.entrance;
  os << "; entrance f=" << edge_name(g, e.vertex, e.source, e.parallel_index);
  os << "; S = ";
  for (std::size_t t = 0; t < len; ++t) os << (t ? "+" : "") << "s_{mu_" << t + 1 << "}";
  os << "; S*S >= SS* + s_f s_f* > SS*";
  return os.str();
}

std::string_view to_string(Answer a) noexcept {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<std::string> Verdict::citations() const {
  std::vector<std::string> out;
  auto push = [&](const std::string& s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  push(stably_finite.citation);
  push(quasidiagonal.citation);
  push(af_embeddable.citation);
  if (structural.t2_case) push(citation::kTorus);
  if (structural.infinite_projection) push(citation::kInfiniteProjection);
  return out;
}

bool is_monotone(const Verdict& v) {
  const Answer sf = v.stably_finite.answer, qd = v.quasidiagonal.answer, afe = v.af_embeddable.answer;
  if (afe == Answer::Yes && qd != Answer::Yes) return false;
  if (qd == Answer::Yes && sf != Answer::Yes) return false;
  if (sf == Answer::No && qd != Answer::No) return false;
  if (qd == Answer::No && afe != Answer::No) return false;
  return true;
}

Classification classify(const KGraph& g, const CofinalityOptions& options) {
  Classification out{decide_condition(g), {}};
  Verdict& v = out.verdict;
  v.cofinal = is_cofinal(g, options);

  for (std::size_t i = 0; i < g.rank(); ++i)
    v.structural.entrance_cycles.push_back(coordinate_cycle_analysis(g, i).entrance_cycle);
  for (const auto& report : v.structural.entrance_cycles)
    if (report) {
      v.structural.infinite_projection = infinite_projection_certificate(g, *report);
      break;
    }
  if (g.rank() == 2 && !v.structural.infinite_projection) v.structural.t2_case = find_t2_data(g, options);

  const bool has_trace = std::holds_alternative<FaithfulTrace>(out.certificate);
  if (has_trace && v.structural.infinite_projection)
    throw Error(ErrorCode::StructureContradiction, "faithful trace coexists with a cycle with an entrance");

  if (g.rank() == 1) {
    const Answer a = has_trace ? Answer::Yes : Answer::No;
    v.stably_finite = v.quasidiagonal = v.af_embeddable = make(a, citation::kOneGraph);
    return out;
  }
  if (!has_trace) {
    v.stably_finite = make(Answer::No, citation::kWitnessNotStablyFinite);
    v.quasidiagonal = v.af_embeddable = make(Answer::No, citation::kImplicationChain);
    return out;
  }
  if (!v.cofinal) {
    v.stably_finite = v.quasidiagonal = v.af_embeddable = make(Answer::Unknown, citation::kNotCofinal);
    v.notes.push_back("a faithful graph trace exists, but the graph is not cofinal");
    return out;
  }
  v.stably_finite = v.quasidiagonal = make(Answer::Yes, citation::kTraceCofinal);
  if (g.rank() == 2) {
    v.af_embeddable = make(Answer::Yes, citation::kTraceCofinalRank2);
  } else {
    v.af_embeddable = make(Answer::Unknown, citation::kRankAtLeast3);
    v.notes.push_back("AF-embeddability is left open for k >= 3");
  }
  return out;
}

}  // namespace kgraph
