// Decides whether sum_i im(1 - A_i^t) meets the positive cone only in 0, and
// turns the answer into verdicts about stable finiteness, quasidiagonality
// and AF-embeddability. Every answer carries a certificate that is checked
// with exact arithmetic before it is returned.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/integer.hpp"

namespace kgraph {

/// N x kN block matrix (1 - A_1^t | ... | 1 - A_k^t).
IntMatrix build_condition_matrix(const KGraph& g);

/// Strictly positive g with A_i g = g for every color, g[0] = 1.
struct FaithfulTrace {
  RatVector g;
};

/// x[i] is the color-i block; c = sum_i (1 - A_i^t) x[i] >= 0, c != 0.
struct PositiveWitness {
  std::vector<IntVector> x;
  IntVector c;
};

using Certificate = std::variant<FaithfulTrace, PositiveWitness>;

Certificate decide_condition(const KGraph& g);

/// t > 0, A_i t = t for all i, and A_n t = t for every n in {0..3}^k.
/// Throws Error(LengthMismatch).
bool verify_trace(const KGraph& g, const RatVector& t);

/// c = sum_i (1 - A_i^t) xs[i] when c >= 0 and c != 0.
/// Throws Error(LengthMismatch) on wrong block count or lengths.
std::optional<IntVector> verify_witness(const KGraph& g, const std::vector<IntVector>& xs);

bool verify_certificate(const KGraph& g, const Certificate& certificate);

/// x_color = -(indicator of the cycle vertices), zeros in other colors.
/// Throws Error(NoEntrance) when the report carries no entrance.
std::vector<IntVector> witness_from_entrance_cycle(const KGraph& g, std::size_t color,
                                                   const CycleReport& report);

/// From a with (1 - A^t) a >= 0, != 0 in one color, a cycle with an
/// entrance on whose vertices a is nonzero (after removing entrance-free
/// cycles from the support). Throws Error(NotAWitness).
CycleReport entrance_cycle_from_witness(const KGraph& g, std::size_t color, const IntVector& a);

/// tH is indexed by the members of H in increasing order. Returns the
/// unique faithful trace on all vertices extending tH.
/// Throws Error(NotATraceOnH) or Error(NotCofinal).
RatVector trace_extension(const KGraph& g, const HereditarySet& h, const RatVector& th,
                          const CofinalityOptions& options = {});

/// Symbolic text exhibiting an infinite projection built from a cycle with
/// an entrance. Throws Error(NoEntrance).
std::string infinite_projection_certificate(const KGraph& g, const CycleReport& report);

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer a) noexcept;

struct PropertyVerdict {
  Answer answer = Answer::Unknown;
  std::string citation;
};

struct Structural {
  std::vector<std::optional<CycleReport>> entrance_cycles;  // one per color
  std::optional<T2Data> t2_case;
  std::optional<std::string> infinite_projection;
};

struct Verdict {
  bool cofinal = false;
  PropertyVerdict stably_finite;
  PropertyVerdict quasidiagonal;
  PropertyVerdict af_embeddable;
  Structural structural;
  std::vector<std::string> notes;

  /// Distinct citation strings in first-use order.
  std::vector<std::string> citations() const;
};

/// AFE = Yes implies QD = Yes implies SF = Yes, and SF = No implies
/// QD = No implies AFE = No.
bool is_monotone(const Verdict& v);

struct Classification {
  Certificate certificate;
  Verdict verdict;
};

Classification classify(const KGraph& g, const CofinalityOptions& options = {});

namespace citation {
inline constexpr const char* kWitnessNotStablyFinite =
    "a nonzero positive element of sum_i im(1 - A_i^t) forces an infinite projection in "
    "C*(Lambda) tensor K, so C*(Lambda) is not stably finite (no cofinality needed)";
inline constexpr const char* kImplicationChain =
    "AF-embeddable implies quasidiagonal implies stably finite for every C*-algebra";
inline constexpr const char* kTraceCofinal =
    "cofinal row-finite k-graph without sources: faithful graph trace <=> stably finite <=> "
    "quasidiagonal";
inline constexpr const char* kTraceCofinalRank2 =
    "cofinal row-finite 2-graph without sources: faithful graph trace <=> AF-embeddable";
inline constexpr const char* kNotCofinal =
    "trace equivalences are only established for cofinal k-graphs";
inline constexpr const char* kRankAtLeast3 =
    "AF-embeddability from a faithful graph trace is only established for k = 2";
inline constexpr const char* kOneGraph =
    "directed graph E: no cycle in E has an entrance <=> AF-embeddable <=> quasidiagonal <=> "
    "stably finite <=> (im(1 - A^t)) meets N E^0 only in 0";
inline constexpr const char* kTorus =
    "a vertex on entrance-free cycles of both colors in a cofinal 2-graph without entrances "
    "makes C*(Lambda) stably isomorphic to C(T^2)";
inline constexpr const char* kInfiniteProjection =
    "a cycle with an entrance mu and entering edge f gives S = sum s_{mu_i} with "
    "S*S >= SS* + s_f s_f*, an infinite projection";
}  // namespace citation

}  // namespace kgraph
