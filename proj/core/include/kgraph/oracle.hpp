// Brute-force cross-checks and seeded random instance generation.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kgraph/decider.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

struct OracleOptions {
  /// Cap on the box size (2B + 1)^{kN}.
  double max_box = 1e12;
};

/// First x = (x_1, ..., x_k) in [-B, B]^{kN}, lexicographically with x_1[0]
/// most significant and each coordinate tried as 0, -1, 1, -2, 2, ..., such that sum_i (1 - A_i^t) x_i >= 0 and != 0.
/// Throws Error(BoxTooLarge) beyond the cap.
std::optional<PositiveWitness> box_witness_search(const KGraph& g, std::int64_t bound,
                                                  const OracleOptions& options = {});

enum class Strategy { Polynomial, Permutation, Rejection };
std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::size_t k = 2;
  std::uint64_t max_entry = 2;
  Strategy strategy = Strategy::Polynomial;
  std::size_t max_attempts = 10000;
};

/// Deterministic in the config. Throws Error(InvalidInput) for n, k or
/// max_entry of 0 and Error(GenerationFailed) when rejection sampling runs
/// out of attempts.
KGraph random_kgraph(const GeneratorConfig& cfg);

/// A 1-graph (cfg.k and cfg.strategy are ignored).
KGraph random_digraph(const GeneratorConfig& cfg);

}  // namespace kgraph
